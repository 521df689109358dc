#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <utility>
#include <vector>

#include "mrq/abelian.hpp"
#include "mrq/ctest.hpp"
#include "mrq/morphisms.hpp"
#include "mrq/words.hpp"

// The double-edged double over the Ivanov word: its presentation, the
// restricted homomorphism family h_{k,l,q} onto F(b1,b2), exact generator
// lengths under the two generating sets, the shortest-homomorphism search,
// and the exact piecewise-linear minimax envelopes.

namespace mrq {

using Rat = boost::rational<long long>;

struct HomParams {
  long long k = 0, l = 0, q = 0;
};

enum class GenSetId { g, u };

struct GenSet {
  GenSetId id;
  std::vector<Word> elements;  // ten words over the presentation generators
};

// Generators a1,a2,b1,b2,c1,c2,d1,d2,gamma with relators
//   R1 = w(a) w(b)^-1,  R2 = w(d) w(c)^-1,  R3 = w(b) w(c)^-1,
//   R4 = z(a,b)^-1 gamma z(d,c) gamma^-1,   z(p,q) = p1 q2 p1 q1 p1 q1.
class DwzPresentation {
 public:
  static const DwzPresentation& instance();

  const AlphabetPtr& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  // target F2 = <b1,b2> of the restricted family
  const AlphabetPtr& target() const { return target_; }
  // the Ivanov word at (b1,b2)
  const Word& w_target() const { return w_target_; }
  const Word& z_ab() const { return z_ab_; }

  GenSet genset(GenSetId id) const;

 private:
  DwzPresentation();
  AlphabetPtr generators_;
  AlphabetPtr target_;
  std::vector<Word> relators_;
  Word w_target_;
  Word z_ab_;
};

// Compressed images of the nine generators under h_{k,l,q}:
//   b_i -> b_i, a_i -> w^k b_i w^-k, c_i -> w^l b_i w^-l,
//   d_i -> w^(k+l) b_i w^-(k+l), gamma -> h(z(a,b))^q w^-l.
class HomImages {
 public:
  explicit HomImages(HomParams p);
  // twists h|_D by w^d_exponent instead of w^(k+l); the mutated family is the
  // negative control for relator R4
  HomImages(HomParams p, long long d_exponent);

  const PowerExpr& image(int gen) const { return images_[gen]; }
  PowerExpr apply(const Word& u) const;      // u over the presentation generators
  long long image_length(const Word& u) const;

 private:
  void build(HomParams p, long long d_exponent);
  std::vector<PowerExpr> images_;
};

// Materialized family (spec form); large parameters may hit the letter cap.
EndoMap hom_family(HomParams p);

// apply(hom_family(p), R) == 1 for all four relators, for every integer triple.
bool verify_relators(HomParams p);
// per-relator outcomes for the mutated family; R4 is expected to fail
std::vector<bool> verify_relators_mutated(HomParams p);

// exact reduced image length for each of the ten generating-set elements
std::vector<long long> gen_lengths(HomParams p, const GenSet& s);

// |h(z(a,b))|; equals 6 tr(w) |k| + s(sign k) once |k| clears the boundary
long long z_image_length(HomParams p);

struct ShortenResult {
  long long k = 0;
  GenSetId genset = GenSetId::g;
  long long l_star = 0, q_star = 0;
  long long max_length = 0;
  Rat normalized;  // max_length / (|k| tr(w))
};

// Exhaustive exact minimization of max gen_lengths over the windows.
// Ties prefer smaller |l|, then smaller |q|, then the nonnegative sign.
ShortenResult shorten(long long k, std::pair<long long, long long> l_window,
                      std::pair<long long, long long> q_window, GenSetId id);
ShortenResult shorten(long long k, GenSetId id);  // default windows

// constant + sum of coefficient * |x + shift| pieces
struct PLTerm {
  Rat constant;
  std::vector<std::pair<Rat, Rat>> pieces;  // (coefficient >= 0, shift)
  Rat eval(const Rat& x) const;
};

std::vector<PLTerm> envelope_terms(GenSetId id);

// Exact global minimizer of the upper envelope; midpoint of a flat optimum.
std::pair<Rat, Rat> pl_minimax(const std::vector<PLTerm>& terms);

// max gen length at (k, x k, 0) normalized by |k| tr(w), per grid point
std::vector<std::pair<Rat, Rat>> normalized_profile(long long k, GenSetId id,
                                                    const std::vector<Rat>& grid);

struct HomologyReport {
  HomologyResult g_w;
  std::vector<std::pair<long long, HomologyResult>> quotients;  // per epsilon
  bool distinct = false;  // betti separation => not isomorphic => not SQ-isomorphic
};

HomologyReport homology_report(const std::vector<long long>& epsilons = {-5, -1, 0,
                                                                         1, 5});

}  // namespace mrq
