#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mrq/conjugacy.hpp"
#include "mrq/morphisms.hpp"
#include "mrq/words.hpp"

// The C-test word of Ivanov in two letters, its evaluation at tuples, and
// desk-scale exhaustive verification of the C-test and cyclicity properties.

namespace mrq {

struct IvanovWord {
  Word pattern;  // cyclically reduced, zero exponent vector, no roots
};

// [x1,x2]^100 x1 [x1,x2]^200 x1 [x1,x2]^300 x1^-1 [x1,x2]^400 x1^-1
// [x1,x2]^500 x2 [x1,x2]^600 x2 [x1,x2]^700 x2^-1 [x1,x2]^800 x2^-1
const IvanovWord& build_ivanov();

// Image of the pattern under x1 -> a1, x2 -> a2.
Word eval_at(const IvanovWord& w, const Word& a1, const Word& a2);

struct CtestVerdict {
  enum class Kind { vacuous, witnessed, counterexample };
  Kind kind = Kind::vacuous;
  std::optional<Word> witness;
};

// witnessed(S) when the w-values agree nontrivially and S conjugates A to B;
// a counterexample would falsify the C-test property.
CtestVerdict ctest_check_pair(const std::pair<Word, Word>& a,
                              const std::pair<Word, Word>& b);

// (w(A1,A2) == 1)  <=>  <A1,A2> cyclic; returns whether the equivalence holds.
bool cyclicity_criterion_check(const Word& a1, const Word& a2);

// With psi surjective and conj-by-S . psi agreeing with psi on w, S must lie
// in <psi(w)>. Precondition violations are reported as std::domain_error.
bool lemma_root_check(const Word& s, const EndoMap& psi);

// All freely reduced words of length <= max_len, shortest first.
std::vector<Word> enumerate_reduced_words(const AlphabetPtr& alphabet, int max_len);

struct CtestSweepReport {
  int bound = 0;
  long long pairs_checked = 0;
  long long witnessed = 0;
  long long vacuous = 0;
  long long counterexamples = 0;
};

// Exhaustive check of ctest_check_pair over all ordered pairs of 2-tuples of
// reduced words of length <= max_len in rank 2.
CtestSweepReport ctest_sweep(int max_len);

}  // namespace mrq
