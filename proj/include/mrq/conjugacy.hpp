#pragma once

#include <optional>
#include <vector>

#include "mrq/words.hpp"

// Conjugacy of elements and simultaneous conjugacy of tuples in a free group,
// with explicit conjugators.

namespace mrq {

struct ConjugacyAnswer {
  bool found = false;
  std::optional<Word> witness;  // conjugate(A_i, witness) == B_i for all i
};

// Maximal root: u = root^e with e >= 1; the centralizer of u is <root>.
Word primitive_root(const Word& u);

ConjugacyAnswer are_conjugate(const Word& u, const Word& v);

// Solves S A_i S^-1 = B_i simultaneously. Anchored on the first nontrivial
// coordinate; the residual search over the anchor's centralizer <r> is a
// finite window since lengths grow linearly in the twist exponent.
ConjugacyAnswer simultaneous_conjugator(const std::vector<Word>& a,
                                        const std::vector<Word>& b);

}  // namespace mrq
