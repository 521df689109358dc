#pragma once

#include <vector>

#include "mrq/words.hpp"

// Homomorphisms of free groups by generator images, Stallings foldings for
// subgroup rank and membership, and the rank-2 Whitehead primitivity test.

namespace mrq {

class EndoMap {
 public:
  EndoMap(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images);

  static EndoMap identity(const AlphabetPtr& alphabet);

  const AlphabetPtr& source() const { return source_; }
  const AlphabetPtr& target() const { return target_; }
  const Word& image(int gen) const { return images_.at(gen); }
  const std::vector<Word>& images() const { return images_; }

 private:
  AlphabetPtr source_;
  AlphabetPtr target_;
  std::vector<Word> images_;
};

Word apply(const EndoMap& f, const Word& u);
// apply(compose(f, g), u) == apply(f, apply(g, u))
EndoMap compose(const EndoMap& f, const EndoMap& g);

// Folded core automaton recognizing the subgroup generated by a word list.
class SubgroupGraph {
 public:
  static SubgroupGraph fold(const std::vector<Word>& generators,
                            const AlphabetPtr& alphabet);

  bool contains(const Word& u) const;
  // rank of the subgroup: edges - states + 1 on the core graph
  int rank() const;
  size_t state_count() const { return states_; }
  size_t edge_count() const { return edges_; }
  // true iff the subgroup is the whole free group
  bool is_whole_group() const;

  const AlphabetPtr& alphabet() const { return alphabet_; }

 private:
  SubgroupGraph() = default;
  AlphabetPtr alphabet_;
  size_t states_ = 0;
  size_t edges_ = 0;
  // transition tables indexed [state * rank + gen]; -1 when absent
  std::vector<int> out_;
  std::vector<int> in_;
};

SubgroupGraph fold(const std::vector<Word>& generators, const AlphabetPtr& alphabet);
bool membership(const SubgroupGraph& g, const Word& u);
int subgroup_rank(const SubgroupGraph& g);
bool is_cyclic_subgroup(const std::vector<Word>& words, const AlphabetPtr& alphabet);

// Greedy Whitehead minimization of the cyclic length; returns a word of
// minimal translation length in the automorphism orbit.
Word whitehead_minimize_rank2(const Word& u);
bool is_primitive_rank2(const Word& u);

}  // namespace mrq
