#include "mrq/morphisms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace mrq {

// --- EndoMap ------------------------------------------------------------------

EndoMap::EndoMap(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!source_ || !target_) throw std::invalid_argument("endomap requires alphabets");
  if (static_cast<int>(images_.size()) != source_->rank())
    throw std::invalid_argument("one image per source generator required");
  for (const auto& im : images_) {
    if (!im.empty() && !same_alphabet(im.alphabet(), target_))
      throw std::invalid_argument("alphabet mismatch in image");
  }
}

EndoMap EndoMap::identity(const AlphabetPtr& alphabet) {
  std::vector<Word> images;
  for (int g = 0; g < alphabet->rank(); ++g)
    images.push_back(Word(alphabet, {letter::make(g, +1)}));
  return EndoMap(alphabet, alphabet, std::move(images));
}

Word apply(const EndoMap& f, const Word& u) {
  if (!u.empty() && !same_alphabet(u.alphabet(), f.source()))
    throw std::invalid_argument("alphabet mismatch");
  std::vector<int32_t> out;
  for (int32_t c : u.letters()) {
    const auto& im = f.image(letter::generator(c)).letters();
    if (letter::sign(c) > 0) {
      for (int32_t x : im) {
        if (!out.empty() && out.back() == letter::inverse(x)) out.pop_back();
        else out.push_back(x);
      }
    } else {
      for (auto it = im.rbegin(); it != im.rend(); ++it) {
        int32_t x = letter::inverse(*it);
        if (!out.empty() && out.back() == letter::inverse(x)) out.pop_back();
        else out.push_back(x);
      }
    }
  }
  return Word(f.target(), std::move(out));
}

EndoMap compose(const EndoMap& f, const EndoMap& g) {
  if (!same_alphabet(g.target(), f.source()))
    throw std::invalid_argument("alphabet mismatch in composition");
  std::vector<Word> images;
  images.reserve(g.images().size());
  for (const auto& im : g.images()) images.push_back(apply(f, im));
  return EndoMap(g.source(), f.target(), std::move(images));
}

// --- Stallings folding ----------------------------------------------------------

namespace {

// Union-find folding with edge maps kept on representatives.
struct Folder {
  int rank;
  std::vector<int> parent;
  std::vector<std::map<int, int>> out, in;  // gen -> state (values canonicalized on read)
  std::deque<std::pair<int, int>> pending;

  explicit Folder(int r) : rank(r) { new_state(); }

  int new_state() {
    parent.push_back(static_cast<int>(parent.size()));
    out.emplace_back();
    in.emplace_back();
    return static_cast<int>(parent.size()) - 1;
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Adds a g-edge s -> t, scheduling merges forced by determinism.
  void add_edge(int s, int g, int t) {
    s = find(s);
    t = find(t);
    auto [it, fresh] = out[s].try_emplace(g, t);
    if (!fresh) {
      pending.emplace_back(find(it->second), t);
      process();
      return;
    }
    auto [it2, fresh2] = in[t].try_emplace(g, s);
    if (!fresh2 && find(it2->second) != s) {
      pending.emplace_back(find(it2->second), s);
      process();
    }
  }

  void process() {
    while (!pending.empty()) {
      auto [a, b] = pending.front();
      pending.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (out[a].size() + in[a].size() < out[b].size() + in[b].size()) std::swap(a, b);
      parent[b] = a;
      for (auto& [g, t] : out[b]) {
        int tt = find(t);
        auto [it, fresh] = out[a].try_emplace(g, tt);
        if (!fresh) {
          pending.emplace_back(find(it->second), tt);
          continue;
        }
        auto [it2, fresh2] = in[tt].try_emplace(g, a);
        if (!fresh2) {
          int prev = find(it2->second);
          if (prev != a) pending.emplace_back(prev, a);
          it2->second = a;
        }
      }
      for (auto& [g, s] : in[b]) {
        int ss = find(s);
        auto [it, fresh] = in[a].try_emplace(g, ss);
        if (!fresh) {
          pending.emplace_back(find(it->second), ss);
          continue;
        }
        auto [it2, fresh2] = out[ss].try_emplace(g, a);
        if (!fresh2) {
          int prev = find(it2->second);
          if (prev != a) pending.emplace_back(prev, a);
          it2->second = a;
        }
      }
      out[b].clear();
      in[b].clear();
    }
  }
};

}  // namespace

SubgroupGraph SubgroupGraph::fold(const std::vector<Word>& generators,
                                  const AlphabetPtr& alphabet) {
  if (!alphabet) throw std::invalid_argument("fold requires an alphabet");
  for (const auto& g : generators) {
    if (!g.empty() && !same_alphabet(g.alphabet(), alphabet))
      throw std::invalid_argument("alphabet mismatch");
  }
  Folder folder(alphabet->rank());
  for (const auto& word : generators) {
    const auto& ls = word.letters();
    if (ls.empty()) continue;
    int cur = 0;
    for (size_t i = 0; i < ls.size(); ++i) {
      int next = (i + 1 == ls.size()) ? 0 : folder.new_state();
      int32_t c = ls[i];
      if (letter::sign(c) > 0) folder.add_edge(cur, letter::generator(c), next);
      else folder.add_edge(next, letter::generator(c), cur);
      cur = folder.find(next);
    }
  }
  folder.process();

  // Collect live states and their (canonical) transition maps.
  int base = folder.find(0);
  std::vector<int> live;
  std::vector<int> index(folder.parent.size(), -1);
  for (size_t s = 0; s < folder.parent.size(); ++s) {
    if (folder.find(static_cast<int>(s)) == static_cast<int>(s)) {
      index[s] = static_cast<int>(live.size());
      live.push_back(static_cast<int>(s));
    }
  }
  int rank = alphabet->rank();
  size_t n = live.size();
  std::vector<int> out(n * rank, -1), in(n * rank, -1);
  std::vector<int> degree(n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (auto& [g, t] : folder.out[live[i]]) {
      int ti = index[folder.find(t)];
      out[i * rank + g] = ti;
      in[ti * rank + g] = static_cast<int>(i);
      ++degree[i];
      ++degree[ti];
    }
  }

  // Trim to the core: drop non-basepoint states of degree <= 1.
  std::vector<bool> dead(n, false);
  std::deque<int> queue;
  int base_idx = index[base];
  for (size_t i = 0; i < n; ++i) {
    if (static_cast<int>(i) != base_idx && degree[i] <= 1) queue.push_back((int)i);
  }
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    if (dead[s] || s == base_idx) continue;
    dead[s] = true;
    for (int g = 0; g < rank; ++g) {
      int t = out[s * rank + g];
      if (t >= 0 && !dead[t]) {
        in[t * rank + g] = -1;
        if (--degree[t] <= 1 && t != base_idx) queue.push_back(t);
      }
      int f = in[s * rank + g];
      if (f >= 0 && !dead[f]) {
        out[f * rank + g] = -1;
        if (--degree[f] <= 1 && f != base_idx) queue.push_back(f);
      }
    }
  }

  // Compact with the basepoint first.
  std::vector<int> remap(n, -1);
  size_t live_count = 0;
  remap[base_idx] = 0;
  ++live_count;
  for (size_t i = 0; i < n; ++i) {
    if (!dead[i] && static_cast<int>(i) != base_idx) remap[i] = (int)live_count++;
  }
  SubgroupGraph result;
  result.alphabet_ = alphabet;
  result.states_ = live_count;
  result.out_.assign(live_count * rank, -1);
  result.in_.assign(live_count * rank, -1);
  size_t edges = 0;
  for (size_t i = 0; i < n; ++i) {
    if (dead[i]) continue;
    for (int g = 0; g < rank; ++g) {
      int t = out[i * rank + g];
      if (t >= 0 && !dead[t]) {
        result.out_[remap[i] * rank + g] = remap[t];
        result.in_[remap[t] * rank + g] = remap[i];
        ++edges;
      }
    }
  }
  result.edges_ = edges;
  return result;
}

bool SubgroupGraph::contains(const Word& u) const {
  if (!u.empty() && !same_alphabet(u.alphabet(), alphabet_))
    throw std::invalid_argument("alphabet mismatch");
  int rank = alphabet_->rank();
  int state = 0;
  for (int32_t c : u.letters()) {
    int g = letter::generator(c);
    state = letter::sign(c) > 0 ? out_[state * rank + g] : in_[state * rank + g];
    if (state < 0) return false;
  }
  return state == 0;
}

int SubgroupGraph::rank() const {
  return static_cast<int>(edges_) - static_cast<int>(states_) + 1;
}

bool SubgroupGraph::is_whole_group() const {
  if (states_ != 1) return false;
  for (int g = 0; g < alphabet_->rank(); ++g) {
    if (out_[g] < 0) return false;
  }
  return true;
}

SubgroupGraph fold(const std::vector<Word>& generators, const AlphabetPtr& alphabet) {
  return SubgroupGraph::fold(generators, alphabet);
}

bool membership(const SubgroupGraph& g, const Word& u) { return g.contains(u); }

int subgroup_rank(const SubgroupGraph& g) { return g.rank(); }

bool is_cyclic_subgroup(const std::vector<Word>& words, const AlphabetPtr& alphabet) {
  return fold(words, alphabet).rank() <= 1;
}

// --- Whitehead minimization in rank 2 --------------------------------------------

namespace {

// The twelve type-II Whitehead automorphisms of F2: multiplier a in
// {x1, x1^-1, x2, x2^-1}, the other generator t mapped to one of
// t*a, a^-1*t, a^-1*t*a.
std::vector<EndoMap> whitehead_autos(const AlphabetPtr& alphabet) {
  std::vector<EndoMap> autos;
  for (int mg = 0; mg < 2; ++mg) {
    for (int msign : {+1, -1}) {
      int32_t a = letter::make(mg, msign);
      int tg = 1 - mg;
      int32_t t = letter::make(tg, +1);
      std::vector<std::vector<int32_t>> variants = {
          {t, a}, {letter::inverse(a), t}, {letter::inverse(a), t, a}};
      for (auto& v : variants) {
        std::vector<Word> images(2);
        images[mg] = Word(alphabet, {letter::make(mg, +1)});
        images[tg] = Word(alphabet, v);
        autos.emplace_back(alphabet, alphabet, std::move(images));
      }
    }
  }
  return autos;
}

}  // namespace

Word whitehead_minimize_rank2(const Word& u) {
  if (!u.alphabet() || u.alphabet()->rank() != 2)
    throw std::invalid_argument("rank-2 word required");
  auto autos = whitehead_autos(u.alphabet());
  Word current = cyclic_reduce(u).core.core;
  while (true) {
    Word best = current;
    std::string best_printed;
    bool improved = false;
    for (const auto& phi : autos) {
      Word image = cyclic_reduce(apply(phi, current)).core.core;
      if (image.size() < best.size()) {
        best = image;
        best_printed = to_string(image);
        improved = true;
      } else if (improved && image.size() == best.size()) {
        std::string s = to_string(image);
        if (s < best_printed) {
          best = image;
          best_printed = s;
        }
      }
    }
    if (!improved) return current;
    current = best;
  }
}

bool is_primitive_rank2(const Word& u) {
  if (u.empty()) return false;
  return whitehead_minimize_rank2(u).size() == 1;
}

}  // namespace mrq
