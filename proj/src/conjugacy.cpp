#include "mrq/conjugacy.hpp"

#include <algorithm>
#include <stdexcept>

namespace mrq {

namespace {

// Offset j with rot_j(core_u) == core_v, i.e. core_v = a^-1 core_u a for the
// length-j prefix a. KMP search of core_v in core_u twice.
std::optional<size_t> rotation_offset(const std::vector<int32_t>& u,
                                      const std::vector<int32_t>& v) {
  size_t n = u.size();
  if (n != v.size()) return std::nullopt;
  if (n == 0) return 0;
  std::vector<size_t> pi(n, 0);
  for (size_t i = 1; i < n; ++i) {
    size_t j = pi[i - 1];
    while (j > 0 && v[i] != v[j]) j = pi[j - 1];
    if (v[i] == v[j]) ++j;
    pi[i] = j;
  }
  size_t match = 0;
  for (size_t i = 0; i < 2 * n; ++i) {
    int32_t c = u[i % n];
    while (match > 0 && c != v[match]) match = pi[match - 1];
    if (c == v[match]) ++match;
    if (match == n) {
      size_t end = i + 1;
      if (end >= n && end - n < n) return end - n;
      match = pi[match - 1];
    }
  }
  return std::nullopt;
}

Word prefix(const Word& u, size_t len) {
  std::vector<int32_t> p(u.letters().begin(), u.letters().begin() + len);
  return Word(u.alphabet(), std::move(p));
}

bool verified(const std::vector<Word>& a, const std::vector<Word>& b, const Word& s) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (conjugate(a[i], s) != b[i]) return false;
  }
  return true;
}

}  // namespace

Word primitive_root(const Word& u) {
  if (u.empty()) throw std::invalid_argument("primitive root of the empty word");
  if (auto pp = is_proper_power(u)) return pp->root;
  return u;
}

ConjugacyAnswer are_conjugate(const Word& u, const Word& v) {
  auto cu = cyclic_reduce(u);
  auto cv = cyclic_reduce(v);
  auto offset = rotation_offset(cu.core.core.letters(), cv.core.core.letters());
  if (!offset) return {};
  // core_v = a^-1 core_u a  =>  witness = q a^-1 p^-1
  Word a = prefix(cu.core.core, *offset);
  Word witness = multiply(multiply(cv.conjugator, invert(a)), invert(cu.conjugator));
  if (conjugate(u, witness) != v) return {};
  return {true, witness};
}

ConjugacyAnswer simultaneous_conjugator(const std::vector<Word>& a,
                                        const std::vector<Word>& b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("tuples of equal positive length required");

  size_t anchor = a.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i].empty()) {
      anchor = i;
      break;
    }
  }
  if (anchor == a.size()) {
    // all-trivial A: only the all-trivial B is a conjugate tuple
    for (const auto& w : b) {
      if (!w.empty()) return {};
    }
    return {true, Word(a[0].alphabet())};
  }

  auto base = are_conjugate(a[anchor], b[anchor]);
  if (!base.found) return {};
  const Word& s0 = *base.witness;
  Word root = primitive_root(a[anchor]);
  long long tr_root = translation_length(root);

  // Coordinates inside <root> are t-independent; others bound the window.
  long long window = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i == anchor) continue;
    long long bound =
        (long long)(b[i].size() + a[i].size() + 2 * s0.size()) / std::max(1LL, tr_root) + 2;
    window = std::max(window, bound);
  }

  std::optional<Word> best;
  std::string best_printed;
  for (long long t = -window; t <= window; ++t) {
    Word s = multiply(s0, expand(power(root, t)));
    if (!verified(a, b, s)) continue;
    std::string printed = to_string(s);
    if (!best || printed.size() < best_printed.size() ||
        (printed.size() == best_printed.size() && printed < best_printed)) {
      best = s;
      best_printed = printed;
    }
  }
  if (!best) return {};
  return {true, *best};
}

}  // namespace mrq
