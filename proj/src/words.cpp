#include "mrq/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace mrq {

namespace {

const std::vector<int32_t>& empty_letters() {
  static const std::vector<int32_t> kEmpty;
  return kEmpty;
}

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '^') return false;
  }
  return true;
}

// Freely reduces a raw letter sequence in place (stack scan).
std::vector<int32_t> reduce_letters(const std::vector<int32_t>& raw) {
  std::vector<int32_t> out;
  out.reserve(raw.size());
  for (int32_t c : raw) {
    if (c == 0) throw std::invalid_argument("zero letter code");
    if (!out.empty() && out.back() == letter::inverse(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

bool cyclically_reduced(const std::vector<int32_t>& v) {
  return v.size() <= 1 || v.front() != letter::inverse(v.back());
}

using LettersPtr = std::shared_ptr<const std::vector<int32_t>>;

LettersPtr share(std::vector<int32_t> v) {
  return std::make_shared<const std::vector<int32_t>>(std::move(v));
}

bool same_content(const LettersPtr& a, const LettersPtr& b) {
  return a.get() == b.get() || (a->size() == b->size() && *a == *b);
}

}  // namespace

// --- Alphabet ---------------------------------------------------------------

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("alphabet rank must be >= 1");
  for (size_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i]))
      throw std::invalid_argument("invalid generator name: '" + names_[i] + "'");
    for (size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j])
        throw std::invalid_argument("duplicate generator name: '" + names_[i] + "'");
    }
  }
}

AlphabetPtr Alphabet::make(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

AlphabetPtr Alphabet::standard(int rank) {
  std::vector<std::string> names;
  names.reserve(rank);
  for (int i = 1; i <= rank; ++i) names.push_back("x" + std::to_string(i));
  return make(std::move(names));
}

std::optional<int> Alphabet::index_of(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// --- Word -------------------------------------------------------------------

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

Word::Word(AlphabetPtr alphabet, std::vector<int32_t> raw_letters)
    : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("word requires an alphabet");
  for (int32_t c : raw_letters) {
    if (c == 0 || letter::generator(c) >= alphabet_->rank())
      throw std::invalid_argument("letter outside alphabet");
  }
  auto reduced = reduce_letters(raw_letters);
  if (!reduced.empty()) letters_ = share(std::move(reduced));
}

Word::Word(AlphabetPtr alphabet, LettersPtr letters, AlreadyReduced)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {}

const std::vector<int32_t>& Word::letters() const {
  return letters_ ? *letters_ : empty_letters();
}

bool operator==(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  if (u.alphabet_ && v.alphabet_ && !same_alphabet(u.alphabet_, v.alphabet_)) return false;
  return u.letters() == v.letters();
}

uint64_t Word::hash() const {
  uint64_t h = 0x9e3779b97f4a7c15ULL ^ (uint64_t)size();
  for (int32_t c : letters()) {
    h ^= (uint64_t)(uint32_t)c;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

// --- elementary operations ---------------------------------------------------

Word multiply(const Word& u, const Word& v) {
  if (u.alphabet() && v.alphabet() && !same_alphabet(u.alphabet(), v.alphabet()))
    throw std::invalid_argument("alphabet mismatch");
  if (u.empty()) return v;
  if (v.empty()) return u;
  const auto& a = u.letters();
  const auto& b = v.letters();
  size_t c = 0;
  while (c < a.size() && c < b.size() && a[a.size() - 1 - c] == letter::inverse(b[c])) ++c;
  std::vector<int32_t> out;
  out.reserve(a.size() + b.size() - 2 * c);
  out.insert(out.end(), a.begin(), a.end() - c);
  out.insert(out.end(), b.begin() + c, b.end());
  auto alpha = u.alphabet() ? u.alphabet() : v.alphabet();
  if (out.empty()) return Word(alpha);
  return Word(alpha, share(std::move(out)), Word::AlreadyReduced{});
}

Word invert(const Word& u) {
  if (u.empty()) return u;
  const auto& a = u.letters();
  std::vector<int32_t> out;
  out.reserve(a.size());
  for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back(letter::inverse(*it));
  return Word(u.alphabet(), share(std::move(out)), Word::AlreadyReduced{});
}

Word conjugate(const Word& u, const Word& s) {
  return multiply(multiply(s, u), invert(s));
}

CyclicReduction cyclic_reduce(const Word& u) {
  const auto& a = u.letters();
  size_t n = a.size();
  if (n == 0) return CyclicReduction{CyclicWord{u}, Word(u.alphabet())};
  size_t i = 0;
  while (i + 1 < n - i && a[i] == letter::inverse(a[n - 1 - i])) ++i;
  std::vector<int32_t> core(a.begin() + i, a.end() - i);
  std::vector<int32_t> conj(a.begin(), a.begin() + i);
  Word core_word = core.empty() ? Word(u.alphabet())
                                : Word(u.alphabet(), share(std::move(core)),
                                       Word::AlreadyReduced{});
  Word conj_word = conj.empty() ? Word(u.alphabet())
                                : Word(u.alphabet(), share(std::move(conj)),
                                       Word::AlreadyReduced{});
  return CyclicReduction{CyclicWord{std::move(core_word)}, std::move(conj_word)};
}

long long translation_length(const Word& u) {
  return static_cast<long long>(cyclic_reduce(u).core.core.size());
}

std::vector<long long> exponent_vector(const Word& u) {
  std::vector<long long> out(u.alphabet() ? u.alphabet()->rank() : 0, 0);
  for (int32_t c : u.letters()) out[letter::generator(c)] += letter::sign(c);
  return out;
}

// --- materialization cap ------------------------------------------------------

long long materialize_cap() {
  static const long long cap = [] {
    if (const char* env = std::getenv("MRQ_MATERIALIZE_CAP")) {
      char* end = nullptr;
      long long v = std::strtoll(env, &end, 10);
      if (end && *end == '\0' && v > 0) return v;
    }
    return 100000000LL;
  }();
  return cap;
}

// --- PowerExpr ---------------------------------------------------------------

namespace {

// Expansion frame of a segment: |exp| copies of base (inverted copies for
// exp < 0) with htrim letters dropped from the front and ttrim from the back.
long long seg_total(size_t blen, long long exp) {
  return static_cast<long long>(blen) * (exp < 0 ? -exp : exp);
}

int32_t frame_letter(const std::vector<int32_t>& base, long long exp, long long pos) {
  size_t blen = base.size();
  size_t p = static_cast<size_t>(pos % static_cast<long long>(blen));
  return exp > 0 ? base[p] : letter::inverse(base[blen - 1 - p]);
}

}  // namespace

PowerExpr::PowerExpr(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("power expression requires an alphabet");
}

long long PowerExpr::length() const {
  long long total = 0;
  for (const auto& s : segments_)
    total += seg_total(s.base->size(), s.exp) - s.htrim - s.ttrim;
  return total;
}

int32_t PowerExpr::tail_letter() const {
  if (segments_.empty()) return 0;
  const auto& s = segments_.back();
  long long last = seg_total(s.base->size(), s.exp) - s.ttrim - 1;
  return frame_letter(*s.base, s.exp, last);
}

int32_t PowerExpr::first_letter() const {
  if (segments_.empty()) return 0;
  const auto& s = segments_.front();
  return frame_letter(*s.base, s.exp, s.htrim);
}

int32_t PowerExpr::last_letter() const { return tail_letter(); }

void PowerExpr::pop_tail_letter() {
  auto& s = segments_.back();
  size_t blen = s.base->size();
  ++s.ttrim;
  if (seg_total(blen, s.exp) - s.htrim - s.ttrim == 0) {
    segments_.pop_back();
    return;
  }
  if (s.ttrim == static_cast<long long>(blen)) {
    s.ttrim = 0;
    s.exp += s.exp > 0 ? -1 : 1;
  }
}

void PowerExpr::push_block(LettersPtr base, long long exp, long long htrim,
                           long long ttrim) {
  if (!base || base->empty() || exp == 0) return;
  const long long blen = static_cast<long long>(base->size());
  auto remaining = [&] { return seg_total(base->size(), exp) - htrim - ttrim; };
  while (true) {
    if (remaining() <= 0) return;
    if (!segments_.empty()) {
      Segment& top = segments_.back();
      if (cyclically_reduced(*base) && same_content(top.base, base)) {
        if ((top.exp > 0) == (exp > 0) && top.ttrim == 0 && htrim == 0) {
          // aligned concatenation of copies
          top.exp += exp;
          top.ttrim = ttrim;
          return;
        }
        if ((top.exp > 0) != (exp > 0) && top.ttrim == htrim) {
          // Opposite orientations meeting at the same offset within a copy:
          // the streams are inverse letter-for-letter, so min(L1, L2) letters
          // cancel by exponent arithmetic alone.
          long long top_len =
              seg_total(top.base->size(), top.exp) - top.htrim - top.ttrim;
          long long inc_len = remaining();
          if (top_len < inc_len) {
            segments_.pop_back();
            htrim += top_len;
            long long fold = htrim / blen;
            htrim %= blen;
            exp += exp > 0 ? -fold : fold;
            continue;
          }
          if (top_len > inc_len) {
            top.ttrim += inc_len;
            long long fold = top.ttrim / blen;
            top.ttrim %= blen;
            top.exp += top.exp > 0 ? -fold : fold;
            return;
          }
          segments_.pop_back();
          return;
        }
      }
    }
    int32_t h = frame_letter(*base, exp, htrim);
    int32_t t = tail_letter();
    if (t == 0 || t != letter::inverse(h)) break;
    pop_tail_letter();
    ++htrim;
    if (htrim == blen) {
      htrim = 0;
      exp += exp > 0 ? -1 : 1;
    }
  }
  // remainder: partial first copy, whole middle copies, partial last copy
  long long s1 = exp > 0 ? 1 : -1;
  long long copies = exp > 0 ? exp : -exp;
  if (copies == 1) {
    segments_.push_back({std::move(base), exp, htrim, ttrim});
    return;
  }
  if (htrim != 0) {
    segments_.push_back({base, s1, htrim, 0});
    --copies;
  }
  long long middle = copies - (ttrim != 0 ? 1 : 0);
  if (middle > 0) segments_.push_back({base, s1 * middle, 0, 0});
  if (ttrim != 0) segments_.push_back({std::move(base), s1, 0, ttrim});
}

void PowerExpr::append_letter(int32_t code) {
  push_block(share({code}), 1);
}

void PowerExpr::append_word(const Word& u) {
  if (!same_alphabet(alphabet_, u.alphabet()) && !u.empty())
    throw std::invalid_argument("alphabet mismatch");
  if (u.empty()) return;
  push_block(u.letters_, 1);
}

void PowerExpr::append_power(const Word& base, long long exp) {
  if (!same_alphabet(alphabet_, base.alphabet()) && !base.empty())
    throw std::invalid_argument("alphabet mismatch");
  if (base.empty() || exp == 0) return;
  if (exp == 1 || exp == -1 || cyclically_reduced(*base.letters_)) {
    push_block(base.letters_, exp);
    return;
  }
  // base = s * core * s^-1, so base^exp = s * core^exp * s^-1.
  auto cr = cyclic_reduce(base);
  append_word(cr.conjugator);
  push_block(cr.core.core.letters_, exp);
  append_word(invert(cr.conjugator));
}

void PowerExpr::append_expr(const PowerExpr& other, long long exp) {
  if (!same_alphabet(alphabet_, other.alphabet_))
    throw std::invalid_argument("alphabet mismatch");
  if (exp == 0) return;
  // Self-append must iterate over a stable copy.
  std::vector<Segment> src =
      (&other == this) ? segments_ : std::vector<Segment>(other.segments_.begin(),
                                                          other.segments_.end());
  long long reps = exp < 0 ? -exp : exp;
  for (long long r = 0; r < reps; ++r) {
    if (exp > 0) {
      for (const auto& s : src) push_block(s.base, s.exp, s.htrim, s.ttrim);
    } else {
      // inverse of a trimmed power swaps the trims
      for (auto it = src.rbegin(); it != src.rend(); ++it)
        push_block(it->base, -it->exp, it->ttrim, it->htrim);
    }
  }
}

std::vector<PowerExpr::Block> PowerExpr::blocks() const {
  std::vector<Block> out;
  for (const auto& s : segments_) {
    size_t blen = s.base->size();
    long long total = seg_total(blen, s.exp) - s.htrim - s.ttrim;
    if (total <= 0) continue;
    auto emit_slice = [&](long long from, long long count) {
      std::vector<int32_t> piece;
      piece.reserve(static_cast<size_t>(count));
      for (long long i = 0; i < count; ++i)
        piece.push_back(frame_letter(*s.base, s.exp, from + i));
      out.push_back({Word(alphabet_, share(std::move(piece)), Word::AlreadyReduced{}), 1});
    };
    if (s.htrim == 0 && s.ttrim == 0) {
      out.push_back({Word(alphabet_, s.base, Word::AlreadyReduced{}), s.exp});
      continue;
    }
    long long frame = seg_total(blen, s.exp);
    long long full_from = s.htrim == 0 ? 0 : static_cast<long long>(blen);
    long long full_to = s.ttrim == 0 ? frame : frame - static_cast<long long>(blen);
    if (full_from >= full_to) {
      emit_slice(s.htrim, total);
      continue;
    }
    if (s.htrim != 0) emit_slice(s.htrim, static_cast<long long>(blen) - s.htrim);
    long long copies = (full_to - full_from) / static_cast<long long>(blen);
    out.push_back({Word(alphabet_, s.base, Word::AlreadyReduced{}),
                   s.exp > 0 ? copies : -copies});
    if (s.ttrim != 0) emit_slice(full_to, static_cast<long long>(blen) - s.ttrim);
  }
  return out;
}

Word PowerExpr::expand() const { return expand(materialize_cap()); }

Word PowerExpr::expand(long long cap) const {
  long long n = length();
  if (n > cap) throw std::length_error("materialization cap exceeded");
  std::vector<int32_t> out;
  out.reserve(static_cast<size_t>(n));
  for (const auto& s : segments_) {
    long long total = seg_total(s.base->size(), s.exp) - s.htrim - s.ttrim;
    for (long long i = 0; i < total; ++i)
      out.push_back(frame_letter(*s.base, s.exp, s.htrim + i));
  }
  if (out.empty()) return Word(alphabet_);
  return Word(alphabet_, share(std::move(out)), Word::AlreadyReduced{});
}

PowerExpr power(const Word& u, long long n) {
  PowerExpr p(u.alphabet() ? u.alphabet() : Alphabet::standard(1));
  p.append_power(u, n);
  return p;
}

Word expand(const PowerExpr& p) { return p.expand(); }

// --- proper powers ------------------------------------------------------------

std::optional<ProperPower> is_proper_power(const Word& u) {
  auto cr = cyclic_reduce(u);
  const auto& c = cr.core.core.letters();
  size_t n = c.size();
  if (n < 2) return std::nullopt;
  // Smallest period via the KMP prefix function; a power iff it divides n.
  std::vector<size_t> pi(n, 0);
  for (size_t i = 1; i < n; ++i) {
    size_t j = pi[i - 1];
    while (j > 0 && c[i] != c[j]) j = pi[j - 1];
    if (c[i] == c[j]) ++j;
    pi[i] = j;
  }
  size_t p = n - pi[n - 1];
  if (p == n || n % p != 0) return std::nullopt;
  std::vector<int32_t> root_core(c.begin(), c.begin() + p);
  Word root(u.alphabet(), std::move(root_core));
  return ProperPower{conjugate(root, cr.conjugator),
                     static_cast<long long>(n / p)};
}

// --- text format ---------------------------------------------------------------

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;
  const AlphabetPtr& alphabet;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() { return text[pos]; }

  long long parse_exponent() {
    ++pos;  // consume '^'
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits)
      throw std::invalid_argument("malformed exponent in word text");
    return std::stoll(std::string(text.substr(start, pos - start)));
  }

  // item := atom ['^' int]; atom := name | '[' seq ',' seq ']'
  std::vector<int32_t> parse_sequence(bool in_bracket) {
    std::vector<int32_t> out;
    while (!at_end()) {
      char c = peek();
      if (c == ']' || c == ',') {
        if (!in_bracket) throw std::invalid_argument("unbalanced bracket in word text");
        return out;
      }
      std::vector<int32_t> atom;
      if (c == '[') {
        ++pos;
        auto left = parse_sequence(true);
        skip_ws();
        if (pos >= text.size() || text[pos] != ',')
          throw std::invalid_argument("unbalanced bracket in word text");
        ++pos;
        auto right = parse_sequence(true);
        skip_ws();
        if (pos >= text.size() || text[pos] != ']')
          throw std::invalid_argument("unbalanced bracket in word text");
        ++pos;
        // [u,v] = u v u^-1 v^-1
        atom = left;
        atom.insert(atom.end(), right.begin(), right.end());
        for (auto it = left.rbegin(); it != left.rend(); ++it)
          atom.push_back(letter::inverse(*it));
        for (auto it = right.rbegin(); it != right.rend(); ++it)
          atom.push_back(letter::inverse(*it));
      } else {
        size_t start = pos;
        while (pos < text.size()) {
          char d = text[pos];
          if (std::isspace(static_cast<unsigned char>(d)) || d == '^' || d == '[' ||
              d == ']' || d == ',')
            break;
          ++pos;
        }
        std::string name(text.substr(start, pos - start));
        auto idx = alphabet->index_of(name);
        if (!idx) {
          if (name == "1") {
            // identity token
          } else {
            throw std::invalid_argument("unknown generator name: '" + name + "'");
          }
        } else {
          atom.push_back(letter::make(*idx, +1));
        }
      }
      long long e = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') e = parse_exponent();
      if (e >= 0) {
        for (long long r = 0; r < e; ++r)
          out.insert(out.end(), atom.begin(), atom.end());
      } else {
        std::vector<int32_t> inv;
        for (auto it = atom.rbegin(); it != atom.rend(); ++it)
          inv.push_back(letter::inverse(*it));
        for (long long r = 0; r < -e; ++r)
          out.insert(out.end(), inv.begin(), inv.end());
      }
      if (out.size() > static_cast<size_t>(materialize_cap()))
        throw std::length_error("materialization cap exceeded while parsing");
    }
    if (in_bracket) throw std::invalid_argument("unbalanced bracket in word text");
    return out;
  }
};

}  // namespace

Word parse_word(std::string_view text, const AlphabetPtr& alphabet) {
  if (!alphabet) throw std::invalid_argument("parse_word requires an alphabet");
  Parser parser{text, 0, alphabet};
  auto raw = parser.parse_sequence(false);
  return Word(alphabet, std::move(raw));
}

std::string to_string(const Word& u) {
  const auto& a = u.letters();
  if (a.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < a.size()) {
    size_t j = i;
    while (j < a.size() && a[j] == a[i]) ++j;
    long long run = static_cast<long long>(j - i) * letter::sign(a[i]);
    if (!out.empty()) out += ' ';
    out += u.alphabet()->name(letter::generator(a[i]));
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace mrq
