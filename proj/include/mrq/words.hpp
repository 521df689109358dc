#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Exact reduced-word arithmetic in a finitely generated free group.
//
// Letters are encoded as nonzero 32-bit integers: generator g (0-based) with
// positive sign is +(g+1), its inverse is -(g+1). A Word is always freely
// reduced; the empty sequence is the identity.

namespace mrq {

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  static AlphabetPtr make(std::vector<std::string> names);
  // x1, x2, ..., x<rank>
  static AlphabetPtr standard(int rank);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::string& name(int gen) const { return names_.at(gen); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
};

// True when the two pointers denote compatible alphabets.
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

namespace letter {
inline int32_t make(int gen, int sign) { return sign > 0 ? gen + 1 : -(gen + 1); }
inline int32_t inverse(int32_t code) { return -code; }
inline int generator(int32_t code) { return (code > 0 ? code : -code) - 1; }
inline int sign(int32_t code) { return code > 0 ? 1 : -1; }
}  // namespace letter

struct CyclicReduction;
struct ProperPower;

class Word {
 public:
  Word() = default;
  explicit Word(AlphabetPtr alphabet);
  // Freely reduces the given letter sequence.
  Word(AlphabetPtr alphabet, std::vector<int32_t> raw_letters);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<int32_t>& letters() const;
  size_t size() const { return letters_ ? letters_->size() : 0; }
  bool empty() const { return size() == 0; }
  int32_t letter(size_t i) const { return (*letters_)[i]; }

  friend bool operator==(const Word& u, const Word& v);
  friend bool operator!=(const Word& u, const Word& v) { return !(u == v); }

  // 64-bit content hash (length-aware); equal words hash equally.
  uint64_t hash() const;

 private:
  friend class PowerExpr;
  friend Word multiply(const Word&, const Word&);
  friend Word invert(const Word&);
  friend CyclicReduction cyclic_reduce(const Word&);
  friend std::optional<ProperPower> is_proper_power(const Word&);
  struct AlreadyReduced {};
  Word(AlphabetPtr alphabet, std::shared_ptr<const std::vector<int32_t>> letters,
       AlreadyReduced);

  AlphabetPtr alphabet_;
  std::shared_ptr<const std::vector<int32_t>> letters_;
};

// Cyclically reduced word: additionally the first and last letters are not
// mutually inverse.
struct CyclicWord {
  Word core;
};

struct CyclicReduction {
  CyclicWord core;
  Word conjugator;  // u = conjugator * core * conjugator^-1
};

struct ProperPower {
  Word root;
  long long exponent;  // >= 2
};

// Run-length-compressed product of (base, exponent) blocks, kept in a
// normal form with no cancellation between adjacent blocks. Lengths are
// therefore exact without materializing the expansion.
class PowerExpr {
 public:
  struct Block {
    Word base;           // nonempty, freely reduced
    long long exponent;  // nonzero; |exponent| >= 2 only for cyclically reduced bases
  };

  explicit PowerExpr(AlphabetPtr alphabet);

  void append_letter(int32_t code);
  void append_word(const Word& u);
  // base^exp; non-cyclically-reduced bases are peeled into s core^exp s^-1.
  void append_power(const Word& base, long long exp);
  void append_expr(const PowerExpr& other, long long exp = 1);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  long long length() const;
  bool is_identity() const { return segments_.empty(); }

  std::vector<Block> blocks() const;

  // Materializes the reduced expansion; throws if it exceeds the cap.
  Word expand() const;
  Word expand(long long cap) const;

  int32_t first_letter() const;
  int32_t last_letter() const;

 private:
  // A segment denotes |exp| copies of base (inverted copies for exp < 0)
  // with htrim letters dropped from the front and ttrim from the back.
  // Adjacent segments never cancel, so lengths are additive.
  struct Segment {
    std::shared_ptr<const std::vector<int32_t>> base;
    long long exp;
    long long htrim = 0;
    long long ttrim = 0;
  };

  void push_block(std::shared_ptr<const std::vector<int32_t>> base, long long exp,
                  long long htrim = 0, long long ttrim = 0);
  // Pops exactly one letter off the reduced tail.
  void pop_tail_letter();
  int32_t tail_letter() const;

  AlphabetPtr alphabet_;
  std::vector<Segment> segments_;
};

// Default 1e8 letters; the MRQ_MATERIALIZE_CAP environment variable overrides.
long long materialize_cap();

// --- operations -----------------------------------------------------------

// Parses `name`, `name^-1`, `name^E` and bracketed commutators `[u,v]^E`.
// The empty word prints as "1" and "1" parses back to it.
Word parse_word(std::string_view text, const AlphabetPtr& alphabet);
std::string to_string(const Word& u);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
// s * u * s^-1
Word conjugate(const Word& u, const Word& s);

CyclicReduction cyclic_reduce(const Word& u);
long long translation_length(const Word& u);

PowerExpr power(const Word& u, long long n);
Word expand(const PowerExpr& p);

std::vector<long long> exponent_vector(const Word& u);

std::optional<ProperPower> is_proper_power(const Word& u);

}  // namespace mrq
