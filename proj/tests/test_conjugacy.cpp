#include <doctest.h>

#include <random>

#include "mrq/conjugacy.hpp"
#include "oracle.hpp"

using namespace mrq;

namespace {

AlphabetPtr rank2() { return Alphabet::standard(2); }

}  // namespace

TEST_CASE("primitive root") {
  auto a = rank2();
  auto w = [&](const char* s) { return parse_word(s, a); };
  CHECK(primitive_root(w("x1 x2 x1 x2")) == w("x1 x2"));
  CHECK(primitive_root(w("x1")) == w("x1"));
  CHECK(primitive_root(w("x1 x2^2 x1^-1")) == w("x1 x2 x1^-1"));
  CHECK(primitive_root(w("x1^-6")) == w("x1^-1"));
  CHECK_THROWS_AS(primitive_root(Word(a)), std::invalid_argument);
}

TEST_CASE("are_conjugate") {
  auto a = rank2();
  auto w = [&](const char* s) { return parse_word(s, a); };

  auto r = are_conjugate(w("x1 x2"), w("x2 x1"));
  REQUIRE(r.found);
  CHECK(to_string(*r.witness) == "x1^-1");

  CHECK_FALSE(are_conjugate(w("x1"), w("x2")).found);
  CHECK_FALSE(are_conjugate(w("x1"), w("x1^-1")).found);
  CHECK(are_conjugate(Word(a), Word(a)).found);
  CHECK_FALSE(are_conjugate(Word(a), w("x1")).found);

  std::mt19937_64 rng(19);
  for (int i = 0; i < 500; ++i) {
    Word u(a, oracle::random_reduced(rng, 2, rng() % 12));
    Word s(a, oracle::random_reduced(rng, 2, rng() % 8));
    Word v = conjugate(u, s);
    auto ans = are_conjugate(u, v);
    REQUIRE(ans.found);
    CHECK(conjugate(u, *ans.witness) == v);
    CHECK(translation_length(u) == translation_length(v));
  }
}

TEST_CASE("simultaneous conjugator examples") {
  auto a = rank2();
  auto w = [&](const char* s) { return parse_word(s, a); };

  auto r = simultaneous_conjugator({w("x1"), w("x2")},
                                   {w("x2 x1 x2^-1"), w("x2")});
  REQUIRE(r.found);
  CHECK(to_string(*r.witness) == "x2");

  CHECK_FALSE(simultaneous_conjugator({w("x1"), w("x2")},
                                      {w("x1"), w("x2 x1")}).found);

  Word s = w("x1 x2");
  auto r2 = simultaneous_conjugator(
      {w("x1 x2"), w("x2")}, {conjugate(w("x1 x2"), s), conjugate(w("x2"), s)});
  REQUIRE(r2.found);
  CHECK(conjugate(w("x1 x2"), *r2.witness) == conjugate(w("x1 x2"), s));
  CHECK(conjugate(w("x2"), *r2.witness) == conjugate(w("x2"), s));

  CHECK_THROWS_AS(simultaneous_conjugator({w("x1")}, {w("x1"), w("x2")}),
                  std::invalid_argument);

  // all-trivial tuples
  CHECK(simultaneous_conjugator({Word(a), Word(a)}, {Word(a), Word(a)}).found);
  CHECK_FALSE(simultaneous_conjugator({Word(a)}, {w("x1")}).found);

  // trivial anchor falls through to the next coordinate
  auto r3 = simultaneous_conjugator({Word(a), w("x1")}, {Word(a), w("x2 x1 x2^-1")});
  REQUIRE(r3.found);
  CHECK(conjugate(w("x1"), *r3.witness) == w("x2 x1 x2^-1"));
}

TEST_CASE("simultaneous conjugator round trip") {
  auto a = rank2();
  std::mt19937_64 rng(23);
  for (int i = 0; i < 400; ++i) {
    size_t n = 1 + rng() % 3;
    std::vector<Word> tuple, image;
    Word s(a, oracle::random_reduced(rng, 2, rng() % 8));
    for (size_t j = 0; j < n; ++j) {
      Word u(a, oracle::random_reduced(rng, 2, rng() % 9));
      tuple.push_back(u);
      image.push_back(conjugate(u, s));
    }
    auto ans = simultaneous_conjugator(tuple, image);
    REQUIRE(ans.found);
    for (size_t j = 0; j < n; ++j)
      CHECK(conjugate(tuple[j], *ans.witness) == image[j]);
  }
}

TEST_CASE("simultaneous conjugator rejects non-conjugate tuples") {
  auto a = rank2();
  std::mt19937_64 rng(29);
  int rejected = 0;
  for (int i = 0; i < 300; ++i) {
    std::vector<Word> tuple = {Word(a, oracle::random_reduced(rng, 2, 1 + rng() % 6)),
                               Word(a, oracle::random_reduced(rng, 2, rng() % 6))};
    std::vector<Word> other = {Word(a, oracle::random_reduced(rng, 2, 1 + rng() % 6)),
                               Word(a, oracle::random_reduced(rng, 2, rng() % 6))};
    auto ans = simultaneous_conjugator(tuple, other);
    if (ans.found) {
      for (size_t j = 0; j < tuple.size(); ++j)
        CHECK(conjugate(tuple[j], *ans.witness) == other[j]);
    } else {
      ++rejected;
    }
  }
  CHECK(rejected > 0);
}
