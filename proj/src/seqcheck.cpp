#include "mrq/seqcheck.hpp"

#include <random>
#include <stdexcept>

namespace mrq {

TSStats cancellation_stats(const ImageTuple& t) {
  TSStats stats;
  if (t.images.empty()) return stats;
  stats.chi = 0;
  stats.xi = static_cast<long long>(t.images[0].size());
  for (const auto& im : t.images) {
    stats.chi = std::max(stats.chi, (long long)im.size());
    stats.xi = std::min(stats.xi, (long long)im.size());
  }
  std::vector<Word> pool;
  for (const auto& im : t.images) {
    pool.push_back(im);
    pool.push_back(invert(im));
  }
  for (const auto& u : pool) {
    for (const auto& v : pool) {
      if (v == invert(u)) continue;
      long long cancelled =
          ((long long)u.size() + (long long)v.size() - (long long)multiply(u, v).size()) / 2;
      stats.c = std::max(stats.c, cancelled);
    }
  }
  return stats;
}

ImageTuple sample_smallcancel(int rank, int length, uint64_t seed, int target_rank) {
  if (length < 16) throw std::invalid_argument("length must be at least 16");
  if (target_rank < 2) throw std::invalid_argument("target rank must be at least 2");
  if (rank < 1) throw std::invalid_argument("source rank must be at least 1");
  auto source = Alphabet::standard(rank);
  auto target = Alphabet::standard(target_rank);
  std::mt19937_64 rng(seed);

  auto random_cyclic_word = [&] {
    while (true) {
      std::vector<int32_t> letters;
      while ((int)letters.size() < length) {
        int gen = (int)(rng() % target_rank);
        int32_t code = (rng() & 1) ? letter::make(gen, +1) : letter::make(gen, -1);
        if (!letters.empty() && letters.back() == letter::inverse(code)) continue;
        letters.push_back(code);
      }
      if (letters.front() != letter::inverse(letters.back()))
        return Word(target, std::move(letters));
    }
  };

  for (int attempt = 0; attempt < 10000; ++attempt) {
    ImageTuple t;
    t.source = source;
    for (int i = 0; i < rank; ++i) t.images.push_back(random_cyclic_word());
    if (cancellation_stats(t).c <= length / 8) return t;
  }
  throw std::runtime_error("rejection budget exhausted");
}

bool check_length_bounds(const ImageTuple& t, const std::vector<Word>& probes) {
  EndoMap h(t.source, t.images.empty() ? t.source : t.images[0].alphabet(),
            t.images);
  auto stats = cancellation_stats(t);
  for (const auto& f : probes) {
    long long len = (long long)apply(h, f).size();
    long long flen = (long long)f.size();
    if (len > stats.chi * flen) return false;
    if (len < (stats.xi - 2 * stats.c) * flen) return false;
  }
  return true;
}

bool twist_growth_check(const Word& a, const Word& b, const Word& z, long long n) {
  if (z.empty()) throw std::domain_error("z must be nontrivial");
  if (n <= 0) throw std::invalid_argument("N must be positive");
  auto commutes = [&](const Word& u) {
    return multiply(multiply(u, z), invert(multiply(z, u))).empty();
  };
  if (commutes(a)) throw std::domain_error("[a,z] = 1");
  if (commutes(b)) throw std::domain_error("[b,z] = 1");

  long long bound = 2 * n * translation_length(z) -
                    ((long long)a.size() + (long long)b.size());
  for (long long sign : {+1LL, -1LL}) {
    PowerExpr expr(z.alphabet());
    expr.append_word(a);
    expr.append_power(z, sign * n);
    expr.append_word(b);
    expr.append_power(z, -sign * n);
    if (expr.length() < bound) return false;
  }
  return true;
}

TwistSweepReport twist_sweep(uint64_t seed, int samples) {
  auto alphabet = Alphabet::standard(2);
  std::mt19937_64 rng(seed);
  auto random_word = [&](int max_len) {
    int len = 1 + (int)(rng() % max_len);
    std::vector<int32_t> letters;
    while ((int)letters.size() < len) {
      int gen = (int)(rng() % 2);
      int32_t code = (rng() & 1) ? letter::make(gen, +1) : letter::make(gen, -1);
      if (!letters.empty() && letters.back() == letter::inverse(code)) continue;
      letters.push_back(code);
    }
    return Word(alphabet, std::move(letters));
  };

  TwistSweepReport report;
  while (report.samples < samples) {
    Word a = random_word(6);
    Word b = random_word(6);
    Word z = random_word(4);
    long long n = (long long)(a.size() + b.size()) + 2;
    bool ok;
    try {
      ok = twist_growth_check(a, b, z, n);
    } catch (const std::domain_error&) {
      continue;  // commuting draw
    }
    ++report.samples;
    report.probes += 2;
    if (!ok) {
      ++report.violations;
      if (report.first_violation.empty()) {
        report.first_violation = "a=" + to_string(a) + " b=" + to_string(b) +
                                 " z=" + to_string(z) + " N=" + std::to_string(n);
      }
    }
  }
  return report;
}

}  // namespace mrq
