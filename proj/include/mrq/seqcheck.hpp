#pragma once

#include <cstdint>
#include <vector>

#include "mrq/morphisms.hpp"
#include "mrq/words.hpp"

// Desk-scale checks of the quantitative test-sequence ingredients: image
// length bounds under small mutual cancellation, and the Dehn-twist growth
// inequality.

namespace mrq {

struct ImageTuple {
  AlphabetPtr source;        // rank = images.size()
  std::vector<Word> images;  // over the target alphabet, all nonempty
};

struct TSStats {
  long long chi = 0;  // max image length
  long long xi = 0;   // min image length
  long long c = 0;    // max pairwise cancellation
};

// c ranges over ordered pairs from images and their inverses, excluding
// (u, u^-1) pairings; cancellation of (u,v) is (|u|+|v|-|uv|)/2.
TSStats cancellation_stats(const ImageTuple& t);

// Uniform random reduced words of exact length n, cyclically reduced,
// rejection-sampled until the mutual cancellation is at most n/8.
// Deterministic per seed; throws after 10^4 rejected attempts.
ImageTuple sample_smallcancel(int rank, int length, uint64_t seed,
                              int target_rank = 2);

// (xi - 2c)|f| <= |h(f)| <= chi|f| for every probe f.
bool check_length_bounds(const ImageTuple& t, const std::vector<Word>& probes);

// |a z^N b z^-N| >= 2N tr(z) - (|a|+|b|), and the same at -N. Inputs with
// [a,z] = 1 or [b,z] = 1 are rejected as std::domain_error.
bool twist_growth_check(const Word& a, const Word& b, const Word& z, long long n);

struct TwistSweepReport {
  long long samples = 0;
  long long probes = 0;  // two inequality evaluations per sample
  long long violations = 0;
  std::string first_violation;  // printed (a, b, z, N) of the first violator
};

// Seeded sweep over random instances with |a|,|b| <= 6, |z| <= 4 and
// N = |a|+|b|+2; commuting draws are discarded and redrawn.
TwistSweepReport twist_sweep(uint64_t seed, int samples);

}  // namespace mrq
