#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "mrq/ctest.hpp"
#include "mrq/dwz.hpp"
#include "mrq/seqcheck.hpp"

// Machine-readable reports behind the CLI: verification orchestration, JSON
// and CSV serialization, and the hand-emitted envelope SVG. All outputs are
// byte-stable for fixed inputs.

namespace mrq::reports {

using Json = nlohmann::ordered_json;

std::string format_rational(const Rat& r);                 // "p/q" or "p"
std::string rational_decimal(const Rat& r, int digits);    // fixed-point, half up

struct VerifyOptions {
  uint64_t seed = 1;
  int ctest_bound = 2;
  int relator_samples = 100;
  int cyclicity_samples = 1000;
  int twist_samples = 500;
  std::pair<long long, long long> zlaw_range = {5, 50};
  std::vector<long long> epsilons = {-5, -1, 0, 1, 5};
  bool negative_control = false;
};

// One entry per check with "pass" / "fail" / "expected-fail: confirmed".
Json verify_all(const VerifyOptions& options);

Json ctest_sweep_json(int bound);
Json homology_json(const std::vector<long long>& epsilons = {-5, -1, 0, 1, 5});
// residuals z_image_length - 6 tr(w) |k| over both sign ranges
Json zlaw_json(long long lo, long long hi);
Json twist_sweep_json(uint64_t seed, int samples);

Json shorten_json(const ShortenResult& r);
// k,l_star,q_star,max_length,normalized_frac,normalized_dec with LF endings
std::string shorten_csv(const std::vector<long long>& ks, GenSetId id);
// x_num,x_den,value
std::string profile_csv(long long k, GenSetId id, const std::vector<Rat>& grid);

// Plots the five terms and their upper envelope over [-3,3]; marks the exact
// minimizer; optionally overlays normalized profile points for a given k.
std::string envelope_svg(GenSetId id, std::optional<long long> overlay_k);

}  // namespace mrq::reports
