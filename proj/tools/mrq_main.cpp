#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "mrq/reports.hpp"

// Exit codes: 0 pass, 1 verification failure (a paper-level claim failed under
// exact computation), 2 engine error, 64 usage error.

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitEngineError = 2;
constexpr int kExitUsage = 64;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  file << text;
}

std::string dump(const mrq::reports::Json& j) { return j.dump(2) + "\n"; }

mrq::GenSetId parse_genset(const std::string& name) {
  if (name == "g") return mrq::GenSetId::g;
  if (name == "u") return mrq::GenSetId::u;
  throw CLI::ValidationError("--genset", "must be g or u");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification harness for restricted shortening quotients "
               "of the double-edged double over the Ivanov word"};
  app.require_subcommand(1);
  std::string out_path;

  auto* verify = app.add_subcommand("verify-all", "run every verification check");
  verify->add_option("--out", out_path, "output file (default: stdout)");
  mrq::reports::VerifyOptions verify_options;
  verify->add_option("--seed", verify_options.seed, "random seed");
  verify->add_option("--ctest-bound", verify_options.ctest_bound,
                     "word length bound for the C-test sweep");
  verify->add_flag("--negative-control", verify_options.negative_control,
                   "also run the mutated-family control expected to fail R4");

  auto* sweep = app.add_subcommand("ctest-sweep", "exhaustive C-test sweep");
  sweep->add_option("--out", out_path, "output file (default: stdout)");
  int max_len = 2;
  sweep->add_option("--max-len", max_len, "tuple word length bound")
      ->check(CLI::Range(1, 4));

  auto* shorten_cmd = app.add_subcommand("shorten", "shortest-homomorphism search");
  std::string shorten_genset = "g";
  std::vector<long long> ks;
  shorten_cmd->add_option("--out", out_path, "output file (default: stdout)");
  shorten_cmd->add_option("--genset", shorten_genset, "generating set (g or u)");
  shorten_cmd->add_option("--k", ks, "twist exponents k (comma separated)")
      ->required()
      ->delimiter(',');

  auto* envelope_cmd = app.add_subcommand("envelope", "envelope SVG and minimizer");
  std::string envelope_genset = "g";
  std::string envelope_out;
  long long overlay_k = 0;
  std::string profile_out;
  envelope_cmd->add_option("--genset", envelope_genset, "generating set (g or u)");
  envelope_cmd->add_option("--out", envelope_out, "SVG output path")->required();
  envelope_cmd->add_option("--k", overlay_k, "overlay normalized profile for this k");
  envelope_cmd->add_option("--profile-csv", profile_out,
                           "also write the overlay profile table as CSV");

  auto* homology_cmd = app.add_subcommand("homology", "abelianization comparison");
  homology_cmd->add_option("--out", out_path, "output file (default: stdout)");

  auto* zlaw = app.add_subcommand("zlaw", "z-image length law over a k range");
  std::string k_range = "5..50";
  zlaw->add_option("--out", out_path, "output file (default: stdout)");
  zlaw->add_option("--k-range", k_range, "range A..B of |k| (both signs checked)");

  auto* twist = app.add_subcommand("twist-sweep", "Dehn-twist growth sweep");
  uint64_t twist_seed = 1;
  int twist_samples = 500;
  twist->add_option("--out", out_path, "output file (default: stdout)");
  twist->add_option("--seed", twist_seed, "random seed");
  twist->add_option("--samples", twist_samples, "number of sampled instances")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      auto report = mrq::reports::verify_all(verify_options);
      write_output(dump(report), out_path);
      return report["all_pass"].get<bool>() ? kExitPass : kExitVerificationFailure;
    }
    if (*sweep) {
      auto report = mrq::reports::ctest_sweep_json(max_len);
      write_output(dump(report), out_path);
      return report["counterexamples"] == 0 ? kExitPass : kExitVerificationFailure;
    }
    if (*shorten_cmd) {
      auto id = parse_genset(shorten_genset);
      write_output(mrq::reports::shorten_csv(ks, id), out_path);
      return kExitPass;
    }
    if (*envelope_cmd) {
      auto id = parse_genset(envelope_genset);
      std::optional<long long> overlay;
      if (envelope_cmd->count("--k")) overlay = overlay_k;
      write_output(mrq::reports::envelope_svg(id, overlay), envelope_out);
      auto minimum = mrq::pl_minimax(mrq::envelope_terms(id));
      std::cout << "x*=" << mrq::reports::format_rational(minimum.first)
                << " value=" << mrq::reports::format_rational(minimum.second)
                << "\n";
      if (!profile_out.empty() && overlay) {
        long long mag = std::llabs(*overlay);
        std::vector<mrq::Rat> grid;
        long long step = std::max(1LL, (6 * mag) / 120);
        for (long long j = -3 * mag; j <= 3 * mag; j += step)
          grid.push_back(mrq::Rat(j, *overlay));
        write_output(mrq::reports::profile_csv(*overlay, id, grid), profile_out);
      }
      return kExitPass;
    }
    if (*homology_cmd) {
      auto report = mrq::reports::homology_json();
      write_output(dump(report), out_path);
      bool separated = report["g_w"]["betti"] == 4;
      for (const auto& q : report["quotients"])
        separated = separated && q["betti"] != report["g_w"]["betti"];
      return separated ? kExitPass : kExitVerificationFailure;
    }
    if (*zlaw) {
      auto dots = k_range.find("..");
      if (dots == std::string::npos)
        throw CLI::ValidationError("--k-range", "expected A..B");
      long long lo = std::stoll(k_range.substr(0, dots));
      long long hi = std::stoll(k_range.substr(dots + 2));
      auto report = mrq::reports::zlaw_json(lo, hi);
      write_output(dump(report), out_path);
      return report["law_holds"].get<bool>() ? kExitPass : kExitVerificationFailure;
    }
    if (*twist) {
      auto report = mrq::reports::twist_sweep_json(twist_seed, twist_samples);
      write_output(dump(report), out_path);
      return report["violations"] == 0 ? kExitPass : kExitVerificationFailure;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEngineError;
  }
  return kExitUsage;
}
