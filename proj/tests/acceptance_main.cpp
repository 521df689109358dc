// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exits with the number of failures.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "mrq/ctest.hpp"
#include "mrq/dwz.hpp"
#include "mrq/reports.hpp"
#include "mrq/seqcheck.hpp"
#include "oracle.hpp"

using namespace mrq;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(int criterion, bool pass, const std::string& title,
            const std::string& detail) {
  std::printf("%s  criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion,
              title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const Rat& r) { return reports::format_rational(r); }

// 1. exact envelope minimizers, zero tolerance, < 1 ms
void criterion_envelope() {
  auto start = Clock::now();
  auto g = pl_minimax(envelope_terms(GenSetId::g));
  auto u = pl_minimax(envelope_terms(GenSetId::u));
  double elapsed = ms_since(start);
  bool pass = g.first == Rat(0) && g.second == Rat(2) && u.first == Rat(1, 2) &&
              u.second == Rat(3) && elapsed < 1.0;
  report(1, pass, "envelope minimizers exact",
         "g: x*=" + fmt(g.first) + " value=" + fmt(g.second) +
             "; u: x*=" + fmt(u.first) + " value=" + fmt(u.second) + "; " +
             std::to_string(elapsed) + " ms");
}

// 2. shortening convergence over k in {25,50,100,200}, both gensets, < 2 min
void criterion_shorten() {
  auto start = Clock::now();
  bool pass = true;
  std::string detail;
  for (auto id : {GenSetId::g, GenSetId::u}) {
    Rat target = pl_minimax(envelope_terms(id)).second;
    Rat last_dev(-1);
    for (long long k : {25, 50, 100, 200}) {
      auto r = shorten(k, id);
      if (r.q_star != 0) pass = false;
      if (id == GenSetId::g && std::abs(r.l_star) > 3) pass = false;
      if (id == GenSetId::u && std::abs(2 * r.l_star - k) > 6) pass = false;
      Rat dev = r.normalized - target;
      if (dev < Rat(0)) dev = -dev;
      if (last_dev >= Rat(0) && dev > last_dev) pass = false;
      last_dev = dev;
      if (k == 200) {
        if (dev > Rat(1, 20)) pass = false;
        detail += std::string(id == GenSetId::g ? "g" : "u") +
                  ": l*=" + std::to_string(r.l_star) +
                  " normalized=" + reports::rational_decimal(r.normalized, 6) + "  ";
      }
    }
  }
  double elapsed = ms_since(start);
  pass = pass && elapsed < 120000.0;
  report(2, pass, "shortening convergence",
         detail + std::to_string(elapsed) + " ms");
}

// 3. homomorphy of the family on 100 seeded triples + mutated control, < 1 min
void criterion_relators() {
  auto start = Clock::now();
  std::mt19937_64 rng(1);
  long long bad = 0;
  for (int i = 0; i < 100; ++i) {
    HomParams p{(long long)(rng() % 101) - 50, (long long)(rng() % 101) - 50,
                (long long)(rng() % 101) - 50};
    if (!verify_relators(p)) ++bad;
  }
  auto mutated = verify_relators_mutated({7, 3, 1});
  bool control = mutated.size() == 4 && mutated[0] && mutated[1] && mutated[2] &&
                 !mutated[3];
  double elapsed = ms_since(start);
  bool pass = bad == 0 && control && elapsed < 60000.0;
  report(3, pass, "homomorphy of the family",
         std::to_string(100 - bad) + "/100 triples verified; R4 control " +
             (control ? "failed as expected" : "DID NOT fail") + "; " +
             std::to_string(elapsed) + " ms");
}

// 4. z-length law: residual constant per sign over [5,50], zero tolerance
void criterion_zlaw() {
  long long tr_w = (long long)DwzPresentation::instance().w_target().size();
  bool pass = true;
  long long pos = z_image_length({5, 0, 0}) - 6 * 5 * tr_w;
  long long neg = z_image_length({-5, 0, 0}) - 6 * 5 * tr_w;
  for (long long mag = 5; mag <= 50; ++mag) {
    if (z_image_length({mag, 0, 0}) - 6 * mag * tr_w != pos) pass = false;
    if (z_image_length({-mag, 0, 0}) - 6 * mag * tr_w != neg) pass = false;
  }
  report(4, pass, "z-length law",
         "s(+)=" + std::to_string(pos) + " s(-)=" + std::to_string(neg) +
             " constant over |k| in [5,50]");
}

// 5. homology separation, exact, < 1 s
void criterion_homology() {
  auto start = Clock::now();
  auto r = homology_report({-5, -1, 0, 1, 5});
  bool pass = r.g_w.betti == 4 && r.g_w.torsion.empty() && r.quotients.size() == 5;
  for (const auto& [eps, h] : r.quotients)
    pass = pass && h.betti == 3 && h.torsion.empty();
  double elapsed = ms_since(start);
  pass = pass && elapsed < 1000.0;
  report(5, pass, "homology separation",
         "betti(G_w)=" + std::to_string(r.g_w.betti) + ", betti(M~_eps)=3 for eps in "
         "{-5,-1,0,1,5}; " + std::to_string(elapsed) + " ms");
}

// 6. exhaustive C-test sweep at bound 2, zero counterexamples, < 10 min
void criterion_ctest_sweep() {
  auto start = Clock::now();
  auto r = ctest_sweep(2);
  double elapsed = ms_since(start);
  bool pass = r.counterexamples == 0 && elapsed < 600000.0;
  report(6, pass, "C-test exhaustive sweep",
         std::to_string(r.pairs_checked) + " pairs, " + std::to_string(r.witnessed) +
             " witnessed, " + std::to_string(r.counterexamples) +
             " counterexamples; " + std::to_string(elapsed) + " ms");
}

// 7. cyclicity criterion on 1000 seeded pairs of length <= 4
void criterion_cyclicity() {
  auto alphabet = Alphabet::standard(2);
  std::mt19937_64 rng(1);
  auto random_word = [&] {
    int len = (int)(rng() % 5);
    std::vector<int32_t> letters;
    while ((int)letters.size() < len) {
      int gen = (int)(rng() % 2);
      int32_t code = (rng() & 1) ? letter::make(gen, +1) : letter::make(gen, -1);
      if (!letters.empty() && letters.back() == letter::inverse(code)) continue;
      letters.push_back(code);
    }
    return Word(alphabet, std::move(letters));
  };
  long long violations = 0;
  for (int i = 0; i < 1000; ++i) {
    if (!cyclicity_criterion_check(random_word(), random_word())) ++violations;
  }
  report(7, violations == 0, "cyclicity criterion",
         std::to_string(violations) + " violations in 1000 samples");
}

// 8. no-roots facts and non-primitivity of the Ivanov word
void criterion_no_roots() {
  const auto& iv = build_ivanov();
  auto b2 = Alphabet::make({"b1", "b2"});
  EndoMap to_b(iv.pattern.alphabet(), b2,
               {parse_word("b1", b2), parse_word("b2", b2)});
  Word w_b = apply(to_b, iv.pattern);
  bool pass = !is_proper_power(w_b).has_value() &&
              !is_proper_power(parse_word("b1 b2 b1^4", b2)).has_value() &&
              !is_primitive_rank2(iv.pattern);
  report(8, pass, "no-roots facts",
         "w(b1,b2) and b1 b2 b1^4 rootless; w not primitive");
}

// 9. twist-growth inequality sweep, zero violations demanded
void criterion_twist() {
  auto r = twist_sweep(1, 500);
  bool pass = r.violations == 0;
  std::string detail = std::to_string(r.violations) + " violations in " +
                       std::to_string(r.samples) + " samples";
  if (!r.first_violation.empty()) detail += "; first: " + r.first_violation;
  report(9, pass, "twist-growth inequality", detail);
}

// 10. engine vs oracle on 10^4 random compressed expressions
void criterion_engine_oracle() {
  auto alphabet = Alphabet::standard(2);
  std::mt19937_64 rng(42);
  long long mismatches = 0;
  for (int sample = 0; sample < 10000; ++sample) {
    PowerExpr expr(alphabet);
    oracle::Letters flat;
    int blocks = 1 + (int)(rng() % 5);
    for (int b = 0; b < blocks; ++b) {
      Word base(alphabet, oracle::random_reduced(rng, 2, 1 + rng() % 8));
      long long e = (long long)(rng() % 101) - 50;
      expr.append_power(base, e);
      // independent oracle: stack reduction of the concatenated expansion
      oracle::Letters raw = flat;
      oracle::Letters powed = e < 0 ? oracle::naive_invert(base.letters()) : base.letters();
      for (long long rep = 0; rep < (e < 0 ? -e : e); ++rep)
        raw.insert(raw.end(), powed.begin(), powed.end());
      flat.clear();
      for (int32_t c : raw) {
        if (!flat.empty() && flat.back() == -c) flat.pop_back();
        else flat.push_back(c);
      }
    }
    if (expr.length() != (long long)flat.size() || expr.expand().letters() != flat)
      ++mismatches;
    // spot-check the stack oracle against the quadratic one
    if (sample < 50 && oracle::naive_reduce(flat) != flat) ++mismatches;
  }
  report(10, mismatches == 0, "engine oracle equivalence",
         std::to_string(mismatches) + " mismatches in 10000 expressions");
}

}  // namespace

int main() {
  criterion_envelope();
  criterion_shorten();
  criterion_relators();
  criterion_zlaw();
  criterion_homology();
  criterion_ctest_sweep();
  criterion_cyclicity();
  criterion_no_roots();
  criterion_twist();
  criterion_engine_oracle();
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all criteria passed\n");
  return failures;
}
