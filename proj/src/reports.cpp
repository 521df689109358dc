#include "mrq/reports.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <random>

namespace mrq::reports {

std::string format_rational(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string rational_decimal(const Rat& r, int digits) {
  long long num = r.numerator(), den = r.denominator();
  bool negative = (num < 0);
  if (negative) num = -num;
  long long scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half up on the scaled value
  long long scaled = (num * scale + den / 2) / den;
  std::string whole = std::to_string(scaled / scale);
  std::string frac = std::to_string(scaled % scale);
  frac.insert(frac.begin(), digits - frac.size(), '0');
  std::string out = whole + "." + frac;
  return negative ? "-" + out : out;
}

namespace {

std::string word_text(const Word& w) { return to_string(w); }

Word random_reduced_word(std::mt19937_64& rng, const AlphabetPtr& alphabet,
                         int max_len) {
  int len = (int)(rng() % (max_len + 1));
  std::vector<int32_t> letters;
  while ((int)letters.size() < len) {
    int gen = (int)(rng() % alphabet->rank());
    int32_t code = (rng() & 1) ? letter::make(gen, +1) : letter::make(gen, -1);
    if (!letters.empty() && letters.back() == letter::inverse(code)) continue;
    letters.push_back(code);
  }
  return Word(alphabet, std::move(letters));
}

}  // namespace

Json ctest_sweep_json(int bound) {
  auto report = ctest_sweep(bound);
  Json out;
  out["bound"] = report.bound;
  out["pairs_checked"] = report.pairs_checked;
  out["witnessed"] = report.witnessed;
  out["vacuous"] = report.vacuous;
  out["counterexamples"] = report.counterexamples;
  return out;
}

Json homology_json(const std::vector<long long>& epsilons) {
  auto report = homology_report(epsilons);
  Json out;
  auto to_json = [](const HomologyResult& h) {
    Json j;
    j["betti"] = h.betti;
    Json torsion = Json::array();
    for (const auto& t : h.torsion) torsion.push_back(t.str());
    j["torsion"] = torsion;
    return j;
  };
  out["g_w"] = to_json(report.g_w);
  Json quots = Json::array();
  for (const auto& [eps, h] : report.quotients) {
    Json q = to_json(h);
    q["epsilon"] = eps;
    quots.push_back(q);
  }
  out["quotients"] = quots;
  out["verdict"] =
      report.distinct ? "not isomorphic => not SQ-isomorphic" : "indistinguishable";
  return out;
}

Json zlaw_json(long long lo, long long hi) {
  if (lo > hi || lo < 1) throw std::invalid_argument("zlaw range must satisfy 1 <= A <= B");
  long long tr_w =
      (long long)DwzPresentation::instance().w_target().size();
  Json out;
  out["tr_w"] = tr_w;
  out["k_range"] = {lo, hi};
  bool holds = true;
  for (int sign : {+1, -1}) {
    Json residuals = Json::array();
    std::optional<long long> constant;
    bool sign_holds = true;
    for (long long mag = lo; mag <= hi; ++mag) {
      long long k = sign * mag;
      long long residual = z_image_length({k, 0, 0}) - 6 * mag * tr_w;
      residuals.push_back(Json{{"k", k}, {"residual", residual}});
      if (!constant) constant = residual;
      else if (*constant != residual) sign_holds = false;
    }
    const char* key = sign > 0 ? "positive" : "negative";
    out[key] = {{"residuals", residuals},
                {"constant", constant ? Json(*constant) : Json()},
                {"constant_over_range", sign_holds}};
    holds = holds && sign_holds;
  }
  out["law_holds"] = holds;
  return out;
}

Json twist_sweep_json(uint64_t seed, int samples) {
  auto report = twist_sweep(seed, samples);
  Json out;
  out["seed"] = seed;
  out["samples"] = report.samples;
  out["probes"] = report.probes;
  out["violations"] = report.violations;
  if (!report.first_violation.empty()) out["first_violation"] = report.first_violation;
  return out;
}

Json shorten_json(const ShortenResult& r) {
  Json out;
  out["k"] = r.k;
  out["genset"] = r.genset == GenSetId::g ? "g" : "u";
  out["l_star"] = r.l_star;
  out["q_star"] = r.q_star;
  out["max_length"] = r.max_length;
  out["normalized_num"] = r.normalized.numerator();
  out["normalized_den"] = r.normalized.denominator();
  return out;
}

std::string shorten_csv(const std::vector<long long>& ks, GenSetId id) {
  std::string out = "k,l_star,q_star,max_length,normalized_frac,normalized_dec\n";
  for (long long k : ks) {
    auto r = shorten(k, id);
    out += std::to_string(r.k) + "," + std::to_string(r.l_star) + "," +
           std::to_string(r.q_star) + "," + std::to_string(r.max_length) + "," +
           format_rational(r.normalized) + "," +
           rational_decimal(r.normalized, 6) + "\n";
  }
  return out;
}

std::string profile_csv(long long k, GenSetId id, const std::vector<Rat>& grid) {
  auto rows = normalized_profile(k, id, grid);
  std::string out = "x_num,x_den,value\n";
  for (const auto& [x, value] : rows) {
    out += std::to_string(x.numerator()) + "," + std::to_string(x.denominator()) +
           "," + rational_decimal(value, 6) + "\n";
  }
  return out;
}

// --- verify-all -----------------------------------------------------------------

Json verify_all(const VerifyOptions& options) {
  Json checks = Json::array();
  bool all_pass = true;
  auto add = [&](const std::string& name, bool pass, const Json& detail) {
    Json entry;
    entry["name"] = name;
    entry["status"] = pass ? "pass" : "fail";
    entry["detail"] = detail;
    checks.push_back(entry);
    all_pass = all_pass && pass;
  };

  {
    std::mt19937_64 rng(options.seed);
    long long failures = 0;
    for (int i = 0; i < options.relator_samples; ++i) {
      HomParams p{(long long)(rng() % 101) - 50, (long long)(rng() % 101) - 50,
                  (long long)(rng() % 101) - 50};
      if (!verify_relators(p)) ++failures;
    }
    add("relators", failures == 0,
        Json{{"samples", options.relator_samples}, {"failures", failures}});
  }

  if (options.negative_control) {
    auto ok = verify_relators_mutated({7, 3, 1});
    bool confirmed = ok.size() == 4 && ok[0] && ok[1] && ok[2] && !ok[3];
    Json entry;
    entry["name"] = "mutated_family_negative_control";
    entry["status"] = confirmed ? "expected-fail: confirmed" : "fail";
    entry["detail"] = Json{{"relator_ok", Json(ok)}};
    checks.push_back(entry);
    all_pass = all_pass && confirmed;
  }

  {
    auto sweep = ctest_sweep_json(options.ctest_bound);
    add("ctest_sweep", sweep["counterexamples"] == 0, sweep);
  }

  {
    auto alphabet = Alphabet::standard(2);
    std::mt19937_64 rng(options.seed);
    long long violations = 0;
    for (int i = 0; i < options.cyclicity_samples; ++i) {
      Word a1 = random_reduced_word(rng, alphabet, 4);
      Word a2 = random_reduced_word(rng, alphabet, 4);
      if (!cyclicity_criterion_check(a1, a2)) ++violations;
    }
    add("cyclicity", violations == 0,
        Json{{"samples", options.cyclicity_samples}, {"violations", violations}});
  }

  {
    auto homology = homology_json(options.epsilons);
    bool pass = homology["g_w"]["betti"] == 4;
    for (const auto& q : homology["quotients"])
      pass = pass && q["betti"] == 3 && q["torsion"].empty();
    add("homology", pass, homology);
  }

  {
    auto zlaw = zlaw_json(options.zlaw_range.first, options.zlaw_range.second);
    add("z_length_law", zlaw["law_holds"], zlaw);
  }

  {
    auto twist = twist_sweep_json(options.seed, options.twist_samples);
    add("twist_growth", twist["violations"] == 0, twist);
  }

  Json out;
  out["checks"] = checks;
  out["all_pass"] = all_pass;
  return out;
}

// --- envelope SVG ------------------------------------------------------------------

namespace {

struct Frame {
  double x0 = -3, x1 = 3, y0 = 0, y1 = 13;
  double left = 60, right = 760, top = 20, bottom = 480;
  double px(double x) const { return left + (x - x0) / (x1 - x0) * (right - left); }
  double py(double y) const { return bottom - (y - y0) / (y1 - y0) * (bottom - top); }
};

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

double rat_value(const Rat& r) {
  return (double)r.numerator() / (double)r.denominator();
}

std::string polyline(const std::vector<std::pair<double, double>>& pts,
                     const Frame& f, const std::string& style) {
  std::string out = "<polyline fill=\"none\" " + style + " points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) out += " ";
    out += coord(f.px(pts[i].first)) + "," + coord(f.py(pts[i].second));
  }
  out += "\"/>\n";
  return out;
}

}  // namespace

std::string envelope_svg(GenSetId id, std::optional<long long> overlay_k) {
  auto terms = envelope_terms(id);
  auto minimum = pl_minimax(terms);
  Frame frame;

  // vertices: term breakpoints plus pairwise crossings inside [-3, 3]
  std::vector<Rat> xs = {Rat(-3), Rat(3)};
  for (const auto& t : terms)
    for (const auto& [coef, shift] : t.pieces) {
      Rat bp = -shift;
      if (Rat(-3) <= bp && bp <= Rat(3)) xs.push_back(bp);
    }
  auto envelope_at = [&](const Rat& x) {
    Rat top = terms[0].eval(x);
    for (const auto& t : terms) top = std::max(top, t.eval(x));
    return top;
  };
  {
    std::vector<Rat> base = xs;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (size_t i = 0; i + 1 < base.size(); ++i) {
      Rat mid = (base[i] + base[i + 1]) / 2;
      for (size_t s = 0; s < terms.size(); ++s) {
        for (size_t t = s + 1; t < terms.size(); ++t) {
          // crossing of the affine regimes at the midpoint sample
          auto line = [&](const PLTerm& term) {
            Rat slope(0), icept = term.constant;
            for (const auto& [coef, shift] : term.pieces) {
              if (mid + shift >= Rat(0)) {
                slope += coef;
                icept += coef * shift;
              } else {
                slope -= coef;
                icept -= coef * shift;
              }
            }
            return std::pair(slope, icept);
          };
          auto [as, bs] = line(terms[s]);
          auto [at, bt] = line(terms[t]);
          if (as == at) continue;
          Rat x = (bt - bs) / (as - at);
          if (base[i] < x && x < base[i + 1]) xs.push_back(x);
        }
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"520\" "
         "viewBox=\"0 0 800 520\">\n";
  svg += "<!-- mrq envelope v1 -->\n";
  svg += "<rect width=\"800\" height=\"520\" fill=\"white\"/>\n";

  // axes and integer grid
  for (int gx = -3; gx <= 3; ++gx) {
    svg += "<line x1=\"" + coord(frame.px(gx)) + "\" y1=\"" + coord(frame.py(0)) +
           "\" x2=\"" + coord(frame.px(gx)) + "\" y2=\"" + coord(frame.py(13)) +
           "\" stroke=\"#dddddd\"/>\n";
    svg += "<text x=\"" + coord(frame.px(gx)) + "\" y=\"" +
           coord(frame.py(0) + 18) + "\" font-size=\"12\" text-anchor=\"middle\">" +
           std::to_string(gx) + "</text>\n";
  }
  for (int gy = 0; gy <= 13; gy += 2) {
    svg += "<line x1=\"" + coord(frame.px(-3)) + "\" y1=\"" + coord(frame.py(gy)) +
           "\" x2=\"" + coord(frame.px(3)) + "\" y2=\"" + coord(frame.py(gy)) +
           "\" stroke=\"#dddddd\"/>\n";
    svg += "<text x=\"" + coord(frame.px(-3) - 10) + "\" y=\"" +
           coord(frame.py(gy) + 4) + "\" font-size=\"12\" text-anchor=\"end\">" +
           std::to_string(gy) + "</text>\n";
  }

  const char* palette[5] = {"#888888", "#1f77b4", "#2ca02c", "#9467bd", "#d62728"};
  for (size_t t = 0; t < terms.size(); ++t) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& x : xs)
      pts.emplace_back(rat_value(x), rat_value(terms[t].eval(x)));
    svg += polyline(pts, frame,
                    "stroke=\"" + std::string(palette[t % 5]) + "\" stroke-width=\"1\"");
  }
  {
    std::vector<std::pair<double, double>> pts;
    for (const auto& x : xs) pts.emplace_back(rat_value(x), rat_value(envelope_at(x)));
    svg += polyline(pts, frame, "stroke=\"black\" stroke-width=\"2.5\"");
  }

  if (overlay_k) {
    long long k = *overlay_k;
    long long mag = std::llabs(k);
    long long step = std::max(1LL, (6 * mag) / 120);
    std::vector<Rat> grid;
    for (long long j = -3 * mag; j <= 3 * mag; j += step) grid.push_back(Rat(j, k));
    auto profile = normalized_profile(k, id, grid);
    for (const auto& [x, value] : profile) {
      svg += "<circle cx=\"" + coord(frame.px(rat_value(x))) + "\" cy=\"" +
             coord(frame.py(rat_value(value))) +
             "\" r=\"2.5\" fill=\"none\" stroke=\"#ff7f0e\"/>\n";
    }
  }

  double mx = rat_value(minimum.first), my = rat_value(minimum.second);
  svg += "<circle cx=\"" + coord(frame.px(mx)) + "\" cy=\"" + coord(frame.py(my)) +
         "\" r=\"5\" fill=\"black\"/>\n";
  svg += "<text x=\"" + coord(frame.px(mx) + 10) + "\" y=\"" +
         coord(frame.py(my) - 10) + "\" font-size=\"14\">x*=" +
         format_rational(minimum.first) + " value=" + format_rational(minimum.second) +
         "</text>\n";
  svg += "<text x=\"400\" y=\"505\" font-size=\"13\" text-anchor=\"middle\">"
         "normalized generator lengths, generating set " +
         std::string(id == GenSetId::g ? "g" : "u") + "</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace mrq::reports
