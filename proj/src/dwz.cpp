#include "mrq/dwz.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <stdexcept>
#include <thread>

namespace mrq {

namespace {

Word substituted_ivanov(const AlphabetPtr& alphabet, const char* g1, const char* g2) {
  const auto& iv = build_ivanov();
  EndoMap sub(iv.pattern.alphabet(), alphabet,
              {parse_word(g1, alphabet), parse_word(g2, alphabet)});
  return apply(sub, iv.pattern);
}

// z(p,q) = p1 q2 p1 q1 p1 q1
Word z_pattern(const AlphabetPtr& alphabet, const char* p1, const char* q1,
               const char* q2) {
  std::string text = std::string(p1) + " " + q2 + " " + p1 + " " + q1 + " " + p1 +
                     " " + q1;
  return parse_word(text, alphabet);
}

}  // namespace

DwzPresentation::DwzPresentation()
    : generators_(Alphabet::make(
          {"a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2", "gamma"})),
      target_(Alphabet::make({"b1", "b2"})),
      w_target_(substituted_ivanov(target_, "b1", "b2")),
      z_ab_(z_pattern(generators_, "a1", "b1", "b2")) {
  Word wa = substituted_ivanov(generators_, "a1", "a2");
  Word wb = substituted_ivanov(generators_, "b1", "b2");
  Word wc = substituted_ivanov(generators_, "c1", "c2");
  Word wd = substituted_ivanov(generators_, "d1", "d2");
  Word zdc = z_pattern(generators_, "d1", "c1", "c2");
  Word gamma = parse_word("gamma", generators_);
  relators_.push_back(multiply(wa, invert(wb)));
  relators_.push_back(multiply(wd, invert(wc)));
  relators_.push_back(multiply(wb, invert(wc)));
  relators_.push_back(multiply(multiply(invert(z_ab_), gamma),
                               multiply(zdc, invert(gamma))));
}

const DwzPresentation& DwzPresentation::instance() {
  static const DwzPresentation p;
  return p;
}

GenSet DwzPresentation::genset(GenSetId id) const {
  GenSet s;
  s.id = id;
  for (const char* name :
       {"a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2", "gamma"})
    s.elements.push_back(parse_word(name, generators_));
  s.elements.push_back(
      parse_word(id == GenSetId::g ? "a1 d1 a1 d1" : "a1 c1 a1 c1", generators_));
  return s;
}

// --- homomorphism family -----------------------------------------------------

HomImages::HomImages(HomParams p) { build(p, p.k + p.l); }

HomImages::HomImages(HomParams p, long long d_exponent) { build(p, d_exponent); }

void HomImages::build(HomParams p, long long d_exponent) {
  const auto& dwz = DwzPresentation::instance();
  const auto& target = dwz.target();
  const Word& w = dwz.w_target();

  auto conjugated_generator = [&](int gen, long long e) {
    PowerExpr expr(target);
    expr.append_power(w, e);
    expr.append_letter(letter::make(gen, +1));
    expr.append_power(w, -e);
    return expr;
  };

  images_.assign(9, PowerExpr(target));
  // a1 a2 b1 b2 c1 c2 d1 d2 gamma
  images_[0] = conjugated_generator(0, p.k);
  images_[1] = conjugated_generator(1, p.k);
  images_[2].append_letter(letter::make(0, +1));
  images_[3].append_letter(letter::make(1, +1));
  images_[4] = conjugated_generator(0, p.l);
  images_[5] = conjugated_generator(1, p.l);
  images_[6] = conjugated_generator(0, d_exponent);
  images_[7] = conjugated_generator(1, d_exponent);

  PowerExpr hz = apply(dwz.z_ab());
  PowerExpr gamma(target);
  gamma.append_expr(hz, p.q);
  gamma.append_power(w, -p.l);
  images_[8] = std::move(gamma);
}

PowerExpr HomImages::apply(const Word& u) const {
  const auto& dwz = DwzPresentation::instance();
  if (!u.empty() && !same_alphabet(u.alphabet(), dwz.generators()))
    throw std::invalid_argument("alphabet mismatch");
  PowerExpr out(dwz.target());
  for (int32_t c : u.letters())
    out.append_expr(images_[letter::generator(c)], letter::sign(c));
  return out;
}

long long HomImages::image_length(const Word& u) const { return apply(u).length(); }

EndoMap hom_family(HomParams p) {
  const auto& dwz = DwzPresentation::instance();
  HomImages images(p);
  std::vector<Word> materialized;
  for (int g = 0; g < 9; ++g) materialized.push_back(images.image(g).expand());
  return EndoMap(dwz.generators(), dwz.target(), std::move(materialized));
}

bool verify_relators(HomParams p) {
  const auto& dwz = DwzPresentation::instance();
  HomImages images(p);
  for (const auto& relator : dwz.relators()) {
    if (!images.apply(relator).is_identity()) return false;
  }
  return true;
}

std::vector<bool> verify_relators_mutated(HomParams p) {
  const auto& dwz = DwzPresentation::instance();
  HomImages images(p, p.k + p.l + 1);
  std::vector<bool> ok;
  for (const auto& relator : dwz.relators())
    ok.push_back(images.apply(relator).is_identity());
  return ok;
}

std::vector<long long> gen_lengths(HomParams p, const GenSet& s) {
  HomImages images(p);
  std::vector<long long> out;
  out.reserve(s.elements.size());
  for (const auto& e : s.elements) out.push_back(images.image_length(e));
  return out;
}

long long z_image_length(HomParams p) {
  HomImages images(p);
  return images.image_length(DwzPresentation::instance().z_ab());
}

// --- shortest-homomorphism search ----------------------------------------------

namespace {

struct Candidate {
  long long max_length = 0;
  long long l = 0, q = 0;
  bool better_than(const Candidate& other) const {
    auto key = [](const Candidate& c) {
      return std::tuple(c.max_length, std::abs(c.l), std::abs(c.q), c.l < 0,
                        c.q < 0);
    };
    return key(*this) < key(other);
  }
};

}  // namespace

ShortenResult shorten(long long k, std::pair<long long, long long> l_window,
                      std::pair<long long, long long> q_window, GenSetId id) {
  if (k == 0) throw std::invalid_argument("k = 0 has no normalization");
  if (l_window.first > l_window.second || q_window.first > q_window.second)
    throw std::invalid_argument("empty search window");
  const auto& dwz = DwzPresentation::instance();
  GenSet s = dwz.genset(id);

  const long long l_lo = l_window.first, l_hi = l_window.second;
  const long long q_lo = q_window.first, q_hi = q_window.second;
  const long long l_count = l_hi - l_lo + 1;

  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  long long chunk = (l_count + workers - 1) / workers;
  std::vector<std::future<Candidate>> jobs;
  for (unsigned t = 0; t < workers; ++t) {
    long long lo = l_lo + (long long)t * chunk;
    long long hi = std::min(l_hi, lo + chunk - 1);
    if (lo > l_hi) break;
    jobs.push_back(std::async(std::launch::async, [&, lo, hi] {
      Candidate best;
      bool first = true;
      for (long long l = lo; l <= hi; ++l) {
        for (long long q = q_lo; q <= q_hi; ++q) {
          HomImages images({k, l, q});
          long long mx = 0;
          for (const auto& e : s.elements)
            mx = std::max(mx, images.image_length(e));
          Candidate c{mx, l, q};
          if (first || c.better_than(best)) {
            best = c;
            first = false;
          }
        }
      }
      return best;
    }));
  }
  Candidate best;
  bool first = true;
  for (auto& j : jobs) {
    Candidate c = j.get();
    if (first || c.better_than(best)) {
      best = c;
      first = false;
    }
  }

  if (best.l == l_lo || best.l == l_hi || best.q == q_lo || best.q == q_hi)
    throw std::domain_error("optimum on window boundary; widen the window");

  ShortenResult result;
  result.k = k;
  result.genset = id;
  result.l_star = best.l;
  result.q_star = best.q;
  result.max_length = best.max_length;
  long long tr_w = static_cast<long long>(dwz.w_target().size());
  result.normalized = Rat(best.max_length, std::abs(k) * tr_w);
  return result;
}

ShortenResult shorten(long long k, GenSetId id) {
  long long bound = 2 * std::abs(k) + 5;
  return shorten(k, {-bound, bound}, {-2, 2}, id);
}

// --- envelopes -------------------------------------------------------------------

Rat PLTerm::eval(const Rat& x) const {
  Rat acc = constant;
  for (const auto& [coef, shift] : pieces) {
    Rat v = x + shift;
    acc += coef * (v < Rat(0) ? -v : v);
  }
  return acc;
}

std::vector<PLTerm> envelope_terms(GenSetId id) {
  std::vector<PLTerm> terms;
  terms.push_back({Rat(2), {}});
  terms.push_back({Rat(0), {{Rat(2), Rat(0)}}});
  terms.push_back({Rat(0), {{Rat(2), Rat(1)}}});
  terms.push_back({Rat(0), {{Rat(1), Rat(0)}}});
  if (id == GenSetId::g) {
    terms.push_back({Rat(1), {{Rat(3), Rat(0)}, {Rat(1), Rat(1)}}});
  } else {
    terms.push_back({Rat(1), {{Rat(1), Rat(0)}, {Rat(3), Rat(-1)}}});
  }
  return terms;
}

std::pair<Rat, Rat> pl_minimax(const std::vector<PLTerm>& terms) {
  if (terms.empty()) throw std::invalid_argument("at least one term required");
  bool coercive = false;
  std::vector<Rat> candidates;
  for (const auto& term : terms) {
    for (const auto& [coef, shift] : term.pieces) {
      if (coef < Rat(0)) throw std::invalid_argument("negative coefficient");
      if (coef > Rat(0)) {
        coercive = true;
        candidates.push_back(-shift);
      }
    }
  }
  if (!coercive) {
    Rat top(0);
    for (const auto& term : terms) top = std::max(top, term.constant);
    return {Rat(0), top};
  }

  // Between breakpoints every term is affine; minima of the convex upper
  // envelope sit at breakpoints or at pairwise crossings inside an interval.
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  auto affine_at = [&](const PLTerm& term, const Rat& sample) {
    // slope/intercept of the term in the regime containing the sample point
    Rat slope(0), intercept = term.constant;
    for (const auto& [coef, shift] : term.pieces) {
      if (sample + shift >= Rat(0)) {
        slope += coef;
        intercept += coef * shift;
      } else {
        slope -= coef;
        intercept -= coef * shift;
      }
    }
    return std::pair(slope, intercept);
  };
  // regimes: the two rays and each segment between adjacent breakpoints
  struct Regime {
    Rat sample;
    std::optional<Rat> lo, hi;  // open bounds on accepted crossings
  };
  std::vector<Regime> regimes;
  regimes.push_back({candidates.front() - 1, std::nullopt, candidates.front()});
  for (size_t i = 0; i + 1 < candidates.size(); ++i)
    regimes.push_back({(candidates[i] + candidates[i + 1]) / 2, candidates[i],
                       candidates[i + 1]});
  regimes.push_back({candidates.back() + 1, candidates.back(), std::nullopt});

  std::vector<Rat> xs = candidates;
  for (const auto& regime : regimes) {
    for (size_t s = 0; s < terms.size(); ++s) {
      auto [as, bs] = affine_at(terms[s], regime.sample);
      for (size_t t = s + 1; t < terms.size(); ++t) {
        auto [at, bt] = affine_at(terms[t], regime.sample);
        if (as == at) continue;
        Rat x = (bt - bs) / (as - at);
        if (regime.lo && !(*regime.lo < x)) continue;
        if (regime.hi && !(x < *regime.hi)) continue;
        xs.push_back(x);
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  auto envelope = [&](const Rat& x) {
    Rat top = terms[0].eval(x);
    for (size_t i = 1; i < terms.size(); ++i) top = std::max(top, terms[i].eval(x));
    return top;
  };
  Rat best_value = envelope(xs[0]);
  for (const auto& x : xs) best_value = std::min(best_value, envelope(x));
  // the envelope is convex, so the optimal candidates form a contiguous run
  size_t lo = xs.size(), hi = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (envelope(xs[i]) == best_value) {
      lo = std::min(lo, i);
      hi = std::max(hi, i);
    }
  }
  Rat x_star = (xs[lo] + xs[hi]) / 2;
  return {x_star, best_value};
}

std::vector<std::pair<Rat, Rat>> normalized_profile(long long k, GenSetId id,
                                                    const std::vector<Rat>& grid) {
  if (k == 0) throw std::invalid_argument("k = 0 has no normalization");
  const auto& dwz = DwzPresentation::instance();
  GenSet s = dwz.genset(id);
  long long tr_w = static_cast<long long>(dwz.w_target().size());
  std::vector<std::pair<Rat, Rat>> out;
  for (const auto& x : grid) {
    long long num = x.numerator() * k;
    if (num % x.denominator() != 0)
      throw std::invalid_argument("grid point with non-integral l = x k");
    long long l = num / x.denominator();
    HomImages images({k, l, 0});
    long long mx = 0;
    for (const auto& e : s.elements) mx = std::max(mx, images.image_length(e));
    out.emplace_back(x, Rat(mx, std::abs(k) * tr_w));
  }
  return out;
}

// --- homology comparison -----------------------------------------------------------

HomologyReport homology_report(const std::vector<long long>& epsilons) {
  HomologyReport report;

  auto gw_gens = Alphabet::make({"a1", "a2", "b1", "b2"});
  Word relator = multiply(substituted_ivanov(gw_gens, "a1", "a2"),
                          invert(substituted_ivanov(gw_gens, "b1", "b2")));
  report.g_w = homology_of_presentation(gw_gens, {relator});

  auto m_gens = Alphabet::make({"a1", "a2", "b1", "b2", "gamma"});
  Word w_b = substituted_ivanov(m_gens, "b1", "b2");
  Word gamma = parse_word("gamma", m_gens);
  report.distinct = true;
  for (long long eps : epsilons) {
    std::vector<Word> relators;
    for (int i = 1; i <= 2; ++i) {
      // gamma^2 a_i gamma^-2 (w^eps b_i w^-eps)^-1
      Word a = parse_word("a" + std::to_string(i), m_gens);
      Word b = parse_word("b" + std::to_string(i), m_gens);
      PowerExpr rhs(m_gens);
      rhs.append_power(w_b, eps);
      rhs.append_word(b);
      rhs.append_power(w_b, -eps);
      Word lhs = multiply(multiply(expand(power(gamma, 2)), a),
                          expand(power(gamma, -2)));
      relators.push_back(multiply(lhs, invert(rhs.expand())));
    }
    auto h = homology_of_presentation(m_gens, relators);
    if (h.betti == report.g_w.betti) report.distinct = false;
    report.quotients.emplace_back(eps, h);
  }
  return report;
}

}  // namespace mrq
