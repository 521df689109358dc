#include "mrq/ctest.hpp"

#include <future>
#include <map>
#include <stdexcept>
#include <thread>

namespace mrq {

namespace {

constexpr const char* kIvanovText =
    "[x1,x2]^100 x1 [x1,x2]^200 x1 [x1,x2]^300 x1^-1 [x1,x2]^400 x1^-1 "
    "[x1,x2]^500 x2 [x1,x2]^600 x2 [x1,x2]^700 x2^-1 [x1,x2]^800 x2^-1";

}  // namespace

const IvanovWord& build_ivanov() {
  static const IvanovWord w{parse_word(kIvanovText, Alphabet::standard(2))};
  return w;
}

Word eval_at(const IvanovWord& w, const Word& a1, const Word& a2) {
  AlphabetPtr target = a1.alphabet() ? a1.alphabet() : a2.alphabet();
  if (!target) target = w.pattern.alphabet();
  if (!a2.empty() && !same_alphabet(target, a2.alphabet()))
    throw std::invalid_argument("alphabet mismatch");
  EndoMap sub(w.pattern.alphabet(), target, {a1, a2});
  return apply(sub, w.pattern);
}

CtestVerdict ctest_check_pair(const std::pair<Word, Word>& a,
                              const std::pair<Word, Word>& b) {
  const auto& w = build_ivanov();
  Word va = eval_at(w, a.first, a.second);
  Word vb = eval_at(w, b.first, b.second);
  if (va.empty() || va != vb) return {CtestVerdict::Kind::vacuous, std::nullopt};
  auto answer = simultaneous_conjugator({a.first, a.second}, {b.first, b.second});
  if (!answer.found) return {CtestVerdict::Kind::counterexample, std::nullopt};
  for (int i = 0; i < 2; ++i) {
    const Word& ai = i == 0 ? a.first : a.second;
    const Word& bi = i == 0 ? b.first : b.second;
    if (conjugate(ai, *answer.witness) != bi)
      return {CtestVerdict::Kind::counterexample, std::nullopt};
  }
  return {CtestVerdict::Kind::witnessed, answer.witness};
}

bool cyclicity_criterion_check(const Word& a1, const Word& a2) {
  const auto& w = build_ivanov();
  bool value_trivial = eval_at(w, a1, a2).empty();
  AlphabetPtr alpha = a1.alphabet() ? a1.alphabet() : a2.alphabet();
  bool cyclic = is_cyclic_subgroup({a1, a2}, alpha);
  return value_trivial == cyclic;
}

bool lemma_root_check(const Word& s, const EndoMap& psi) {
  if (psi.source()->rank() != 2 || psi.target()->rank() != 2)
    throw std::domain_error("rank-2 endomorphism required");
  if (!fold(psi.images(), psi.target()).is_whole_group())
    throw std::domain_error("psi is not surjective");
  const auto& w = build_ivanov();
  Word pw = apply(psi, Word(psi.source(), w.pattern.letters()));
  if (conjugate(pw, s) != pw)
    throw std::domain_error("conj-by-S . psi does not agree with psi on w");
  return membership(fold({pw}, psi.target()), s);
}

std::vector<Word> enumerate_reduced_words(const AlphabetPtr& alphabet, int max_len) {
  std::vector<Word> out;
  out.push_back(Word(alphabet));
  size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i) {
      const auto& base = out[i].letters();
      for (int g = 0; g < alphabet->rank(); ++g) {
        for (int sign : {+1, -1}) {
          int32_t c = letter::make(g, sign);
          if (!base.empty() && base.back() == letter::inverse(c)) continue;
          std::vector<int32_t> next = base;
          next.push_back(c);
          out.push_back(Word(alphabet, std::move(next)));
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

CtestSweepReport ctest_sweep(int max_len) {
  auto alphabet = Alphabet::standard(2);
  const auto& w = build_ivanov();
  auto words = enumerate_reduced_words(alphabet, max_len);
  const size_t nw = words.size();
  const size_t tuples = nw * nw;

  // Phase 1: fingerprint every tuple's w-value in parallel.
  struct Fingerprint {
    long long len;
    uint64_t hash;
  };
  std::vector<Fingerprint> fp(tuples);
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> jobs;
  size_t chunk = (tuples + workers - 1) / workers;
  for (unsigned t = 0; t < workers; ++t) {
    size_t lo = t * chunk, hi = std::min(tuples, lo + chunk);
    if (lo >= hi) break;
    jobs.push_back(std::async(std::launch::async, [&, lo, hi] {
      for (size_t idx = lo; idx < hi; ++idx) {
        Word value = eval_at(w, words[idx / nw], words[idx % nw]);
        fp[idx] = {static_cast<long long>(value.size()), value.hash()};
      }
    }));
  }
  for (auto& j : jobs) j.get();

  // Phase 2: only tuples sharing (length, hash) can have equal values.
  std::map<std::pair<long long, uint64_t>, std::vector<size_t>> buckets;
  for (size_t idx = 0; idx < tuples; ++idx) {
    if (fp[idx].len == 0) continue;  // trivial values never witness
    buckets[{fp[idx].len, fp[idx].hash}].push_back(idx);
  }

  CtestSweepReport report;
  report.bound = max_len;
  report.pairs_checked = static_cast<long long>(tuples) * static_cast<long long>(tuples);
  for (const auto& [key, members] : buckets) {
    // materialize this bucket's values once
    std::vector<Word> values;
    values.reserve(members.size());
    for (size_t idx : members)
      values.push_back(eval_at(w, words[idx / nw], words[idx % nw]));
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = 0; j < members.size(); ++j) {
        if (values[i] != values[j]) continue;  // hash collision
        auto verdict = ctest_check_pair(
            {words[members[i] / nw], words[members[i] % nw]},
            {words[members[j] / nw], words[members[j] % nw]});
        if (verdict.kind == CtestVerdict::Kind::witnessed) ++report.witnessed;
        else if (verdict.kind == CtestVerdict::Kind::counterexample)
          ++report.counterexamples;
      }
    }
  }
  report.vacuous = report.pairs_checked - report.witnessed - report.counterexamples;
  return report;
}

}  // namespace mrq
