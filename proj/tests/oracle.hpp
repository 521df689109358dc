#pragma once

// Independent brute-force oracles for the word engine tests. Everything here
// works on raw letter-code vectors with repeated full scans, deliberately
// sharing no code with the library implementation.

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Letters = std::vector<int32_t>;

// Repeatedly removes the first cancelling pair until none remains.
inline Letters naive_reduce(Letters v) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == -v[i + 1]) {
        v.erase(v.begin() + i, v.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  return v;
}

inline Letters naive_invert(const Letters& v) {
  Letters out;
  for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Letters naive_concat(const Letters& a, const Letters& b) {
  Letters out = a;
  out.insert(out.end(), b.begin(), b.end());
  return naive_reduce(out);
}

inline Letters naive_power(const Letters& v, long long n) {
  Letters base = n < 0 ? naive_invert(v) : v;
  Letters out;
  for (long long i = 0; i < (n < 0 ? -n : n); ++i) out = naive_concat(out, base);
  return out;
}

// Minimal length over all cyclic rotations after reduction.
inline Letters naive_cyclic_core(Letters v) {
  v = naive_reduce(v);
  while (v.size() >= 2 && v.front() == -v.back()) {
    v.erase(v.begin());
    v.pop_back();
  }
  return v;
}

// Uniform random reduced word of exactly the given length.
inline Letters random_reduced(std::mt19937_64& rng, int rank, size_t length) {
  Letters out;
  while (out.size() < length) {
    int gen = static_cast<int>(rng() % rank);
    int32_t code = (rng() & 1) ? (gen + 1) : -(gen + 1);
    if (!out.empty() && out.back() == -code) continue;
    out.push_back(code);
  }
  return out;
}

}  // namespace oracle
