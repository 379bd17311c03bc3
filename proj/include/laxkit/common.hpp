#pragma once
// Shared utilities: deterministic RNG, error type, small helpers.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>
#include <algorithm>

namespace laxkit {

// Deterministic cross-platform RNG. Manifests and seeded corpora depend on
// this exact stream, so we do not use std:: distributions anywhere.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed = 0) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, n) for n >= 1
  uint64_t below(uint64_t n) { return n <= 1 ? 0 : next() % n; }
  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }
  bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }
  // derive an independent stream (stable across platforms)
  SplitMix64 fork(uint64_t salt) {
    SplitMix64 s(state ^ (salt * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull));
    s.next();
    return s;
  }
};

enum class ErrCode {
  TruncationBound,
  InvalidMarking,
  UnsupportedPushout,
  InvalidInput,
  ResourceBudget,
};

struct Error : std::runtime_error {
  ErrCode code;
  Error(ErrCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

template <typename T>
int index_of(const std::vector<T>& v, const T& x) {
  auto it = std::find(v.begin(), v.end(), x);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

// Odometer-style iteration over assignments slot -> [0, radix[slot]).
// Returns false when radices contain a zero (no assignment exists).
inline bool first_assignment(const std::vector<int>& radix, std::vector<int>& out) {
  for (int r : radix)
    if (r <= 0) return false;
  out.assign(radix.size(), 0);
  return true;
}
inline bool next_assignment(const std::vector<int>& radix, std::vector<int>& cur) {
  for (size_t i = 0; i < radix.size(); ++i) {
    if (++cur[i] < radix[i]) return true;
    cur[i] = 0;
  }
  return false;
}

}  // namespace laxkit
