#pragma once
// Monotone maps [m] -> [n] between finite ordinals, m,n <= 3.
// These are the only structure maps a 3-truncated simplicial set needs.

#include <array>
#include <cassert>
#include <cstdint>
#include <string>

#include "common.hpp"

namespace laxkit {

struct Mono {
  int8_t dom = 0;  // domain is [dom] = {0,...,dom}
  int8_t cod = 0;
  std::array<int8_t, 4> v{0, 0, 0, 0};  // v[i] for i <= dom

  static Mono id(int n) {
    Mono m;
    m.dom = m.cod = static_cast<int8_t>(n);
    for (int i = 0; i <= n; ++i) m.v[i] = static_cast<int8_t>(i);
    return m;
  }
  // coface delta_i: [n-1] -> [n], skips i
  static Mono coface(int i, int n) {
    Mono m;
    m.dom = static_cast<int8_t>(n - 1);
    m.cod = static_cast<int8_t>(n);
    for (int k = 0; k <= n - 1; ++k) m.v[k] = static_cast<int8_t>(k < i ? k : k + 1);
    return m;
  }
  // codegeneracy sigma_i: [n+1] -> [n], repeats i
  static Mono codegen(int i, int n) {
    Mono m;
    m.dom = static_cast<int8_t>(n + 1);
    m.cod = static_cast<int8_t>(n);
    for (int k = 0; k <= n + 1; ++k) m.v[k] = static_cast<int8_t>(k <= i ? k : k - 1);
    return m;
  }

  int operator()(int i) const { return v[i]; }

  bool operator==(const Mono& o) const {
    if (dom != o.dom || cod != o.cod) return false;
    for (int i = 0; i <= dom; ++i)
      if (v[i] != o.v[i]) return false;
    return true;
  }
  bool operator!=(const Mono& o) const { return !(*this == o); }
  bool operator<(const Mono& o) const {  // lexicographic, for canonical orders
    if (dom != o.dom) return dom < o.dom;
    if (cod != o.cod) return cod < o.cod;
    for (int i = 0; i <= dom; ++i)
      if (v[i] != o.v[i]) return v[i] < o.v[i];
    return false;
  }

  bool is_identity() const { return dom == cod && *this == id(dom); }
  bool is_injective() const {
    for (int i = 0; i < dom; ++i)
      if (v[i] == v[i + 1]) return false;
    return true;
  }
  bool is_surjective() const {
    int seen = 0;
    for (int i = 0; i <= dom; ++i)
      if (i == 0 || v[i] != v[i - 1]) ++seen;
    return seen == cod + 1;
  }

  // reversal r(t) = cod - v(dom - t); monotone again
  Mono reversed() const {
    Mono r;
    r.dom = dom;
    r.cod = cod;
    for (int t = 0; t <= dom; ++t) r.v[t] = static_cast<int8_t>(cod - v[dom - t]);
    return r;
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i <= dom; ++i) s += std::to_string(int(v[i])) + (i < dom ? "," : "");
    return s + ")";
  }
};

// g after f: [a] -> [b] -> [c]
inline Mono compose(const Mono& g, const Mono& f) {
  assert(f.cod == g.dom);
  Mono r;
  r.dom = f.dom;
  r.cod = g.cod;
  for (int i = 0; i <= f.dom; ++i) r.v[i] = static_cast<int8_t>(g.v[f.v[i]]);
  return r;
}

// Eilenberg-Zilber factorization f = inj . surj with surj: [dom]->>[k],
// inj: [k] >-> [cod] the inclusion of the image.
inline void ez_factor(const Mono& f, Mono& inj, Mono& surj) {
  int8_t image[4];
  int k = -1;
  surj.dom = f.dom;
  for (int i = 0; i <= f.dom; ++i) {
    if (i == 0 || f.v[i] != f.v[i - 1]) image[++k] = f.v[i];
    surj.v[i] = static_cast<int8_t>(k);
  }
  surj.cod = static_cast<int8_t>(k);
  inj.dom = static_cast<int8_t>(k);
  inj.cod = f.cod;
  for (int i = 0; i <= k; ++i) inj.v[i] = image[i];
}

}  // namespace laxkit
