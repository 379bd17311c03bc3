#pragma once
// Finite 1-categories: functors, natural transformations, functor categories,
// comma categories, adjoint search by initial objects, Cat-valued diagrams
// and their ends.

#include <cassert>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"

namespace laxkit {

struct FinCat {
  int nObj = 0;
  std::vector<int> src, dst;            // per morphism
  std::vector<int> idOf;                // per object
  std::vector<std::vector<int>> comp;   // comp[g][f] = g.f (f first), -1 if not composable

  int nMor() const { return static_cast<int>(src.size()); }

  int add_object() {
    idOf.push_back(-1);
    return nObj++;
  }
  int add_morphism(int s, int t) {
    src.push_back(s);
    dst.push_back(t);
    for (auto& row : comp) row.push_back(-1);
    comp.push_back(std::vector<int>(src.size(), -1));
    return nMor() - 1;
  }
  void set_identity(int x, int m) { idOf[static_cast<size_t>(x)] = m; }
  void set_comp(int g, int f, int gf) { comp[static_cast<size_t>(g)][static_cast<size_t>(f)] = gf; }

  int compose(int g, int f) const {  // g after f
    assert(dst[static_cast<size_t>(f)] == src[static_cast<size_t>(g)]);
    int r = comp[static_cast<size_t>(g)][static_cast<size_t>(f)];
    assert(r >= 0);
    return r;
  }

  std::vector<int> hom(int x, int y) const {
    std::vector<int> out;
    for (int m = 0; m < nMor(); ++m)
      if (src[static_cast<size_t>(m)] == x && dst[static_cast<size_t>(m)] == y) out.push_back(m);
    return out;
  }

  bool is_identity(int m) const { return idOf[static_cast<size_t>(src[static_cast<size_t>(m)])] == m; }

  bool is_iso(int m, int* inverse = nullptr) const {
    int x = src[static_cast<size_t>(m)], y = dst[static_cast<size_t>(m)];
    for (int g : hom(y, x))
      if (compose(g, m) == idOf[static_cast<size_t>(x)] && compose(m, g) == idOf[static_cast<size_t>(y)]) {
        if (inverse) *inverse = g;
        return true;
      }
    return false;
  }

  // gaunt: every isomorphism is an identity
  bool is_gaunt() const {
    for (int m = 0; m < nMor(); ++m)
      if (is_iso(m) && !is_identity(m)) return false;
    return true;
  }

  bool validate(std::string* why = nullptr) const {
    for (int x = 0; x < nObj; ++x) {
      int e = idOf[static_cast<size_t>(x)];
      if (e < 0 || e >= nMor() || src[static_cast<size_t>(e)] != x || dst[static_cast<size_t>(e)] != x) {
        if (why) *why = "identity missing at object " + std::to_string(x);
        return false;
      }
    }
    for (int f = 0; f < nMor(); ++f)
      for (int g = 0; g < nMor(); ++g) {
        bool composable = dst[static_cast<size_t>(f)] == src[static_cast<size_t>(g)];
        int gf = comp[static_cast<size_t>(g)][static_cast<size_t>(f)];
        if (composable != (gf >= 0)) {
          if (why) *why = "composition table not aligned with composability";
          return false;
        }
        if (composable && (src[static_cast<size_t>(gf)] != src[static_cast<size_t>(f)] ||
                           dst[static_cast<size_t>(gf)] != dst[static_cast<size_t>(g)])) {
          if (why) *why = "composite endpoints wrong";
          return false;
        }
      }
    for (int f = 0; f < nMor(); ++f) {
      if (compose(idOf[static_cast<size_t>(dst[static_cast<size_t>(f)])], f) != f ||
          compose(f, idOf[static_cast<size_t>(src[static_cast<size_t>(f)])]) != f) {
        if (why) *why = "unit law fails at morphism " + std::to_string(f);
        return false;
      }
    }
    for (int f = 0; f < nMor(); ++f)
      for (int g = 0; g < nMor(); ++g) {
        if (dst[static_cast<size_t>(f)] != src[static_cast<size_t>(g)]) continue;
        for (int h = 0; h < nMor(); ++h) {
          if (dst[static_cast<size_t>(g)] != src[static_cast<size_t>(h)]) continue;
          if (compose(h, compose(g, f)) != compose(compose(h, g), f)) {
            if (why) *why = "associativity fails";
            return false;
          }
        }
      }
    return true;
  }

  bool operator==(const FinCat& o) const {
    return nObj == o.nObj && src == o.src && dst == o.dst && idOf == o.idOf && comp == o.comp;
  }
  bool operator<(const FinCat& o) const {
    return std::tie(nObj, src, dst, idOf, comp) < std::tie(o.nObj, o.src, o.dst, o.idOf, o.comp);
  }
};

// ---------------------------------------------------------------------------
// builders

inline FinCat discrete_cat(int n) {
  FinCat C;
  for (int i = 0; i < n; ++i) C.add_object();
  for (int i = 0; i < n; ++i) C.set_identity(i, C.add_morphism(i, i));
  for (int m = 0; m < n; ++m) C.set_comp(m, m, m);
  return C;
}

inline FinCat terminal_cat() { return discrete_cat(1); }

inline FinCat poset_cat(int n, const std::function<bool(int, int)>& leq) {
  FinCat C;
  for (int i = 0; i < n; ++i) C.add_object();
  std::map<std::pair<int, int>, int> mid;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x == y || leq(x, y)) mid[{x, y}] = C.add_morphism(x, y);
  for (int x = 0; x < n; ++x) C.set_identity(x, mid.at({x, x}));
  for (auto& [xy, f] : mid)
    for (auto& [yz, g] : mid)
      if (xy.second == yz.first) C.set_comp(g, f, mid.at({xy.first, yz.second}));
  return C;
}

inline FinCat chain_cat(int n) {  // the poset 0 < 1 < ... < n
  return poset_cat(n + 1, [](int x, int y) { return x <= y; });
}

inline FinCat op_cat(const FinCat& C) {
  FinCat R;
  R.nObj = C.nObj;
  R.idOf = C.idOf;
  R.src = C.dst;
  R.dst = C.src;
  R.comp.assign(static_cast<size_t>(C.nMor()), std::vector<int>(static_cast<size_t>(C.nMor()), -1));
  for (int f = 0; f < C.nMor(); ++f)
    for (int g = 0; g < C.nMor(); ++g)
      if (C.comp[static_cast<size_t>(g)][static_cast<size_t>(f)] >= 0)
        R.comp[static_cast<size_t>(f)][static_cast<size_t>(g)] =
            C.comp[static_cast<size_t>(g)][static_cast<size_t>(f)];
  return R;
}

struct ProductCat {
  FinCat cat;
  std::vector<std::pair<int, int>> objPair, morPair;
  std::map<std::pair<int, int>, int> objIdx, morIdx;
  int obj(int a, int b) const { return objIdx.at({a, b}); }
  int mor(int f, int g) const { return morIdx.at({f, g}); }
};

inline ProductCat product_cat(const FinCat& A, const FinCat& B) {
  ProductCat P;
  for (int a = 0; a < A.nObj; ++a)
    for (int b = 0; b < B.nObj; ++b) {
      P.objIdx[{a, b}] = P.cat.add_object();
      P.objPair.push_back({a, b});
    }
  for (int f = 0; f < A.nMor(); ++f)
    for (int g = 0; g < B.nMor(); ++g) {
      int m = P.cat.add_morphism(P.obj(A.src[static_cast<size_t>(f)], B.src[static_cast<size_t>(g)]),
                                 P.obj(A.dst[static_cast<size_t>(f)], B.dst[static_cast<size_t>(g)]));
      P.morIdx[{f, g}] = m;
      P.morPair.push_back({f, g});
    }
  for (int a = 0; a < A.nObj; ++a)
    for (int b = 0; b < B.nObj; ++b)
      P.cat.set_identity(P.obj(a, b), P.mor(A.idOf[static_cast<size_t>(a)], B.idOf[static_cast<size_t>(b)]));
  for (size_t m1 = 0; m1 < P.morPair.size(); ++m1)
    for (size_t m2 = 0; m2 < P.morPair.size(); ++m2) {
      auto [f1, g1] = P.morPair[m1];
      auto [f2, g2] = P.morPair[m2];
      if (A.dst[static_cast<size_t>(f1)] == A.src[static_cast<size_t>(f2)] &&
          B.dst[static_cast<size_t>(g1)] == B.src[static_cast<size_t>(g2)])
        P.cat.set_comp(static_cast<int>(m2), static_cast<int>(m1),
                       P.mor(A.compose(f2, f1), B.compose(g2, g1)));
    }
  return P;
}

// ---------------------------------------------------------------------------
// functors and natural transformations

struct FinFunctor {
  std::vector<int> obj, mor;

  int operator()(int) const = delete;
  bool validate(const FinCat& A, const FinCat& B, std::string* why = nullptr) const {
    if (static_cast<int>(obj.size()) != A.nObj || static_cast<int>(mor.size()) != A.nMor()) {
      if (why) *why = "size mismatch";
      return false;
    }
    for (int f = 0; f < A.nMor(); ++f) {
      int ff = mor[static_cast<size_t>(f)];
      if (B.src[static_cast<size_t>(ff)] != obj[static_cast<size_t>(A.src[static_cast<size_t>(f)])] ||
          B.dst[static_cast<size_t>(ff)] != obj[static_cast<size_t>(A.dst[static_cast<size_t>(f)])]) {
        if (why) *why = "endpoint mismatch at morphism " + std::to_string(f);
        return false;
      }
    }
    for (int x = 0; x < A.nObj; ++x)
      if (mor[static_cast<size_t>(A.idOf[static_cast<size_t>(x)])] !=
          B.idOf[static_cast<size_t>(obj[static_cast<size_t>(x)])] ) {
        if (why) *why = "identity not preserved at object " + std::to_string(x);
        return false;
      }
    for (int f = 0; f < A.nMor(); ++f)
      for (int g = 0; g < A.nMor(); ++g) {
        if (A.dst[static_cast<size_t>(f)] != A.src[static_cast<size_t>(g)]) continue;
        if (mor[static_cast<size_t>(A.compose(g, f))] !=
            B.compose(mor[static_cast<size_t>(g)], mor[static_cast<size_t>(f)])) {
          if (why) *why = "composition not preserved";
          return false;
        }
      }
    return true;
  }
  bool operator==(const FinFunctor& o) const { return obj == o.obj && mor == o.mor; }
  bool operator<(const FinFunctor& o) const { return std::tie(obj, mor) < std::tie(o.obj, o.mor); }
};

inline FinFunctor identity_functor(const FinCat& A) {
  FinFunctor F;
  for (int x = 0; x < A.nObj; ++x) F.obj.push_back(x);
  for (int m = 0; m < A.nMor(); ++m) F.mor.push_back(m);
  return F;
}

inline FinFunctor constant_functor(const FinCat& A, const FinCat& B, int b) {
  FinFunctor F;
  F.obj.assign(static_cast<size_t>(A.nObj), b);
  F.mor.assign(static_cast<size_t>(A.nMor()), B.idOf[static_cast<size_t>(b)]);
  return F;
}

inline FinFunctor compose_functor(const FinFunctor& G, const FinFunctor& F) {  // G after F
  FinFunctor R;
  for (int o : F.obj) R.obj.push_back(G.obj[static_cast<size_t>(o)]);
  for (int m : F.mor) R.mor.push_back(G.mor[static_cast<size_t>(m)]);
  return R;
}

inline FinFunctor op_functor(const FinFunctor& F) { return F; }  // same data between op-cats

// all functors A -> B, deterministic order
inline std::vector<FinFunctor> all_functors(const FinCat& A, const FinCat& B) {
  std::vector<FinFunctor> out;
  std::vector<int> oRadix(static_cast<size_t>(A.nObj), B.nObj);
  std::vector<int> oAsn;
  if (A.nObj == 0) {
    out.push_back(FinFunctor{});
    return out;
  }
  if (!first_assignment(oRadix, oAsn)) return out;
  do {
    FinFunctor F;
    F.obj = oAsn;
    F.mor.assign(static_cast<size_t>(A.nMor()), -1);
    // identities forced
    for (int x = 0; x < A.nObj; ++x)
      F.mor[static_cast<size_t>(A.idOf[static_cast<size_t>(x)])] =
          B.idOf[static_cast<size_t>(F.obj[static_cast<size_t>(x)])];
    std::vector<int> free;
    for (int m = 0; m < A.nMor(); ++m)
      if (F.mor[static_cast<size_t>(m)] < 0) free.push_back(m);
    std::function<void(size_t)> rec = [&](size_t k) {
      if (k == free.size()) {
        std::string why;
        if (F.validate(A, B, &why)) out.push_back(F);
        return;
      }
      int m = free[k];
      for (int c : B.hom(F.obj[static_cast<size_t>(A.src[static_cast<size_t>(m)])],
                         F.obj[static_cast<size_t>(A.dst[static_cast<size_t>(m)])])) {
        F.mor[static_cast<size_t>(m)] = c;
        // partial composition check against already-assigned morphisms
        bool ok = true;
        for (int f = 0; f < A.nMor() && ok; ++f) {
          if (F.mor[static_cast<size_t>(f)] < 0) continue;
          if (A.dst[static_cast<size_t>(f)] == A.src[static_cast<size_t>(m)]) {
            int gf = A.compose(m, f);
            if (F.mor[static_cast<size_t>(gf)] >= 0)
              ok = F.mor[static_cast<size_t>(gf)] ==
                   B.compose(F.mor[static_cast<size_t>(m)], F.mor[static_cast<size_t>(f)]);
          }
          if (ok && A.dst[static_cast<size_t>(m)] == A.src[static_cast<size_t>(f)]) {
            int fg = A.compose(f, m);
            if (F.mor[static_cast<size_t>(fg)] >= 0)
              ok = F.mor[static_cast<size_t>(fg)] ==
                   B.compose(F.mor[static_cast<size_t>(f)], F.mor[static_cast<size_t>(m)]);
          }
        }
        if (ok) rec(k + 1);
      }
      F.mor[static_cast<size_t>(m)] = -1;
    };
    rec(0);
  } while (next_assignment(oRadix, oAsn));
  return out;
}

struct FinNat {
  std::vector<int> comp;  // per object of the domain category

  bool validate(const FinCat& A, const FinCat& B, const FinFunctor& F, const FinFunctor& G,
                std::string* why = nullptr) const {
    if (static_cast<int>(comp.size()) != A.nObj) {
      if (why) *why = "component count";
      return false;
    }
    for (int x = 0; x < A.nObj; ++x) {
      int c = comp[static_cast<size_t>(x)];
      if (B.src[static_cast<size_t>(c)] != F.obj[static_cast<size_t>(x)] ||
          B.dst[static_cast<size_t>(c)] != G.obj[static_cast<size_t>(x)]) {
        if (why) *why = "component endpoints at object " + std::to_string(x);
        return false;
      }
    }
    for (int f = 0; f < A.nMor(); ++f) {
      int x = A.src[static_cast<size_t>(f)], y = A.dst[static_cast<size_t>(f)];
      if (B.compose(comp[static_cast<size_t>(y)], F.mor[static_cast<size_t>(f)]) !=
          B.compose(G.mor[static_cast<size_t>(f)], comp[static_cast<size_t>(x)])) {
        if (why) *why = "naturality at morphism " + std::to_string(f);
        return false;
      }
    }
    return true;
  }
  bool operator==(const FinNat& o) const { return comp == o.comp; }
  bool operator<(const FinNat& o) const { return comp < o.comp; }
};

inline std::vector<FinNat> all_nats(const FinCat& A, const FinCat& B, const FinFunctor& F,
                                    const FinFunctor& G) {
  std::vector<FinNat> out;
  FinNat cur;
  cur.comp.assign(static_cast<size_t>(A.nObj), -1);
  std::function<void(int)> rec = [&](int x) {
    if (x == A.nObj) {
      out.push_back(cur);
      return;
    }
    for (int c : B.hom(F.obj[static_cast<size_t>(x)], G.obj[static_cast<size_t>(x)])) {
      cur.comp[static_cast<size_t>(x)] = c;
      bool ok = true;
      for (int f = 0; f < A.nMor() && ok; ++f) {
        int s = A.src[static_cast<size_t>(f)], t = A.dst[static_cast<size_t>(f)];
        if (s > x || t > x) continue;
        ok = B.compose(cur.comp[static_cast<size_t>(t)], F.mor[static_cast<size_t>(f)]) ==
             B.compose(G.mor[static_cast<size_t>(f)], cur.comp[static_cast<size_t>(s)]);
      }
      if (ok) rec(x + 1);
    }
    cur.comp[static_cast<size_t>(x)] = -1;
  };
  if (A.nObj == 0) out.push_back(cur);
  else rec(0);
  return out;
}

// vertical composite of natural transformations (second after first)
inline FinNat vcomp_nat(const FinCat& B, const FinNat& second, const FinNat& first) {
  FinNat r;
  for (size_t x = 0; x < first.comp.size(); ++x)
    r.comp.push_back(B.compose(second.comp[x], first.comp[x]));
  return r;
}

// ---------------------------------------------------------------------------
// functor categories

struct FunCat {
  FinCat cat;
  std::vector<FinFunctor> objs;
  std::vector<std::tuple<int, int, FinNat>> mors;  // (src functor, dst functor, transformation)

  int obj_index(const FinFunctor& F) const { return index_of(objs, F); }
  int mor_index(int sF, int tF, const FinNat& n) const {
    for (size_t i = 0; i < mors.size(); ++i)
      if (std::get<0>(mors[i]) == sF && std::get<1>(mors[i]) == tF && std::get<2>(mors[i]) == n)
        return static_cast<int>(i);
    return -1;
  }
};

inline FunCat fun_cat(const FinCat& A, const FinCat& B) {
  FunCat R;
  R.objs = all_functors(A, B);
  for (size_t i = 0; i < R.objs.size(); ++i) R.cat.add_object();
  for (size_t i = 0; i < R.objs.size(); ++i)
    for (size_t j = 0; j < R.objs.size(); ++j)
      for (const FinNat& n : all_nats(A, B, R.objs[i], R.objs[j])) {
        R.cat.add_morphism(static_cast<int>(i), static_cast<int>(j));
        R.mors.push_back({static_cast<int>(i), static_cast<int>(j), n});
      }
  for (size_t i = 0; i < R.objs.size(); ++i) {
    FinNat idn;
    for (int x : R.objs[i].obj) idn.comp.push_back(B.idOf[static_cast<size_t>(x)]);
    R.cat.set_identity(static_cast<int>(i), R.mor_index(static_cast<int>(i), static_cast<int>(i), idn));
  }
  for (int m1 = 0; m1 < R.cat.nMor(); ++m1)
    for (int m2 = 0; m2 < R.cat.nMor(); ++m2) {
      auto& [s1, t1, n1] = R.mors[static_cast<size_t>(m1)];
      auto& [s2, t2, n2] = R.mors[static_cast<size_t>(m2)];
      if (t1 != s2) continue;
      R.cat.set_comp(m2, m1, R.mor_index(s1, t2, vcomp_nat(B, n2, n1)));
    }
  return R;
}

// discrete category of natural transformations F -> G
inline FinCat nat_set(const FinCat& A, const FinCat& B, const FinFunctor& F, const FinFunctor& G) {
  return discrete_cat(static_cast<int>(all_nats(A, B, F, G).size()));
}

// ---------------------------------------------------------------------------
// comma categories

struct CommaCat {
  FinCat cat;
  std::vector<std::tuple<int, int, int>> objs;  // (a, b, f: Fa -> Gb)
  std::vector<std::tuple<int, int>> mors;       // (u in A, v in B)
};

inline CommaCat comma(const FinCat& A, const FinCat& B, const FinCat& C, const FinFunctor& F,
                      const FinFunctor& G) {
  CommaCat R;
  for (int a = 0; a < A.nObj; ++a)
    for (int b = 0; b < B.nObj; ++b)
      for (int f : C.hom(F.obj[static_cast<size_t>(a)], G.obj[static_cast<size_t>(b)])) {
        R.cat.add_object();
        R.objs.push_back({a, b, f});
      }
  for (size_t o1 = 0; o1 < R.objs.size(); ++o1)
    for (size_t o2 = 0; o2 < R.objs.size(); ++o2) {
      auto [a1, b1, f1] = R.objs[o1];
      auto [a2, b2, f2] = R.objs[o2];
      for (int u : A.hom(a1, a2))
        for (int v : B.hom(b1, b2))
          if (C.compose(G.mor[static_cast<size_t>(v)], f1) ==
              C.compose(f2, F.mor[static_cast<size_t>(u)])) {
            R.cat.add_morphism(static_cast<int>(o1), static_cast<int>(o2));
            R.mors.push_back({u, v});
          }
    }
  for (size_t o = 0; o < R.objs.size(); ++o) {
    auto [a, b, f] = R.objs[o];
    (void)f;
    for (size_t m = 0; m < R.mors.size(); ++m)
      if (R.cat.src[m] == static_cast<int>(o) && R.cat.dst[m] == static_cast<int>(o) &&
          std::get<0>(R.mors[m]) == A.idOf[static_cast<size_t>(a)] &&
          std::get<1>(R.mors[m]) == B.idOf[static_cast<size_t>(b)])
        R.cat.set_identity(static_cast<int>(o), static_cast<int>(m));
  }
  for (size_t m1 = 0; m1 < R.mors.size(); ++m1)
    for (size_t m2 = 0; m2 < R.mors.size(); ++m2) {
      if (R.cat.dst[m1] != R.cat.src[m2]) continue;
      auto [u1, v1] = R.mors[m1];
      auto [u2, v2] = R.mors[m2];
      int uu = A.compose(u2, u1), vv = B.compose(v2, v1);
      for (size_t m3 = 0; m3 < R.mors.size(); ++m3)
        if (R.cat.src[m3] == R.cat.src[m1] && R.cat.dst[m3] == R.cat.dst[m2] &&
            std::get<0>(R.mors[m3]) == uu && std::get<1>(R.mors[m3]) == vv)
          R.cat.set_comp(static_cast<int>(m2), static_cast<int>(m1), static_cast<int>(m3));
    }
  return R;
}

inline std::vector<int> initial_objects(const FinCat& C) {
  std::vector<int> out;
  for (int x = 0; x < C.nObj; ++x) {
    bool ok = true;
    for (int y = 0; y < C.nObj && ok; ++y) ok = C.hom(x, y).size() == 1;
    if (ok) out.push_back(x);
  }
  return out;
}

inline std::vector<int> terminal_objects(const FinCat& C) {
  std::vector<int> out;
  for (int x = 0; x < C.nObj; ++x) {
    bool ok = true;
    for (int y = 0; y < C.nObj && ok; ++y) ok = C.hom(y, x).size() == 1;
    if (ok) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// adjoint search

struct Adjunction {
  FinFunctor L;     // left adjoint
  FinFunctor R;     // right adjoint
  FinNat unit;      // id => R.L (over the domain of L)
  FinNat counit;    // L.R => id (over the domain of R)

  bool triangles_hold(const FinCat& C, const FinCat& D) const {
    // L: C -> D, R: D -> C
    for (int c = 0; c < C.nObj; ++c) {
      int lc = L.obj[static_cast<size_t>(c)];
      if (D.compose(counit.comp[static_cast<size_t>(lc)], L.mor[static_cast<size_t>(unit.comp[static_cast<size_t>(c)])]) !=
          D.idOf[static_cast<size_t>(lc)])
        return false;
    }
    for (int d = 0; d < D.nObj; ++d) {
      int rd = R.obj[static_cast<size_t>(d)];
      if (C.compose(R.mor[static_cast<size_t>(counit.comp[static_cast<size_t>(d)])], unit.comp[static_cast<size_t>(rd)]) !=
          C.idOf[static_cast<size_t>(rd)])
        return false;
    }
    return true;
  }
};

struct AdjointResult {
  enum class Status { Found, NotFound, Ambiguous } status = Status::NotFound;
  std::optional<Adjunction> adj;
  int witness_object = -1;  // object where search failed or was ambiguous
};

// left adjoint to G: D -> C, via initial objects of the comma categories c / G
inline AdjointResult find_left_adjoint(const FinCat& D, const FinCat& C, const FinFunctor& G) {
  AdjointResult res;
  FinCat pt = terminal_cat();
  std::vector<int> Lobj(static_cast<size_t>(C.nObj)), eta(static_cast<size_t>(C.nObj));
  for (int c = 0; c < C.nObj; ++c) {
    CommaCat K = comma(pt, D, C, constant_functor(pt, C, c), G);
    std::vector<int> inits = initial_objects(K.cat);
    if (inits.empty()) {
      res.status = AdjointResult::Status::NotFound;
      res.witness_object = c;
      return res;
    }
    if (inits.size() > 1) {
      res.status = AdjointResult::Status::Ambiguous;
      res.witness_object = c;
      return res;
    }
    auto [a, d, f] = K.objs[static_cast<size_t>(inits[0])];
    (void)a;
    Lobj[static_cast<size_t>(c)] = d;
    eta[static_cast<size_t>(c)] = f;
  }
  Adjunction A;
  A.L.obj = Lobj;
  A.R = G;
  A.unit.comp = eta;
  // L on morphisms: unique u with G(u) . eta_c = eta_c' . h
  for (int h = 0; h < C.nMor(); ++h) {
    int c = C.src[static_cast<size_t>(h)], c2 = C.dst[static_cast<size_t>(h)];
    int found = -1;
    for (int u : D.hom(Lobj[static_cast<size_t>(c)], Lobj[static_cast<size_t>(c2)]))
      if (C.compose(G.mor[static_cast<size_t>(u)], eta[static_cast<size_t>(c)]) ==
          C.compose(eta[static_cast<size_t>(c2)], h)) {
        if (found >= 0) {
          res.status = AdjointResult::Status::Ambiguous;
          res.witness_object = c;
          return res;
        }
        found = u;
      }
    if (found < 0) {
      res.status = AdjointResult::Status::NotFound;
      res.witness_object = c;
      return res;
    }
    A.L.mor.push_back(found);
  }
  // counit: unique u: L(Gd) -> d with G(u) . eta_{Gd} = id
  for (int d = 0; d < D.nObj; ++d) {
    int gd = G.obj[static_cast<size_t>(d)];
    int found = -1;
    for (int u : D.hom(Lobj[static_cast<size_t>(gd)], d))
      if (C.compose(G.mor[static_cast<size_t>(u)], eta[static_cast<size_t>(gd)]) ==
          C.idOf[static_cast<size_t>(gd)]) {
        if (found >= 0) {
          res.status = AdjointResult::Status::Ambiguous;
          res.witness_object = d;
          return res;
        }
        found = u;
      }
    if (found < 0) {
      res.status = AdjointResult::Status::NotFound;
      res.witness_object = d;
      return res;
    }
    A.counit.comp.push_back(found);
  }
  std::string why;
  if (!A.L.validate(C, D, &why) || !A.unit.validate(C, C, identity_functor(C), compose_functor(G, A.L), &why) ||
      !A.counit.validate(D, D, compose_functor(A.L, G), identity_functor(D), &why) ||
      !A.triangles_hold(C, D)) {
    res.status = AdjointResult::Status::NotFound;
    return res;
  }
  res.status = AdjointResult::Status::Found;
  res.adj = A;
  return res;
}

// right adjoint to F: D -> C, via terminal objects of the comma categories F / c
inline AdjointResult find_right_adjoint(const FinCat& D, const FinCat& C, const FinFunctor& F) {
  AdjointResult res;
  FinCat pt = terminal_cat();
  std::vector<int> Robj(static_cast<size_t>(C.nObj)), eps(static_cast<size_t>(C.nObj));
  for (int c = 0; c < C.nObj; ++c) {
    CommaCat K = comma(D, pt, C, F, constant_functor(pt, C, c));
    std::vector<int> terms = terminal_objects(K.cat);
    if (terms.empty()) {
      res.status = AdjointResult::Status::NotFound;
      res.witness_object = c;
      return res;
    }
    if (terms.size() > 1) {
      res.status = AdjointResult::Status::Ambiguous;
      res.witness_object = c;
      return res;
    }
    auto [d, b, f] = K.objs[static_cast<size_t>(terms[0])];
    (void)b;
    Robj[static_cast<size_t>(c)] = d;
    eps[static_cast<size_t>(c)] = f;
  }
  Adjunction A;  // now F is the left adjoint, R the found right adjoint
  A.L = F;
  A.R.obj = Robj;
  A.counit.comp = eps;
  for (int h = 0; h < C.nMor(); ++h) {
    int c = C.src[static_cast<size_t>(h)], c2 = C.dst[static_cast<size_t>(h)];
    int found = -1;
    for (int u : D.hom(Robj[static_cast<size_t>(c)], Robj[static_cast<size_t>(c2)]))
      if (C.compose(eps[static_cast<size_t>(c2)], F.mor[static_cast<size_t>(u)]) ==
          C.compose(h, eps[static_cast<size_t>(c)])) {
        if (found >= 0) {
          res.status = AdjointResult::Status::Ambiguous;
          res.witness_object = c;
          return res;
        }
        found = u;
      }
    if (found < 0) {
      res.status = AdjointResult::Status::NotFound;
      res.witness_object = c;
      return res;
    }
    A.R.mor.push_back(found);
  }
  for (int d = 0; d < D.nObj; ++d) {
    int fd = F.obj[static_cast<size_t>(d)];
    int found = -1;
    for (int u : D.hom(d, Robj[static_cast<size_t>(fd)]))
      if (C.compose(eps[static_cast<size_t>(fd)], F.mor[static_cast<size_t>(u)]) ==
          C.idOf[static_cast<size_t>(fd)]) {
        if (found >= 0) {
          res.status = AdjointResult::Status::Ambiguous;
          res.witness_object = d;
          return res;
        }
        found = u;
      }
    if (found < 0) {
      res.status = AdjointResult::Status::NotFound;
      res.witness_object = d;
      return res;
    }
    A.unit.comp.push_back(found);
  }
  std::string why;
  if (!A.R.validate(C, D, &why) || !A.unit.validate(D, D, identity_functor(D), compose_functor(A.R, F), &why) ||
      !A.counit.validate(C, C, compose_functor(F, A.R), identity_functor(C), &why) ||
      !A.triangles_hold(D, C))
    res.status = AdjointResult::Status::NotFound;
  else {
    res.status = AdjointResult::Status::Found;
    res.adj = A;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Cat-valued diagrams and ends

struct CatDiagram {
  FinCat base;
  std::vector<FinCat> fib;       // per object
  std::vector<FinFunctor> act;   // per morphism

  bool validate(std::string* why = nullptr) const {
    if (!base.validate(why)) return false;
    for (int m = 0; m < base.nMor(); ++m)
      if (!act[static_cast<size_t>(m)].validate(fib[static_cast<size_t>(base.src[static_cast<size_t>(m)])],
                                                fib[static_cast<size_t>(base.dst[static_cast<size_t>(m)])], why))
        return false;
    for (int x = 0; x < base.nObj; ++x)
      if (!(act[static_cast<size_t>(base.idOf[static_cast<size_t>(x)])] ==
            identity_functor(fib[static_cast<size_t>(x)]))) {
        if (why) *why = "identity action not the identity functor";
        return false;
      }
    for (int f = 0; f < base.nMor(); ++f)
      for (int g = 0; g < base.nMor(); ++g) {
        if (base.dst[static_cast<size_t>(f)] != base.src[static_cast<size_t>(g)]) continue;
        if (!(act[static_cast<size_t>(base.compose(g, f))] ==
              compose_functor(act[static_cast<size_t>(g)], act[static_cast<size_t>(f)]))) {
          if (why) *why = "action not functorial";
          return false;
        }
      }
    return true;
  }
};

// constant diagram at a category
inline CatDiagram constant_diagram(const FinCat& A, const FinCat& V) {
  CatDiagram D;
  D.base = A;
  D.fib.assign(static_cast<size_t>(A.nObj), V);
  D.act.assign(static_cast<size_t>(A.nMor()), identity_functor(V));
  return D;
}

// representable weight A(a0, -) as a discrete-category-valued diagram
inline CatDiagram representable_weight(const FinCat& A, int a0,
                                       std::vector<std::vector<int>>* homs_out = nullptr) {
  CatDiagram D;
  D.base = A;
  std::vector<std::vector<int>> homs;
  for (int a = 0; a < A.nObj; ++a) {
    homs.push_back(A.hom(a0, a));
    D.fib.push_back(discrete_cat(static_cast<int>(homs.back().size())));
  }
  for (int f = 0; f < A.nMor(); ++f) {
    int s = A.src[static_cast<size_t>(f)], t = A.dst[static_cast<size_t>(f)];
    FinFunctor post;
    for (int g : homs[static_cast<size_t>(s)])
      post.obj.push_back(index_of(homs[static_cast<size_t>(t)], A.compose(f, g)));
    for (int o : post.obj)
      post.mor.push_back(D.fib[static_cast<size_t>(t)].idOf[static_cast<size_t>(o)]);
    D.act.push_back(post);
  }
  if (homs_out) *homs_out = homs;
  return D;
}

// the end of Fun(W-, F-): objects are families t_a: W(a) -> F(a) with
// F(f) . t_a = t_a' . W(f); morphisms are families of transformations
// compatible with whiskering on both sides
struct EndCat {
  FinCat cat;
  std::vector<std::vector<FinFunctor>> objs;          // family per object
  std::vector<std::vector<FinNat>> mors;              // family per morphism
};

inline EndCat end_limit(const CatDiagram& W, const CatDiagram& F) {
  const FinCat& A = W.base;
  EndCat R;
  // enumerate strict families
  std::vector<std::vector<FinFunctor>> perObj;
  for (int a = 0; a < A.nObj; ++a)
    perObj.push_back(all_functors(W.fib[static_cast<size_t>(a)], F.fib[static_cast<size_t>(a)]));
  std::vector<int> radix;
  for (auto& v : perObj) radix.push_back(static_cast<int>(v.size()));
  std::vector<int> asn;
  if (A.nObj == 0) {
    R.objs.push_back({});
  } else if (first_assignment(radix, asn)) {
    do {
      std::vector<FinFunctor> fam;
      for (int a = 0; a < A.nObj; ++a) fam.push_back(perObj[static_cast<size_t>(a)][static_cast<size_t>(asn[static_cast<size_t>(a)])]);
      bool ok = true;
      for (int f = 0; f < A.nMor() && ok; ++f) {
        int s = A.src[static_cast<size_t>(f)], t = A.dst[static_cast<size_t>(f)];
        ok = compose_functor(F.act[static_cast<size_t>(f)], fam[static_cast<size_t>(s)]) ==
             compose_functor(fam[static_cast<size_t>(t)], W.act[static_cast<size_t>(f)]);
      }
      if (ok) R.objs.push_back(fam);
    } while (next_assignment(radix, asn));
  }
  for (size_t i = 0; i < R.objs.size(); ++i) R.cat.add_object();
  // morphisms
  for (size_t i = 0; i < R.objs.size(); ++i)
    for (size_t j = 0; j < R.objs.size(); ++j) {
      std::vector<std::vector<FinNat>> natPerObj;
      for (int a = 0; a < A.nObj; ++a)
        natPerObj.push_back(all_nats(W.fib[static_cast<size_t>(a)], F.fib[static_cast<size_t>(a)],
                                     R.objs[i][static_cast<size_t>(a)], R.objs[j][static_cast<size_t>(a)]));
      std::vector<int> r2;
      for (auto& v : natPerObj) r2.push_back(static_cast<int>(v.size()));
      std::vector<int> a2;
      std::vector<std::vector<FinNat>> found;
      if (A.nObj == 0) {
        found.push_back({});
      } else if (first_assignment(r2, a2)) {
        do {
          std::vector<FinNat> fam;
          for (int a = 0; a < A.nObj; ++a) fam.push_back(natPerObj[static_cast<size_t>(a)][static_cast<size_t>(a2[static_cast<size_t>(a)])]);
          bool ok = true;
          for (int f = 0; f < A.nMor() && ok; ++f) {
            int s = A.src[static_cast<size_t>(f)], t = A.dst[static_cast<size_t>(f)];
            // whisker: F(f) . mu_s == mu_t . W(f) componentwise
            const FinFunctor& Ff = F.act[static_cast<size_t>(f)];
            const FinFunctor& Wf = W.act[static_cast<size_t>(f)];
            for (int w = 0; w < W.fib[static_cast<size_t>(s)].nObj && ok; ++w)
              ok = Ff.mor[static_cast<size_t>(fam[static_cast<size_t>(s)].comp[static_cast<size_t>(w)])] ==
                   fam[static_cast<size_t>(t)].comp[static_cast<size_t>(Wf.obj[static_cast<size_t>(w)])];
          }
          if (ok) found.push_back(fam);
        } while (next_assignment(r2, a2));
      }
      for (auto& fam : found) {
        R.cat.add_morphism(static_cast<int>(i), static_cast<int>(j));
        R.mors.push_back(fam);
      }
    }
  // identities and composition
  for (size_t i = 0; i < R.objs.size(); ++i) {
    std::vector<FinNat> idf;
    for (int a = 0; a < A.nObj; ++a) {
      FinNat n;
      for (int w : R.objs[i][static_cast<size_t>(a)].obj)
        n.comp.push_back(F.fib[static_cast<size_t>(a)].idOf[static_cast<size_t>(w)]);
      idf.push_back(n);
    }
    for (size_t m = 0; m < R.mors.size(); ++m)
      if (R.cat.src[m] == static_cast<int>(i) && R.cat.dst[m] == static_cast<int>(i) && R.mors[m] == idf)
        R.cat.set_identity(static_cast<int>(i), static_cast<int>(m));
  }
  for (int m1 = 0; m1 < R.cat.nMor(); ++m1)
    for (int m2 = 0; m2 < R.cat.nMor(); ++m2) {
      if (R.cat.dst[static_cast<size_t>(m1)] != R.cat.src[static_cast<size_t>(m2)]) continue;
      std::vector<FinNat> cf;
      for (int a = 0; a < A.nObj; ++a)
        cf.push_back(vcomp_nat(F.fib[static_cast<size_t>(a)], R.mors[static_cast<size_t>(m2)][static_cast<size_t>(a)],
                               R.mors[static_cast<size_t>(m1)][static_cast<size_t>(a)]));
      for (size_t m3 = 0; m3 < R.mors.size(); ++m3)
        if (R.cat.src[m3] == R.cat.src[static_cast<size_t>(m1)] &&
            R.cat.dst[m3] == R.cat.dst[static_cast<size_t>(m2)] && R.mors[m3] == cf)
          R.cat.set_comp(m2, m1, static_cast<int>(m3));
    }
  return R;
}

// ---------------------------------------------------------------------------
// comparisons

inline bool fincat_isomorphic(const FinCat& A, const FinCat& B, FinFunctor* witness = nullptr) {
  if (A.nObj != B.nObj || A.nMor() != B.nMor()) return false;
  FinFunctor cur;
  cur.obj.assign(static_cast<size_t>(A.nObj), -1);
  cur.mor.assign(static_cast<size_t>(A.nMor()), -1);
  std::vector<bool> usedO(static_cast<size_t>(B.nObj), false), usedM(static_cast<size_t>(B.nMor()), false);
  std::function<bool(int)> recM;
  std::function<bool(int)> recO = [&](int x) -> bool {
    if (x == A.nObj) return recM(0);
    for (int y = 0; y < B.nObj; ++y) {
      if (usedO[static_cast<size_t>(y)]) continue;
      if (A.hom(x, x).size() != B.hom(y, y).size()) continue;
      usedO[static_cast<size_t>(y)] = true;
      cur.obj[static_cast<size_t>(x)] = y;
      if (recO(x + 1)) return true;
      usedO[static_cast<size_t>(y)] = false;
    }
    cur.obj[static_cast<size_t>(x)] = -1;
    return false;
  };
  recM = [&](int m) -> bool {
    if (m == A.nMor()) {
      std::string why;
      return cur.validate(A, B, &why);
    }
    for (int c : B.hom(cur.obj[static_cast<size_t>(A.src[static_cast<size_t>(m)])],
                       cur.obj[static_cast<size_t>(A.dst[static_cast<size_t>(m)])])) {
      if (usedM[static_cast<size_t>(c)]) continue;
      if (A.is_identity(m) != B.is_identity(c)) continue;
      usedM[static_cast<size_t>(c)] = true;
      cur.mor[static_cast<size_t>(m)] = c;
      bool ok = true;
      for (int f = 0; f < A.nMor() && ok; ++f) {
        if (cur.mor[static_cast<size_t>(f)] < 0) continue;
        if (A.dst[static_cast<size_t>(f)] == A.src[static_cast<size_t>(m)]) {
          int gf = A.compose(m, f);
          if (gf <= m && cur.mor[static_cast<size_t>(gf)] >= 0)
            ok = cur.mor[static_cast<size_t>(gf)] == B.compose(cur.mor[static_cast<size_t>(m)], cur.mor[static_cast<size_t>(f)]);
        }
      }
      if (ok && recM(m + 1)) return true;
      usedM[static_cast<size_t>(c)] = false;
    }
    cur.mor[static_cast<size_t>(m)] = -1;
    return false;
  };
  if (!recO(0)) return false;
  if (witness) *witness = cur;
  return true;
}

inline bool is_fully_faithful_functor(const FinCat& A, const FinCat& B, const FinFunctor& F) {
  for (int x = 0; x < A.nObj; ++x)
    for (int y = 0; y < A.nObj; ++y) {
      std::vector<int> hs = A.hom(x, y);
      std::vector<int> seen;
      for (int f : hs) {
        int i = F.mor[static_cast<size_t>(f)];
        if (index_of(seen, i) >= 0) return false;
        seen.push_back(i);
      }
      if (seen.size() != B.hom(F.obj[static_cast<size_t>(x)], F.obj[static_cast<size_t>(y)]).size()) return false;
    }
  return true;
}

inline bool is_essentially_surjective(const FinCat& A, const FinCat& B, const FinFunctor& F) {
  for (int b = 0; b < B.nObj; ++b) {
    bool hit = false;
    for (int a = 0; a < A.nObj && !hit; ++a) {
      for (int m : B.hom(F.obj[static_cast<size_t>(a)], b))
        if (B.is_iso(m)) {
          hit = true;
          break;
        }
    }
    if (!hit) return false;
  }
  return true;
}

inline bool is_equivalence_functor(const FinCat& A, const FinCat& B, const FinFunctor& F) {
  return is_fully_faithful_functor(A, B, F) && is_essentially_surjective(A, B, F);
}

}  // namespace laxkit
