#pragma once
// Finite strict 2-categories in tabular form: one hom category per ordered
// pair of objects (hom objects are the 1-morphisms, hom morphisms the
// 2-cells) plus horizontal composition tables at both levels.  On top of
// this: 2-functors, lax and oplax transformations with markings,
// modifications, the oplax arrow 2-category, subcategory-class predicates
// with their lifting-cell counterparts, and the 3-truncated nerve into
// scaled simplicial sets.

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "common.hpp"
#include "fincat.hpp"
#include "scaled.hpp"

namespace laxkit {

// horizontal composition tables for one ordered triple of objects (x,y,z);
// arguments are diagrammatic: onObj[f][g] composes f: x->y then g: y->z
struct HComp {
  std::vector<std::vector<int>> onObj;  // [f][g] over hom(x,y) x hom(y,z) objects
  std::vector<std::vector<int>> onMor;  // [a][b] over hom(x,y) x hom(y,z) morphisms

  bool operator==(const HComp&) const = default;
};

struct TwoCat {
  int nObj = 0;
  std::vector<std::vector<FinCat>> hom;               // hom[x][y]
  std::vector<int> idObj;                             // identity 1-morphism at x
  std::vector<std::vector<std::vector<HComp>>> comp;  // comp[x][y][z]

  bool operator==(const TwoCat&) const = default;

  const FinCat& H(int x, int y) const {
    return hom[static_cast<size_t>(x)][static_cast<size_t>(y)];
  }
  int id1(int x) const { return idObj[static_cast<size_t>(x)]; }
  int id2(int x, int y, int f) const { return H(x, y).idOf[static_cast<size_t>(f)]; }
  // g after f, both levels
  int compose1(int x, int y, int z, int f, int g) const {
    return comp[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(z)]
        .onObj[static_cast<size_t>(f)][static_cast<size_t>(g)];
  }
  int compose2(int x, int y, int z, int a, int b) const {
    return comp[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(z)]
        .onMor[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }
  // vertical composition in hom(x,y): a2 after a1
  int vcomp(int x, int y, int a2, int a1) const { return H(x, y).compose(a2, a1); }

  bool validate(std::string* why = nullptr) const {
    auto fail = [&](const std::string& m) {
      if (why) *why = m;
      return false;
    };
    size_t n = static_cast<size_t>(nObj);
    if (hom.size() != n || idObj.size() != n || comp.size() != n) return fail("size mismatch");
    for (size_t x = 0; x < n; ++x) {
      if (hom[x].size() != n || comp[x].size() != n) return fail("size mismatch");
      for (size_t y = 0; y < n; ++y) {
        if (comp[x][y].size() != n) return fail("size mismatch");
        std::string hw;
        if (!hom[x][y].validate(&hw))
          return fail("hom(" + std::to_string(x) + "," + std::to_string(y) + "): " + hw);
      }
    }
    for (size_t x = 0; x < n; ++x)
      if (idObj[x] < 0 || idObj[x] >= hom[x][x].nObj) return fail("identity 1-morphism out of range");
    // composition tables: shape, endpoint compatibility, functoriality
    for (int x = 0; x < nObj; ++x)
      for (int y = 0; y < nObj; ++y)
        for (int z = 0; z < nObj; ++z) {
          const FinCat& Hxy = H(x, y);
          const FinCat& Hyz = H(y, z);
          const FinCat& Hxz = H(x, z);
          const HComp& C =
              comp[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(z)];
          if (static_cast<int>(C.onObj.size()) != Hxy.nObj ||
              static_cast<int>(C.onMor.size()) != Hxy.nMor())
            return fail("composition table shape");
          for (int f = 0; f < Hxy.nObj; ++f) {
            if (static_cast<int>(C.onObj[static_cast<size_t>(f)].size()) != Hyz.nObj)
              return fail("composition table shape");
            for (int g = 0; g < Hyz.nObj; ++g) {
              int fg = C.onObj[static_cast<size_t>(f)][static_cast<size_t>(g)];
              if (fg < 0 || fg >= Hxz.nObj) return fail("1-composite out of range");
            }
          }
          for (int a = 0; a < Hxy.nMor(); ++a) {
            if (static_cast<int>(C.onMor[static_cast<size_t>(a)].size()) != Hyz.nMor())
              return fail("composition table shape");
            for (int b = 0; b < Hyz.nMor(); ++b) {
              int ab = C.onMor[static_cast<size_t>(a)][static_cast<size_t>(b)];
              if (ab < 0 || ab >= Hxz.nMor()) return fail("2-composite out of range");
              int sa = Hxy.src[static_cast<size_t>(a)], da = Hxy.dst[static_cast<size_t>(a)];
              int sb = Hyz.src[static_cast<size_t>(b)], db = Hyz.dst[static_cast<size_t>(b)];
              if (Hxz.src[static_cast<size_t>(ab)] !=
                      C.onObj[static_cast<size_t>(sa)][static_cast<size_t>(sb)] ||
                  Hxz.dst[static_cast<size_t>(ab)] !=
                      C.onObj[static_cast<size_t>(da)][static_cast<size_t>(db)])
                return fail("2-composite endpoints");
            }
          }
          // horizontal composition is a functor hom(x,y) x hom(y,z) -> hom(x,z):
          // identities and the interchange law
          for (int f = 0; f < Hxy.nObj; ++f)
            for (int g = 0; g < Hyz.nObj; ++g)
              if (C.onMor[static_cast<size_t>(Hxy.idOf[static_cast<size_t>(f)])]
                         [static_cast<size_t>(Hyz.idOf[static_cast<size_t>(g)])] !=
                  Hxz.idOf[static_cast<size_t>(
                      C.onObj[static_cast<size_t>(f)][static_cast<size_t>(g)])])
                return fail("horizontal composite of identity 2-cells");
          for (int a1 = 0; a1 < Hxy.nMor(); ++a1)
            for (int a2 = 0; a2 < Hxy.nMor(); ++a2) {
              if (Hxy.dst[static_cast<size_t>(a1)] != Hxy.src[static_cast<size_t>(a2)]) continue;
              for (int b1 = 0; b1 < Hyz.nMor(); ++b1)
                for (int b2 = 0; b2 < Hyz.nMor(); ++b2) {
                  if (Hyz.dst[static_cast<size_t>(b1)] != Hyz.src[static_cast<size_t>(b2)])
                    continue;
                  int lhs = C.onMor[static_cast<size_t>(Hxy.compose(a2, a1))]
                                   [static_cast<size_t>(Hyz.compose(b2, b1))];
                  int rhs = Hxz.compose(C.onMor[static_cast<size_t>(a2)][static_cast<size_t>(b2)],
                                        C.onMor[static_cast<size_t>(a1)][static_cast<size_t>(b1)]);
                  if (lhs != rhs) return fail("interchange");
                }
            }
        }
    // strict unit laws at both levels
    for (int x = 0; x < nObj; ++x)
      for (int y = 0; y < nObj; ++y) {
        for (int f = 0; f < H(x, y).nObj; ++f)
          if (compose1(x, x, y, id1(x), f) != f || compose1(x, y, y, f, id1(y)) != f)
            return fail("unit law on 1-morphisms");
        for (int a = 0; a < H(x, y).nMor(); ++a)
          if (compose2(x, x, y, id2(x, x, id1(x)), a) != a ||
              compose2(x, y, y, a, id2(y, y, id1(y))) != a)
            return fail("unit law on 2-cells");
      }
    // strict associativity at both levels
    for (int w = 0; w < nObj; ++w)
      for (int x = 0; x < nObj; ++x)
        for (int y = 0; y < nObj; ++y)
          for (int z = 0; z < nObj; ++z) {
            for (int f = 0; f < H(w, x).nObj; ++f)
              for (int g = 0; g < H(x, y).nObj; ++g)
                for (int h = 0; h < H(y, z).nObj; ++h)
                  if (compose1(w, y, z, compose1(w, x, y, f, g), h) !=
                      compose1(w, x, z, f, compose1(x, y, z, g, h)))
                    return fail("associativity of 1-composition");
            for (int a = 0; a < H(w, x).nMor(); ++a)
              for (int b = 0; b < H(x, y).nMor(); ++b)
                for (int c = 0; c < H(y, z).nMor(); ++c)
                  if (compose2(w, y, z, compose2(w, x, y, a, b), c) !=
                      compose2(w, x, z, a, compose2(x, y, z, b, c)))
                    return fail("associativity of 2-composition");
          }
    return true;
  }
};

// the underlying 1-category: same objects, 1-morphisms pooled across homs
struct UnderCat {
  FinCat cat;
  std::vector<std::pair<int, int>> home;       // global morphism -> (x,y)
  std::vector<int> local;                      // global morphism -> hom object index
  std::vector<std::vector<std::vector<int>>> glob;  // [x][y][f] -> global morphism
};

inline UnderCat underlying_cat(const TwoCat& A) {
  UnderCat U;
  for (int x = 0; x < A.nObj; ++x) U.cat.add_object();
  U.glob.assign(static_cast<size_t>(A.nObj),
                std::vector<std::vector<int>>(static_cast<size_t>(A.nObj)));
  for (int x = 0; x < A.nObj; ++x)
    for (int y = 0; y < A.nObj; ++y)
      for (int f = 0; f < A.H(x, y).nObj; ++f) {
        int m = U.cat.add_morphism(x, y);
        U.glob[static_cast<size_t>(x)][static_cast<size_t>(y)].push_back(m);
        U.home.push_back({x, y});
        U.local.push_back(f);
      }
  for (int x = 0; x < A.nObj; ++x)
    U.cat.set_identity(
        x, U.glob[static_cast<size_t>(x)][static_cast<size_t>(x)][static_cast<size_t>(A.id1(x))]);
  for (size_t m1 = 0; m1 < U.home.size(); ++m1)
    for (size_t m2 = 0; m2 < U.home.size(); ++m2) {
      if (U.home[m1].second != U.home[m2].first) continue;
      int x = U.home[m1].first, y = U.home[m1].second, z = U.home[m2].second;
      int fg = A.compose1(x, y, z, U.local[m1], U.local[m2]);
      U.cat.set_comp(static_cast<int>(m2), static_cast<int>(m1),
                     U.glob[static_cast<size_t>(x)][static_cast<size_t>(z)]
                           [static_cast<size_t>(fg)]);
    }
  return U;
}

// gaunt on both levels: no nonidentity invertible 1-morphisms or 2-cells
inline bool two_cat_is_gaunt(const TwoCat& A) {
  for (int x = 0; x < A.nObj; ++x)
    for (int y = 0; y < A.nObj; ++y)
      if (!A.H(x, y).is_gaunt()) return false;
  return underlying_cat(A).cat.is_gaunt();
}

// ---------------------------------------------------------------------------
// builders

// a 1-category viewed as a 2-category with discrete homs; gmor[x][y][i] is
// the C-morphism represented by hom object i
struct TwoCatFrom1 {
  TwoCat cat;
  std::vector<std::vector<std::vector<int>>> gmor;
};

inline TwoCatFrom1 two_cat_from_fincat(const FinCat& C) {
  TwoCatFrom1 R;
  TwoCat& A = R.cat;
  size_t n = static_cast<size_t>(C.nObj);
  A.nObj = C.nObj;
  A.hom.assign(n, std::vector<FinCat>(n));
  A.idObj.assign(n, -1);
  A.comp.assign(n, std::vector<std::vector<HComp>>(n, std::vector<HComp>(n)));
  R.gmor.assign(n, std::vector<std::vector<int>>(n));
  for (int x = 0; x < C.nObj; ++x)
    for (int y = 0; y < C.nObj; ++y) {
      R.gmor[static_cast<size_t>(x)][static_cast<size_t>(y)] = C.hom(x, y);
      A.hom[static_cast<size_t>(x)][static_cast<size_t>(y)] = discrete_cat(
          static_cast<int>(R.gmor[static_cast<size_t>(x)][static_cast<size_t>(y)].size()));
    }
  for (int x = 0; x < C.nObj; ++x)
    A.idObj[static_cast<size_t>(x)] = index_of(
        R.gmor[static_cast<size_t>(x)][static_cast<size_t>(x)], C.idOf[static_cast<size_t>(x)]);
  for (int x = 0; x < C.nObj; ++x)
    for (int y = 0; y < C.nObj; ++y)
      for (int z = 0; z < C.nObj; ++z) {
        const auto& fs = R.gmor[static_cast<size_t>(x)][static_cast<size_t>(y)];
        const auto& gs = R.gmor[static_cast<size_t>(y)][static_cast<size_t>(z)];
        HComp& T = A.comp[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(z)];
        T.onObj.assign(fs.size(), std::vector<int>(gs.size(), -1));
        for (size_t i = 0; i < fs.size(); ++i)
          for (size_t j = 0; j < gs.size(); ++j)
            T.onObj[i][j] = index_of(R.gmor[static_cast<size_t>(x)][static_cast<size_t>(z)],
                                     C.compose(gs[j], fs[i]));
        T.onMor = T.onObj;  // discrete homs: morphism indices coincide with object indices
      }
  return R;
}

inline TwoCat one_as_two(const FinCat& C) { return two_cat_from_fincat(C).cat; }

inline TwoCat twocat_point() { return one_as_two(discrete_cat(1)); }
inline TwoCat twocat_two_points() { return one_as_two(discrete_cat(2)); }
inline TwoCat twocat_arrow() { return one_as_two(chain_cat(1)); }

// two objects, hom(0,1) = M, trivial homs elsewhere
inline TwoCat suspension_two_cat(const FinCat& M) {
  TwoCat A;
  A.nObj = 2;
  A.hom.assign(2, std::vector<FinCat>(2));
  A.hom[0][0] = terminal_cat();
  A.hom[1][1] = terminal_cat();
  A.hom[0][1] = M;
  A.hom[1][0] = discrete_cat(0);
  A.idObj = {0, 0};
  A.comp.assign(2, std::vector<std::vector<HComp>>(2, std::vector<HComp>(2)));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) {
        const FinCat& Hxy = A.H(x, y);
        const FinCat& Hyz = A.H(y, z);
        HComp& T = A.comp[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(z)];
        T.onObj.assign(static_cast<size_t>(Hxy.nObj),
                       std::vector<int>(static_cast<size_t>(Hyz.nObj), -1));
        T.onMor.assign(static_cast<size_t>(Hxy.nMor()),
                       std::vector<int>(static_cast<size_t>(Hyz.nMor()), -1));
        // one side is always the trivial hom; composition is projection
        for (int f = 0; f < Hxy.nObj; ++f)
          for (int g = 0; g < Hyz.nObj; ++g)
            T.onObj[static_cast<size_t>(f)][static_cast<size_t>(g)] = (x == y) ? g : f;
        for (int a = 0; a < Hxy.nMor(); ++a)
          for (int b = 0; b < Hyz.nMor(); ++b)
            T.onMor[static_cast<size_t>(a)][static_cast<size_t>(b)] = (x == y) ? b : a;
      }
  return A;
}

// two parallel nonidentity arrows 0 -> 1
inline FinCat two_parallel_arrows_cat() {
  FinCat C;
  C.add_object();
  C.add_object();
  int i0 = C.add_morphism(0, 0);
  int i1 = C.add_morphism(1, 1);
  int a0 = C.add_morphism(0, 1);
  int a1 = C.add_morphism(0, 1);
  C.set_identity(0, i0);
  C.set_identity(1, i1);
  C.set_comp(i0, i0, i0);
  C.set_comp(i1, i1, i1);
  C.set_comp(a0, i0, a0);
  C.set_comp(a1, i0, a1);
  C.set_comp(i1, a0, a0);
  C.set_comp(i1, a1, a1);
  return C;
}

// one nonidentity 2-cell between parallel arrows
inline TwoCat twocat_walking_2cell() { return suspension_two_cat(chain_cat(1)); }
// two parallel arrows, no 2-cells between them
inline TwoCat twocat_parallel_1cells() { return suspension_two_cat(discrete_cat(2)); }
// two parallel 2-cells between a fixed pair of parallel arrows
inline TwoCat twocat_parallel_2cells() { return suspension_two_cat(two_parallel_arrows_cat()); }

// reverse 2-cells only
inline TwoCat co_two_cat(const TwoCat& A) {
  TwoCat R = A;
  for (auto& row : R.hom)
    for (auto& h : row) h = op_cat(h);
  // op_cat keeps morphism indices, so the tables transfer unchanged
  return R;
}

// reverse 1-morphisms only
inline TwoCat op_two_cat(const TwoCat& A) {
  TwoCat R;
  size_t n = static_cast<size_t>(A.nObj);
  R.nObj = A.nObj;
  R.idObj = A.idObj;
  R.hom.assign(n, std::vector<FinCat>(n));
  R.comp.assign(n, std::vector<std::vector<HComp>>(n, std::vector<HComp>(n)));
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) R.hom[x][y] = A.hom[y][x];
  for (int x = 0; x < A.nObj; ++x)
    for (int y = 0; y < A.nObj; ++y)
      for (int z = 0; z < A.nObj; ++z) {
        const FinCat& Hxy = R.hom[static_cast<size_t>(x)][static_cast<size_t>(y)];
        const FinCat& Hyz = R.hom[static_cast<size_t>(y)][static_cast<size_t>(z)];
        HComp& T = R.comp[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(z)];
        T.onObj.assign(static_cast<size_t>(Hxy.nObj),
                       std::vector<int>(static_cast<size_t>(Hyz.nObj), -1));
        T.onMor.assign(static_cast<size_t>(Hxy.nMor()),
                       std::vector<int>(static_cast<size_t>(Hyz.nMor()), -1));
        for (int f = 0; f < Hxy.nObj; ++f)
          for (int g = 0; g < Hyz.nObj; ++g)
            T.onObj[static_cast<size_t>(f)][static_cast<size_t>(g)] = A.compose1(z, y, x, g, f);
        for (int a = 0; a < Hxy.nMor(); ++a)
          for (int b = 0; b < Hyz.nMor(); ++b)
            T.onMor[static_cast<size_t>(a)][static_cast<size_t>(b)] = A.compose2(z, y, x, b, a);
      }
  return R;
}

// ---------------------------------------------------------------------------
// 2-functors

struct TwoFunctor {
  std::vector<int> obj;
  std::vector<std::vector<FinFunctor>> homf;  // homf[x][y]: hom(x,y) -> hom(Fx,Fy)

  bool operator==(const TwoFunctor&) const = default;
  bool operator<(const TwoFunctor& o) const {
    return std::tie(obj, homf) < std::tie(o.obj, o.homf);
  }
};

inline bool two_functor_valid(const TwoCat& A, const TwoCat& B, const TwoFunctor& F,
                              std::string* why = nullptr) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  size_t n = static_cast<size_t>(A.nObj);
  if (F.obj.size() != n || F.homf.size() != n) return fail("size mismatch");
  for (size_t x = 0; x < n; ++x) {
    if (F.homf[x].size() != n) return fail("size mismatch");
    if (F.obj[x] < 0 || F.obj[x] >= B.nObj) return fail("object image out of range");
  }
  for (int x = 0; x < A.nObj; ++x)
    for (int y = 0; y < A.nObj; ++y) {
      std::string hw;
      if (!F.homf[static_cast<size_t>(x)][static_cast<size_t>(y)].validate(
              A.H(x, y), B.H(F.obj[static_cast<size_t>(x)], F.obj[static_cast<size_t>(y)]), &hw))
        return fail("hom functor (" + std::to_string(x) + "," + std::to_string(y) + "): " + hw);
    }
  for (int x = 0; x < A.nObj; ++x)
    if (F.homf[static_cast<size_t>(x)][static_cast<size_t>(x)]
            .obj[static_cast<size_t>(A.id1(x))] != B.id1(F.obj[static_cast<size_t>(x)]))
      return fail("identity 1-morphism not preserved");
  for (int x = 0; x < A.nObj; ++x)
    for (int y = 0; y < A.nObj; ++y)
      for (int z = 0; z < A.nObj; ++z) {
        const FinFunctor& Fxy = F.homf[static_cast<size_t>(x)][static_cast<size_t>(y)];
        const FinFunctor& Fyz = F.homf[static_cast<size_t>(y)][static_cast<size_t>(z)];
        const FinFunctor& Fxz = F.homf[static_cast<size_t>(x)][static_cast<size_t>(z)];
        int bx = F.obj[static_cast<size_t>(x)], by = F.obj[static_cast<size_t>(y)],
            bz = F.obj[static_cast<size_t>(z)];
        for (int f = 0; f < A.H(x, y).nObj; ++f)
          for (int g = 0; g < A.H(y, z).nObj; ++g)
            if (Fxz.obj[static_cast<size_t>(A.compose1(x, y, z, f, g))] !=
                B.compose1(bx, by, bz, Fxy.obj[static_cast<size_t>(f)],
                           Fyz.obj[static_cast<size_t>(g)]))
              return fail("1-composition not preserved");
        for (int a = 0; a < A.H(x, y).nMor(); ++a)
          for (int b = 0; b < A.H(y, z).nMor(); ++b)
            if (Fxz.mor[static_cast<size_t>(A.compose2(x, y, z, a, b))] !=
                B.compose2(bx, by, bz, Fxy.mor[static_cast<size_t>(a)],
                           Fyz.mor[static_cast<size_t>(b)]))
              return fail("horizontal 2-composition not preserved");
      }
  return true;
}

inline TwoFunctor identity_two_functor(const TwoCat& A) {
  TwoFunctor F;
  size_t n = static_cast<size_t>(A.nObj);
  F.obj.resize(n);
  F.homf.assign(n, std::vector<FinFunctor>(n));
  for (int x = 0; x < A.nObj; ++x) {
    F.obj[static_cast<size_t>(x)] = x;
    for (int y = 0; y < A.nObj; ++y)
      F.homf[static_cast<size_t>(x)][static_cast<size_t>(y)] = identity_functor(A.H(x, y));
  }
  return F;
}

// G after F
inline TwoFunctor compose_two_functor(const TwoFunctor& G, const TwoFunctor& F) {
  TwoFunctor R;
  size_t n = F.obj.size();
  R.obj.resize(n);
  R.homf.assign(n, std::vector<FinFunctor>(n));
  for (size_t x = 0; x < n; ++x) R.obj[x] = G.obj[static_cast<size_t>(F.obj[x])];
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      R.homf[x][y] = compose_functor(
          G.homf[static_cast<size_t>(F.obj[x])][static_cast<size_t>(F.obj[y])], F.homf[x][y]);
  return R;
}

inline TwoFunctor constant_two_functor(const TwoCat& A, const TwoCat& B, int b) {
  TwoFunctor F;
  size_t n = static_cast<size_t>(A.nObj);
  F.obj.assign(n, b);
  F.homf.assign(n, std::vector<FinFunctor>(n));
  for (int x = 0; x < A.nObj; ++x)
    for (int y = 0; y < A.nObj; ++y) {
      FinFunctor& h = F.homf[static_cast<size_t>(x)][static_cast<size_t>(y)];
      h.obj.assign(static_cast<size_t>(A.H(x, y).nObj), B.id1(b));
      h.mor.assign(static_cast<size_t>(A.H(x, y).nMor()), B.id2(b, b, B.id1(b)));
    }
  return F;
}

// a 2-functor between suspensions from a functor between the hom categories
inline TwoFunctor suspension_two_functor(const FinCat& M, const FinCat& N, const FinFunctor& h) {
  (void)N;
  TwoFunctor F;
  F.obj = {0, 1};
  F.homf.assign(2, std::vector<FinFunctor>(2));
  F.homf[0][0] = identity_functor(terminal_cat());
  F.homf[1][1] = identity_functor(terminal_cat());
  F.homf[0][1] = h;
  F.homf[1][0] = FinFunctor{};
  (void)M;
  return F;
}

// a functor between 1-categories as a 2-functor between their discrete-hom
// 2-categories
inline TwoFunctor one_functor_as_two(const TwoCatFrom1& UA, const TwoCatFrom1& UB,
                                     const FinFunctor& f) {
  TwoFunctor F;
  size_t n = UA.gmor.size();
  F.obj.assign(f.obj.begin(), f.obj.end());
  F.homf.assign(n, std::vector<FinFunctor>(n));
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      int bx = f.obj[x], by = f.obj[y];
      FinFunctor& h = F.homf[x][y];
      for (int m : UA.gmor[x][y])
        h.obj.push_back(index_of(UB.gmor[static_cast<size_t>(bx)][static_cast<size_t>(by)],
                                 f.mor[static_cast<size_t>(m)]));
      h.mor = h.obj;
    }
  return F;
}

inline std::vector<TwoFunctor> all_two_functors(const TwoCat& A, const TwoCat& B) {
  std::vector<TwoFunctor> out;
  if (A.nObj == 0) {
    out.push_back(TwoFunctor{});
    return out;
  }
  if (B.nObj == 0) return out;
  int n = A.nObj;
  std::vector<int> radix(static_cast<size_t>(n), B.nObj), obj;
  first_assignment(radix, obj);
  do {
    // candidate hom functors per pair; diagonal ones must preserve the
    // identity 1-morphism
    std::vector<std::vector<FinFunctor>> cands(static_cast<size_t>(n * n));
    bool feasible = true;
    for (int x = 0; x < n && feasible; ++x)
      for (int y = 0; y < n && feasible; ++y) {
        auto fs = all_functors(A.H(x, y),
                               B.H(obj[static_cast<size_t>(x)], obj[static_cast<size_t>(y)]));
        std::vector<FinFunctor> keep;
        for (auto& f : fs)
          if (x != y || f.obj[static_cast<size_t>(A.id1(x))] == B.id1(obj[static_cast<size_t>(x)]))
            keep.push_back(f);
        feasible = !keep.empty();
        cands[static_cast<size_t>(x * n + y)] = std::move(keep);
      }
    if (!feasible) continue;
    TwoFunctor F;
    F.obj = obj;
    F.homf.assign(static_cast<size_t>(n), std::vector<FinFunctor>(static_cast<size_t>(n)));
    auto triple_ok = [&](int u, int v, int w) {
      const HComp& CA =
          A.comp[static_cast<size_t>(u)][static_cast<size_t>(v)][static_cast<size_t>(w)];
      const HComp& CB = B.comp[static_cast<size_t>(obj[static_cast<size_t>(u)])]
                              [static_cast<size_t>(obj[static_cast<size_t>(v)])]
                              [static_cast<size_t>(obj[static_cast<size_t>(w)])];
      const FinFunctor& Fuv = F.homf[static_cast<size_t>(u)][static_cast<size_t>(v)];
      const FinFunctor& Fvw = F.homf[static_cast<size_t>(v)][static_cast<size_t>(w)];
      const FinFunctor& Fuw = F.homf[static_cast<size_t>(u)][static_cast<size_t>(w)];
      for (int f = 0; f < A.H(u, v).nObj; ++f)
        for (int g = 0; g < A.H(v, w).nObj; ++g)
          if (Fuw.obj[static_cast<size_t>(CA.onObj[static_cast<size_t>(f)][static_cast<size_t>(g)])] !=
              CB.onObj[static_cast<size_t>(Fuv.obj[static_cast<size_t>(f)])]
                      [static_cast<size_t>(Fvw.obj[static_cast<size_t>(g)])])
            return false;
      for (int a = 0; a < A.H(u, v).nMor(); ++a)
        for (int b = 0; b < A.H(v, w).nMor(); ++b)
          if (Fuw.mor[static_cast<size_t>(CA.onMor[static_cast<size_t>(a)][static_cast<size_t>(b)])] !=
              CB.onMor[static_cast<size_t>(Fuv.mor[static_cast<size_t>(a)])]
                      [static_cast<size_t>(Fvw.mor[static_cast<size_t>(b)])])
            return false;
      return true;
    };
    std::function<void(int)> rec = [&](int k) {
      if (k == n * n) {
        out.push_back(F);
        return;
      }
      int x = k / n, y = k % n;
      for (const FinFunctor& cand : cands[static_cast<size_t>(k)]) {
        F.homf[static_cast<size_t>(x)][static_cast<size_t>(y)] = cand;
        bool ok = true;
        // check every triple all of whose pairs are assigned and whose
        // latest pair is (x,y)
        for (int u = 0; u < n && ok; ++u)
          for (int v = 0; v < n && ok; ++v)
            for (int w = 0; w < n && ok; ++w) {
              int k1 = u * n + v, k2 = v * n + w, k3 = u * n + w;
              int mx = std::max(k1, std::max(k2, k3));
              if (mx != k) continue;
              ok = triple_ok(u, v, w);
            }
        if (ok) rec(k + 1);
      }
    };
    rec(0);
  } while (next_assignment(radix, obj));
  return out;
}

// ---------------------------------------------------------------------------
// lax and oplax transformations

enum class LaxDir { Lax, Oplax };

// phi[x] is an object of hom(Fx,Gx); sq[x][y][f] is a 2-cell of hom(Fx,Gy):
//   lax:   (phi_x ; G f) => (F f ; phi_y)
//   oplax: (F f ; phi_y) => (phi_x ; G f)
struct LaxTransform {
  LaxDir dir = LaxDir::Lax;
  std::vector<int> phi;
  std::vector<std::vector<std::vector<int>>> sq;

  bool operator==(const LaxTransform&) const = default;
  bool operator<(const LaxTransform& o) const {
    return std::tie(dir, phi, sq) < std::tie(o.dir, o.phi, o.sq);
  }
};

// marking of 1-morphisms: E[x][y][f]; must contain the identities
using Marking1 = std::vector<std::vector<std::vector<bool>>>;

inline Marking1 marking_none(const TwoCat& A) {
  Marking1 E(static_cast<size_t>(A.nObj),
             std::vector<std::vector<bool>>(static_cast<size_t>(A.nObj)));
  for (int x = 0; x < A.nObj; ++x)
    for (int y = 0; y < A.nObj; ++y)
      E[static_cast<size_t>(x)][static_cast<size_t>(y)].assign(
          static_cast<size_t>(A.H(x, y).nObj), false);
  for (int x = 0; x < A.nObj; ++x)
    E[static_cast<size_t>(x)][static_cast<size_t>(x)][static_cast<size_t>(A.id1(x))] = true;
  return E;
}

inline Marking1 marking_all(const TwoCat& A) {
  Marking1 E = marking_none(A);
  for (auto& row : E)
    for (auto& v : row) v.assign(v.size(), true);
  return E;
}

inline bool marking_valid(const TwoCat& A, const Marking1& E, std::string* why = nullptr) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (static_cast<int>(E.size()) != A.nObj) return fail("marking size");
  for (int x = 0; x < A.nObj; ++x) {
    if (static_cast<int>(E[static_cast<size_t>(x)].size()) != A.nObj) return fail("marking size");
    for (int y = 0; y < A.nObj; ++y)
      if (static_cast<int>(E[static_cast<size_t>(x)][static_cast<size_t>(y)].size()) !=
          A.H(x, y).nObj)
        return fail("marking size");
  }
  for (int x = 0; x < A.nObj; ++x)
    if (!E[static_cast<size_t>(x)][static_cast<size_t>(x)][static_cast<size_t>(A.id1(x))])
      return fail("marking must contain the identities");
  return true;
}

inline bool marking_subset(const Marking1& E1, const Marking1& E2) {
  for (size_t x = 0; x < E1.size(); ++x)
    for (size_t y = 0; y < E1[x].size(); ++y)
      for (size_t f = 0; f < E1[x][y].size(); ++f)
        if (E1[x][y][f] && !E2[x][y][f]) return false;
  return true;
}

inline bool check_lax(const TwoCat& A, const TwoCat& B, const TwoFunctor& F, const TwoFunctor& G,
                      const LaxTransform& t, std::string* why = nullptr) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  size_t n = static_cast<size_t>(A.nObj);
  if (t.phi.size() != n || t.sq.size() != n) return fail("size mismatch");
  bool lax = t.dir == LaxDir::Lax;
  for (int x = 0; x < A.nObj; ++x) {
    if (t.sq[static_cast<size_t>(x)].size() != n) return fail("size mismatch");
    int fx = F.obj[static_cast<size_t>(x)], gx = G.obj[static_cast<size_t>(x)];
    if (t.phi[static_cast<size_t>(x)] < 0 || t.phi[static_cast<size_t>(x)] >= B.H(fx, gx).nObj)
      return fail("component out of range");
  }
  for (int x = 0; x < A.nObj; ++x)
    for (int y = 0; y < A.nObj; ++y) {
      if (static_cast<int>(t.sq[static_cast<size_t>(x)][static_cast<size_t>(y)].size()) !=
          A.H(x, y).nObj)
        return fail("size mismatch");
      int fx = F.obj[static_cast<size_t>(x)], fy = F.obj[static_cast<size_t>(y)];
      int gx = G.obj[static_cast<size_t>(x)], gy = G.obj[static_cast<size_t>(y)];
      const FinCat& Hxy = B.H(fx, gy);
      for (int f = 0; f < A.H(x, y).nObj; ++f) {
        int s = t.sq[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(f)];
        if (s < 0 || s >= Hxy.nMor()) return fail("square out of range");
        int Ff = F.homf[static_cast<size_t>(x)][static_cast<size_t>(y)].obj[static_cast<size_t>(f)];
        int Gf = G.homf[static_cast<size_t>(x)][static_cast<size_t>(y)].obj[static_cast<size_t>(f)];
        int viaG = B.compose1(fx, gx, gy, t.phi[static_cast<size_t>(x)], Gf);
        int viaF = B.compose1(fx, fy, gy, Ff, t.phi[static_cast<size_t>(y)]);
        int want_src = lax ? viaG : viaF;
        int want_dst = lax ? viaF : viaG;
        if (Hxy.src[static_cast<size_t>(s)] != want_src ||
            Hxy.dst[static_cast<size_t>(s)] != want_dst)
          return fail("square endpoints");
      }
    }
  // identity components
  for (int x = 0; x < A.nObj; ++x) {
    int fx = F.obj[static_cast<size_t>(x)], gx = G.obj[static_cast<size_t>(x)];
    if (t.sq[static_cast<size_t>(x)][static_cast<size_t>(x)][static_cast<size_t>(A.id1(x))] !=
        B.id2(fx, gx, t.phi[static_cast<size_t>(x)]))
      return fail("square over an identity must be the identity 2-cell");
  }
  // squares paste along 1-composition
  for (int x = 0; x < A.nObj; ++x)
    for (int y = 0; y < A.nObj; ++y)
      for (int z = 0; z < A.nObj; ++z) {
        int fx = F.obj[static_cast<size_t>(x)], fy = F.obj[static_cast<size_t>(y)];
        int gy = G.obj[static_cast<size_t>(y)], gz = G.obj[static_cast<size_t>(z)];
        const FinCat& Hxz = B.H(fx, gz);
        for (int f = 0; f < A.H(x, y).nObj; ++f)
          for (int g = 0; g < A.H(y, z).nObj; ++g) {
            int fg = A.compose1(x, y, z, f, g);
            int sfg =
                t.sq[static_cast<size_t>(x)][static_cast<size_t>(z)][static_cast<size_t>(fg)];
            int sf = t.sq[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(f)];
            int sg = t.sq[static_cast<size_t>(y)][static_cast<size_t>(z)][static_cast<size_t>(g)];
            int Ff =
                F.homf[static_cast<size_t>(x)][static_cast<size_t>(y)].obj[static_cast<size_t>(f)];
            int Gg =
                G.homf[static_cast<size_t>(y)][static_cast<size_t>(z)].obj[static_cast<size_t>(g)];
            int whisk_g = B.compose2(fx, gy, gz, sf, B.id2(gy, gz, Gg));
            int whisk_f = B.compose2(fx, fy, gz, B.id2(fx, fy, Ff), sg);
            int paste = lax ? Hxz.compose(whisk_f, whisk_g) : Hxz.compose(whisk_g, whisk_f);
            if (sfg != paste) return fail("squares do not paste along composition");
          }
      }
  // naturality against 2-cells
  for (int x = 0; x < A.nObj; ++x)
    for (int y = 0; y < A.nObj; ++y) {
      int fx = F.obj[static_cast<size_t>(x)], fy = F.obj[static_cast<size_t>(y)];
      int gx = G.obj[static_cast<size_t>(x)], gy = G.obj[static_cast<size_t>(y)];
      const FinCat& Hxy = B.H(fx, gy);
      const FinCat& Axy = A.H(x, y);
      for (int m = 0; m < Axy.nMor(); ++m) {
        int f = Axy.src[static_cast<size_t>(m)], f2 = Axy.dst[static_cast<size_t>(m)];
        int sf = t.sq[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(f)];
        int sf2 = t.sq[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(f2)];
        int Fm = F.homf[static_cast<size_t>(x)][static_cast<size_t>(y)].mor[static_cast<size_t>(m)];
        int Gm = G.homf[static_cast<size_t>(x)][static_cast<size_t>(y)].mor[static_cast<size_t>(m)];
        int phiGm = B.compose2(fx, gx, gy, B.id2(fx, gx, t.phi[static_cast<size_t>(x)]), Gm);
        int Fmphi = B.compose2(fx, fy, gy, Fm, B.id2(fy, gy, t.phi[static_cast<size_t>(y)]));
        bool ok = lax ? Hxy.compose(sf2, phiGm) == Hxy.compose(Fmphi, sf)
                      : Hxy.compose(phiGm, sf) == Hxy.compose(sf2, Fmphi);
        if (!ok) return fail("naturality against a 2-cell fails");
      }
    }
  return true;
}

inline bool is_strong(const TwoCat& A, const TwoCat& B, const TwoFunctor& F, const TwoFunctor& G,
                      const LaxTransform& t) {
  for (int x = 0; x < A.nObj; ++x)
    for (int y = 0; y < A.nObj; ++y) {
      const FinCat& Hxy = B.H(F.obj[static_cast<size_t>(x)], G.obj[static_cast<size_t>(y)]);
      for (int f = 0; f < A.H(x, y).nObj; ++f)
        if (!Hxy.is_identity(
                t.sq[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(f)]))
          return false;
    }
  return true;
}

// squares over marked 1-morphisms must be invertible (identities, when the
// homs are gaunt)
inline bool elax_holds(const TwoCat& A, const TwoCat& B, const TwoFunctor& F, const TwoFunctor& G,
                       const LaxTransform& t, const Marking1& E) {
  for (int x = 0; x < A.nObj; ++x)
    for (int y = 0; y < A.nObj; ++y) {
      const FinCat& Hxy = B.H(F.obj[static_cast<size_t>(x)], G.obj[static_cast<size_t>(y)]);
      for (int f = 0; f < A.H(x, y).nObj; ++f)
        if (E[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(f)] &&
            !Hxy.is_iso(
                t.sq[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(f)]))
          return false;
    }
  return true;
}

// deterministic enumeration; throws ErrCode::ResourceBudget when the
// candidate scan exceeds the step budget
inline std::vector<LaxTransform> all_lax_transforms(const TwoCat& A, const TwoCat& B,
                                                    const TwoFunctor& F, const TwoFunctor& G,
                                                    LaxDir dir, const Marking1* E = nullptr,
                                                    long long budget = 50000000) {
  std::vector<LaxTransform> out;
  long long steps = 0;
  auto spend = [&](long long k) {
    steps += k;
    if (steps > budget)
      throw Error(ErrCode::ResourceBudget,
                  "transformation enumeration exceeded budget of " + std::to_string(budget) +
                      " steps");
  };
  if (A.nObj == 0) {
    out.push_back(LaxTransform{dir, {}, {}});
    return out;
  }
  size_t n = static_cast<size_t>(A.nObj);
  std::vector<int> pradix(n), phi;
  for (int x = 0; x < A.nObj; ++x)
    pradix[static_cast<size_t>(x)] =
        B.H(F.obj[static_cast<size_t>(x)], G.obj[static_cast<size_t>(x)]).nObj;
  if (!first_assignment(pradix, phi)) return out;
  bool lax = dir == LaxDir::Lax;
  do {
    // candidate squares per 1-morphism, endpoint- and marking-filtered
    struct Slot {
      int x, y, f;
      std::vector<int> cands;
    };
    std::vector<Slot> slots;
    bool feasible = true;
    for (int x = 0; x < A.nObj && feasible; ++x)
      for (int y = 0; y < A.nObj && feasible; ++y) {
        int fx = F.obj[static_cast<size_t>(x)], fy = F.obj[static_cast<size_t>(y)];
        int gx = G.obj[static_cast<size_t>(x)], gy = G.obj[static_cast<size_t>(y)];
        const FinCat& Hxy = B.H(fx, gy);
        for (int f = 0; f < A.H(x, y).nObj && feasible; ++f) {
          Slot s{x, y, f, {}};
          if (x == y && f == A.id1(x)) {
            s.cands.push_back(B.id2(fx, gx, phi[static_cast<size_t>(x)]));
          } else {
            int Ff =
                F.homf[static_cast<size_t>(x)][static_cast<size_t>(y)].obj[static_cast<size_t>(f)];
            int Gf =
                G.homf[static_cast<size_t>(x)][static_cast<size_t>(y)].obj[static_cast<size_t>(f)];
            int viaG = B.compose1(fx, gx, gy, phi[static_cast<size_t>(x)], Gf);
            int viaF = B.compose1(fx, fy, gy, Ff, phi[static_cast<size_t>(y)]);
            int want_src = lax ? viaG : viaF;
            int want_dst = lax ? viaF : viaG;
            bool marked =
                E && (*E)[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(f)];
            spend(Hxy.nMor());
            for (int m = 0; m < Hxy.nMor(); ++m) {
              if (Hxy.src[static_cast<size_t>(m)] != want_src ||
                  Hxy.dst[static_cast<size_t>(m)] != want_dst)
                continue;
              if (marked && !Hxy.is_iso(m)) continue;
              s.cands.push_back(m);
            }
          }
          feasible = !s.cands.empty();
          slots.push_back(std::move(s));
        }
      }
    if (!feasible) continue;
    std::vector<int> radix, asn;
    for (const Slot& s : slots) radix.push_back(static_cast<int>(s.cands.size()));
    first_assignment(radix, asn);
    do {
      spend(1 + static_cast<long long>(slots.size()));
      LaxTransform t;
      t.dir = dir;
      t.phi = phi;
      t.sq.assign(n, std::vector<std::vector<int>>(n));
      for (int x = 0; x < A.nObj; ++x)
        for (int y = 0; y < A.nObj; ++y)
          t.sq[static_cast<size_t>(x)][static_cast<size_t>(y)].assign(
              static_cast<size_t>(A.H(x, y).nObj), -1);
      for (size_t k = 0; k < slots.size(); ++k)
        t.sq[static_cast<size_t>(slots[k].x)][static_cast<size_t>(slots[k].y)]
            [static_cast<size_t>(slots[k].f)] = slots[k].cands[static_cast<size_t>(asn[k])];
      if (check_lax(A, B, F, G, t)) out.push_back(t);
    } while (next_assignment(radix, asn));
  } while (next_assignment(pradix, phi));
  return out;
}

// component families m[x]: phi_t[x] => phi_s[x] compatible with the squares
inline bool modification_ok(const TwoCat& A, const TwoCat& B, const TwoFunctor& F,
                            const TwoFunctor& G, const LaxTransform& t, const LaxTransform& s,
                            const std::vector<int>& m) {
  bool lax = t.dir == LaxDir::Lax;
  for (int x = 0; x < A.nObj; ++x)
    for (int y = 0; y < A.nObj; ++y) {
      int fx = F.obj[static_cast<size_t>(x)], fy = F.obj[static_cast<size_t>(y)];
      int gx = G.obj[static_cast<size_t>(x)], gy = G.obj[static_cast<size_t>(y)];
      const FinCat& Hxy = B.H(fx, gy);
      for (int f = 0; f < A.H(x, y).nObj; ++f) {
        int tf = t.sq[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(f)];
        int sf = s.sq[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(f)];
        int Ff = F.homf[static_cast<size_t>(x)][static_cast<size_t>(y)].obj[static_cast<size_t>(f)];
        int Gf = G.homf[static_cast<size_t>(x)][static_cast<size_t>(y)].obj[static_cast<size_t>(f)];
        int Ff_my = B.compose2(fx, fy, gy, B.id2(fx, fy, Ff), m[static_cast<size_t>(y)]);
        int mx_Gf = B.compose2(fx, gx, gy, m[static_cast<size_t>(x)], B.id2(gx, gy, Gf));
        bool ok = lax ? Hxy.compose(Ff_my, tf) == Hxy.compose(sf, mx_Gf)
                      : Hxy.compose(mx_Gf, tf) == Hxy.compose(sf, Ff_my);
        if (!ok) return false;
      }
    }
  return true;
}

inline std::vector<std::vector<int>> modifications_between(const TwoCat& A, const TwoCat& B,
                                                           const TwoFunctor& F,
                                                           const TwoFunctor& G,
                                                           const LaxTransform& t,
                                                           const LaxTransform& s) {
  std::vector<std::vector<int>> out;
  if (A.nObj == 0) {
    out.push_back({});
    return out;
  }
  size_t n = static_cast<size_t>(A.nObj);
  std::vector<std::vector<int>> cands(n);
  for (int x = 0; x < A.nObj; ++x) {
    const FinCat& Hx = B.H(F.obj[static_cast<size_t>(x)], G.obj[static_cast<size_t>(x)]);
    for (int m = 0; m < Hx.nMor(); ++m)
      if (Hx.src[static_cast<size_t>(m)] == t.phi[static_cast<size_t>(x)] &&
          Hx.dst[static_cast<size_t>(m)] == s.phi[static_cast<size_t>(x)])
        cands[static_cast<size_t>(x)].push_back(m);
    if (cands[static_cast<size_t>(x)].empty()) return out;
  }
  std::vector<int> radix, asn;
  for (auto& c : cands) radix.push_back(static_cast<int>(c.size()));
  first_assignment(radix, asn);
  do {
    std::vector<int> m(n);
    for (size_t x = 0; x < n; ++x) m[x] = cands[x][static_cast<size_t>(asn[x])];
    if (modification_ok(A, B, F, G, t, s, m)) out.push_back(m);
  } while (next_assignment(radix, asn));
  return out;
}

// the category of (marked-)lax transformations and modifications
struct NatLaxCat {
  FinCat cat;
  std::vector<LaxTransform> objs;
  std::vector<std::vector<int>> mods;  // per morphism of cat, component family
};

inline NatLaxCat nat_lax(const TwoCat& A, const TwoCat& B, const TwoFunctor& F,
                         const TwoFunctor& G, LaxDir dir, const Marking1* E = nullptr,
                         long long budget = 50000000) {
  NatLaxCat R;
  R.objs = all_lax_transforms(A, B, F, G, dir, E, budget);
  for (size_t i = 0; i < R.objs.size(); ++i) R.cat.add_object();
  std::map<std::tuple<int, int, std::vector<int>>, int> midx;
  for (size_t i = 0; i < R.objs.size(); ++i)
    for (size_t j = 0; j < R.objs.size(); ++j)
      for (auto& m : modifications_between(A, B, F, G, R.objs[i], R.objs[j])) {
        int id = R.cat.add_morphism(static_cast<int>(i), static_cast<int>(j));
        R.mods.push_back(m);
        midx[{static_cast<int>(i), static_cast<int>(j), m}] = id;
      }
  for (size_t i = 0; i < R.objs.size(); ++i) {
    std::vector<int> idm(static_cast<size_t>(A.nObj));
    for (int x = 0; x < A.nObj; ++x)
      idm[static_cast<size_t>(x)] =
          B.id2(F.obj[static_cast<size_t>(x)], G.obj[static_cast<size_t>(x)],
                R.objs[i].phi[static_cast<size_t>(x)]);
    R.cat.set_identity(static_cast<int>(i),
                       midx.at({static_cast<int>(i), static_cast<int>(i), idm}));
  }
  for (int m1 = 0; m1 < R.cat.nMor(); ++m1)
    for (int m2 = 0; m2 < R.cat.nMor(); ++m2) {
      if (R.cat.dst[static_cast<size_t>(m1)] != R.cat.src[static_cast<size_t>(m2)]) continue;
      std::vector<int> v(static_cast<size_t>(A.nObj));
      for (int x = 0; x < A.nObj; ++x) {
        const FinCat& Hx = B.H(F.obj[static_cast<size_t>(x)], G.obj[static_cast<size_t>(x)]);
        v[static_cast<size_t>(x)] = Hx.compose(R.mods[static_cast<size_t>(m2)][static_cast<size_t>(x)],
                                               R.mods[static_cast<size_t>(m1)][static_cast<size_t>(x)]);
      }
      R.cat.set_comp(m2, m1,
                     midx.at({R.cat.src[static_cast<size_t>(m1)],
                              R.cat.dst[static_cast<size_t>(m2)], v}));
    }
  return R;
}

// ---------------------------------------------------------------------------
// the oplax arrow 2-category

// objects are 1-morphisms (x,y,f); a 1-morphism (u,v,th): f -> g carries
// th: (f;v) => (u;g); 2-cells are pairs of 2-cells compatible with the fillers
struct OplaxArrow {
  TwoCat cat;
  std::vector<std::array<int, 3>> objs;                             // (x, y, f)
  std::vector<std::vector<std::vector<std::array<int, 3>>>> sqObj;  // [p][q] -> (u, v, th)
  std::vector<std::vector<std::vector<std::array<int, 2>>>> sqMor;  // [p][q] -> (m0, m1)
  TwoFunctor ev0, ev1;                                              // endpoint projections
};

inline OplaxArrow oplax_arrow(const TwoCat& A) {
  OplaxArrow R;
  for (int x = 0; x < A.nObj; ++x)
    for (int y = 0; y < A.nObj; ++y)
      for (int f = 0; f < A.H(x, y).nObj; ++f) R.objs.push_back({x, y, f});
  size_t n = R.objs.size();
  R.cat.nObj = static_cast<int>(n);
  R.cat.hom.assign(n, std::vector<FinCat>(n));
  R.cat.idObj.assign(n, -1);
  R.cat.comp.assign(n, std::vector<std::vector<HComp>>(n, std::vector<HComp>(n)));
  R.sqObj.assign(n, std::vector<std::vector<std::array<int, 3>>>(n));
  R.sqMor.assign(n, std::vector<std::vector<std::array<int, 2>>>(n));
  // object and morphism index maps per hom
  std::vector<std::vector<std::map<std::array<int, 3>, int>>> oidx(
      n, std::vector<std::map<std::array<int, 3>, int>>(n));
  std::vector<std::vector<std::map<std::array<int, 4>, int>>> midx(
      n, std::vector<std::map<std::array<int, 4>, int>>(n));
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q) {
      auto [x0, y0, f] = R.objs[p];
      auto [x1, y1, g] = R.objs[q];
      FinCat H;
      const FinCat& Hx = A.H(x0, x1);
      const FinCat& Hy = A.H(y0, y1);
      const FinCat& Hd = A.H(x0, y1);
      for (int u = 0; u < Hx.nObj; ++u)
        for (int v = 0; v < Hy.nObj; ++v) {
          int fv = A.compose1(x0, y0, y1, f, v);
          int ug = A.compose1(x0, x1, y1, u, g);
          for (int th = 0; th < Hd.nMor(); ++th) {
            if (Hd.src[static_cast<size_t>(th)] != fv || Hd.dst[static_cast<size_t>(th)] != ug)
              continue;
            int o = H.add_object();
            R.sqObj[p][q].push_back({u, v, th});
            oidx[p][q][{u, v, th}] = o;
          }
        }
      for (size_t o1 = 0; o1 < R.sqObj[p][q].size(); ++o1)
        for (size_t o2 = 0; o2 < R.sqObj[p][q].size(); ++o2) {
          auto [u1, v1, th1] = R.sqObj[p][q][o1];
          auto [u2, v2, th2] = R.sqObj[p][q][o2];
          for (int m0 = 0; m0 < Hx.nMor(); ++m0) {
            if (Hx.src[static_cast<size_t>(m0)] != u1 || Hx.dst[static_cast<size_t>(m0)] != u2)
              continue;
            for (int m1 = 0; m1 < Hy.nMor(); ++m1) {
              if (Hy.src[static_cast<size_t>(m1)] != v1 || Hy.dst[static_cast<size_t>(m1)] != v2)
                continue;
              int lhs = Hd.compose(A.compose2(x0, x1, y1, m0, A.id2(x1, y1, g)), th1);
              int rhs = Hd.compose(th2, A.compose2(x0, y0, y1, A.id2(x0, y0, f), m1));
              if (lhs != rhs) continue;
              int mm = H.add_morphism(static_cast<int>(o1), static_cast<int>(o2));
              R.sqMor[p][q].push_back({m0, m1});
              midx[p][q][{static_cast<int>(o1), static_cast<int>(o2), m0, m1}] = mm;
            }
          }
        }
      for (size_t o = 0; o < R.sqObj[p][q].size(); ++o) {
        auto [u, v, th] = R.sqObj[p][q][o];
        (void)th;
        H.set_identity(static_cast<int>(o),
                       midx[p][q].at({static_cast<int>(o), static_cast<int>(o),
                                      Hx.idOf[static_cast<size_t>(u)],
                                      Hy.idOf[static_cast<size_t>(v)]}));
      }
      for (int a = 0; a < H.nMor(); ++a)
        for (int b = 0; b < H.nMor(); ++b) {
          if (H.dst[static_cast<size_t>(a)] != H.src[static_cast<size_t>(b)]) continue;
          auto [a0, a1] = R.sqMor[p][q][static_cast<size_t>(a)];
          auto [b0, b1] = R.sqMor[p][q][static_cast<size_t>(b)];
          H.set_comp(b, a,
                     midx[p][q].at({H.src[static_cast<size_t>(a)], H.dst[static_cast<size_t>(b)],
                                    Hx.compose(b0, a0), Hy.compose(b1, a1)}));
        }
      R.cat.hom[p][q] = H;
    }
  for (size_t p = 0; p < n; ++p) {
    auto [x, y, f] = R.objs[p];
    R.cat.idObj[p] = oidx[p][p].at({A.id1(x), A.id1(y), A.id2(x, y, f)});
  }
  // 1-composition pastes fillers; 2-composition is componentwise
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q)
      for (size_t r = 0; r < n; ++r) {
        auto [x0, y0, f0] = R.objs[p];
        auto [x1, y1, f1] = R.objs[q];
        auto [x2, y2, f2] = R.objs[r];
        (void)f0;
        (void)f1;
        (void)f2;
        HComp& T = R.cat.comp[p][q][r];
        size_t no1 = R.sqObj[p][q].size(), no2 = R.sqObj[q][r].size();
        size_t nm1 = R.sqMor[p][q].size(), nm2 = R.sqMor[q][r].size();
        T.onObj.assign(no1, std::vector<int>(no2, -1));
        T.onMor.assign(nm1, std::vector<int>(nm2, -1));
        for (size_t i = 0; i < no1; ++i)
          for (size_t j = 0; j < no2; ++j) {
            auto [u1, v1, th1] = R.sqObj[p][q][i];
            auto [u2, v2, th2] = R.sqObj[q][r][j];
            int u = A.compose1(x0, x1, x2, u1, u2);
            int v = A.compose1(y0, y1, y2, v1, v2);
            int left = A.compose2(x0, y1, y2, th1, A.id2(y1, y2, v2));
            int right = A.compose2(x0, x1, y2, A.id2(x0, x1, u1), th2);
            int th = A.H(x0, y2).compose(right, left);
            T.onObj[i][j] = oidx[p][r].at({u, v, th});
          }
        const FinCat& H1 = R.cat.hom[p][q];
        const FinCat& H2 = R.cat.hom[q][r];
        for (size_t a = 0; a < nm1; ++a)
          for (size_t b = 0; b < nm2; ++b) {
            auto [a0, a1] = R.sqMor[p][q][a];
            auto [b0, b1] = R.sqMor[q][r][b];
            int m0 = A.compose2(x0, x1, x2, a0, b0);
            int m1 = A.compose2(y0, y1, y2, a1, b1);
            int so = T.onObj[static_cast<size_t>(H1.src[a])][static_cast<size_t>(H2.src[b])];
            int dd = T.onObj[static_cast<size_t>(H1.dst[a])][static_cast<size_t>(H2.dst[b])];
            T.onMor[a][b] = midx[p][r].at({so, dd, m0, m1});
          }
      }
  // endpoint projections
  auto mk_ev = [&](int side) {
    TwoFunctor Ev;
    Ev.obj.resize(n);
    Ev.homf.assign(n, std::vector<FinFunctor>(n));
    for (size_t p = 0; p < n; ++p)
      Ev.obj[p] = side == 0 ? R.objs[p][0] : R.objs[p][1];
    for (size_t p = 0; p < n; ++p)
      for (size_t q = 0; q < n; ++q) {
        FinFunctor& h = Ev.homf[p][q];
        for (auto& o : R.sqObj[p][q]) h.obj.push_back(side == 0 ? o[0] : o[1]);
        for (auto& m : R.sqMor[p][q]) h.mor.push_back(side == 0 ? m[0] : m[1]);
      }
    return Ev;
  };
  R.ev0 = mk_ev(0);
  R.ev1 = mk_ev(1);
  return R;
}

// ---------------------------------------------------------------------------
// products

struct TwoProd {
  TwoCat cat;
  std::vector<std::pair<int, int>> objPair;
  std::vector<std::vector<int>> objIdx;        // [a][b] -> product object
  std::vector<std::vector<ProductCat>> homP;   // per product object pair
  TwoFunctor proj0, proj1;
};

inline TwoProd product_two_cat(const TwoCat& A, const TwoCat& B) {
  TwoProd R;
  for (int a = 0; a < A.nObj; ++a)
    for (int b = 0; b < B.nObj; ++b) R.objPair.push_back({a, b});
  size_t n = R.objPair.size();
  R.objIdx.assign(static_cast<size_t>(A.nObj), std::vector<int>(static_cast<size_t>(B.nObj)));
  for (size_t p = 0; p < n; ++p)
    R.objIdx[static_cast<size_t>(R.objPair[p].first)][static_cast<size_t>(R.objPair[p].second)] =
        static_cast<int>(p);
  R.cat.nObj = static_cast<int>(n);
  R.cat.hom.assign(n, std::vector<FinCat>(n));
  R.cat.idObj.assign(n, -1);
  R.cat.comp.assign(n, std::vector<std::vector<HComp>>(n, std::vector<HComp>(n)));
  R.homP.assign(n, std::vector<ProductCat>(n));
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q) {
      auto [a, b] = R.objPair[p];
      auto [a2, b2] = R.objPair[q];
      R.homP[p][q] = product_cat(A.H(a, a2), B.H(b, b2));
      R.cat.hom[p][q] = R.homP[p][q].cat;
    }
  for (size_t p = 0; p < n; ++p) {
    auto [a, b] = R.objPair[p];
    R.cat.idObj[p] = R.homP[p][p].obj(A.id1(a), B.id1(b));
  }
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q)
      for (size_t r = 0; r < n; ++r) {
        auto [a0, b0] = R.objPair[p];
        auto [a1, b1] = R.objPair[q];
        auto [a2, b2] = R.objPair[r];
        HComp& T = R.cat.comp[p][q][r];
        const ProductCat& P1 = R.homP[p][q];
        const ProductCat& P2 = R.homP[q][r];
        const ProductCat& P3 = R.homP[p][r];
        T.onObj.assign(P1.objPair.size(), std::vector<int>(P2.objPair.size(), -1));
        T.onMor.assign(P1.morPair.size(), std::vector<int>(P2.morPair.size(), -1));
        for (size_t i = 0; i < P1.objPair.size(); ++i)
          for (size_t j = 0; j < P2.objPair.size(); ++j) {
            auto [f1, g1] = P1.objPair[i];
            auto [f2, g2] = P2.objPair[j];
            T.onObj[i][j] = P3.obj(A.compose1(a0, a1, a2, f1, f2), B.compose1(b0, b1, b2, g1, g2));
          }
        for (size_t i = 0; i < P1.morPair.size(); ++i)
          for (size_t j = 0; j < P2.morPair.size(); ++j) {
            auto [u1, w1] = P1.morPair[i];
            auto [u2, w2] = P2.morPair[j];
            T.onMor[i][j] = P3.mor(A.compose2(a0, a1, a2, u1, u2), B.compose2(b0, b1, b2, w1, w2));
          }
      }
  auto mk_proj = [&](int side) {
    TwoFunctor Pr;
    Pr.obj.resize(n);
    Pr.homf.assign(n, std::vector<FinFunctor>(n));
    for (size_t p = 0; p < n; ++p)
      Pr.obj[p] = side == 0 ? R.objPair[p].first : R.objPair[p].second;
    for (size_t p = 0; p < n; ++p)
      for (size_t q = 0; q < n; ++q) {
        FinFunctor& h = Pr.homf[p][q];
        for (auto& o : R.homP[p][q].objPair) h.obj.push_back(side == 0 ? o.first : o.second);
        for (auto& m : R.homP[p][q].morPair) h.mor.push_back(side == 0 ? m.first : m.second);
      }
    return Pr;
  };
  R.proj0 = mk_proj(0);
  R.proj1 = mk_proj(1);
  return R;
}

// the pairing <F,G> into a product built by product_two_cat
inline TwoFunctor pair_two_functor(const TwoProd& P, const TwoFunctor& F, const TwoFunctor& G) {
  TwoFunctor R;
  size_t n = F.obj.size();
  R.obj.resize(n);
  R.homf.assign(n, std::vector<FinFunctor>(n));
  for (size_t x = 0; x < n; ++x)
    R.obj[x] = P.objIdx[static_cast<size_t>(F.obj[x])][static_cast<size_t>(G.obj[x])];
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      const ProductCat& PC =
          P.homP[static_cast<size_t>(R.obj[x])][static_cast<size_t>(R.obj[y])];
      FinFunctor& h = R.homf[x][y];
      const FinFunctor& hf = F.homf[x][y];
      const FinFunctor& hg = G.homf[x][y];
      for (size_t f = 0; f < hf.obj.size(); ++f) h.obj.push_back(PC.obj(hf.obj[f], hg.obj[f]));
      for (size_t m = 0; m < hf.mor.size(); ++m) h.mor.push_back(PC.mor(hf.mor[m], hg.mor[m]));
    }
  return R;
}

// ---------------------------------------------------------------------------
// subcategory classes and their lifting cells

enum class SubClass { FF, LFF, LF, LI, LFI, Incl, Cons2 };

inline const char* subclass_name(SubClass c) {
  switch (c) {
    case SubClass::FF: return "ff";
    case SubClass::LFF: return "lff";
    case SubClass::LF: return "lf";
    case SubClass::LI: return "li";
    case SubClass::LFI: return "lfi";
    case SubClass::Incl: return "incl";
    case SubClass::Cons2: return "cons2";
  }
  return "?";
}

inline bool subclass_from_name(const std::string& s, SubClass* out) {
  static const std::pair<const char*, SubClass> table[] = {
      {"ff", SubClass::FF},   {"lff", SubClass::LFF},   {"lf", SubClass::LF},
      {"li", SubClass::LI},   {"lfi", SubClass::LFI},   {"incl", SubClass::Incl},
      {"cons2", SubClass::Cons2}};
  for (auto& [k, v] : table)
    if (s == k) {
      if (out) *out = v;
      return true;
    }
  return false;
}

inline bool class_check(const TwoCat& A, const TwoCat& B, const TwoFunctor& F, SubClass cls) {
  auto obj_injective = [](const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = i + 1; j < v.size(); ++j)
        if (v[i] == v[j]) return false;
    return true;
  };
  auto hom_faithful = [&](int x, int y) {
    const FinCat& Axy = A.H(x, y);
    const FinFunctor& h = F.homf[static_cast<size_t>(x)][static_cast<size_t>(y)];
    for (int m1 = 0; m1 < Axy.nMor(); ++m1)
      for (int m2 = m1 + 1; m2 < Axy.nMor(); ++m2)
        if (Axy.src[static_cast<size_t>(m1)] == Axy.src[static_cast<size_t>(m2)] &&
            Axy.dst[static_cast<size_t>(m1)] == Axy.dst[static_cast<size_t>(m2)] &&
            h.mor[static_cast<size_t>(m1)] == h.mor[static_cast<size_t>(m2)])
          return false;
    return true;
  };
  auto hom_obj_injective = [&](int x, int y) {
    return obj_injective(F.homf[static_cast<size_t>(x)][static_cast<size_t>(y)].obj);
  };
  auto hom_ff = [&](int x, int y) {
    return is_fully_faithful_functor(
        A.H(x, y), B.H(F.obj[static_cast<size_t>(x)], F.obj[static_cast<size_t>(y)]),
        F.homf[static_cast<size_t>(x)][static_cast<size_t>(y)]);
  };
  auto hom_obj_bijective = [&](int x, int y) {
    const FinCat& Bxy = B.H(F.obj[static_cast<size_t>(x)], F.obj[static_cast<size_t>(y)]);
    const FinFunctor& h = F.homf[static_cast<size_t>(x)][static_cast<size_t>(y)];
    if (static_cast<int>(h.obj.size()) != Bxy.nObj) return false;
    return obj_injective(h.obj);
  };
  switch (cls) {
    case SubClass::FF:
      for (int x = 0; x < A.nObj; ++x)
        for (int y = 0; y < A.nObj; ++y)
          if (!hom_obj_bijective(x, y) || !hom_ff(x, y)) return false;
      return true;
    case SubClass::LFF:
      for (int x = 0; x < A.nObj; ++x)
        for (int y = 0; y < A.nObj; ++y)
          if (!hom_ff(x, y)) return false;
      return true;
    case SubClass::LF:
      for (int x = 0; x < A.nObj; ++x)
        for (int y = 0; y < A.nObj; ++y)
          if (!hom_faithful(x, y)) return false;
      return true;
    case SubClass::LI:
      for (int x = 0; x < A.nObj; ++x)
        for (int y = 0; y < A.nObj; ++y)
          if (!hom_obj_injective(x, y) || !hom_faithful(x, y)) return false;
      return true;
    case SubClass::LFI:
      if (!obj_injective(F.obj)) return false;
      for (int x = 0; x < A.nObj; ++x)
        for (int y = 0; y < A.nObj; ++y)
          if (!hom_ff(x, y)) return false;
      return true;
    case SubClass::Incl:
      if (!obj_injective(F.obj)) return false;
      for (int x = 0; x < A.nObj; ++x)
        for (int y = 0; y < A.nObj; ++y)
          if (!hom_obj_injective(x, y) || !hom_faithful(x, y)) return false;
      return true;
    case SubClass::Cons2:
      for (int x = 0; x < A.nObj; ++x)
        for (int y = 0; y < A.nObj; ++y) {
          const FinCat& Axy = A.H(x, y);
          const FinCat& Bxy = B.H(F.obj[static_cast<size_t>(x)], F.obj[static_cast<size_t>(y)]);
          for (int m = 0; m < Axy.nMor(); ++m)
            if (Bxy.is_iso(
                    F.homf[static_cast<size_t>(x)][static_cast<size_t>(y)].mor[static_cast<size_t>(m)]) &&
                !Axy.is_iso(m))
              return false;
        }
      return true;
  }
  return false;
}

// a generating inclusion U -> V against which unique lifting is tested
struct OrthoCell {
  std::string name;
  TwoCat U, V;
  TwoFunctor c;
};

inline std::vector<std::string> ortho_cell_names() {
  return {"d1-1", "00-1", "dC2-C2", "dC3-C2", "C2-1", "00-0", "dC2-1", "00-C2"};
}

// every cell has two objects upstairs, trivial diagonal homs and an empty
// reverse hom, so only the object map and the (0,1) hom functor vary
inline OrthoCell ortho_cell(const std::string& name) {
  auto ffun = [](std::vector<int> o, std::vector<int> m) {
    FinFunctor f;
    f.obj = std::move(o);
    f.mor = std::move(m);
    return f;
  };
  OrthoCell cell;
  cell.name = name;
  std::vector<int> obj;
  FinFunctor h01;
  // chain_cat(1) morphism order: id0 = 0, the arrow = 1, id1 = 2
  if (name == "d1-1" || name == "00-1") {
    cell.U = twocat_two_points();
    cell.V = twocat_arrow();
    obj = {0, 1};
  } else if (name == "dC2-C2") {
    cell.U = twocat_parallel_1cells();
    cell.V = twocat_walking_2cell();
    obj = {0, 1};
    h01 = ffun({0, 1}, {0, 2});
  } else if (name == "dC3-C2") {
    // two parallel 2-cells map to the single 2-cell
    cell.U = twocat_parallel_2cells();
    cell.V = twocat_walking_2cell();
    obj = {0, 1};
    h01 = ffun({0, 1}, {0, 2, 1, 1});
  } else if (name == "C2-1") {
    // the 2-cell collapses onto an arrow
    cell.U = twocat_walking_2cell();
    cell.V = twocat_arrow();
    obj = {0, 1};
    h01 = ffun({0, 0}, {0, 0, 0});
  } else if (name == "00-0") {
    cell.U = twocat_two_points();
    cell.V = twocat_point();
    obj = {0, 0};
  } else if (name == "dC2-1") {
    // two parallel arrows collapse onto one
    cell.U = twocat_parallel_1cells();
    cell.V = twocat_arrow();
    obj = {0, 1};
    h01 = ffun({0, 0}, {0, 0});
  } else if (name == "00-C2") {
    cell.U = twocat_two_points();
    cell.V = twocat_walking_2cell();
    obj = {0, 1};
  } else {
    throw Error(ErrCode::InvalidInput, "unknown lifting cell: " + name);
  }
  cell.c.obj = obj;
  cell.c.homf.assign(2, std::vector<FinFunctor>(2));
  int c0 = obj[0], c1 = obj[1];
  cell.c.homf[0][0] = ffun({cell.V.id1(c0)}, {cell.V.id2(c0, c0, cell.V.id1(c0))});
  cell.c.homf[1][1] = ffun({cell.V.id1(c1)}, {cell.V.id2(c1, c1, cell.V.id1(c1))});
  cell.c.homf[0][1] = h01;
  cell.c.homf[1][0] = FinFunctor{};
  return cell;
}

struct OrthoReport {
  bool orthogonal = true;
  long long squares = 0;  // commuting squares examined
  int u = -1, v = -1;     // first failing square, as enumeration indices
  long long lifts = -1;   // its lift count
};

// right orthogonality: every square from the cell to F has exactly one lift
inline OrthoReport ortho_check_report(const TwoCat& A, const TwoCat& B, const TwoFunctor& F,
                                      const OrthoCell& cell) {
  OrthoReport rep;
  auto us = all_two_functors(cell.U, A);
  auto vs = all_two_functors(cell.V, B);
  auto ws = all_two_functors(cell.V, A);
  for (size_t ui = 0; ui < us.size(); ++ui) {
    TwoFunctor fu = compose_two_functor(F, us[ui]);
    for (size_t vi = 0; vi < vs.size(); ++vi) {
      if (!(compose_two_functor(vs[vi], cell.c) == fu)) continue;
      ++rep.squares;
      long long lifts = 0;
      for (const TwoFunctor& w : ws)
        if (compose_two_functor(w, cell.c) == us[ui] && compose_two_functor(F, w) == vs[vi])
          ++lifts;
      if (lifts != 1) {
        rep.orthogonal = false;
        rep.u = static_cast<int>(ui);
        rep.v = static_cast<int>(vi);
        rep.lifts = lifts;
        return rep;
      }
    }
  }
  return rep;
}

inline bool ortho_check(const TwoCat& A, const TwoCat& B, const TwoFunctor& F,
                        const OrthoCell& cell) {
  return ortho_check_report(A, B, F, cell).orthogonal;
}

// ---------------------------------------------------------------------------
// the nerve

// triangles are triples of 1-morphisms with a 2-cell f02 => (f01;f12);
// tetrahedra carry four such fillers obeying the pasting cocycle
struct NerveTri {
  int x0, x1, x2;
  int f01, f12, f02;
  int s;
};

struct NerveTet {
  std::array<int, 4> x;
  int f01, f02, f03, f12, f13, f23;
  int s012, s013, s023, s123;
};

struct ScaledNerve {
  SSetX X;
  std::vector<std::array<int, 3>> edges;  // nondegenerate: (x0, x1, f)
  std::vector<NerveTri> tris;             // nondegenerate
  std::vector<NerveTet> tets;             // nondegenerate
  std::map<std::array<int, 3>, int> edgeIdx;
  std::map<std::array<int, 7>, int> triIdx;
};

// thin triangles are exactly those whose filler is an identity 2-cell;
// marked edges come from the optional marking
inline ScaledNerve scaled_nerve(const TwoCat& A, const Marking1* markE = nullptr) {
  ScaledNerve N;
  SSet& S = N.X.s;
  for (int x = 0; x < A.nObj; ++x) S.add_cell(0, {});
  auto tri_s0 = [&](int x0, int x1, int x2, int f01, int f12, int f02, int s) {
    (void)x2;
    return x0 == x1 && f01 == A.id1(x0) && f12 == f02 && s == A.id2(x0, x2, f02);
  };
  auto tri_s1 = [&](int x0, int x1, int x2, int f01, int f12, int f02, int s) {
    (void)x0;
    return x1 == x2 && f12 == A.id1(x1) && f02 == f01 && s == A.id2(x0, x2, f01);
  };
  auto edge_ref = [&](int x0, int x1, int f) -> SRef {
    if (x0 == x1 && f == A.id1(x0)) return SRef{x0, Mono::codegen(0, 0)};
    return SRef::of_cell(N.edgeIdx.at({x0, x1, f}), 1);
  };
  auto tri_ref = [&](int x0, int x1, int x2, int f01, int f12, int f02, int s) -> SRef {
    if (tri_s0(x0, x1, x2, f01, f12, f02, s)) {
      SRef e = edge_ref(x1, x2, f12);
      return SRef{e.cell, compose(e.surj, Mono::codegen(0, 1))};
    }
    if (tri_s1(x0, x1, x2, f01, f12, f02, s)) {
      SRef e = edge_ref(x0, x1, f01);
      return SRef{e.cell, compose(e.surj, Mono::codegen(1, 1))};
    }
    return SRef::of_cell(N.triIdx.at({x0, x1, x2, f01, f12, f02, s}), 2);
  };
  // edges
  for (int x0 = 0; x0 < A.nObj; ++x0)
    for (int x1 = 0; x1 < A.nObj; ++x1)
      for (int f = 0; f < A.H(x0, x1).nObj; ++f) {
        if (x0 == x1 && f == A.id1(x0)) continue;
        int c = S.add_cell(1, {SRef::of_cell(x1, 0), SRef::of_cell(x0, 0)});
        N.edgeIdx[{x0, x1, f}] = c;
        N.edges.push_back({x0, x1, f});
      }
  // triangles
  for (int x0 = 0; x0 < A.nObj; ++x0)
    for (int x1 = 0; x1 < A.nObj; ++x1)
      for (int x2 = 0; x2 < A.nObj; ++x2) {
        const FinCat& H02 = A.H(x0, x2);
        for (int f01 = 0; f01 < A.H(x0, x1).nObj; ++f01)
          for (int f12 = 0; f12 < A.H(x1, x2).nObj; ++f12) {
            int cmp = A.compose1(x0, x1, x2, f01, f12);
            for (int s = 0; s < H02.nMor(); ++s) {
              if (H02.dst[static_cast<size_t>(s)] != cmp) continue;
              int f02 = H02.src[static_cast<size_t>(s)];
              if (tri_s0(x0, x1, x2, f01, f12, f02, s) || tri_s1(x0, x1, x2, f01, f12, f02, s))
                continue;
              int c = S.add_cell(2, {edge_ref(x1, x2, f12), edge_ref(x0, x2, f02),
                                     edge_ref(x0, x1, f01)});
              N.triIdx[{x0, x1, x2, f01, f12, f02, s}] = c;
              N.tris.push_back({x0, x1, x2, f01, f12, f02, s});
            }
          }
      }
  // tetrahedra: enumerate spines, then fillers, then the cocycle
  for (int x0 = 0; x0 < A.nObj; ++x0)
    for (int x1 = 0; x1 < A.nObj; ++x1)
      for (int x2 = 0; x2 < A.nObj; ++x2)
        for (int x3 = 0; x3 < A.nObj; ++x3) {
          const FinCat& H02 = A.H(x0, x2);
          const FinCat& H03 = A.H(x0, x3);
          const FinCat& H13 = A.H(x1, x3);
          for (int f01 = 0; f01 < A.H(x0, x1).nObj; ++f01)
            for (int f12 = 0; f12 < A.H(x1, x2).nObj; ++f12)
              for (int f23 = 0; f23 < A.H(x2, x3).nObj; ++f23) {
                int c012 = A.compose1(x0, x1, x2, f01, f12);
                int c123 = A.compose1(x1, x2, x3, f12, f23);
                for (int s012 = 0; s012 < H02.nMor(); ++s012) {
                  if (H02.dst[static_cast<size_t>(s012)] != c012) continue;
                  int f02 = H02.src[static_cast<size_t>(s012)];
                  int c023 = A.compose1(x0, x2, x3, f02, f23);
                  for (int s123 = 0; s123 < H13.nMor(); ++s123) {
                    if (H13.dst[static_cast<size_t>(s123)] != c123) continue;
                    int f13 = H13.src[static_cast<size_t>(s123)];
                    int c013 = A.compose1(x0, x1, x3, f01, f13);
                    for (int s013 = 0; s013 < H03.nMor(); ++s013) {
                      if (H03.dst[static_cast<size_t>(s013)] != c013) continue;
                      int f03 = H03.src[static_cast<size_t>(s013)];
                      // left pasting: f03 => (f01;f13) => (f01;f12;f23)
                      int left = H03.compose(A.compose2(x0, x1, x3, A.id2(x0, x1, f01), s123),
                                             s013);
                      for (int s023 = 0; s023 < H03.nMor(); ++s023) {
                        if (H03.src[static_cast<size_t>(s023)] != f03 ||
                            H03.dst[static_cast<size_t>(s023)] != c023)
                          continue;
                        int right = H03.compose(
                            A.compose2(x0, x2, x3, s012, A.id2(x2, x3, f23)), s023);
                        if (left != right) continue;
                        NerveTet T{{x0, x1, x2, x3}, f01, f02, f03, f12,
                                   f13, f23, s012, s013, s023, s123};
                        // degeneracy tests against the three collapse maps
                        bool deg = false;
                        if (x0 == x1 && f01 == A.id1(x0) && f02 == f12 && f03 == f13 &&
                            s012 == A.id2(x0, x2, f12) && s013 == A.id2(x0, x3, f13) &&
                            s023 == s123)
                          deg = true;
                        if (!deg && x1 == x2 && f12 == A.id1(x1) && f01 == f02 && f13 == f23 &&
                            s012 == A.id2(x0, x2, f01) && s123 == A.id2(x1, x3, f13) &&
                            s013 == s023)
                          deg = true;
                        if (!deg && x2 == x3 && f23 == A.id1(x2) && f02 == f03 && f12 == f13 &&
                            s023 == A.id2(x0, x3, f03) && s123 == A.id2(x1, x3, f13) &&
                            s012 == s013)
                          deg = true;
                        if (deg) continue;
                        S.add_cell(3, {tri_ref(x1, x2, x3, f12, f23, f13, s123),
                                       tri_ref(x0, x2, x3, f02, f23, f03, s023),
                                       tri_ref(x0, x1, x3, f01, f13, f03, s013),
                                       tri_ref(x0, x1, x2, f01, f12, f02, s012)});
                        N.tets.push_back(T);
                      }
                    }
                  }
                }
              }
        }
  N.X.thin.assign(static_cast<size_t>(S.n[2]), false);
  for (size_t i = 0; i < N.tris.size(); ++i) {
    const NerveTri& t = N.tris[i];
    N.X.thin[i] = A.H(t.x0, t.x2).is_identity(t.s);
  }
  N.X.marked.assign(static_cast<size_t>(S.n[1]), false);
  if (markE)
    for (size_t i = 0; i < N.edges.size(); ++i) {
      auto [x0, x1, f] = N.edges[i];
      N.X.marked[i] = (*markE)[static_cast<size_t>(x0)][static_cast<size_t>(x1)]
                              [static_cast<size_t>(f)];
    }
  return N;
}

// ---------------------------------------------------------------------------
// a 2-category of small categories over a fixed universe

struct CatUniverse {
  TwoCat cat;
  std::vector<FinCat> cats;
  std::vector<std::vector<FunCat>> fc;  // fc[i][j] books hom(i,j)
};

inline CatUniverse two_cat_of_universe(const std::vector<FinCat>& cats) {
  CatUniverse R;
  R.cats = cats;
  size_t n = cats.size();
  R.cat.nObj = static_cast<int>(n);
  R.cat.hom.assign(n, std::vector<FinCat>(n));
  R.cat.idObj.assign(n, -1);
  R.cat.comp.assign(n, std::vector<std::vector<HComp>>(n, std::vector<HComp>(n)));
  R.fc.assign(n, std::vector<FunCat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      R.fc[i][j] = fun_cat(cats[i], cats[j]);
      R.cat.hom[i][j] = R.fc[i][j].cat;
    }
  for (size_t i = 0; i < n; ++i)
    R.cat.idObj[i] = R.fc[i][i].obj_index(identity_functor(cats[i]));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        HComp& T = R.cat.comp[i][j][k];
        const FunCat& F1 = R.fc[i][j];
        const FunCat& F2 = R.fc[j][k];
        const FunCat& F3 = R.fc[i][k];
        T.onObj.assign(F1.objs.size(), std::vector<int>(F2.objs.size(), -1));
        T.onMor.assign(F1.mors.size(), std::vector<int>(F2.mors.size(), -1));
        for (size_t f = 0; f < F1.objs.size(); ++f)
          for (size_t g = 0; g < F2.objs.size(); ++g)
            T.onObj[f][g] = F3.obj_index(compose_functor(F2.objs[g], F1.objs[f]));
        for (size_t a = 0; a < F1.mors.size(); ++a)
          for (size_t b = 0; b < F2.mors.size(); ++b) {
            auto& [sF, tF, al] = F1.mors[a];
            auto& [sG, tG, be] = F2.mors[b];
            // composite component at x: beta_{F'x} after G(alpha_x)
            FinNat ga;
            for (int x = 0; x < cats[i].nObj; ++x)
              ga.comp.push_back(cats[k].compose(
                  be.comp[static_cast<size_t>(
                      F1.objs[static_cast<size_t>(tF)].obj[static_cast<size_t>(x)])],
                  F2.objs[static_cast<size_t>(sG)]
                      .mor[static_cast<size_t>(al.comp[static_cast<size_t>(x)])]));
            T.onMor[a][b] = F3.mor_index(T.onObj[static_cast<size_t>(sF)][static_cast<size_t>(sG)],
                                         T.onObj[static_cast<size_t>(tF)][static_cast<size_t>(tG)],
                                         ga);
          }
      }
  return R;
}

// ---------------------------------------------------------------------------
// the hom-category embedding of a lax transformation

// a transformation t: F => G over A lands, object by object, in postcompos-
// ition functors between hom categories; the embedded transformation lives
// over A x B^op with values in the universe of hom categories of B
struct YonedaEmbed {
  TwoCat Bop;
  TwoProd dom;  // A x B^op
  CatUniverse uni;
  std::vector<std::vector<int>> uidx;  // [b][x] -> universe index of hom(b,x)
  TwoFunctor HF, HG;
  LaxTransform Phi;
};

inline YonedaEmbed yoneda_embed_laxtransform(const TwoCat& A, const TwoCat& B,
                                             const TwoFunctor& F, const TwoFunctor& G,
                                             const LaxTransform& t) {
  YonedaEmbed Y;
  Y.Bop = op_two_cat(B);
  Y.dom = product_two_cat(A, Y.Bop);
  std::vector<FinCat> cats;
  Y.uidx.assign(static_cast<size_t>(B.nObj), std::vector<int>(static_cast<size_t>(B.nObj)));
  for (int b = 0; b < B.nObj; ++b)
    for (int x = 0; x < B.nObj; ++x) {
      Y.uidx[static_cast<size_t>(b)][static_cast<size_t>(x)] = static_cast<int>(cats.size());
      cats.push_back(B.H(b, x));
    }
  Y.uni = two_cat_of_universe(cats);
  size_t n = static_cast<size_t>(Y.dom.cat.nObj);
  // hom 2-functor induced by a 2-functor K: A -> B
  auto mk_hom_functor = [&](const TwoFunctor& K) {
    TwoFunctor Hk;
    Hk.obj.resize(n);
    Hk.homf.assign(n, std::vector<FinFunctor>(n));
    for (size_t p = 0; p < n; ++p) {
      auto [a, b] = Y.dom.objPair[p];
      Hk.obj[p] = Y.uidx[static_cast<size_t>(b)][static_cast<size_t>(K.obj[static_cast<size_t>(a)])];
    }
    for (size_t p = 0; p < n; ++p)
      for (size_t q = 0; q < n; ++q) {
        auto [a, b] = Y.dom.objPair[p];
        auto [a2, b2] = Y.dom.objPair[q];
        int ka = K.obj[static_cast<size_t>(a)], ka2 = K.obj[static_cast<size_t>(a2)];
        const ProductCat& PC = Y.dom.homP[p][q];
        const FunCat& FC = Y.uni.fc[static_cast<size_t>(Hk.obj[p])][static_cast<size_t>(Hk.obj[q])];
        FinFunctor& h = Hk.homf[p][q];
        const FinCat& Hsrc = B.H(b, ka);
        for (auto& [u, beta] : PC.objPair) {
          // w |-> beta ; w ; K(u)
          int Ku = K.homf[static_cast<size_t>(a)][static_cast<size_t>(a2)]
                       .obj[static_cast<size_t>(u)];
          FinFunctor val;
          for (int w = 0; w < Hsrc.nObj; ++w)
            val.obj.push_back(
                B.compose1(b2, ka, ka2, B.compose1(b2, b, ka, beta, w), Ku));
          for (int m = 0; m < Hsrc.nMor(); ++m)
            val.mor.push_back(B.compose2(b2, ka, ka2,
                                         B.compose2(b2, b, ka, B.id2(b2, b, beta), m),
                                         B.id2(ka, ka2, Ku)));
          h.obj.push_back(FC.obj_index(val));
        }
        for (size_t mi = 0; mi < PC.morPair.size(); ++mi) {
          auto [mu, eta] = PC.morPair[mi];
          // component at w: eta ; id_w ; K(mu)
          int Kmu = K.homf[static_cast<size_t>(a)][static_cast<size_t>(a2)]
                        .mor[static_cast<size_t>(mu)];
          FinNat nat;
          for (int w = 0; w < Hsrc.nObj; ++w)
            nat.comp.push_back(B.compose2(
                b2, b, ka2, eta,
                B.compose2(b, ka, ka2, B.id2(b, ka, w), Kmu)));
          h.mor.push_back(FC.mor_index(h.obj[static_cast<size_t>(PC.cat.src[mi])],
                                       h.obj[static_cast<size_t>(PC.cat.dst[mi])], nat));
        }
      }
    return Hk;
  };
  Y.HF = mk_hom_functor(F);
  Y.HG = mk_hom_functor(G);
  // components: postcomposition with phi_a; squares: whiskered squares of t
  Y.Phi.dir = LaxDir::Lax;
  Y.Phi.phi.resize(n);
  Y.Phi.sq.assign(n, std::vector<std::vector<int>>(n));
  for (size_t p = 0; p < n; ++p) {
    auto [a, b] = Y.dom.objPair[p];
    int fa = F.obj[static_cast<size_t>(a)], ga = G.obj[static_cast<size_t>(a)];
    const FinCat& Hsrc = B.H(b, fa);
    FinFunctor post;
    for (int w = 0; w < Hsrc.nObj; ++w)
      post.obj.push_back(B.compose1(b, fa, ga, w, t.phi[static_cast<size_t>(a)]));
    for (int m = 0; m < Hsrc.nMor(); ++m)
      post.mor.push_back(
          B.compose2(b, fa, ga, m, B.id2(fa, ga, t.phi[static_cast<size_t>(a)])));
    Y.Phi.phi[p] = Y.uni.fc[static_cast<size_t>(Y.HF.obj[p])][static_cast<size_t>(Y.HG.obj[p])]
                       .obj_index(post);
  }
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q) {
      auto [a, b] = Y.dom.objPair[p];
      auto [a2, b2] = Y.dom.objPair[q];
      int fa = F.obj[static_cast<size_t>(a)];
      int ga2 = G.obj[static_cast<size_t>(a2)];
      const ProductCat& PC = Y.dom.homP[p][q];
      int iF = Y.HF.obj[p], iG = Y.HG.obj[p];
      int jF = Y.HF.obj[q], jG = Y.HG.obj[q];
      auto& sqRow = Y.Phi.sq[p][q];
      sqRow.assign(PC.objPair.size(), -1);
      const FinCat& Hsrc = B.H(b, fa);
      for (size_t e = 0; e < PC.objPair.size(); ++e) {
        auto [u, beta] = PC.objPair[e];
        // nat component at w: whisker t's square by (beta ; w)
        FinNat nat;
        for (int w = 0; w < Hsrc.nObj; ++w) {
          int bw = B.compose1(b2, b, fa, beta, w);
          nat.comp.push_back(B.compose2(
              b2, fa, ga2, B.id2(b2, fa, bw),
              t.sq[static_cast<size_t>(a)][static_cast<size_t>(a2)][static_cast<size_t>(u)]));
        }
        int srcF = Y.uni.cat.compose1(iF, iG, jG, Y.Phi.phi[p],
                                      Y.HG.homf[p][q].obj[e]);
        int dstF = Y.uni.cat.compose1(iF, jF, jG, Y.HF.homf[p][q].obj[e], Y.Phi.phi[q]);
        sqRow[e] =
            Y.uni.fc[static_cast<size_t>(iF)][static_cast<size_t>(jG)].mor_index(srcF, dstF, nat);
      }
    }
  return Y;
}

}  // namespace laxkit
