#pragma once
// Fibrations of finite 2-categories.
//
// Everything below assumes gaunt totals and bases. Lifting problems then
// have strictly unique solutions, "equivalence" collapses to "invertible on
// the nose", and comparison functors can be tested for isomorphism by
// bijectivity on objects and morphisms.
//
// A 1-morphism is cocartesian when, for every target object, the comparison
// functor into the strict pullback of hom categories is an isomorphism; a
// 2-cell is cartesian when it satisfies the one-categorical lifting condition
// for the hom functor. Detectors return replayable witnesses.

#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "common.hpp"
#include "fincat.hpp"
#include "twocat.hpp"

namespace laxkit {

// ---------------------------------------------------------------------------
// reports

struct FibReport {
  bool ok = true;
  std::string reason;      // first failed condition, human readable
  std::vector<int> where;  // cell indices locating the failure
};

inline FibReport fib_fail(std::string reason, std::vector<int> where) {
  FibReport r;
  r.ok = false;
  r.reason = std::move(reason);
  r.where = std::move(where);
  return r;
}

// ---------------------------------------------------------------------------
// cartesian morphisms for a functor of 1-categories
//
// m: c' -> c is P-cartesian when every psi: z -> c whose image factors as
// P(m) . s admits a unique lift of s through m; cocartesian is the dual.

inline bool mor_is_cartesian(const FinCat& C, const FinCat& D, const FinFunctor& P, int m) {
  int cp = C.src[static_cast<size_t>(m)], c = C.dst[static_cast<size_t>(m)];
  int pm = P.mor[static_cast<size_t>(m)];
  for (int z = 0; z < C.nObj; ++z)
    for (int psi : C.hom(z, c))
      for (int s : D.hom(P.obj[static_cast<size_t>(z)], P.obj[static_cast<size_t>(cp)])) {
        if (D.compose(pm, s) != P.mor[static_cast<size_t>(psi)]) continue;
        int lifts = 0;
        for (int sb : C.hom(z, cp))
          if (P.mor[static_cast<size_t>(sb)] == s && C.compose(m, sb) == psi) ++lifts;
        if (lifts != 1) return false;
      }
  return true;
}

inline bool mor_is_cocartesian(const FinCat& C, const FinCat& D, const FinFunctor& P, int m) {
  int c = C.src[static_cast<size_t>(m)], cp = C.dst[static_cast<size_t>(m)];
  int pm = P.mor[static_cast<size_t>(m)];
  for (int z = 0; z < C.nObj; ++z)
    for (int psi : C.hom(c, z))
      for (int s : D.hom(P.obj[static_cast<size_t>(cp)], P.obj[static_cast<size_t>(z)])) {
        if (D.compose(s, pm) != P.mor[static_cast<size_t>(psi)]) continue;
        int lifts = 0;
        for (int sb : C.hom(cp, z))
          if (P.mor[static_cast<size_t>(sb)] == s && C.compose(sb, m) == psi) ++lifts;
        if (lifts != 1) return false;
      }
  return true;
}

// ---------------------------------------------------------------------------
// a projection between finite 2-categories, with optional verdict caches

struct FibOver {
  TwoCat total, base;
  TwoFunctor p;
  // caches per hom cell, filled by fib_compute_caches; empty means uncached
  std::vector<std::vector<std::vector<char>>> cocart1, cart1;  // [x][y][hom object]
  std::vector<std::vector<std::vector<char>>> cocart2, cart2;  // [x][y][hom morphism]

  int pobj(int x) const { return p.obj[static_cast<size_t>(x)]; }
  int pimg1(int x, int y, int f) const {
    return p.homf[static_cast<size_t>(x)][static_cast<size_t>(y)].obj[static_cast<size_t>(f)];
  }
  int pimg2(int x, int y, int a) const {
    return p.homf[static_cast<size_t>(x)][static_cast<size_t>(y)].mor[static_cast<size_t>(a)];
  }

  bool validate(std::string* why = nullptr) const {
    auto fail = [&](const std::string& m) {
      if (why) *why = m;
      return false;
    };
    std::string w;
    if (!total.validate(&w)) return fail("total: " + w);
    if (!base.validate(&w)) return fail("base: " + w);
    if (!two_functor_valid(total, base, p, &w)) return fail("projection: " + w);
    if (!two_cat_is_gaunt(total)) return fail("total is not gaunt");
    if (!two_cat_is_gaunt(base)) return fail("base is not gaunt");
    return true;
  }
};

inline FibOver make_fib(const TwoCat& total, const TwoCat& base, const TwoFunctor& p) {
  FibOver P;
  P.total = total;
  P.base = base;
  P.p = p;
  return P;
}

// comparison against the strict pullback of hom categories, one target at a
// time: g |-> (p g, fbar;g) must be a bijection onto the compatible pairs,
// on objects and on morphisms
inline bool cocart1_compute(const FibOver& P, int x, int y, int fbar) {
  const TwoCat& E = P.total;
  const TwoCat& B = P.base;
  int a = P.pobj(x), b = P.pobj(y), f = P.pimg1(x, y, fbar);
  for (int z = 0; z < E.nObj; ++z) {
    int c = P.pobj(z);
    std::set<std::pair<int, int>> seen;
    for (int g = 0; g < E.H(y, z).nObj; ++g)
      if (!seen.insert({P.pimg1(y, z, g), E.compose1(x, y, z, fbar, g)}).second) return false;
    int pairs = 0;
    for (int u = 0; u < B.H(b, c).nObj; ++u)
      for (int h = 0; h < E.H(x, z).nObj; ++h)
        if (B.compose1(a, b, c, f, u) == P.pimg1(x, z, h)) {
          if (!seen.count({u, h})) return false;
          ++pairs;
        }
    if (pairs != E.H(y, z).nObj) return false;
    std::set<std::pair<int, int>> mseen;
    int idf = E.id2(x, y, fbar), idfB = B.id2(a, b, f);
    for (int g = 0; g < E.H(y, z).nMor(); ++g)
      if (!mseen.insert({P.pimg2(y, z, g), E.compose2(x, y, z, idf, g)}).second) return false;
    int mpairs = 0;
    for (int u = 0; u < B.H(b, c).nMor(); ++u)
      for (int h = 0; h < E.H(x, z).nMor(); ++h)
        if (B.compose2(a, b, c, idfB, u) == P.pimg2(x, z, h)) {
          if (!mseen.count({u, h})) return false;
          ++mpairs;
        }
    if (mpairs != E.H(y, z).nMor()) return false;
  }
  return true;
}

inline bool cart1_compute(const FibOver& P, int x, int y, int fbar) {
  const TwoCat& E = P.total;
  const TwoCat& B = P.base;
  int a = P.pobj(x), b = P.pobj(y), f = P.pimg1(x, y, fbar);
  for (int z = 0; z < E.nObj; ++z) {
    int c = P.pobj(z);
    std::set<std::pair<int, int>> seen;
    for (int g = 0; g < E.H(z, x).nObj; ++g)
      if (!seen.insert({P.pimg1(z, x, g), E.compose1(z, x, y, g, fbar)}).second) return false;
    int pairs = 0;
    for (int u = 0; u < B.H(c, a).nObj; ++u)
      for (int h = 0; h < E.H(z, y).nObj; ++h)
        if (B.compose1(c, a, b, u, f) == P.pimg1(z, y, h)) {
          if (!seen.count({u, h})) return false;
          ++pairs;
        }
    if (pairs != E.H(z, x).nObj) return false;
    std::set<std::pair<int, int>> mseen;
    int idf = E.id2(x, y, fbar), idfB = B.id2(a, b, f);
    for (int g = 0; g < E.H(z, x).nMor(); ++g)
      if (!mseen.insert({P.pimg2(z, x, g), E.compose2(z, x, y, g, idf)}).second) return false;
    int mpairs = 0;
    for (int u = 0; u < B.H(c, a).nMor(); ++u)
      for (int h = 0; h < E.H(z, y).nMor(); ++h)
        if (B.compose2(c, a, b, u, idfB) == P.pimg2(z, y, h)) {
          if (!mseen.count({u, h})) return false;
          ++mpairs;
        }
    if (mpairs != E.H(z, x).nMor()) return false;
  }
  return true;
}

inline bool is_cocartesian(const FibOver& P, int x, int y, int fbar) {
  if (!P.cocart1.empty())
    return P.cocart1[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(fbar)] !=
           0;
  return cocart1_compute(P, x, y, fbar);
}

inline bool is_cartesian(const FibOver& P, int x, int y, int fbar) {
  if (!P.cart1.empty())
    return P.cart1[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(fbar)] != 0;
  return cart1_compute(P, x, y, fbar);
}

inline bool is_cartesian_2cell(const FibOver& P, int x, int y, int a) {
  if (!P.cart2.empty())
    return P.cart2[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(a)] != 0;
  return mor_is_cartesian(P.total.H(x, y), P.base.H(P.pobj(x), P.pobj(y)),
                          P.p.homf[static_cast<size_t>(x)][static_cast<size_t>(y)], a);
}

inline bool is_cocartesian_2cell(const FibOver& P, int x, int y, int a) {
  if (!P.cocart2.empty())
    return P.cocart2[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(a)] != 0;
  return mor_is_cocartesian(P.total.H(x, y), P.base.H(P.pobj(x), P.pobj(y)),
                            P.p.homf[static_cast<size_t>(x)][static_cast<size_t>(y)], a);
}

inline void fib_compute_caches(FibOver& P) {
  size_t n = static_cast<size_t>(P.total.nObj);
  P.cocart1.assign(n, std::vector<std::vector<char>>(n));
  P.cart1 = P.cocart1;
  P.cocart2 = P.cocart1;
  P.cart2 = P.cocart1;
  for (int x = 0; x < P.total.nObj; ++x)
    for (int y = 0; y < P.total.nObj; ++y) {
      const FinCat& H = P.total.H(x, y);
      const FinCat& D = P.base.H(P.pobj(x), P.pobj(y));
      const FinFunctor& ph = P.p.homf[static_cast<size_t>(x)][static_cast<size_t>(y)];
      auto& c1 = P.cocart1[static_cast<size_t>(x)][static_cast<size_t>(y)];
      auto& k1 = P.cart1[static_cast<size_t>(x)][static_cast<size_t>(y)];
      auto& c2 = P.cocart2[static_cast<size_t>(x)][static_cast<size_t>(y)];
      auto& k2 = P.cart2[static_cast<size_t>(x)][static_cast<size_t>(y)];
      for (int f = 0; f < H.nObj; ++f) {
        c1.push_back(cocart1_compute(P, x, y, f) ? 1 : 0);
        k1.push_back(cart1_compute(P, x, y, f) ? 1 : 0);
      }
      for (int m = 0; m < H.nMor(); ++m) {
        c2.push_back(mor_is_cocartesian(H, D, ph, m) ? 1 : 0);
        k2.push_back(mor_is_cartesian(H, D, ph, m) ? 1 : 0);
      }
    }
}

inline bool fib_caches_consistent(const FibOver& P) {
  if (P.cocart1.empty()) return false;
  FibOver Q = make_fib(P.total, P.base, P.p);
  for (int x = 0; x < P.total.nObj; ++x)
    for (int y = 0; y < P.total.nObj; ++y) {
      for (int f = 0; f < P.total.H(x, y).nObj; ++f)
        if (is_cocartesian(P, x, y, f) != is_cocartesian(Q, x, y, f) ||
            is_cartesian(P, x, y, f) != is_cartesian(Q, x, y, f))
          return false;
      for (int m = 0; m < P.total.H(x, y).nMor(); ++m)
        if (is_cartesian_2cell(P, x, y, m) != is_cartesian_2cell(Q, x, y, m) ||
            is_cocartesian_2cell(P, x, y, m) != is_cocartesian_2cell(Q, x, y, m))
          return false;
    }
  return true;
}

// strict invertibility of a 1-morphism
inline bool one_mor_invertible(const TwoCat& B, int x, int y, int f) {
  for (int g = 0; g < B.H(y, x).nObj; ++g)
    if (B.compose1(x, y, x, f, g) == B.id1(x) && B.compose1(y, x, y, g, f) == B.id1(y)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// enrichment and (i,j)-fibrations
//
// j = 1: every hom functor is a cartesian fibration of 1-categories and
// horizontal composition preserves cartesian 2-cells; j = 0 is the dual.
// i = 0 asks for cocartesian lifts of base 1-morphisms, i = 1 for cartesian
// ones.

inline FibReport detect_enriched(const FibOver& P, int j) {
  const TwoCat& E = P.total;
  const char* kind = j == 1 ? "cartesian" : "cocartesian";
  for (int x = 0; x < E.nObj; ++x)
    for (int y = 0; y < E.nObj; ++y) {
      const FinCat& C = E.H(x, y);
      const FinCat& D = P.base.H(P.pobj(x), P.pobj(y));
      for (int g = 0; g < C.nObj; ++g)
        for (int beta = 0; beta < D.nMor(); ++beta) {
          int end = j == 1 ? D.dst[static_cast<size_t>(beta)] : D.src[static_cast<size_t>(beta)];
          if (end != P.pimg1(x, y, g)) continue;
          bool found = false;
          for (int m = 0; m < C.nMor() && !found; ++m) {
            int e = j == 1 ? C.dst[static_cast<size_t>(m)] : C.src[static_cast<size_t>(m)];
            if (e != g || P.pimg2(x, y, m) != beta) continue;
            found = j == 1 ? is_cartesian_2cell(P, x, y, m) : is_cocartesian_2cell(P, x, y, m);
          }
          if (!found)
            return fib_fail(std::string("hom(") + std::to_string(x) + "," + std::to_string(y) +
                                ") has no " + kind + " lift",
                            {x, y, g, beta});
        }
    }
  for (int x = 0; x < E.nObj; ++x)
    for (int y = 0; y < E.nObj; ++y)
      for (int z = 0; z < E.nObj; ++z)
        for (int a = 0; a < E.H(x, y).nMor(); ++a) {
          bool ca = j == 1 ? is_cartesian_2cell(P, x, y, a) : is_cocartesian_2cell(P, x, y, a);
          if (!ca) continue;
          for (int b = 0; b < E.H(y, z).nMor(); ++b) {
            bool cb = j == 1 ? is_cartesian_2cell(P, y, z, b) : is_cocartesian_2cell(P, y, z, b);
            if (!cb) continue;
            int ab = E.compose2(x, y, z, a, b);
            bool cab = j == 1 ? is_cartesian_2cell(P, x, z, ab) : is_cocartesian_2cell(P, x, z, ab);
            if (!cab)
              return fib_fail(std::string("composition does not preserve ") + kind + " 2-cells",
                              {x, y, z, a, b});
          }
        }
  return {};
}

inline FibReport detect_cart_enriched(const FibOver& P) { return detect_enriched(P, 1); }

inline FibReport detect_fibration(const FibOver& P, int i, int j) {
  FibReport r = detect_enriched(P, j);
  if (!r.ok) return r;
  const TwoCat& B = P.base;
  for (int a = 0; a < B.nObj; ++a)
    for (int b = 0; b < B.nObj; ++b)
      for (int f = 0; f < B.H(a, b).nObj; ++f) {
        if (i == 0) {
          for (int x = 0; x < P.total.nObj; ++x) {
            if (P.pobj(x) != a) continue;
            bool found = false;
            for (int y = 0; y < P.total.nObj && !found; ++y) {
              if (P.pobj(y) != b) continue;
              for (int fb = 0; fb < P.total.H(x, y).nObj && !found; ++fb)
                if (P.pimg1(x, y, fb) == f && is_cocartesian(P, x, y, fb)) found = true;
            }
            if (!found) return fib_fail("no cocartesian lift", {a, b, f, x});
          }
        } else {
          for (int y = 0; y < P.total.nObj; ++y) {
            if (P.pobj(y) != b) continue;
            bool found = false;
            for (int x = 0; x < P.total.nObj && !found; ++x) {
              if (P.pobj(x) != a) continue;
              for (int fb = 0; fb < P.total.H(x, y).nObj && !found; ++fb)
                if (P.pimg1(x, y, fb) == f && is_cartesian(P, x, y, fb)) found = true;
            }
            if (!found) return fib_fail("no cartesian lift", {a, b, f, y});
          }
        }
      }
  return {};
}

// ---------------------------------------------------------------------------
// restriction of a total to selected objects and hom cells

struct SubTotal {
  TwoCat cat;
  std::vector<int> obj;                                   // sub object -> ambient object
  std::vector<std::vector<std::vector<int>>> hobj, hmor;  // sub hom cells -> ambient hom cells
};

// the kept cells must contain the relevant identities and be closed under
// both compositions
inline SubTotal restrict_total(const TwoCat& E, std::vector<int> objs,
                               const std::function<bool(int, int, int)>& keep1,
                               const std::function<bool(int, int, int)>& keep2) {
  SubTotal R;
  R.obj = std::move(objs);
  size_t n = R.obj.size();
  R.cat.nObj = static_cast<int>(n);
  R.cat.hom.assign(n, std::vector<FinCat>(n));
  R.cat.idObj.assign(n, -1);
  R.cat.comp.assign(n, std::vector<std::vector<HComp>>(n, std::vector<HComp>(n)));
  R.hobj.assign(n, std::vector<std::vector<int>>(n));
  R.hmor.assign(n, std::vector<std::vector<int>>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const FinCat& H = E.H(R.obj[i], R.obj[j]);
      FinCat& S = R.cat.hom[i][j];
      std::vector<int> opos(static_cast<size_t>(H.nObj), -1),
          mpos(static_cast<size_t>(H.nMor()), -1);
      for (int u = 0; u < H.nObj; ++u)
        if (keep1(static_cast<int>(i), static_cast<int>(j), u)) {
          opos[static_cast<size_t>(u)] = S.add_object();
          R.hobj[i][j].push_back(u);
        }
      for (int m = 0; m < H.nMor(); ++m)
        if (keep2(static_cast<int>(i), static_cast<int>(j), m)) {
          int s = opos[static_cast<size_t>(H.src[static_cast<size_t>(m)])];
          int t = opos[static_cast<size_t>(H.dst[static_cast<size_t>(m)])];
          assert(s >= 0 && t >= 0);  // kept 2-cells need kept endpoints
          mpos[static_cast<size_t>(m)] = S.add_morphism(s, t);
          R.hmor[i][j].push_back(m);
        }
      for (int u = 0; u < H.nObj; ++u)
        if (opos[static_cast<size_t>(u)] >= 0) {
          int im = mpos[static_cast<size_t>(H.idOf[static_cast<size_t>(u)])];
          assert(im >= 0);  // identity 2-cells survive the restriction
          S.set_identity(opos[static_cast<size_t>(u)], im);
        }
      for (int m1 = 0; m1 < H.nMor(); ++m1) {
        if (mpos[static_cast<size_t>(m1)] < 0) continue;
        for (int m2 = 0; m2 < H.nMor(); ++m2) {
          if (mpos[static_cast<size_t>(m2)] < 0) continue;
          if (H.dst[static_cast<size_t>(m1)] != H.src[static_cast<size_t>(m2)]) continue;
          int c = mpos[static_cast<size_t>(H.compose(m2, m1))];
          assert(c >= 0);  // vertical closure
          S.set_comp(mpos[static_cast<size_t>(m2)], mpos[static_cast<size_t>(m1)], c);
        }
      }
    }
  for (size_t i = 0; i < n; ++i) {
    R.cat.idObj[i] = index_of(R.hobj[i][i], E.id1(R.obj[i]));
    assert(R.cat.idObj[i] >= 0);  // identity 1-morphisms survive
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        HComp& T = R.cat.comp[i][j][k];
        const auto& fo = R.hobj[i][j];
        const auto& go = R.hobj[j][k];
        const auto& fm = R.hmor[i][j];
        const auto& gm = R.hmor[j][k];
        T.onObj.assign(fo.size(), std::vector<int>(go.size(), -1));
        T.onMor.assign(fm.size(), std::vector<int>(gm.size(), -1));
        int X = R.obj[i], Y = R.obj[j], Z = R.obj[k];
        for (size_t f = 0; f < fo.size(); ++f)
          for (size_t g = 0; g < go.size(); ++g) {
            T.onObj[f][g] = index_of(R.hobj[i][k], E.compose1(X, Y, Z, fo[f], go[g]));
            assert(T.onObj[f][g] >= 0);  // horizontal closure
          }
        for (size_t a = 0; a < fm.size(); ++a)
          for (size_t b = 0; b < gm.size(); ++b) {
            T.onMor[a][b] = index_of(R.hmor[i][k], E.compose2(X, Y, Z, fm[a], gm[b]));
            assert(T.onMor[a][b] >= 0);
          }
      }
  return R;
}

// ---------------------------------------------------------------------------
// fibres of a first-factor projection, viewed over a second one

struct FibreOver {
  FibOver fib;  // total = the fibre, base = the second factor
  SubTotal sub;
};

inline FibreOver fibre_over(const TwoCat& E, const TwoFunctor& pA, const TwoCat& A, int a,
                            const TwoCat& B, const TwoFunctor& pB) {
  std::vector<int> objs;
  for (int x = 0; x < E.nObj; ++x)
    if (pA.obj[static_cast<size_t>(x)] == a) objs.push_back(x);
  int ida = A.id1(a);
  int ida2 = A.id2(a, a, ida);
  FibreOver R;
  R.sub = restrict_total(
      E, objs,
      [&](int i, int j, int u) {
        return pA.homf[static_cast<size_t>(objs[static_cast<size_t>(i)])]
                      [static_cast<size_t>(objs[static_cast<size_t>(j)])]
                          .obj[static_cast<size_t>(u)] == ida;
      },
      [&](int i, int j, int m) {
        return pA.homf[static_cast<size_t>(objs[static_cast<size_t>(i)])]
                      [static_cast<size_t>(objs[static_cast<size_t>(j)])]
                          .mor[static_cast<size_t>(m)] == ida2;
      });
  R.fib.total = R.sub.cat;
  R.fib.base = B;
  size_t n = R.sub.obj.size();
  R.fib.p.obj.resize(n);
  R.fib.p.homf.assign(n, std::vector<FinFunctor>(n));
  for (size_t i = 0; i < n; ++i) R.fib.p.obj[i] = pB.obj[static_cast<size_t>(R.sub.obj[i])];
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const FinFunctor& q =
          pB.homf[static_cast<size_t>(R.sub.obj[i])][static_cast<size_t>(R.sub.obj[j])];
      FinFunctor& h = R.fib.p.homf[i][j];
      for (int u : R.sub.hobj[i][j]) h.obj.push_back(q.obj[static_cast<size_t>(u)]);
      for (int m : R.sub.hmor[i][j]) h.mor.push_back(q.mor[static_cast<size_t>(m)]);
    }
  return R;
}

// ---------------------------------------------------------------------------
// the pullback of a projection along a single base 1-morphism, over the
// interval

struct IntervalPB {
  FibOver fib;  // over the interval with discrete homs
  SubTotal sub;
  std::vector<int> lvl;  // 0 = source fibre, 1 = target fibre

  int find_obj(int level, int x) const {
    for (size_t i = 0; i < sub.obj.size(); ++i)
      if (lvl[i] == level && sub.obj[i] == x) return static_cast<int>(i);
    return -1;
  }
  int find_hobj(int i, int j, int u) const {
    return index_of(sub.hobj[static_cast<size_t>(i)][static_cast<size_t>(j)], u);
  }
};

inline IntervalPB interval_pullback(const FibOver& P, int a, int b, int f) {
  IntervalPB R;
  std::vector<int> objs;
  for (int x = 0; x < P.total.nObj; ++x)
    if (P.pobj(x) == a) {
      objs.push_back(x);
      R.lvl.push_back(0);
    }
  for (int x = 0; x < P.total.nObj; ++x)
    if (P.pobj(x) == b) {
      objs.push_back(x);
      R.lvl.push_back(1);
    }
  // allowed base images per level pair: id_a, f, id_b; nothing backwards
  auto allow = [&](int i, int j) -> int {
    int li = R.lvl[static_cast<size_t>(i)], lj = R.lvl[static_cast<size_t>(j)];
    if (li == 0 && lj == 0) return P.base.id1(a);
    if (li == 1 && lj == 1) return P.base.id1(b);
    if (li == 0 && lj == 1) return f;
    return -1;
  };
  auto base2 = [&](int i, int j, int img) -> int {
    int li = R.lvl[static_cast<size_t>(i)], lj = R.lvl[static_cast<size_t>(j)];
    int aa = li == 0 ? a : b, bb = lj == 0 ? a : b;
    return P.base.id2(aa, bb, img);
  };
  R.sub = restrict_total(
      P.total, objs,
      [&](int i, int j, int u) {
        int img = allow(i, j);
        if (img < 0) return false;
        return P.pimg1(objs[static_cast<size_t>(i)], objs[static_cast<size_t>(j)], u) == img;
      },
      [&](int i, int j, int m) {
        int img = allow(i, j);
        if (img < 0) return false;
        return P.pimg2(objs[static_cast<size_t>(i)], objs[static_cast<size_t>(j)], m) ==
               base2(i, j, img);
      });
  R.fib.total = R.sub.cat;
  R.fib.base = one_as_two(chain_cat(1));
  size_t n = R.sub.obj.size();
  R.fib.p.obj.resize(n);
  for (size_t i = 0; i < n; ++i) R.fib.p.obj[i] = R.lvl[i];
  R.fib.p.homf.assign(n, std::vector<FinFunctor>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      FinFunctor& h = R.fib.p.homf[i][j];
      h.obj.assign(R.sub.hobj[i][j].size(), 0);  // interval homs are single points
      h.mor.assign(R.sub.hmor[i][j].size(), 0);
    }
  return R;
}

inline bool is_locally_cocartesian(const FibOver& P, int x, int y, int fbar) {
  int a = P.pobj(x), b = P.pobj(y), f = P.pimg1(x, y, fbar);
  IntervalPB pb = interval_pullback(P, a, b, f);
  int i = pb.find_obj(0, x), j = pb.find_obj(1, y);
  int k = pb.find_hobj(i, j, fbar);
  assert(i >= 0 && j >= 0 && k >= 0);
  return is_cocartesian(pb.fib, i, j, k);
}

// ---------------------------------------------------------------------------
// locality relative to a set of base triangles

struct STriangle {
  int a = 0, b = 0, c = 0;  // objects
  int f = 0, g = 0;         // f in hom(a,b), g in hom(b,c); composite implied

  bool operator==(const STriangle&) const = default;
};

inline std::vector<STriangle> all_triangles(const TwoCat& B) {
  std::vector<STriangle> out;
  for (int a = 0; a < B.nObj; ++a)
    for (int b = 0; b < B.nObj; ++b)
      for (int c = 0; c < B.nObj; ++c)
        for (int f = 0; f < B.H(a, b).nObj; ++f)
          for (int g = 0; g < B.H(b, c).nObj; ++g) out.push_back({a, b, c, f, g});
  return out;
}

// triangles of a product base whose second edge is degenerate in the first
// factor or whose first edge is degenerate in the second factor
inline std::vector<STriangle> gray_triangles(const TwoCat& A, const TwoCat& B, const TwoProd& P) {
  std::vector<STriangle> out;
  size_t n = P.objPair.size();
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q)
      for (size_t r = 0; r < n; ++r) {
        auto [a0, b0] = P.objPair[p];
        auto [a1, b1] = P.objPair[q];
        auto [a2, b2] = P.objPair[r];
        for (size_t f = 0; f < P.homP[p][q].objPair.size(); ++f)
          for (size_t g = 0; g < P.homP[q][r].objPair.size(); ++g) {
            auto [u1, v1] = P.homP[p][q].objPair[f];
            auto [u2, v2] = P.homP[q][r].objPair[g];
            (void)u1;
            (void)v2;
            bool adeg = a1 == a2 && u2 == A.id1(a1);
            bool bdeg = b0 == b1 && v1 == B.id1(b0);
            if (adeg || bdeg)
              out.push_back({static_cast<int>(p), static_cast<int>(q), static_cast<int>(r),
                             static_cast<int>(f), static_cast<int>(g)});
          }
      }
  return out;
}

inline FibReport detect_local_fibration(const FibOver& P, const std::vector<STriangle>& S) {
  FibReport r = detect_enriched(P, 1);
  if (!r.ok) return r;
  const TwoCat& B = P.base;
  std::map<std::array<int, 3>, IntervalPB> pbs;
  std::map<std::array<int, 3>, std::vector<std::array<int, 3>>> loc;  // (x, y, fbar) lifts
  for (int a = 0; a < B.nObj; ++a)
    for (int b = 0; b < B.nObj; ++b)
      for (int f = 0; f < B.H(a, b).nObj; ++f) {
        IntervalPB pb = interval_pullback(P, a, b, f);
        FibReport rp = detect_fibration(pb.fib, 0, 1);
        if (!rp.ok) {
          rp.reason = "pullback of a base 1-morphism: " + rp.reason;
          rp.where.insert(rp.where.begin(), {a, b, f});
          return rp;
        }
        std::vector<std::array<int, 3>> ls;
        for (size_t i = 0; i < pb.sub.obj.size(); ++i) {
          if (pb.lvl[i] != 0) continue;
          for (size_t j = 0; j < pb.sub.obj.size(); ++j) {
            if (pb.lvl[j] != 1) continue;
            for (size_t k = 0; k < pb.sub.hobj[i][j].size(); ++k)
              if (is_cocartesian(pb.fib, static_cast<int>(i), static_cast<int>(j),
                                 static_cast<int>(k)))
                ls.push_back({pb.sub.obj[i], pb.sub.obj[j], pb.sub.hobj[i][j][k]});
          }
        }
        pbs.emplace(std::array<int, 3>{a, b, f}, std::move(pb));
        loc.emplace(std::array<int, 3>{a, b, f}, std::move(ls));
      }
  for (const STriangle& T : S) {
    int h = B.compose1(T.a, T.b, T.c, T.f, T.g);
    const auto& lf = loc.at({T.a, T.b, T.f});
    const auto& lg = loc.at({T.b, T.c, T.g});
    const IntervalPB& pbh = pbs.at({T.a, T.c, h});
    for (const auto& e1 : lf)
      for (const auto& e2 : lg) {
        if (e2[0] != e1[1]) continue;
        int comp = P.total.compose1(e1[0], e1[1], e2[1], e1[2], e2[2]);
        int i = pbh.find_obj(0, e1[0]), j = pbh.find_obj(1, e2[1]);
        int k = pbh.find_hobj(i, j, comp);
        assert(i >= 0 && j >= 0 && k >= 0);
        if (!is_cocartesian(pbh.fib, i, j, k))
          return fib_fail("composite over a marked triangle is not locally cocartesian",
                          {T.a, T.b, T.c, T.f, T.g, e1[0], e1[1], e2[1]});
      }
  }
  return {};
}

// ---------------------------------------------------------------------------
// transport between fibres along a base 1-morphism
//
// i = 0: along the (unique) cocartesian lifts, from the fibre over the source
// to the fibre over the target; i = 1: along cartesian lifts, backwards.

inline TwoFunctor fibre_transport(const FibOver& PA, const FibreOver& Fsrc, const FibreOver& Fdst,
                                  int a0, int a1, int alpha, int i) {
  const TwoCat& E = PA.total;
  const TwoCat& A = PA.base;
  int adst = i == 0 ? a1 : a0;
  size_t n = Fsrc.sub.obj.size();
  std::vector<int> liftT(n, -1), liftF(n, -1);
  for (size_t s = 0; s < n; ++s) {
    int X = Fsrc.sub.obj[s];
    for (int y = 0; y < E.nObj; ++y) {
      if (PA.pobj(y) != adst) continue;
      const FinCat& H = i == 0 ? E.H(X, y) : E.H(y, X);
      for (int fb = 0; fb < H.nObj; ++fb) {
        bool over = (i == 0 ? PA.pimg1(X, y, fb) : PA.pimg1(y, X, fb)) == alpha;
        if (!over) continue;
        bool cart = i == 0 ? is_cocartesian(PA, X, y, fb) : is_cartesian(PA, y, X, fb);
        if (!cart) continue;
        if (liftT[s] >= 0)
          throw Error(ErrCode::InvalidInput, "ambiguous transport lift; input not gaunt");
        liftT[s] = y;
        liftF[s] = fb;
      }
    }
    if (liftT[s] < 0) throw Error(ErrCode::InvalidInput, "missing transport lift");
  }
  TwoFunctor T;
  T.obj.resize(n);
  T.homf.assign(n, std::vector<FinFunctor>(n));
  for (size_t s = 0; s < n; ++s) {
    T.obj[s] = index_of(Fdst.sub.obj, liftT[s]);
    assert(T.obj[s] >= 0);
  }
  int idd = A.id1(adst);
  int idd2 = A.id2(adst, adst, idd);
  for (size_t s = 0; s < n; ++s)
    for (size_t t = 0; t < n; ++t) {
      int Xs = Fsrc.sub.obj[s], Xt = Fsrc.sub.obj[t];
      int Ys = liftT[s], Yt = liftT[t];
      FinFunctor& h = T.homf[s][t];
      for (int U : Fsrc.sub.hobj[s][t]) {
        int found = -1;
        const FinCat& HY = E.H(Ys, Yt);
        for (int cand = 0; cand < HY.nObj; ++cand) {
          if (PA.pimg1(Ys, Yt, cand) != idd) continue;
          bool eq;
          if (i == 0)
            eq = E.compose1(Xs, Ys, Yt, liftF[s], cand) == E.compose1(Xs, Xt, Yt, U, liftF[t]);
          else
            eq = E.compose1(Ys, Yt, Xt, cand, liftF[t]) == E.compose1(Ys, Xs, Xt, liftF[s], U);
          if (!eq) continue;
          if (found >= 0)
            throw Error(ErrCode::InvalidInput, "ambiguous transport on 1-morphisms");
          found = cand;
        }
        if (found < 0) throw Error(ErrCode::InvalidInput, "missing transport on 1-morphisms");
        int pos = index_of(Fdst.sub.hobj[static_cast<size_t>(T.obj[s])]
                                        [static_cast<size_t>(T.obj[t])],
                           found);
        assert(pos >= 0);
        h.obj.push_back(pos);
      }
      for (int M : Fsrc.sub.hmor[s][t]) {
        int found = -1;
        const FinCat& HY = E.H(Ys, Yt);
        for (int cand = 0; cand < HY.nMor(); ++cand) {
          if (PA.pimg2(Ys, Yt, cand) != idd2) continue;
          bool eq;
          if (i == 0)
            eq = E.compose2(Xs, Ys, Yt, E.id2(Xs, Ys, liftF[s]), cand) ==
                 E.compose2(Xs, Xt, Yt, M, E.id2(Xt, Yt, liftF[t]));
          else
            eq = E.compose2(Ys, Yt, Xt, cand, E.id2(Yt, Xt, liftF[t])) ==
                 E.compose2(Ys, Xs, Xt, E.id2(Ys, Xs, liftF[s]), M);
          if (!eq) continue;
          if (found >= 0) throw Error(ErrCode::InvalidInput, "ambiguous transport on 2-cells");
          found = cand;
        }
        if (found < 0) throw Error(ErrCode::InvalidInput, "missing transport on 2-cells");
        int pos = index_of(Fdst.sub.hmor[static_cast<size_t>(T.obj[s])]
                                        [static_cast<size_t>(T.obj[t])],
                           found);
        assert(pos >= 0);
        h.mor.push_back(pos);
      }
    }
  return T;
}

// ---------------------------------------------------------------------------
// detectors over product bases
//
// Conditions, for a projection to A x B:
//  (1) the first-factor projection is an (i,j)-fibration;
//  (2) its i-cartesian 1-morphisms and j-cartesian 2-cells have invertible
//      second components;
//  (3) every fibre over A is a (k,l)-fibration over B;
//  (4) the i-directed transports preserve the l-cartesian 2-cells of the
//      fibres, and over marked second-factor 1-morphisms also their
//      k-cartesian 1-morphisms.

inline FibReport detect_gray_fibration(const FibOver& P, const TwoCat& A, const TwoCat& B,
                                       const TwoProd& prod, int i, int j, int k, int l,
                                       const Marking1* M = nullptr) {
  if (!(P.base == prod.cat))
    throw Error(ErrCode::InvalidInput, "projection base is not the given product");
  TwoFunctor piA = compose_two_functor(prod.proj0, P.p);
  TwoFunctor piB = compose_two_functor(prod.proj1, P.p);
  FibOver PA = make_fib(P.total, A, piA);
  fib_compute_caches(PA);
  FibReport r1 = detect_fibration(PA, i, j);
  if (!r1.ok) {
    r1.reason = "first factor: " + r1.reason;
    return r1;
  }
  const char* dir1 = i == 0 ? "cocartesian" : "cartesian";
  for (int x = 0; x < P.total.nObj; ++x)
    for (int y = 0; y < P.total.nObj; ++y) {
      int px = P.pobj(x), py = P.pobj(y);
      auto [ax, bx] = prod.objPair[static_cast<size_t>(px)];
      auto [ay, by] = prod.objPair[static_cast<size_t>(py)];
      (void)ax;
      (void)ay;
      for (int fb = 0; fb < P.total.H(x, y).nObj; ++fb) {
        bool cc = i == 0 ? is_cocartesian(PA, x, y, fb) : is_cartesian(PA, x, y, fb);
        if (!cc) continue;
        int v = prod.homP[static_cast<size_t>(px)][static_cast<size_t>(py)]
                    .objPair[static_cast<size_t>(P.pimg1(x, y, fb))]
                    .second;
        if (!one_mor_invertible(B, bx, by, v))
          return fib_fail(std::string(dir1) + " 1-morphism has non-invertible second component",
                          {x, y, fb});
      }
      for (int m = 0; m < P.total.H(x, y).nMor(); ++m) {
        bool cc = j == 1 ? is_cartesian_2cell(PA, x, y, m) : is_cocartesian_2cell(PA, x, y, m);
        if (!cc) continue;
        int v2 = prod.homP[static_cast<size_t>(px)][static_cast<size_t>(py)]
                     .morPair[static_cast<size_t>(P.pimg2(x, y, m))]
                     .second;
        if (!B.H(bx, by).is_iso(v2))
          return fib_fail("enriched 2-cell has non-invertible second component", {x, y, m});
      }
    }
  std::vector<FibreOver> fibres;
  for (int a = 0; a < A.nObj; ++a) fibres.push_back(fibre_over(P.total, piA, A, a, B, piB));
  for (int a = 0; a < A.nObj; ++a) {
    FibReport rf = detect_fibration(fibres[static_cast<size_t>(a)].fib, k, l);
    if (!rf.ok) {
      rf.reason = "fibre " + std::to_string(a) + ": " + rf.reason;
      rf.where.insert(rf.where.begin(), a);
      return rf;
    }
  }
  for (int a0 = 0; a0 < A.nObj; ++a0)
    for (int a1 = 0; a1 < A.nObj; ++a1)
      for (int alpha = 0; alpha < A.H(a0, a1).nObj; ++alpha) {
        const FibreOver& src = fibres[static_cast<size_t>(i == 0 ? a0 : a1)];
        const FibreOver& dst = fibres[static_cast<size_t>(i == 0 ? a1 : a0)];
        TwoFunctor T = fibre_transport(PA, src, dst, a0, a1, alpha, i);
        size_t n = src.sub.obj.size();
        for (size_t s = 0; s < n; ++s)
          for (size_t t = 0; t < n; ++t) {
            int si = static_cast<int>(s), ti = static_cast<int>(t);
            for (size_t m = 0; m < src.sub.hmor[s][t].size(); ++m) {
              bool cm = l == 1 ? is_cartesian_2cell(src.fib, si, ti, static_cast<int>(m))
                               : is_cocartesian_2cell(src.fib, si, ti, static_cast<int>(m));
              if (!cm) continue;
              int im = T.homf[s][t].mor[m];
              bool ok2 = l == 1 ? is_cartesian_2cell(dst.fib, T.obj[s], T.obj[t], im)
                                : is_cocartesian_2cell(dst.fib, T.obj[s], T.obj[t], im);
              if (!ok2)
                return fib_fail("transport does not preserve enriched 2-cells",
                                {a0, a1, alpha, si, ti, static_cast<int>(m)});
            }
            if (!M) continue;
            for (size_t u = 0; u < src.sub.hobj[s][t].size(); ++u) {
              int bu = src.fib.pimg1(si, ti, static_cast<int>(u));
              int bs = src.fib.pobj(si), bt = src.fib.pobj(ti);
              if (!(*M)[static_cast<size_t>(bs)][static_cast<size_t>(bt)][static_cast<size_t>(bu)])
                continue;
              bool cu = k == 0 ? is_cocartesian(src.fib, si, ti, static_cast<int>(u))
                               : is_cartesian(src.fib, si, ti, static_cast<int>(u));
              if (!cu) continue;
              int iu = T.homf[s][t].obj[u];
              bool ok1 = k == 0 ? is_cocartesian(dst.fib, T.obj[s], T.obj[t], iu)
                                : is_cartesian(dst.fib, T.obj[s], T.obj[t], iu);
              if (!ok1)
                return fib_fail("transport does not preserve marked fibre 1-morphisms",
                                {a0, a1, alpha, si, ti, static_cast<int>(u)});
            }
          }
      }
  return {};
}

inline FibReport detect_gray(const FibOver& P, const TwoCat& A, const TwoCat& B,
                             const TwoProd& prod, const Marking1* M = nullptr) {
  return detect_gray_fibration(P, A, B, prod, 0, 1, 0, 1, M);
}

inline FibReport detect_bifib(const FibOver& P, const TwoCat& A, const TwoCat& B,
                              const TwoProd& prod, int i, int j, const Marking1* M = nullptr) {
  return detect_gray_fibration(P, A, B, prod, i, j, 1 - i, 1 - j, M);
}

// ---------------------------------------------------------------------------
// the total category of a category-valued diagram
//
// variance 0: morphisms (b,x) -> (c,y) are pairs (f: b -> c, u: f x -> y),
// canonical edges are cocartesian; variance 1 reads the diagram as an action
// of the opposite base: morphisms are pairs (f, u: x -> f y) over op(base),
// canonical edges are cartesian.

struct Groth {
  FinCat total1, base1;
  FinFunctor proj1;
  std::vector<std::pair<int, int>> obj;  // total object -> (base object, fibre object)
  // total morphism -> (anchor object, base mor, fibre mor); the anchor is the
  // source for variance 0 and the destination for variance 1, the end the
  // carrier does not already pin
  std::vector<std::array<int, 3>> mor;
  std::map<std::pair<int, int>, int> objIdx;  // (base object, fibre object)
  std::map<std::array<int, 3>, int> morIdx;
  int variance = 0;
  FibOver fib;  // discrete-hom wrapping
  TwoCatFrom1 tot2, bas2;
};

inline Groth grothendieck(const CatDiagram& D, int variance) {
  Groth G;
  G.variance = variance;
  const FinCat& S = D.base;
  for (int b = 0; b < S.nObj; ++b)
    for (int x = 0; x < D.fib[static_cast<size_t>(b)].nObj; ++x) {
      G.objIdx[{b, x}] = G.total1.add_object();
      G.obj.push_back({b, x});
    }
  G.base1 = variance == 0 ? S : op_cat(S);
  for (size_t s = 0; s < G.obj.size(); ++s)
    for (size_t t = 0; t < G.obj.size(); ++t) {
      auto [b, x] = G.obj[s];
      auto [c, y] = G.obj[t];
      // base1 morphisms from b to c; for variance 1 these run c -> b in S
      for (int f = 0; f < S.nMor(); ++f) {
        int sb = variance == 0 ? S.src[static_cast<size_t>(f)] : S.dst[static_cast<size_t>(f)];
        int db = variance == 0 ? S.dst[static_cast<size_t>(f)] : S.src[static_cast<size_t>(f)];
        if (sb != b || db != c) continue;
        const FinFunctor& act = D.act[static_cast<size_t>(f)];
        const FinCat& F = D.fib[static_cast<size_t>(variance == 0 ? c : b)];
        std::vector<int> us = variance == 0 ? F.hom(act.obj[static_cast<size_t>(x)], y)
                                            : F.hom(x, act.obj[static_cast<size_t>(y)]);
        for (int u : us) {
          int m = G.total1.add_morphism(static_cast<int>(s), static_cast<int>(t));
          int anchor = variance == 0 ? static_cast<int>(s) : static_cast<int>(t);
          G.mor.push_back({anchor, f, u});
          G.morIdx[{anchor, f, u}] = m;
          G.proj1.mor.push_back(f);
        }
      }
    }
  for (size_t s = 0; s < G.obj.size(); ++s) {
    auto [b, x] = G.obj[s];
    G.proj1.obj.push_back(b);
    G.total1.set_identity(
        static_cast<int>(s),
        G.morIdx.at({static_cast<int>(s), S.idOf[static_cast<size_t>(b)],
                     D.fib[static_cast<size_t>(b)].idOf[static_cast<size_t>(x)]}));
  }
  for (int m1 = 0; m1 < G.total1.nMor(); ++m1)
    for (int m2 = 0; m2 < G.total1.nMor(); ++m2) {
      if (G.total1.dst[static_cast<size_t>(m1)] != G.total1.src[static_cast<size_t>(m2)]) continue;
      auto [a1, f1, u1] = G.mor[static_cast<size_t>(m1)];
      auto [a2, f2, u2] = G.mor[static_cast<size_t>(m2)];
      (void)a1;
      (void)a2;
      int anchor = variance == 0 ? G.total1.src[static_cast<size_t>(m1)]
                                 : G.total1.dst[static_cast<size_t>(m2)];
      int fs, us;
      if (variance == 0) {
        fs = S.compose(f2, f1);
        int c2 = S.dst[static_cast<size_t>(f2)];
        us = D.fib[static_cast<size_t>(c2)].compose(u2,
                                                    D.act[static_cast<size_t>(f2)]
                                                        .mor[static_cast<size_t>(u1)]);
      } else {
        fs = S.compose(f1, f2);  // composition happens backwards in the base
        int b1 = S.dst[static_cast<size_t>(f1)];
        us = D.fib[static_cast<size_t>(b1)].compose(
            D.act[static_cast<size_t>(f1)].mor[static_cast<size_t>(u2)], u1);
      }
      G.total1.set_comp(m2, m1, G.morIdx.at({anchor, fs, us}));
    }
  G.tot2 = two_cat_from_fincat(G.total1);
  G.bas2 = two_cat_from_fincat(G.base1);
  G.fib = make_fib(G.tot2.cat, G.bas2.cat, one_functor_as_two(G.tot2, G.bas2, G.proj1));
  return G;
}

// ---------------------------------------------------------------------------
// straightening of a one-fibred projection over a one-categorical base

struct Straightened {
  CatDiagram D;  // over the base for variance 0, over its opposite for variance 1
  std::vector<std::vector<int>> objs;                       // [b] -> total objects
  std::vector<std::vector<std::array<int, 3>>> mors;        // [b][m] -> (src, dst, hom object)
  std::vector<std::vector<std::pair<int, int>>> lifts;      // [base mor][fibre obj] -> (tot, hom)
};

inline Straightened straighten(const FibOver& P, const FinCat& B1, int variance = 0) {
  if (!(P.base == one_as_two(B1)))
    throw Error(ErrCode::InvalidInput, "base does not match the given category");
  for (int x = 0; x < P.total.nObj; ++x)
    for (int y = 0; y < P.total.nObj; ++y)
      if (P.total.H(x, y).nMor() != P.total.H(x, y).nObj)
        throw Error(ErrCode::InvalidInput, "total has fibre 2-cells; not one-fibred");
  TwoCatFrom1 b2 = two_cat_from_fincat(B1);
  Straightened R;
  R.D.base = variance == 0 ? B1 : op_cat(B1);
  R.objs.assign(static_cast<size_t>(B1.nObj), {});
  R.mors.assign(static_cast<size_t>(B1.nObj), {});
  for (int x = 0; x < P.total.nObj; ++x) R.objs[static_cast<size_t>(P.pobj(x))].push_back(x);
  // fibre categories
  std::vector<std::map<std::array<int, 3>, int>> fmIdx(static_cast<size_t>(B1.nObj));
  for (int b = 0; b < B1.nObj; ++b) {
    const auto& os = R.objs[static_cast<size_t>(b)];
    FinCat F;
    for (size_t i = 0; i < os.size(); ++i) F.add_object();
    int idb = P.base.id1(b);
    for (size_t i = 0; i < os.size(); ++i)
      for (size_t j = 0; j < os.size(); ++j) {
        const FinCat& H = P.total.H(os[i], os[j]);
        for (int u = 0; u < H.nObj; ++u)
          if (P.pimg1(os[i], os[j], u) == idb) {
            int m = F.add_morphism(static_cast<int>(i), static_cast<int>(j));
            R.mors[static_cast<size_t>(b)].push_back(
                {static_cast<int>(i), static_cast<int>(j), u});
            fmIdx[static_cast<size_t>(b)][{static_cast<int>(i), static_cast<int>(j), u}] = m;
          }
      }
    for (size_t i = 0; i < os.size(); ++i)
      F.set_identity(static_cast<int>(i),
                     fmIdx[static_cast<size_t>(b)].at(
                         {static_cast<int>(i), static_cast<int>(i), P.total.id1(os[i])}));
    for (size_t m1 = 0; m1 < R.mors[static_cast<size_t>(b)].size(); ++m1)
      for (size_t m2 = 0; m2 < R.mors[static_cast<size_t>(b)].size(); ++m2) {
        auto [i1, j1, u1] = R.mors[static_cast<size_t>(b)][m1];
        auto [i2, j2, u2] = R.mors[static_cast<size_t>(b)][m2];
        if (j1 != i2) continue;
        int cu = P.total.compose1(os[static_cast<size_t>(i1)], os[static_cast<size_t>(j1)],
                                  os[static_cast<size_t>(j2)], u1, u2);
        F.set_comp(static_cast<int>(m2), static_cast<int>(m1),
                   fmIdx[static_cast<size_t>(b)].at({i1, j2, cu}));
      }
    R.D.fib.push_back(F);
  }
  // transports along every base morphism
  R.D.act.assign(static_cast<size_t>(B1.nMor()), {});
  R.lifts.assign(static_cast<size_t>(B1.nMor()), {});
  for (int f = 0; f < B1.nMor(); ++f) {
    int b = B1.src[static_cast<size_t>(f)], c = B1.dst[static_cast<size_t>(f)];
    int fh = index_of(b2.gmor[static_cast<size_t>(b)][static_cast<size_t>(c)], f);
    int bsrc = variance == 0 ? b : c;  // the fibre being transported
    int bdst = variance == 0 ? c : b;
    const auto& src = R.objs[static_cast<size_t>(bsrc)];
    const auto& dst = R.objs[static_cast<size_t>(bdst)];
    FinFunctor& act = R.D.act[static_cast<size_t>(f)];
    auto& lf = R.lifts[static_cast<size_t>(f)];
    lf.assign(src.size(), {-1, -1});
    for (size_t s = 0; s < src.size(); ++s) {
      int X = src[s];
      for (int y = 0; y < P.total.nObj; ++y) {
        if (P.pobj(y) != bdst) continue;
        const FinCat& H = variance == 0 ? P.total.H(X, y) : P.total.H(y, X);
        for (int fb = 0; fb < H.nObj; ++fb) {
          bool over = (variance == 0 ? P.pimg1(X, y, fb) : P.pimg1(y, X, fb)) == fh;
          if (!over) continue;
          bool cart = variance == 0 ? is_cocartesian(P, X, y, fb) : is_cartesian(P, y, X, fb);
          if (!cart) continue;
          if (lf[s].first >= 0)
            throw Error(ErrCode::InvalidInput, "ambiguous lift; input not gaunt");
          lf[s] = {y, fb};
        }
      }
      if (lf[s].first < 0)
        throw Error(ErrCode::InvalidInput,
                    variance == 0 ? "no cocartesian lift" : "no cartesian lift");
      act.obj.push_back(index_of(dst, lf[s].first));
    }
    int idd = P.base.id1(bdst);
    for (const auto& [i1, j1, u] : R.mors[static_cast<size_t>(bsrc)]) {
      int Xs = src[static_cast<size_t>(i1)], Xt = src[static_cast<size_t>(j1)];
      int Ys = lf[static_cast<size_t>(i1)].first, Yt = lf[static_cast<size_t>(j1)].first;
      int Fs = lf[static_cast<size_t>(i1)].second, Ft = lf[static_cast<size_t>(j1)].second;
      int found = -1;
      for (int cand = 0; cand < P.total.H(Ys, Yt).nObj; ++cand) {
        if (P.pimg1(Ys, Yt, cand) != idd) continue;
        bool eq;
        if (variance == 0)
          eq = P.total.compose1(Xs, Ys, Yt, Fs, cand) == P.total.compose1(Xs, Xt, Yt, u, Ft);
        else
          eq = P.total.compose1(Ys, Yt, Xt, cand, Ft) == P.total.compose1(Ys, Xs, Xt, Fs, u);
        if (!eq) continue;
        if (found >= 0) throw Error(ErrCode::InvalidInput, "ambiguous transport");
        found = cand;
      }
      if (found < 0) throw Error(ErrCode::InvalidInput, "missing transport");
      act.mor.push_back(fmIdx[static_cast<size_t>(bdst)].at(
          {act.obj[static_cast<size_t>(i1)], act.obj[static_cast<size_t>(j1)], found}));
    }
  }
  return R;
}

// ---------------------------------------------------------------------------
// exactness of the two round trips

// straightening the total of a diagram recovers the diagram on the nose,
// under the canonical identification of fibres
inline bool groth_round_trip_ok(const CatDiagram& D, int variance, std::string* why = nullptr) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  Groth G = grothendieck(D, variance);
  Straightened S = straighten(G.fib, G.base1, variance);
  for (int b = 0; b < D.base.nObj; ++b) {
    const auto& os = S.objs[static_cast<size_t>(b)];
    if (static_cast<int>(os.size()) != D.fib[static_cast<size_t>(b)].nObj)
      return fail("fibre object count at " + std::to_string(b));
    for (size_t k = 0; k < os.size(); ++k)
      if (G.obj[static_cast<size_t>(os[k])] != std::make_pair(b, static_cast<int>(k)))
        return fail("fibre object order at " + std::to_string(b));
    // fibre morphisms: decode back to diagram morphisms
    const auto& ms = S.mors[static_cast<size_t>(b)];
    if (ms.size() != static_cast<size_t>(D.fib[static_cast<size_t>(b)].nMor()))
      return fail("fibre morphism count at " + std::to_string(b));
    std::vector<int> phi(ms.size(), -1);
    std::vector<bool> hit(ms.size(), false);
    for (size_t m = 0; m < ms.size(); ++m) {
      auto [i, j, hu] = ms[m];
      int gm = G.tot2.gmor[static_cast<size_t>(os[static_cast<size_t>(i)])]
                          [static_cast<size_t>(os[static_cast<size_t>(j)])]
                          [static_cast<size_t>(hu)];
      auto [s0, f0, u0] = G.mor[static_cast<size_t>(gm)];
      (void)s0;
      if (f0 != D.base.idOf[static_cast<size_t>(b)]) return fail("fibre morphism over non-identity");
      if (D.fib[static_cast<size_t>(b)].src[static_cast<size_t>(u0)] != i ||
          D.fib[static_cast<size_t>(b)].dst[static_cast<size_t>(u0)] != j)
        return fail("fibre morphism endpoints");
      phi[m] = u0;
      if (hit[static_cast<size_t>(u0)]) return fail("fibre morphism decode not injective");
      hit[static_cast<size_t>(u0)] = true;
    }
    // composition transported along the decode
    const FinCat& Fb = S.D.fib[static_cast<size_t>(b)];
    for (int m1 = 0; m1 < Fb.nMor(); ++m1)
      for (int m2 = 0; m2 < Fb.nMor(); ++m2) {
        if (Fb.dst[static_cast<size_t>(m1)] != Fb.src[static_cast<size_t>(m2)]) continue;
        if (phi[static_cast<size_t>(Fb.compose(m2, m1))] !=
            D.fib[static_cast<size_t>(b)].compose(phi[static_cast<size_t>(m2)],
                                                  phi[static_cast<size_t>(m1)]))
          return fail("fibre composition at " + std::to_string(b));
      }
    // transports agree; both variances run source fibre to destination fibre
    for (int f = 0; f < D.base.nMor(); ++f) {
      if (D.base.src[static_cast<size_t>(f)] != b) continue;
      if (S.D.act[static_cast<size_t>(f)].obj != D.act[static_cast<size_t>(f)].obj)
        return fail("transport objects along " + std::to_string(f));
      int bd = D.base.dst[static_cast<size_t>(f)];
      const auto& md = S.mors[static_cast<size_t>(bd)];
      for (size_t m = 0; m < ms.size(); ++m) {
        int im = S.D.act[static_cast<size_t>(f)].mor[m];
        auto [i2, j2, hu2] = md[static_cast<size_t>(im)];
        (void)i2;
        (void)j2;
        int gm2 = G.tot2.gmor[static_cast<size_t>(S.objs[static_cast<size_t>(bd)]
                                                        [static_cast<size_t>(md[static_cast<size_t>(
                                                            im)][0])])]
                             [static_cast<size_t>(
                                 S.objs[static_cast<size_t>(bd)]
                                       [static_cast<size_t>(md[static_cast<size_t>(im)][1])])]
                             [static_cast<size_t>(hu2)];
        auto [s2, f2, u2] = G.mor[static_cast<size_t>(gm2)];
        (void)s2;
        if (f2 != D.base.idOf[static_cast<size_t>(bd)]) return fail("transport decode");
        if (u2 != D.act[static_cast<size_t>(f)].mor[static_cast<size_t>(phi[m])])
          return fail("transport morphisms along " + std::to_string(f));
      }
    }
  }
  return true;
}

// rebuilding the total from its straightening gives an isomorphism over the
// base
inline bool unstraighten_recovers(const FibOver& P, const FinCat& B1, int variance = 0,
                                  std::string* why = nullptr) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  Straightened S = straighten(P, B1, variance);
  Groth G = grothendieck(S.D, variance);
  UnderCat U = underlying_cat(P.total);
  TwoCatFrom1 b2 = two_cat_from_fincat(B1);
  FinFunctor K;
  for (size_t t = 0; t < G.obj.size(); ++t) {
    auto [b, k] = G.obj[t];
    K.obj.push_back(S.objs[static_cast<size_t>(b)][static_cast<size_t>(k)]);
  }
  for (int m = 0; m < G.total1.nMor(); ++m) {
    auto [a, f, u] = G.mor[static_cast<size_t>(m)];
    (void)a;
    auto [b, xk] = G.obj[static_cast<size_t>(G.total1.src[static_cast<size_t>(m)])];
    int fsrc = B1.src[static_cast<size_t>(f)], fdst = B1.dst[static_cast<size_t>(f)];
    int glob;
    if (variance == 0) {
      // lift of f at the source, then the fibre morphism
      int X = S.objs[static_cast<size_t>(b)][static_cast<size_t>(xk)];
      auto [Y, fb] = S.lifts[static_cast<size_t>(f)][static_cast<size_t>(xk)];
      auto [j1, j2, hu] = S.mors[static_cast<size_t>(fdst)][static_cast<size_t>(u)];
      (void)j1;
      int Z = S.objs[static_cast<size_t>(fdst)][static_cast<size_t>(j2)];
      int c1 = P.total.compose1(X, Y, Z, fb, hu);
      glob = U.glob[static_cast<size_t>(X)][static_cast<size_t>(Z)][static_cast<size_t>(c1)];
    } else {
      // the fibre morphism, then the cartesian lift of f at the target
      int X = S.objs[static_cast<size_t>(b)][static_cast<size_t>(xk)];
      auto [c, yk] = G.obj[static_cast<size_t>(G.total1.dst[static_cast<size_t>(m)])];
      assert(b == fsrc && c == fdst);
      auto [j1, j2, hu] = S.mors[static_cast<size_t>(b)][static_cast<size_t>(u)];
      (void)j1;
      int Xp = S.objs[static_cast<size_t>(b)][static_cast<size_t>(j2)];
      auto [Yt, fb] = S.lifts[static_cast<size_t>(f)][static_cast<size_t>(yk)];
      assert(Yt == Xp);
      (void)Yt;
      int Ytot = S.objs[static_cast<size_t>(c)][static_cast<size_t>(yk)];
      int c1 = P.total.compose1(X, Xp, Ytot, hu, fb);
      glob = U.glob[static_cast<size_t>(X)][static_cast<size_t>(Ytot)][static_cast<size_t>(c1)];
    }
    K.mor.push_back(glob);
  }
  std::string w;
  if (!K.validate(G.total1, U.cat, &w)) return fail("comparison functor: " + w);
  // bijective on objects and morphisms
  std::set<int> so(K.obj.begin(), K.obj.end()), sm(K.mor.begin(), K.mor.end());
  if (static_cast<int>(so.size()) != U.cat.nObj || U.cat.nObj != G.total1.nObj)
    return fail("comparison not bijective on objects");
  if (static_cast<int>(sm.size()) != U.cat.nMor() || U.cat.nMor() != G.total1.nMor())
    return fail("comparison not bijective on morphisms");
  // projection compatibility
  for (int m = 0; m < G.total1.nMor(); ++m) {
    int g = K.mor[static_cast<size_t>(m)];
    auto [hx, hy] = U.home[static_cast<size_t>(g)];
    int bf = b2.gmor[static_cast<size_t>(P.pobj(hx))][static_cast<size_t>(P.pobj(hy))]
                    [static_cast<size_t>(P.pimg1(hx, hy, U.local[static_cast<size_t>(g)]))];
    if (bf != G.proj1.mor[static_cast<size_t>(m)]) return fail("projection mismatch");
  }
  return true;
}

// ---------------------------------------------------------------------------
// straightening functors over the base into transformation data

struct MapStraightened {
  std::vector<FinFunctor> comp;  // per base object
  std::vector<FinNat> sq;        // per base morphism f: G(f) . comp_b => comp_c . F(f)
};

// the functor over the base encoded by transformation data between two
// diagram totals
inline FinFunctor unstraighten_laxtransform(const CatDiagram& DF, const CatDiagram& DG,
                                            const MapStraightened& t, const Groth& GF,
                                            const Groth& GG) {
  FinFunctor H;
  for (size_t s = 0; s < GF.obj.size(); ++s) {
    auto [b, x] = GF.obj[s];
    H.obj.push_back(GG.objIdx.at({b, t.comp[static_cast<size_t>(b)].obj[static_cast<size_t>(x)]}));
  }
  for (int m = 0; m < GF.total1.nMor(); ++m) {
    auto [s, f, u] = GF.mor[static_cast<size_t>(m)];
    auto [b, x] = GF.obj[static_cast<size_t>(s)];
    int c = DF.base.dst[static_cast<size_t>(f)];
    int w = DG.fib[static_cast<size_t>(c)].compose(
        t.comp[static_cast<size_t>(c)].mor[static_cast<size_t>(u)],
        t.sq[static_cast<size_t>(f)].comp[static_cast<size_t>(x)]);
    H.mor.push_back(GG.morIdx.at({H.obj[static_cast<size_t>(s)], f, w}));
  }
  return H;
}

// decode a functor over the base into components and squares; exact inverse
// of unstraighten_laxtransform
inline MapStraightened straighten_map(const Groth& GF, const Groth& GG, const CatDiagram& DF,
                                      const FinFunctor& H) {
  for (size_t m = 0; m < H.mor.size(); ++m)
    if (GG.proj1.mor[static_cast<size_t>(H.mor[m])] != GF.proj1.mor[m])
      throw Error(ErrCode::InvalidInput, "functor does not live over the base");
  MapStraightened t;
  t.comp.assign(DF.base.nObj, {});
  for (size_t s = 0; s < GF.obj.size(); ++s) {
    auto [b, x] = GF.obj[s];
    auto [b2, x2] = GG.obj[static_cast<size_t>(H.obj[s])];
    if (b2 != b) throw Error(ErrCode::InvalidInput, "functor does not live over the base");
    (void)x;
    t.comp[static_cast<size_t>(b)].obj.push_back(x2);
  }
  for (int b = 0; b < DF.base.nObj; ++b) {
    const FinCat& Fb = DF.fib[static_cast<size_t>(b)];
    int idb = DF.base.idOf[static_cast<size_t>(b)];
    for (int u = 0; u < Fb.nMor(); ++u) {
      int m = GF.morIdx.at({GF.objIdx.at({b, Fb.src[static_cast<size_t>(u)]}), idb, u});
      auto [s2, f2, w] = GG.mor[static_cast<size_t>(H.mor[static_cast<size_t>(m)])];
      (void)s2;
      assert(f2 == idb);
      t.comp[static_cast<size_t>(b)].mor.push_back(w);
    }
  }
  for (int f = 0; f < DF.base.nMor(); ++f) {
    int b = DF.base.src[static_cast<size_t>(f)];
    FinNat n;
    for (int x = 0; x < DF.fib[static_cast<size_t>(b)].nObj; ++x) {
      int m = GF.morIdx.at({GF.objIdx.at({b, x}), f,
                            DF.fib[static_cast<size_t>(DF.base.dst[static_cast<size_t>(f)])]
                                .idOf[static_cast<size_t>(
                                    DF.act[static_cast<size_t>(f)].obj[static_cast<size_t>(x)])]});
      auto [s2, f2, w] = GG.mor[static_cast<size_t>(H.mor[static_cast<size_t>(m)])];
      (void)s2;
      assert(f2 == f);
      n.comp.push_back(w);
    }
    t.sq.push_back(n);
  }
  return t;
}

// transformation data is lax when every square is natural; strong when every
// square component is an identity
inline bool map_straightening_valid(const CatDiagram& DF, const CatDiagram& DG,
                                    const MapStraightened& t, std::string* why = nullptr) {
  for (int b = 0; b < DF.base.nObj; ++b) {
    std::string w;
    if (!t.comp[static_cast<size_t>(b)].validate(DF.fib[static_cast<size_t>(b)],
                                                 DG.fib[static_cast<size_t>(b)], &w)) {
      if (why) *why = "component " + std::to_string(b) + ": " + w;
      return false;
    }
  }
  for (int f = 0; f < DF.base.nMor(); ++f) {
    int b = DF.base.src[static_cast<size_t>(f)], c = DF.base.dst[static_cast<size_t>(f)];
    std::string w;
    if (!t.sq[static_cast<size_t>(f)].validate(
            DF.fib[static_cast<size_t>(b)], DG.fib[static_cast<size_t>(c)],
            compose_functor(DG.act[static_cast<size_t>(f)], t.comp[static_cast<size_t>(b)]),
            compose_functor(t.comp[static_cast<size_t>(c)], DF.act[static_cast<size_t>(f)]), &w)) {
      if (why) *why = "square " + std::to_string(f) + ": " + w;
      return false;
    }
  }
  // pasting compatibility: identities and composites
  for (int b = 0; b < DF.base.nObj; ++b) {
    const FinNat& n = t.sq[static_cast<size_t>(DF.base.idOf[static_cast<size_t>(b)])];
    for (int x = 0; x < DF.fib[static_cast<size_t>(b)].nObj; ++x)
      if (n.comp[static_cast<size_t>(x)] !=
          DG.fib[static_cast<size_t>(b)].idOf[static_cast<size_t>(
              t.comp[static_cast<size_t>(b)].obj[static_cast<size_t>(x)])]) {
        if (why) *why = "identity square at " + std::to_string(b);
        return false;
      }
  }
  for (int f = 0; f < DF.base.nMor(); ++f)
    for (int g = 0; g < DF.base.nMor(); ++g) {
      if (DF.base.dst[static_cast<size_t>(f)] != DF.base.src[static_cast<size_t>(g)]) continue;
      int gf = DF.base.compose(g, f);
      int b = DF.base.src[static_cast<size_t>(f)];
      int d = DF.base.dst[static_cast<size_t>(g)];
      for (int x = 0; x < DF.fib[static_cast<size_t>(b)].nObj; ++x) {
        int lhs = t.sq[static_cast<size_t>(gf)].comp[static_cast<size_t>(x)];
        int rhs = DG.fib[static_cast<size_t>(d)].compose(
            t.sq[static_cast<size_t>(g)].comp[static_cast<size_t>(
                DF.act[static_cast<size_t>(f)].obj[static_cast<size_t>(x)])],
            DG.act[static_cast<size_t>(g)].mor[static_cast<size_t>(
                t.sq[static_cast<size_t>(f)].comp[static_cast<size_t>(x)])]);
        if (lhs != rhs) {
          if (why) *why = "pasting at morphisms " + std::to_string(f) + "," + std::to_string(g);
          return false;
        }
      }
    }
  return true;
}

inline bool map_straightening_strong(const CatDiagram& DF, const CatDiagram& DG,
                                     const MapStraightened& t) {
  for (int f = 0; f < DF.base.nMor(); ++f) {
    int b = DF.base.src[static_cast<size_t>(f)], c = DF.base.dst[static_cast<size_t>(f)];
    (void)b;
    const FinNat& n = t.sq[static_cast<size_t>(f)];
    for (int v : n.comp)
      if (!DG.fib[static_cast<size_t>(c)].is_identity(v)) return false;
  }
  return true;
}

// the packaged form: diagrams as projections to a universe of categories,
// transformation data as a lax transformation between them
struct StraightenedLax {
  CatUniverse uni;
  TwoCat baseTwo;
  TwoFunctor Fs, Gs;
  LaxTransform t;
};

inline StraightenedLax straightened_lax(const FinCat& B1, const CatDiagram& DF,
                                        const CatDiagram& DG, const MapStraightened& ms) {
  StraightenedLax R;
  std::vector<FinCat> cats;
  for (const FinCat& c : DF.fib) cats.push_back(c);
  for (const FinCat& c : DG.fib) cats.push_back(c);
  R.uni = two_cat_of_universe(cats);
  TwoCatFrom1 b2 = two_cat_from_fincat(B1);
  R.baseTwo = b2.cat;
  int nb = B1.nObj;
  auto mk = [&](const CatDiagram& D, int off) {
    TwoFunctor F;
    F.obj.resize(static_cast<size_t>(nb));
    F.homf.assign(static_cast<size_t>(nb), std::vector<FinFunctor>(static_cast<size_t>(nb)));
    for (int b = 0; b < nb; ++b) F.obj[static_cast<size_t>(b)] = off + b;
    for (int b = 0; b < nb; ++b)
      for (int c = 0; c < nb; ++c) {
        FinFunctor& h = F.homf[static_cast<size_t>(b)][static_cast<size_t>(c)];
        const FunCat& fc = R.uni.fc[static_cast<size_t>(off + b)][static_cast<size_t>(off + c)];
        for (int f : b2.gmor[static_cast<size_t>(b)][static_cast<size_t>(c)]) {
          int o = fc.obj_index(D.act[static_cast<size_t>(f)]);
          assert(o >= 0);
          h.obj.push_back(o);
        }
        for (int o : h.obj) h.mor.push_back(fc.cat.idOf[static_cast<size_t>(o)]);
      }
    return F;
  };
  R.Fs = mk(DF, 0);
  R.Gs = mk(DG, nb);
  R.t.dir = LaxDir::Lax;
  R.t.phi.resize(static_cast<size_t>(nb));
  R.t.sq.assign(static_cast<size_t>(nb),
                std::vector<std::vector<int>>(static_cast<size_t>(nb)));
  for (int b = 0; b < nb; ++b) {
    int o = R.uni.fc[static_cast<size_t>(b)][static_cast<size_t>(nb + b)].obj_index(
        ms.comp[static_cast<size_t>(b)]);
    assert(o >= 0);
    R.t.phi[static_cast<size_t>(b)] = o;
  }
  for (int b = 0; b < nb; ++b)
    for (int c = 0; c < nb; ++c) {
      const FunCat& fc = R.uni.fc[static_cast<size_t>(b)][static_cast<size_t>(nb + c)];
      for (int f : b2.gmor[static_cast<size_t>(b)][static_cast<size_t>(c)]) {
        int sF = fc.obj_index(
            compose_functor(DG.act[static_cast<size_t>(f)], ms.comp[static_cast<size_t>(b)]));
        int tF = fc.obj_index(
            compose_functor(ms.comp[static_cast<size_t>(c)], DF.act[static_cast<size_t>(f)]));
        int m = fc.mor_index(sF, tF, ms.sq[static_cast<size_t>(f)]);
        assert(m >= 0);
        R.t.sq[static_cast<size_t>(b)][static_cast<size_t>(c)].push_back(m);
      }
    }
  return R;
}

// ---------------------------------------------------------------------------
// two-sided totals
//
// For a category-valued diagram over A x op(B): objects (a, b, x); morphisms
// (u: a -> a', v: b -> b', w: u x -> v* y); canonical first-factor edges are
// cocartesian, fibrewise second-factor edges cartesian.

struct TwoSided {
  FinCat total1;
  std::vector<std::tuple<int, int, int>> obj;  // (a, b, fibre object)
  std::vector<std::array<int, 4>> mor;         // (src, u, v, w)
  std::map<std::tuple<int, int, int>, int> objIdx;
  std::map<std::array<int, 4>, int> morIdx;
  ProductCat shape;  // product_cat(A, op_cat(B)), the diagram base
  TwoCat A2, B2;
  TwoProd prod;
  TwoCatFrom1 tot2;
  FibOver fib;
};

inline TwoSided twosided(const FinCat& A, const FinCat& B, const CatDiagram& D) {
  TwoSided R;
  FinCat Bop = op_cat(B);
  R.shape = product_cat(A, Bop);
  if (!(D.base == R.shape.cat))
    throw Error(ErrCode::InvalidInput, "diagram base is not the expected product");
  for (int a = 0; a < A.nObj; ++a)
    for (int b = 0; b < B.nObj; ++b) {
      int p = R.shape.obj(a, b);
      for (int x = 0; x < D.fib[static_cast<size_t>(p)].nObj; ++x) {
        R.objIdx[{a, b, x}] = R.total1.add_object();
        R.obj.push_back({a, b, x});
      }
    }
  for (size_t s = 0; s < R.obj.size(); ++s)
    for (size_t t = 0; t < R.obj.size(); ++t) {
      auto [a, b, x] = R.obj[s];
      auto [a2, b2, y] = R.obj[t];
      for (int u : A.hom(a, a2))
        for (int v : B.hom(b, b2)) {
          // push x forward along u, pull y back along v; both land over (a2, b)
          const FinFunctor& push = D.act[static_cast<size_t>(
              R.shape.mor(u, Bop.idOf[static_cast<size_t>(b)]))];
          const FinFunctor& pull = D.act[static_cast<size_t>(
              R.shape.mor(A.idOf[static_cast<size_t>(a2)], v))];
          int px = push.obj[static_cast<size_t>(x)];
          int vy = pull.obj[static_cast<size_t>(y)];
          for (int w : D.fib[static_cast<size_t>(R.shape.obj(a2, b))].hom(px, vy)) {
            int m = R.total1.add_morphism(static_cast<int>(s), static_cast<int>(t));
            R.mor.push_back({static_cast<int>(s), u, v, w});
            R.morIdx[{static_cast<int>(s), u, v, w}] = m;
          }
        }
    }
  for (size_t s = 0; s < R.obj.size(); ++s) {
    auto [a, b, x] = R.obj[s];
    R.total1.set_identity(static_cast<int>(s),
                          R.morIdx.at({static_cast<int>(s), A.idOf[static_cast<size_t>(a)],
                                       B.idOf[static_cast<size_t>(b)],
                                       D.fib[static_cast<size_t>(R.shape.obj(a, b))]
                                           .idOf[static_cast<size_t>(x)]}));
  }
  for (int m1 = 0; m1 < R.total1.nMor(); ++m1)
    for (int m2 = 0; m2 < R.total1.nMor(); ++m2) {
      if (R.total1.dst[static_cast<size_t>(m1)] != R.total1.src[static_cast<size_t>(m2)]) continue;
      auto [s1, u1, v1, w1] = R.mor[static_cast<size_t>(m1)];
      auto [s2, u2, v2, w2] = R.mor[static_cast<size_t>(m2)];
      (void)s2;
      auto [a0, b0, x0] = R.obj[static_cast<size_t>(s1)];
      (void)x0;
      int a1 = A.dst[static_cast<size_t>(u1)];
      int a2t = A.dst[static_cast<size_t>(u2)];
      int uu = A.compose(u2, u1), vv = B.compose(v2, v1);
      // w: (u2 u1) x -> (v2 v1)* z over (a2t, b0)
      const FinFunctor& pushu2 = D.act[static_cast<size_t>(
          R.shape.mor(u2, Bop.idOf[static_cast<size_t>(b0)]))];
      const FinFunctor& pullv1 = D.act[static_cast<size_t>(
          R.shape.mor(A.idOf[static_cast<size_t>(a2t)], v1))];
      (void)a1;
      int ww = D.fib[static_cast<size_t>(R.shape.obj(a2t, b0))].compose(
          pullv1.mor[static_cast<size_t>(w2)], pushu2.mor[static_cast<size_t>(w1)]);
      R.total1.set_comp(m2, m1, R.morIdx.at({s1, uu, vv, ww}));
    }
  R.A2 = one_as_two(A);
  R.B2 = one_as_two(B);
  R.prod = product_two_cat(R.A2, R.B2);
  R.tot2 = two_cat_from_fincat(R.total1);
  TwoCatFrom1 ga = two_cat_from_fincat(A), gb = two_cat_from_fincat(B);
  TwoFunctor p;
  size_t n = R.obj.size();
  p.obj.resize(n);
  p.homf.assign(n, std::vector<FinFunctor>(n));
  for (size_t s = 0; s < n; ++s) {
    auto [a, b, x] = R.obj[s];
    (void)x;
    p.obj[s] = R.prod.objIdx[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }
  for (size_t s = 0; s < n; ++s)
    for (size_t t = 0; t < n; ++t) {
      auto [a, b, x] = R.obj[s];
      auto [a2, b2, y] = R.obj[t];
      (void)x;
      (void)y;
      FinFunctor& h = p.homf[s][t];
      const ProductCat& pc = R.prod.homP[static_cast<size_t>(p.obj[s])]
                                        [static_cast<size_t>(p.obj[t])];
      for (int g : R.tot2.gmor[s][t]) {
        auto [s0, u, v, w] = R.mor[static_cast<size_t>(g)];
        (void)s0;
        (void)w;
        int ia = index_of(ga.gmor[static_cast<size_t>(a)][static_cast<size_t>(a2)], u);
        int ib = index_of(gb.gmor[static_cast<size_t>(b)][static_cast<size_t>(b2)], v);
        h.obj.push_back(pc.obj(ia, ib));
      }
      h.mor = h.obj;  // discrete homs
    }
  R.fib = make_fib(R.tot2.cat, R.prod.cat, p);
  return R;
}

// ---------------------------------------------------------------------------
// pushforward of a cartesian projection, fibrewise functor categories

struct Pushforward {
  CatDiagram D;             // b -> Fun(fibre_b, C), covariant over the base
  std::vector<FunCat> fc;   // the functor categories, for decoding
  Straightened S;           // the cartesian straightening of the input
  Groth G;                  // the rebuilt cocartesian total
};

inline Pushforward pushforward(const FibOver& P, const FinCat& B1, const FinCat& C) {
  Pushforward R;
  R.S = straighten(P, B1, 1);
  R.D.base = B1;
  for (int b = 0; b < B1.nObj; ++b) {
    R.fc.push_back(fun_cat(R.S.D.fib[static_cast<size_t>(b)], C));
    R.D.fib.push_back(R.fc.back().cat);
  }
  for (int f = 0; f < B1.nMor(); ++f) {
    int b = B1.src[static_cast<size_t>(f)], c = B1.dst[static_cast<size_t>(f)];
    const FinFunctor& fstar = R.S.D.act[static_cast<size_t>(f)];  // fibre_c -> fibre_b
    FinFunctor act;
    const FunCat& src = R.fc[static_cast<size_t>(b)];
    const FunCat& dst = R.fc[static_cast<size_t>(c)];
    for (const FinFunctor& Gb : src.objs) {
      int o = dst.obj_index(compose_functor(Gb, fstar));
      assert(o >= 0);
      act.obj.push_back(o);
    }
    for (const auto& [sF, tF, nat] : src.mors) {
      FinNat wn;
      for (int y = 0; y < R.S.D.fib[static_cast<size_t>(c)].nObj; ++y)
        wn.comp.push_back(nat.comp[static_cast<size_t>(fstar.obj[static_cast<size_t>(y)])]);
      int m = dst.mor_index(act.obj[static_cast<size_t>(sF)], act.obj[static_cast<size_t>(tF)],
                            wn);
      assert(m >= 0);
      act.mor.push_back(m);
    }
    R.D.act.push_back(act);
  }
  R.G = grothendieck(R.D, 0);
  return R;
}

// ---------------------------------------------------------------------------
// the adjoint criterion over the interval: a cocartesian projection also has
// cartesian lifts exactly when its transport admits a right adjoint

struct FibAdjReport {
  bool cocart_ok = false;
  bool one_fibration = false;
  bool adjoint_found = false;
  bool agree = false;
  FibReport fibSide;
  AdjointResult adjSide;
};

inline FibAdjReport fibration_adjoint_test(const FibOver& P) {
  FinCat B1 = chain_cat(1);
  if (!(P.base == one_as_two(B1)))
    throw Error(ErrCode::InvalidInput, "base must be the interval");
  FibAdjReport R;
  FibReport r0 = detect_fibration(P, 0, 1);
  R.cocart_ok = r0.ok;
  if (!r0.ok) {
    R.fibSide = r0;
    return R;
  }
  Straightened S = straighten(P, B1, 0);
  int arrow = -1;
  for (int m = 0; m < B1.nMor(); ++m)
    if (B1.src[static_cast<size_t>(m)] == 0 && B1.dst[static_cast<size_t>(m)] == 1) arrow = m;
  assert(arrow >= 0);
  R.fibSide = detect_fibration(P, 1, 1);
  R.one_fibration = R.fibSide.ok;
  R.adjSide = find_right_adjoint(S.D.fib[0], S.D.fib[1], S.D.act[static_cast<size_t>(arrow)]);
  R.adjoint_found = R.adjSide.status == AdjointResult::Status::Found;
  R.agree = R.one_fibration == R.adjoint_found;
  return R;
}

}  // namespace laxkit
