// adjmate.hpp: the mate calculus on squares of functors, adjoints of
// transformations between diagrams of categories, relative adjoints over a
// base, and the adjoint-valued dual of a diagram of left adjoints.
//
// Adjoint data is always carried explicitly (unit and counit); where two
// adjoints to the same functor meet, the canonical comparison isomorphism is
// constructed rather than the adjoints being identified.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fib.hpp"

namespace laxkit {

// ---------------------------------------------------------------------------
// squares of functors with a 2-cell across the diagonal
//
//     ax --Rx--> bx
//     |fa        |fb
//     v          v
//     ay --Ry--> by
//
// lax:   alpha : fb.Rx => Ry.fa   (components indexed by ax, valued in by)
// oplax: alpha : Ry.fa => fb.Rx

struct LaxSquare {
  FinCat ax, ay, bx, by;
  FinFunctor fa, fb, Rx, Ry;
  LaxDir dir = LaxDir::Lax;
  FinNat alpha;

  bool validate(std::string* why = nullptr) const {
    auto fail = [&](const std::string& m) {
      if (why) *why = m;
      return false;
    };
    std::string w;
    if (!ax.validate(&w)) return fail("ax: " + w);
    if (!ay.validate(&w)) return fail("ay: " + w);
    if (!bx.validate(&w)) return fail("bx: " + w);
    if (!by.validate(&w)) return fail("by: " + w);
    if (!fa.validate(ax, ay, &w)) return fail("fa: " + w);
    if (!fb.validate(bx, by, &w)) return fail("fb: " + w);
    if (!Rx.validate(ax, bx, &w)) return fail("Rx: " + w);
    if (!Ry.validate(ay, by, &w)) return fail("Ry: " + w);
    FinFunctor down = compose_functor(fb, Rx);   // ax -> by via bx
    FinFunctor across = compose_functor(Ry, fa); // ax -> by via ay
    bool ok = dir == LaxDir::Lax ? alpha.validate(ax, by, down, across, &w)
                                 : alpha.validate(ax, by, across, down, &w);
    if (!ok) return fail("alpha: " + w);
    return true;
  }

  bool operator==(const LaxSquare&) const = default;
};

// strictly commuting square packaged with identity components
inline LaxSquare commuting_square(const FinCat& ax, const FinCat& ay, const FinCat& bx,
                                  const FinCat& by, const FinFunctor& fa, const FinFunctor& fb,
                                  const FinFunctor& Rx, const FinFunctor& Ry,
                                  LaxDir dir = LaxDir::Lax) {
  if (!(compose_functor(fb, Rx) == compose_functor(Ry, fa)))
    throw Error(ErrCode::InvalidInput, "square does not commute");
  LaxSquare S;
  S.ax = ax;
  S.ay = ay;
  S.bx = bx;
  S.by = by;
  S.fa = fa;
  S.fb = fb;
  S.Rx = Rx;
  S.Ry = Ry;
  S.dir = dir;
  for (int x = 0; x < ax.nObj; ++x)
    S.alpha.comp.push_back(
        by.idOf[static_cast<size_t>(fb.obj[static_cast<size_t>(Rx.obj[static_cast<size_t>(x)])])]);
  return S;
}

inline bool square_invertible(const LaxSquare& S) {
  for (int c : S.alpha.comp)
    if (!S.by.is_iso(c)) return false;
  return true;
}

inline Adjunction identity_adjunction(const FinCat& C) {
  Adjunction A;
  A.L = identity_functor(C);
  A.R = identity_functor(C);
  A.unit.comp = C.idOf;
  A.counit.comp = C.idOf;
  return A;
}

// ---------------------------------------------------------------------------
// the mate of a square across a pair of adjunctions
//
// For a lax square whose horizontal functors Rx, Ry carry left adjoints Lx,
// Ly, the mate is the oplax square on the left adjoints with 2-cell
//
//   Ly.fb  =>  Ly.fb.Rx.Lx  =>  Ly.Ry.fa.Lx  =>  fa.Lx
//
// (whisker the unit of x, the given cell, then the counit of y).  For an
// oplax square whose horizontals carry right adjoints the dual composite
// produces a lax square.  Applying the two procedures in succession with the
// same adjunction data returns the original square on the nose.

inline LaxSquare mate(const LaxSquare& sq, const Adjunction& adjx, const Adjunction& adjy) {
  LaxSquare M;
  M.ax = sq.bx;
  M.ay = sq.by;
  M.bx = sq.ax;
  M.by = sq.ay;
  M.fa = sq.fb;
  M.fb = sq.fa;
  if (sq.dir == LaxDir::Lax) {
    // horizontals are the right adjoints; pass to their left adjoints
    if (!(adjx.R == sq.Rx) || !(adjy.R == sq.Ry))
      throw Error(ErrCode::InvalidInput, "adjunction data does not match the square horizontals");
    std::string w;
    if (!adjx.L.validate(sq.bx, sq.ax, &w))
      throw Error(ErrCode::InvalidInput, "left adjoint at the source corner: " + w);
    if (!adjy.L.validate(sq.by, sq.ay, &w))
      throw Error(ErrCode::InvalidInput, "left adjoint at the target corner: " + w);
    if (!adjx.triangles_hold(sq.bx, sq.ax) || !adjy.triangles_hold(sq.by, sq.ay))
      throw Error(ErrCode::InvalidInput, "triangle identities fail for the supplied adjunctions");
    M.Rx = adjx.L;
    M.Ry = adjy.L;
    M.dir = LaxDir::Oplax;
    for (int u = 0; u < sq.bx.nObj; ++u) {
      int lu = adjx.L.obj[static_cast<size_t>(u)];
      int m1 = adjy.L.mor[static_cast<size_t>(
          sq.fb.mor[static_cast<size_t>(adjx.unit.comp[static_cast<size_t>(u)])])];
      int m2 = adjy.L.mor[static_cast<size_t>(sq.alpha.comp[static_cast<size_t>(lu)])];
      int m3 = adjy.counit.comp[static_cast<size_t>(sq.fa.obj[static_cast<size_t>(lu)])];
      M.alpha.comp.push_back(sq.ay.compose(m3, sq.ay.compose(m2, m1)));
    }
  } else {
    // horizontals are the left adjoints; pass to their right adjoints
    if (!(adjx.L == sq.Rx) || !(adjy.L == sq.Ry))
      throw Error(ErrCode::InvalidInput, "adjunction data does not match the square horizontals");
    std::string w;
    if (!adjx.R.validate(sq.bx, sq.ax, &w))
      throw Error(ErrCode::InvalidInput, "right adjoint at the source corner: " + w);
    if (!adjy.R.validate(sq.by, sq.ay, &w))
      throw Error(ErrCode::InvalidInput, "right adjoint at the target corner: " + w);
    if (!adjx.triangles_hold(sq.ax, sq.bx) || !adjy.triangles_hold(sq.ay, sq.by))
      throw Error(ErrCode::InvalidInput, "triangle identities fail for the supplied adjunctions");
    M.Rx = adjx.R;
    M.Ry = adjy.R;
    M.dir = LaxDir::Lax;
    for (int u = 0; u < sq.bx.nObj; ++u) {
      int ru = adjx.R.obj[static_cast<size_t>(u)];
      int m1 = adjy.unit.comp[static_cast<size_t>(sq.fa.obj[static_cast<size_t>(ru)])];
      int m2 = adjy.R.mor[static_cast<size_t>(sq.alpha.comp[static_cast<size_t>(ru)])];
      int m3 = adjy.R.mor[static_cast<size_t>(
          sq.fb.mor[static_cast<size_t>(adjx.counit.comp[static_cast<size_t>(u)])])];
      M.alpha.comp.push_back(sq.ay.compose(m3, sq.ay.compose(m2, m1)));
    }
  }
  return M;
}

// ---------------------------------------------------------------------------
// transformation data between diagrams of categories over a common base
//
// MapStraightened (see fib.hpp) carries the lax orientation
//   sq[f] : G(f).comp_b => comp_c.F(f)        for f : b -> c.
// OplaxMap carries the opposite one.

struct OplaxMap {
  std::vector<FinFunctor> comp;  // per base object
  std::vector<FinNat> sq;        // per base morphism f: comp_c.F(f) => G(f).comp_b
  bool operator==(const OplaxMap&) const = default;
};

inline bool oplax_map_valid(const CatDiagram& DF, const CatDiagram& DG, const OplaxMap& t,
                            std::string* why = nullptr) {
  if (static_cast<int>(t.comp.size()) != DF.base.nObj ||
      static_cast<int>(t.sq.size()) != DF.base.nMor()) {
    if (why) *why = "component count";
    return false;
  }
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
            compose_functor(t.comp[static_cast<size_t>(c)], DF.act[static_cast<size_t>(f)]),
            compose_functor(DG.act[static_cast<size_t>(f)], t.comp[static_cast<size_t>(b)]), &w)) {
      if (why) *why = "square " + std::to_string(f) + ": " + w;
      return false;
    }
  }
  return true;
}

// standalone square data forms a genuine transformation only when the squares
// paste along composition in the base and are identities on identities
inline bool lax_map_coherent(const CatDiagram& DF, const CatDiagram& DG, const MapStraightened& t,
                             std::string* why = nullptr) {
  for (int b = 0; b < DF.base.nObj; ++b) {
    int idb = DF.base.idOf[static_cast<size_t>(b)];
    const FinCat& Gb = DG.fib[static_cast<size_t>(b)];
    for (int x = 0; x < DF.fib[static_cast<size_t>(b)].nObj; ++x)
      if (t.sq[static_cast<size_t>(idb)].comp[static_cast<size_t>(x)] !=
          Gb.idOf[static_cast<size_t>(
              t.comp[static_cast<size_t>(b)].obj[static_cast<size_t>(x)])]) {
        if (why) *why = "identity square at object " + std::to_string(b);
        return false;
      }
  }
  for (int f = 0; f < DF.base.nMor(); ++f)
    for (int g = 0; g < DF.base.nMor(); ++g) {
      if (DF.base.dst[static_cast<size_t>(f)] != DF.base.src[static_cast<size_t>(g)]) continue;
      int gf = DF.base.compose(g, f);
      int b = DF.base.src[static_cast<size_t>(f)];
      int d = DF.base.dst[static_cast<size_t>(g)];
      const FinCat& Gd = DG.fib[static_cast<size_t>(d)];
      for (int x = 0; x < DF.fib[static_cast<size_t>(b)].nObj; ++x) {
        int paste = Gd.compose(
            t.sq[static_cast<size_t>(g)]
                .comp[static_cast<size_t>(DF.act[static_cast<size_t>(f)].obj[static_cast<size_t>(x)])],
            DG.act[static_cast<size_t>(g)]
                .mor[static_cast<size_t>(t.sq[static_cast<size_t>(f)].comp[static_cast<size_t>(x)])]);
        if (t.sq[static_cast<size_t>(gf)].comp[static_cast<size_t>(x)] != paste) {
          if (why)
            *why = "pasting at morphisms " + std::to_string(g) + "." + std::to_string(f);
          return false;
        }
      }
    }
  return true;
}

inline bool oplax_map_coherent(const CatDiagram& DF, const CatDiagram& DG, const OplaxMap& t,
                               std::string* why = nullptr) {
  for (int b = 0; b < DF.base.nObj; ++b) {
    int idb = DF.base.idOf[static_cast<size_t>(b)];
    const FinCat& Gb = DG.fib[static_cast<size_t>(b)];
    for (int x = 0; x < DF.fib[static_cast<size_t>(b)].nObj; ++x)
      if (t.sq[static_cast<size_t>(idb)].comp[static_cast<size_t>(x)] !=
          Gb.idOf[static_cast<size_t>(
              t.comp[static_cast<size_t>(b)].obj[static_cast<size_t>(x)])]) {
        if (why) *why = "identity square at object " + std::to_string(b);
        return false;
      }
  }
  for (int f = 0; f < DF.base.nMor(); ++f)
    for (int g = 0; g < DF.base.nMor(); ++g) {
      if (DF.base.dst[static_cast<size_t>(f)] != DF.base.src[static_cast<size_t>(g)]) continue;
      int gf = DF.base.compose(g, f);
      int b = DF.base.src[static_cast<size_t>(f)];
      int d = DF.base.dst[static_cast<size_t>(g)];
      const FinCat& Gd = DG.fib[static_cast<size_t>(d)];
      for (int x = 0; x < DF.fib[static_cast<size_t>(b)].nObj; ++x) {
        int paste = Gd.compose(
            DG.act[static_cast<size_t>(g)]
                .mor[static_cast<size_t>(t.sq[static_cast<size_t>(f)].comp[static_cast<size_t>(x)])],
            t.sq[static_cast<size_t>(g)]
                .comp[static_cast<size_t>(DF.act[static_cast<size_t>(f)].obj[static_cast<size_t>(x)])]);
        if (t.sq[static_cast<size_t>(gf)].comp[static_cast<size_t>(x)] != paste) {
          if (why)
            *why = "pasting at morphisms " + std::to_string(g) + "." + std::to_string(f);
          return false;
        }
      }
    }
  return true;
}

inline MapStraightened identity_map(const CatDiagram& D) {
  MapStraightened t;
  for (int b = 0; b < D.base.nObj; ++b)
    t.comp.push_back(identity_functor(D.fib[static_cast<size_t>(b)]));
  for (int f = 0; f < D.base.nMor(); ++f) {
    int b = D.base.src[static_cast<size_t>(f)], c = D.base.dst[static_cast<size_t>(f)];
    FinNat n;
    for (int x = 0; x < D.fib[static_cast<size_t>(b)].nObj; ++x)
      n.comp.push_back(D.fib[static_cast<size_t>(c)].idOf[static_cast<size_t>(
          D.act[static_cast<size_t>(f)].obj[static_cast<size_t>(x)])]);
    t.sq.push_back(n);
  }
  return t;
}

// vertical composite of transformation data, t after s
inline MapStraightened compose_map(const CatDiagram& A, const CatDiagram& B, const CatDiagram& C,
                                   const MapStraightened& s, const MapStraightened& t) {
  (void)B;
  MapStraightened r;
  for (int b = 0; b < A.base.nObj; ++b)
    r.comp.push_back(
        compose_functor(t.comp[static_cast<size_t>(b)], s.comp[static_cast<size_t>(b)]));
  for (int f = 0; f < A.base.nMor(); ++f) {
    int b = A.base.src[static_cast<size_t>(f)], c = A.base.dst[static_cast<size_t>(f)];
    const FinCat& Cc = C.fib[static_cast<size_t>(c)];
    FinNat n;
    for (int x = 0; x < A.fib[static_cast<size_t>(b)].nObj; ++x) {
      int first = t.sq[static_cast<size_t>(f)].comp[static_cast<size_t>(
          s.comp[static_cast<size_t>(b)].obj[static_cast<size_t>(x)])];
      int second = t.comp[static_cast<size_t>(c)]
                       .mor[static_cast<size_t>(s.sq[static_cast<size_t>(f)].comp[static_cast<size_t>(x)])];
      n.comp.push_back(Cc.compose(second, first));
    }
    r.sq.push_back(n);
  }
  return r;
}

// a family mu[b] : s_b => s2_b is a modification when it intertwines the
// squares of s and s2 at every base morphism
inline bool lax_modification_ok(const CatDiagram& DF, const CatDiagram& DG,
                                const MapStraightened& s, const MapStraightened& s2,
                                const std::vector<FinNat>& mu, std::string* why = nullptr) {
  if (static_cast<int>(mu.size()) != DF.base.nObj) {
    if (why) *why = "component count";
    return false;
  }
  for (int b = 0; b < DF.base.nObj; ++b) {
    std::string w;
    if (!mu[static_cast<size_t>(b)].validate(DF.fib[static_cast<size_t>(b)],
                                             DG.fib[static_cast<size_t>(b)],
                                             s.comp[static_cast<size_t>(b)],
                                             s2.comp[static_cast<size_t>(b)], &w)) {
      if (why) *why = "component " + std::to_string(b) + ": " + w;
      return false;
    }
  }
  for (int f = 0; f < DF.base.nMor(); ++f) {
    int b = DF.base.src[static_cast<size_t>(f)], c = DF.base.dst[static_cast<size_t>(f)];
    const FinCat& Gc = DG.fib[static_cast<size_t>(c)];
    for (int x = 0; x < DF.fib[static_cast<size_t>(b)].nObj; ++x) {
      int lhs = Gc.compose(
          mu[static_cast<size_t>(c)]
              .comp[static_cast<size_t>(DF.act[static_cast<size_t>(f)].obj[static_cast<size_t>(x)])],
          s.sq[static_cast<size_t>(f)].comp[static_cast<size_t>(x)]);
      int rhs = Gc.compose(
          s2.sq[static_cast<size_t>(f)].comp[static_cast<size_t>(x)],
          DG.act[static_cast<size_t>(f)]
              .mor[static_cast<size_t>(mu[static_cast<size_t>(b)].comp[static_cast<size_t>(x)])]);
      if (lhs != rhs) {
        if (why) *why = "square condition at morphism " + std::to_string(f);
        return false;
      }
    }
  }
  return true;
}

inline bool oplax_modification_ok(const CatDiagram& DF, const CatDiagram& DG, const OplaxMap& s,
                                  const OplaxMap& s2, const std::vector<FinNat>& mu,
                                  std::string* why = nullptr) {
  if (static_cast<int>(mu.size()) != DF.base.nObj) {
    if (why) *why = "component count";
    return false;
  }
  for (int b = 0; b < DF.base.nObj; ++b) {
    std::string w;
    if (!mu[static_cast<size_t>(b)].validate(DF.fib[static_cast<size_t>(b)],
                                             DG.fib[static_cast<size_t>(b)],
                                             s.comp[static_cast<size_t>(b)],
                                             s2.comp[static_cast<size_t>(b)], &w)) {
      if (why) *why = "component " + std::to_string(b) + ": " + w;
      return false;
    }
  }
  for (int f = 0; f < DF.base.nMor(); ++f) {
    int b = DF.base.src[static_cast<size_t>(f)], c = DF.base.dst[static_cast<size_t>(f)];
    const FinCat& Gc = DG.fib[static_cast<size_t>(c)];
    for (int x = 0; x < DF.fib[static_cast<size_t>(b)].nObj; ++x) {
      int lhs = Gc.compose(
          DG.act[static_cast<size_t>(f)]
              .mor[static_cast<size_t>(mu[static_cast<size_t>(b)].comp[static_cast<size_t>(x)])],
          s.sq[static_cast<size_t>(f)].comp[static_cast<size_t>(x)]);
      int rhs = Gc.compose(
          s2.sq[static_cast<size_t>(f)].comp[static_cast<size_t>(x)],
          mu[static_cast<size_t>(c)]
              .comp[static_cast<size_t>(DF.act[static_cast<size_t>(f)].obj[static_cast<size_t>(x)])]);
      if (lhs != rhs) {
        if (why) *why = "square condition at morphism " + std::to_string(f);
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// adjoints of a transformation, decided componentwise plus a mate condition
//
// A lax transformation t : F => G between diagrams of categories has
//   - a left adjoint among lax transformations exactly when every component
//     has a left adjoint and every mate square is invertible;
//   - a right adjoint exactly when every component has a right adjoint and
//     every square of t itself is invertible.
// The adjoint is assembled from the componentwise adjoints with squares the
// (inverted) mates, and its unit and counit are modifications built from the
// componentwise units and counits.

enum class AdjSide { Left, Right };

struct LaxAdjointReport {
  bool componentwise = false;
  bool squares_ok = false;
  bool verdict = false;
  std::vector<int> missing;      // base objects whose component lacks the adjoint
  std::vector<int> bad_squares;  // base morphisms whose decisive square is not invertible
  std::vector<Adjunction> comp;  // componentwise adjunctions, in base-object order
  OplaxMap mates;                // side Left: components and mate squares, even when not invertible
  MapStraightened adjoint;       // the adjoint transformation, when the verdict holds
  std::vector<FinNat> unit, counit;  // modification data of the adjunction
  bool unit_ok = false, counit_ok = false, triangles_ok = false;
};

inline LaxAdjointReport lax_adjoint_check(const CatDiagram& DF, const CatDiagram& DG,
                                          const MapStraightened& t, AdjSide side) {
  std::string w;
  if (!DF.validate(&w)) throw Error(ErrCode::InvalidInput, "source diagram: " + w);
  if (!DG.validate(&w)) throw Error(ErrCode::InvalidInput, "target diagram: " + w);
  if (!(DF.base == DG.base)) throw Error(ErrCode::InvalidInput, "diagrams share no base");
  if (!map_straightening_valid(DF, DG, t, &w))
    throw Error(ErrCode::InvalidInput, "transformation: " + w);
  if (!lax_map_coherent(DF, DG, t, &w))
    throw Error(ErrCode::InvalidInput, "transformation: " + w);

  LaxAdjointReport R;
  int nb = DF.base.nObj;
  R.comp.assign(static_cast<size_t>(nb), Adjunction{});
  for (int b = 0; b < nb; ++b) {
    AdjointResult ar =
        side == AdjSide::Left
            ? find_left_adjoint(DF.fib[static_cast<size_t>(b)], DG.fib[static_cast<size_t>(b)],
                                t.comp[static_cast<size_t>(b)])
            : find_right_adjoint(DF.fib[static_cast<size_t>(b)], DG.fib[static_cast<size_t>(b)],
                                 t.comp[static_cast<size_t>(b)]);
    if (ar.status != AdjointResult::Status::Found) {
      R.missing.push_back(b);
      continue;
    }
    R.comp[static_cast<size_t>(b)] = *ar.adj;
  }
  R.componentwise = R.missing.empty();
  if (!R.componentwise) return R;

  R.adjoint.comp.resize(static_cast<size_t>(nb));
  R.mates.comp.resize(static_cast<size_t>(nb));
  for (int b = 0; b < nb; ++b) {
    R.adjoint.comp[static_cast<size_t>(b)] =
        side == AdjSide::Left ? R.comp[static_cast<size_t>(b)].L : R.comp[static_cast<size_t>(b)].R;
    R.mates.comp[static_cast<size_t>(b)] = R.comp[static_cast<size_t>(b)].L;
  }
  R.adjoint.sq.resize(static_cast<size_t>(DF.base.nMor()));
  R.mates.sq.resize(static_cast<size_t>(DF.base.nMor()));
  R.squares_ok = true;
  for (int f = 0; f < DF.base.nMor(); ++f) {
    int b = DF.base.src[static_cast<size_t>(f)], c = DF.base.dst[static_cast<size_t>(f)];
    LaxSquare sq;
    sq.ax = DF.fib[static_cast<size_t>(b)];
    sq.ay = DF.fib[static_cast<size_t>(c)];
    sq.bx = DG.fib[static_cast<size_t>(b)];
    sq.by = DG.fib[static_cast<size_t>(c)];
    sq.fa = DF.act[static_cast<size_t>(f)];
    sq.fb = DG.act[static_cast<size_t>(f)];
    sq.Rx = t.comp[static_cast<size_t>(b)];
    sq.Ry = t.comp[static_cast<size_t>(c)];
    if (side == AdjSide::Left) {
      sq.dir = LaxDir::Lax;
      sq.alpha = t.sq[static_cast<size_t>(f)];
      LaxSquare m = mate(sq, R.comp[static_cast<size_t>(b)], R.comp[static_cast<size_t>(c)]);
      R.mates.sq[static_cast<size_t>(f)] = m.alpha;
      FinNat inv;
      bool ok = true;
      for (int comp : m.alpha.comp) {
        int ic = -1;
        if (!m.by.is_iso(comp, &ic)) ok = false;
        inv.comp.push_back(ic);
      }
      if (!ok) {
        R.squares_ok = false;
        R.bad_squares.push_back(f);
        continue;
      }
      R.adjoint.sq[static_cast<size_t>(f)] = inv;
    } else {
      // the square of t must itself be invertible, then its inverse is an
      // oplax square on the left adjoints whose mate is the adjoint's square
      FinNat inv;
      bool ok = true;
      for (int comp : t.sq[static_cast<size_t>(f)].comp) {
        int ic = -1;
        if (!sq.by.is_iso(comp, &ic)) ok = false;
        inv.comp.push_back(ic);
      }
      if (!ok) {
        R.squares_ok = false;
        R.bad_squares.push_back(f);
        continue;
      }
      sq.dir = LaxDir::Oplax;
      sq.alpha = inv;
      LaxSquare m = mate(sq, R.comp[static_cast<size_t>(b)], R.comp[static_cast<size_t>(c)]);
      R.adjoint.sq[static_cast<size_t>(f)] = m.alpha;
    }
  }
  R.verdict = R.componentwise && R.squares_ok;
  if (!R.verdict) return R;

  for (int b = 0; b < nb; ++b) {
    R.unit.push_back(R.comp[static_cast<size_t>(b)].unit);
    R.counit.push_back(R.comp[static_cast<size_t>(b)].counit);
  }
  if (side == AdjSide::Left) {
    // adjoint . t and t . adjoint with unit id_G => t.adjoint, counit adjoint.t => id_F
    R.unit_ok = lax_modification_ok(DG, DG, identity_map(DG),
                                    compose_map(DG, DF, DG, R.adjoint, t), R.unit);
    R.counit_ok = lax_modification_ok(DF, DF, compose_map(DF, DG, DF, t, R.adjoint),
                                      identity_map(DF), R.counit);
    R.triangles_ok = true;
    for (int b = 0; b < nb; ++b)
      if (!R.comp[static_cast<size_t>(b)].triangles_hold(DG.fib[static_cast<size_t>(b)],
                                                         DF.fib[static_cast<size_t>(b)]))
        R.triangles_ok = false;
  } else {
    R.unit_ok = lax_modification_ok(DF, DF, identity_map(DF),
                                    compose_map(DF, DG, DF, t, R.adjoint), R.unit);
    R.counit_ok = lax_modification_ok(DG, DG, compose_map(DG, DF, DG, R.adjoint, t),
                                      identity_map(DG), R.counit);
    R.triangles_ok = true;
    for (int b = 0; b < nb; ++b)
      if (!R.comp[static_cast<size_t>(b)].triangles_hold(DF.fib[static_cast<size_t>(b)],
                                                         DG.fib[static_cast<size_t>(b)]))
        R.triangles_ok = false;
  }
  return R;
}

// ---------------------------------------------------------------------------
// brute-force adjoint search among transformations, for cross-checking
//
// Enumerates candidate transformations u : G => F together with unit and
// counit modifications and checks the componentwise triangle identities,
// which is what an adjunction between transformations amounts to since
// whiskering acts componentwise.

struct TransformAdjointSearch {
  bool found = false;
  MapStraightened adjoint;
  std::vector<FinNat> unit, counit;
};

inline TransformAdjointSearch search_transform_adjoint(const CatDiagram& DF, const CatDiagram& DG,
                                                       const MapStraightened& t, AdjSide side,
                                                       long long budget = 50000000) {
  long long left = budget;
  auto spend = [&](long long c) {
    left -= c;
    if (left < 0) throw Error(ErrCode::ResourceBudget, "transformation adjoint search budget");
  };
  TransformAdjointSearch R;
  int nb = DF.base.nObj;

  // candidate components with their admissible unit/counit pairs
  std::vector<std::vector<FinFunctor>> comps(static_cast<size_t>(nb));
  for (int b = 0; b < nb; ++b) {
    const FinCat& Fb = DF.fib[static_cast<size_t>(b)];
    const FinCat& Gb = DG.fib[static_cast<size_t>(b)];
    for (const FinFunctor& u : all_functors(Gb, Fb)) {
      spend(1 + Fb.nMor());
      comps[static_cast<size_t>(b)].push_back(u);
    }
    if (comps[static_cast<size_t>(b)].empty()) return R;
  }

  std::vector<int> pick(static_cast<size_t>(nb), 0);
  std::vector<int> radix;
  for (int b = 0; b < nb; ++b) radix.push_back(static_cast<int>(comps[static_cast<size_t>(b)].size()));
  std::vector<int> cur;
  if (!first_assignment(radix, cur)) return R;
  do {
    spend(nb + 1);
    MapStraightened u;
    for (int b = 0; b < nb; ++b)
      u.comp.push_back(comps[static_cast<size_t>(b)][static_cast<size_t>(cur[static_cast<size_t>(b)])]);

    // per-object unit/counit pairs passing the componentwise triangles
    std::vector<std::vector<std::pair<FinNat, FinNat>>> pairs(static_cast<size_t>(nb));
    bool feasible = true;
    for (int b = 0; b < nb && feasible; ++b) {
      const FinCat& Fb = DF.fib[static_cast<size_t>(b)];
      const FinCat& Gb = DG.fib[static_cast<size_t>(b)];
      const FinFunctor& tb = t.comp[static_cast<size_t>(b)];
      const FinFunctor& ub = u.comp[static_cast<size_t>(b)];
      Adjunction A;
      if (side == AdjSide::Left) {
        A.L = ub;
        A.R = tb;
        for (const FinNat& eta :
             all_nats(Gb, Gb, identity_functor(Gb), compose_functor(tb, ub))) {
          for (const FinNat& eps :
               all_nats(Fb, Fb, compose_functor(ub, tb), identity_functor(Fb))) {
            spend(Gb.nObj + Fb.nObj);
            A.unit = eta;
            A.counit = eps;
            if (A.triangles_hold(Gb, Fb)) pairs[static_cast<size_t>(b)].push_back({eta, eps});
          }
        }
      } else {
        A.L = tb;
        A.R = ub;
        for (const FinNat& eta :
             all_nats(Fb, Fb, identity_functor(Fb), compose_functor(ub, tb))) {
          for (const FinNat& eps :
               all_nats(Gb, Gb, compose_functor(tb, ub), identity_functor(Gb))) {
            spend(Gb.nObj + Fb.nObj);
            A.unit = eta;
            A.counit = eps;
            if (A.triangles_hold(Fb, Gb)) pairs[static_cast<size_t>(b)].push_back({eta, eps});
          }
        }
      }
      if (pairs[static_cast<size_t>(b)].empty()) feasible = false;
    }
    if (!feasible) continue;

    // squares of the candidate transformation
    std::vector<std::vector<FinNat>> sqs(static_cast<size_t>(DF.base.nMor()));
    bool sqfeasible = true;
    for (int f = 0; f < DF.base.nMor() && sqfeasible; ++f) {
      int b = DF.base.src[static_cast<size_t>(f)], c = DF.base.dst[static_cast<size_t>(f)];
      const FinCat& Gb = DG.fib[static_cast<size_t>(b)];
      const FinCat& Fc = DF.fib[static_cast<size_t>(c)];
      for (const FinNat& n :
           all_nats(Gb, Fc,
                    compose_functor(DF.act[static_cast<size_t>(f)], u.comp[static_cast<size_t>(b)]),
                    compose_functor(u.comp[static_cast<size_t>(c)], DG.act[static_cast<size_t>(f)]))) {
        spend(Gb.nObj);
        sqs[static_cast<size_t>(f)].push_back(n);
      }
      if (sqs[static_cast<size_t>(f)].empty()) sqfeasible = false;
    }
    if (!sqfeasible) continue;

    std::vector<int> sradix;
    for (const auto& v : sqs) sradix.push_back(static_cast<int>(v.size()));
    std::vector<int> scur;
    if (!first_assignment(sradix, scur)) continue;
    do {
      spend(DF.base.nMor() + 1);
      u.sq.clear();
      for (int f = 0; f < DF.base.nMor(); ++f)
        u.sq.push_back(sqs[static_cast<size_t>(f)][static_cast<size_t>(scur[static_cast<size_t>(f)])]);
      if (!lax_map_coherent(DG, DF, u)) continue;

      std::vector<int> pradix;
      for (const auto& v : pairs) pradix.push_back(static_cast<int>(v.size()));
      std::vector<int> pcur;
      if (!first_assignment(pradix, pcur)) continue;
      do {
        spend(nb + 1);
        std::vector<FinNat> eta, eps;
        for (int b = 0; b < nb; ++b) {
          eta.push_back(pairs[static_cast<size_t>(b)][static_cast<size_t>(pcur[static_cast<size_t>(b)])].first);
          eps.push_back(pairs[static_cast<size_t>(b)][static_cast<size_t>(pcur[static_cast<size_t>(b)])].second);
        }
        bool ok;
        if (side == AdjSide::Left)
          ok = lax_modification_ok(DG, DG, identity_map(DG), compose_map(DG, DF, DG, u, t), eta) &&
               lax_modification_ok(DF, DF, compose_map(DF, DG, DF, t, u), identity_map(DF), eps);
        else
          ok = lax_modification_ok(DF, DF, identity_map(DF), compose_map(DF, DG, DF, t, u), eta) &&
               lax_modification_ok(DG, DG, compose_map(DG, DF, DG, u, t), identity_map(DG), eps);
        if (ok) {
          R.found = true;
          R.adjoint = u;
          R.unit = eta;
          R.counit = eps;
          return R;
        }
      } while (next_assignment(pradix, pcur));
    } while (next_assignment(sradix, scur));
  } while (next_assignment(radix, cur));
  return R;
}

// ---------------------------------------------------------------------------
// fibres of a projection of categories

struct CatFibre {
  FinCat cat;
  std::vector<int> obj, mor;     // total indices per fibre index
  std::map<int, int> objIdx, morIdx;  // total index -> fibre index
};

inline CatFibre cat_fibre(const FinCat& E, const FinCat& B, const FinFunctor& p, int b) {
  CatFibre F;
  for (int x = 0; x < E.nObj; ++x)
    if (p.obj[static_cast<size_t>(x)] == b) {
      F.objIdx[x] = F.cat.add_object();
      F.obj.push_back(x);
    }
  int idb = B.idOf[static_cast<size_t>(b)];
  for (int m = 0; m < E.nMor(); ++m)
    if (p.mor[static_cast<size_t>(m)] == idb) {
      F.morIdx[m] = F.cat.add_morphism(F.objIdx.at(E.src[static_cast<size_t>(m)]),
                                       F.objIdx.at(E.dst[static_cast<size_t>(m)]));
      F.mor.push_back(m);
    }
  for (size_t i = 0; i < F.obj.size(); ++i)
    F.cat.set_identity(static_cast<int>(i),
                       F.morIdx.at(E.idOf[static_cast<size_t>(F.obj[i])]));
  for (size_t m1 = 0; m1 < F.mor.size(); ++m1)
    for (size_t m2 = 0; m2 < F.mor.size(); ++m2) {
      if (E.dst[static_cast<size_t>(F.mor[m1])] != E.src[static_cast<size_t>(F.mor[m2])]) continue;
      F.cat.set_comp(static_cast<int>(m2), static_cast<int>(m1),
                     F.morIdx.at(E.compose(F.mor[m2], F.mor[m1])));
    }
  std::string w;
  if (!F.cat.validate(&w)) throw Error(ErrCode::InvalidInput, "fibre is not a category: " + w);
  return F;
}

// the restriction of a functor over the base to the fibres over b
inline FinFunctor fibre_functor(const CatFibre& FE, const CatFibre& FF, const FinFunctor& G) {
  FinFunctor H;
  for (int x : FE.obj) H.obj.push_back(FF.objIdx.at(G.obj[static_cast<size_t>(x)]));
  for (int m : FE.mor) H.mor.push_back(FF.morIdx.at(G.mor[static_cast<size_t>(m)]));
  return H;
}

// ---------------------------------------------------------------------------
// relative adjoints over a base
//
// For a functor G : E -> F commuting with projections to B that are both
// fibrations of the requested kind, a left adjoint of G living over B exists
// exactly when
//   (1) each fibre functor G_b has a left adjoint,
//   (2) G respects the enrichment of the hom categories (automatic here:
//       the promoted hom categories are discrete), and
//   (3) for cartesian lifts (i = 1): G preserves cartesian morphisms;
//       for cocartesian lifts (i = 0): the canonical comparison
//       F_b'(f_! x) -> f_!(F_b x) is invertible for every f : b -> b' and
//       every x in the fibre over b.

struct RelAdjReport {
  bool fibrewise = false;   // condition (1)
  bool enriched = true;     // condition (2), degenerate for discrete hom categories
  bool transport = false;   // condition (3)
  bool verdict = false;
  std::vector<int> missing;                    // base objects failing (1)
  std::vector<std::pair<int, int>> offenders;  // (morphism, object) witnesses failing (3)
  std::vector<Adjunction> comp;                // fibrewise adjunctions F_b -| G_b
  FibReport fibE, fibF;                        // the precondition detections
};

inline RelAdjReport relative_adjoint_check(const FinCat& B, const FinCat& E, const FinCat& F,
                                           const FinFunctor& p, const FinFunctor& q,
                                           const FinFunctor& G, int i) {
  std::string w;
  if (i != 0 && i != 1) throw Error(ErrCode::InvalidInput, "lift direction must be 0 or 1");
  if (!p.validate(E, B, &w)) throw Error(ErrCode::InvalidInput, "projection of the source: " + w);
  if (!q.validate(F, B, &w)) throw Error(ErrCode::InvalidInput, "projection of the target: " + w);
  if (!G.validate(E, F, &w)) throw Error(ErrCode::InvalidInput, "functor: " + w);
  if (!(compose_functor(q, G) == p))
    throw Error(ErrCode::InvalidInput, "functor does not commute with the projections");

  RelAdjReport R;
  TwoCatFrom1 B2 = two_cat_from_fincat(B);
  TwoCatFrom1 E2 = two_cat_from_fincat(E);
  TwoCatFrom1 F2 = two_cat_from_fincat(F);
  FibOver PE = make_fib(E2.cat, B2.cat, one_functor_as_two(E2, B2, p));
  FibOver PF = make_fib(F2.cat, B2.cat, one_functor_as_two(F2, B2, q));
  R.fibE = detect_fibration(PE, i, 1);
  R.fibF = detect_fibration(PF, i, 1);
  if (!R.fibE.ok || !R.fibF.ok)
    throw Error(ErrCode::InvalidInput, "projections are not fibrations of the requested kind");

  std::vector<CatFibre> fibsE, fibsF;
  for (int b = 0; b < B.nObj; ++b) {
    fibsE.push_back(cat_fibre(E, B, p, b));
    fibsF.push_back(cat_fibre(F, B, q, b));
  }
  R.comp.assign(static_cast<size_t>(B.nObj), Adjunction{});
  for (int b = 0; b < B.nObj; ++b) {
    FinFunctor Gb = fibre_functor(fibsE[static_cast<size_t>(b)], fibsF[static_cast<size_t>(b)], G);
    AdjointResult ar = find_left_adjoint(fibsE[static_cast<size_t>(b)].cat,
                                         fibsF[static_cast<size_t>(b)].cat, Gb);
    if (ar.status != AdjointResult::Status::Found) {
      R.missing.push_back(b);
      continue;
    }
    R.comp[static_cast<size_t>(b)] = *ar.adj;
  }
  R.fibrewise = R.missing.empty();
  if (!R.fibrewise) return R;

  R.transport = true;
  if (i == 1) {
    // G must send cartesian morphisms to cartesian morphisms
    for (int m = 0; m < E.nMor(); ++m)
      if (mor_is_cartesian(E, B, p, m) && !mor_is_cartesian(F, B, q, G.mor[static_cast<size_t>(m)])) {
        R.transport = false;
        R.offenders.push_back({m, -1});
      }
  } else {
    // compare the fibrewise left adjoint after transport with transport
    // after the fibrewise left adjoint
    for (int f = 0; f < B.nMor(); ++f) {
      int b = B.src[static_cast<size_t>(f)], b2 = B.dst[static_cast<size_t>(f)];
      const CatFibre& Eb = fibsE[static_cast<size_t>(b)];
      const CatFibre& Fb = fibsF[static_cast<size_t>(b)];
      const CatFibre& Eb2 = fibsE[static_cast<size_t>(b2)];
      const CatFibre& Fb2 = fibsF[static_cast<size_t>(b2)];
      const Adjunction& Ab = R.comp[static_cast<size_t>(b)];
      const Adjunction& Ab2 = R.comp[static_cast<size_t>(b2)];
      for (int x = 0; x < Fb.cat.nObj; ++x) {
        int xtot = Fb.obj[static_cast<size_t>(x)];
        int lx = Eb.obj[static_cast<size_t>(Ab.L.obj[static_cast<size_t>(x)])];
        // cocartesian lifts of f at L(x) in E and at x in F
        int liftE = -1, liftF = -1;
        for (int m = 0; m < E.nMor(); ++m)
          if (E.src[static_cast<size_t>(m)] == lx && p.mor[static_cast<size_t>(m)] == f &&
              mor_is_cocartesian(E, B, p, m)) {
            liftE = m;
            break;
          }
        for (int m = 0; m < F.nMor(); ++m)
          if (F.src[static_cast<size_t>(m)] == xtot && q.mor[static_cast<size_t>(m)] == f &&
              mor_is_cocartesian(F, B, q, m)) {
            liftF = m;
            break;
          }
        if (liftE < 0 || liftF < 0)
          throw Error(ErrCode::InvalidInput, "missing cocartesian lift despite detection");
        // factor (G lift_E) . unit_x through lift_F, then transpose
        int c = F.compose(G.mor[static_cast<size_t>(liftE)],
                          Fb.mor[static_cast<size_t>(Ab.unit.comp[static_cast<size_t>(x)])]);
        int tgt = F.dst[static_cast<size_t>(c)];
        int idb2 = B.idOf[static_cast<size_t>(b2)];
        int v = -1;
        for (int m : F.hom(F.dst[static_cast<size_t>(liftF)], tgt))
          if (q.mor[static_cast<size_t>(m)] == idb2 && F.compose(m, liftF) == c) {
            v = m;
            break;
          }
        if (v < 0) throw Error(ErrCode::InvalidInput, "cocartesian factorisation failed");
        int vfib = Fb2.morIdx.at(v);
        int yfib = Eb2.objIdx.at(E.dst[static_cast<size_t>(liftE)]);
        int wmor = Eb2.cat.compose(Ab2.counit.comp[static_cast<size_t>(yfib)],
                                   Ab2.L.mor[static_cast<size_t>(vfib)]);
        if (!Eb2.cat.is_iso(wmor)) {
          R.transport = false;
          R.offenders.push_back({f, x});
        }
      }
    }
  }
  R.verdict = R.fibrewise && R.enriched && R.transport;
  return R;
}

// direct search for an adjoint over the base: a functor H with p.H = q and
// unit and counit lying over identities of B
struct SliceAdjointSearch {
  bool found = false;
  FinFunctor H;
  FinNat unit, counit;
};

inline SliceAdjointSearch search_relative_left_adjoint(const FinCat& B, const FinCat& E,
                                                       const FinCat& F, const FinFunctor& p,
                                                       const FinFunctor& q, const FinFunctor& G,
                                                       long long budget = 50000000) {
  long long left = budget;
  auto spend = [&](long long c) {
    left -= c;
    if (left < 0) throw Error(ErrCode::ResourceBudget, "relative adjoint search budget");
  };
  SliceAdjointSearch R;
  for (const FinFunctor& H : all_functors(F, E)) {
    spend(F.nMor() + 1);
    if (!(compose_functor(p, H) == q)) continue;
    for (const FinNat& eta : all_nats(F, F, identity_functor(F), compose_functor(G, H))) {
      spend(F.nObj + 1);
      bool vert = true;
      for (size_t x = 0; x < eta.comp.size(); ++x)
        if (q.mor[static_cast<size_t>(eta.comp[x])] !=
            B.idOf[static_cast<size_t>(q.obj[x])]) {
          vert = false;
          break;
        }
      if (!vert) continue;
      for (const FinNat& eps : all_nats(E, E, compose_functor(H, G), identity_functor(E))) {
        spend(E.nObj + 1);
        bool vert2 = true;
        for (size_t y = 0; y < eps.comp.size(); ++y)
          if (p.mor[static_cast<size_t>(eps.comp[y])] !=
              B.idOf[static_cast<size_t>(p.obj[y])]) {
            vert2 = false;
            break;
          }
        if (!vert2) continue;
        Adjunction A;
        A.L = H;
        A.R = G;
        A.unit = eta;
        A.counit = eps;
        if (A.triangles_hold(F, E)) {
          R.found = true;
          R.H = H;
          R.unit = eta;
          R.counit = eps;
          return R;
        }
      }
    }
  }
  return R;
}

// ---------------------------------------------------------------------------
// the mate correspondence on transformations
//
// A lax transformation t : F => G all of whose components have left adjoints
// corresponds to the oplax transformation on the left adjoints with the mate
// squares; no invertibility is required.  The passage is involutive given
// matching adjoint choices, and modifications cross it contravariantly.

struct MateCorrespondence {
  bool ok = false;
  std::vector<int> missing;      // base objects without the required adjoint
  std::vector<Adjunction> comp;  // chosen componentwise adjunctions
  OplaxMap dual;                 // components the adjoints, squares the mates
};

inline MateCorrespondence mate_correspondence(const CatDiagram& DF, const CatDiagram& DG,
                                              const MapStraightened& t) {
  std::string w;
  if (!map_straightening_valid(DF, DG, t, &w))
    throw Error(ErrCode::InvalidInput, "transformation: " + w);
  if (!lax_map_coherent(DF, DG, t, &w))
    throw Error(ErrCode::InvalidInput, "transformation: " + w);
  MateCorrespondence R;
  int nb = DF.base.nObj;
  R.comp.assign(static_cast<size_t>(nb), Adjunction{});
  for (int b = 0; b < nb; ++b) {
    AdjointResult ar = find_left_adjoint(DF.fib[static_cast<size_t>(b)],
                                         DG.fib[static_cast<size_t>(b)],
                                         t.comp[static_cast<size_t>(b)]);
    if (ar.status != AdjointResult::Status::Found) {
      R.missing.push_back(b);
      continue;
    }
    R.comp[static_cast<size_t>(b)] = *ar.adj;
  }
  if (!R.missing.empty()) return R;
  R.dual.comp.resize(static_cast<size_t>(nb));
  for (int b = 0; b < nb; ++b) R.dual.comp[static_cast<size_t>(b)] = R.comp[static_cast<size_t>(b)].L;
  for (int f = 0; f < DF.base.nMor(); ++f) {
    int b = DF.base.src[static_cast<size_t>(f)], c = DF.base.dst[static_cast<size_t>(f)];
    LaxSquare sq;
    sq.ax = DF.fib[static_cast<size_t>(b)];
    sq.ay = DF.fib[static_cast<size_t>(c)];
    sq.bx = DG.fib[static_cast<size_t>(b)];
    sq.by = DG.fib[static_cast<size_t>(c)];
    sq.fa = DF.act[static_cast<size_t>(f)];
    sq.fb = DG.act[static_cast<size_t>(f)];
    sq.Rx = t.comp[static_cast<size_t>(b)];
    sq.Ry = t.comp[static_cast<size_t>(c)];
    sq.dir = LaxDir::Lax;
    sq.alpha = t.sq[static_cast<size_t>(f)];
    R.dual.sq.push_back(mate(sq, R.comp[static_cast<size_t>(b)], R.comp[static_cast<size_t>(c)]).alpha);
  }
  R.ok = true;
  return R;
}

// inverse passage: right adjoints of the components, mates of the squares
struct MateCorrespondenceBack {
  bool ok = false;
  std::vector<int> missing;
  std::vector<Adjunction> comp;  // u_b -| comp_b.R
  MapStraightened orig;
};

inline MateCorrespondenceBack mate_correspondence_inverse(const CatDiagram& DF,
                                                          const CatDiagram& DG,
                                                          const OplaxMap& u) {
  std::string w;
  if (!oplax_map_valid(DG, DF, u, &w))
    throw Error(ErrCode::InvalidInput, "transformation: " + w);
  if (!oplax_map_coherent(DG, DF, u, &w))
    throw Error(ErrCode::InvalidInput, "transformation: " + w);
  MateCorrespondenceBack R;
  int nb = DF.base.nObj;
  R.comp.assign(static_cast<size_t>(nb), Adjunction{});
  for (int b = 0; b < nb; ++b) {
    AdjointResult ar = find_right_adjoint(DG.fib[static_cast<size_t>(b)],
                                          DF.fib[static_cast<size_t>(b)],
                                          u.comp[static_cast<size_t>(b)]);
    if (ar.status != AdjointResult::Status::Found) {
      R.missing.push_back(b);
      continue;
    }
    R.comp[static_cast<size_t>(b)] = *ar.adj;
  }
  if (!R.missing.empty()) return R;
  R.orig.comp.resize(static_cast<size_t>(nb));
  for (int b = 0; b < nb; ++b) R.orig.comp[static_cast<size_t>(b)] = R.comp[static_cast<size_t>(b)].R;
  for (int f = 0; f < DF.base.nMor(); ++f) {
    int b = DF.base.src[static_cast<size_t>(f)], c = DF.base.dst[static_cast<size_t>(f)];
    LaxSquare sq;
    sq.ax = DG.fib[static_cast<size_t>(b)];
    sq.ay = DG.fib[static_cast<size_t>(c)];
    sq.bx = DF.fib[static_cast<size_t>(b)];
    sq.by = DF.fib[static_cast<size_t>(c)];
    sq.fa = DG.act[static_cast<size_t>(f)];
    sq.fb = DF.act[static_cast<size_t>(f)];
    sq.Rx = u.comp[static_cast<size_t>(b)];
    sq.Ry = u.comp[static_cast<size_t>(c)];
    sq.dir = LaxDir::Oplax;
    sq.alpha = u.sq[static_cast<size_t>(f)];
    R.orig.sq.push_back(mate(sq, R.comp[static_cast<size_t>(b)], R.comp[static_cast<size_t>(c)]).alpha);
  }
  R.ok = true;
  return R;
}

// a modification mu : t => t2 between lax transformations crosses the mate
// correspondence contravariantly, to a modification dual(t2) => dual(t)
inline std::vector<FinNat> mate_modification(const CatDiagram& DF, const CatDiagram& DG,
                                             const MateCorrespondence& mt,
                                             const MateCorrespondence& mt2,
                                             const std::vector<FinNat>& mu) {
  if (!mt.ok || !mt2.ok) throw Error(ErrCode::InvalidInput, "missing adjoint data");
  std::vector<FinNat> out;
  for (int b = 0; b < DF.base.nObj; ++b) {
    const FinCat& Fb = DF.fib[static_cast<size_t>(b)];
    const Adjunction& A = mt.comp[static_cast<size_t>(b)];    // L  -| t_b
    const Adjunction& A2 = mt2.comp[static_cast<size_t>(b)];  // L2 -| t2_b
    FinNat n;
    for (int g = 0; g < DG.fib[static_cast<size_t>(b)].nObj; ++g) {
      int lg = A.L.obj[static_cast<size_t>(g)];
      int m1 = A2.L.mor[static_cast<size_t>(A.unit.comp[static_cast<size_t>(g)])];
      int m2 = A2.L.mor[static_cast<size_t>(mu[static_cast<size_t>(b)].comp[static_cast<size_t>(lg)])];
      int m3 = A2.counit.comp[static_cast<size_t>(lg)];
      n.comp.push_back(Fb.compose(m3, Fb.compose(m2, m1)));
    }
    out.push_back(n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// the adjoint-valued dual of a diagram of left adjoints
//
// When every transport of a diagram has a right adjoint, the chosen right
// adjoints assemble contravariantly with explicit invertible comparison
// cells (no strictification): a unitor against the identity and a compositor
// for every composable pair, satisfying the pasting cocycle on the nose.

struct AdjointDual {
  bool ok = false;
  std::vector<int> offenders;      // base morphisms whose transport has no right adjoint
  std::vector<AdjointResult> adj;  // per base morphism
  std::vector<FinNat> unitor;      // per base object b: R_{id_b} => id, invertible
  std::map<std::pair<int, int>, FinNat> compositor;  // (g, f) |-> R_f.R_g => R_{gf}
  bool unitors_ok = false, compositors_ok = false, cocycle_ok = false;
};

// canonical comparison between two right adjoints of the same functor
inline FinNat right_adjoint_comparison(const FinCat& X, const FinCat& Y, const Adjunction& A1,
                                       const Adjunction& A2) {
  // A1: L -| R over (X, Y), A2: L -| R' likewise; returns R => R'
  FinNat n;
  for (int y = 0; y < Y.nObj; ++y) {
    int ry = A1.R.obj[static_cast<size_t>(y)];
    n.comp.push_back(X.compose(A2.R.mor[static_cast<size_t>(A1.counit.comp[static_cast<size_t>(y)])],
                               A2.unit.comp[static_cast<size_t>(ry)]));
  }
  return n;
}

// canonical comparison between two left adjoints of the same functor
inline FinNat left_adjoint_comparison(const FinCat& X, const FinCat& Y, const Adjunction& A1,
                                      const Adjunction& A2) {
  // A1: L -| R over (X, Y), A2: L' -| R likewise; returns L' => L
  FinNat n;
  for (int x = 0; x < X.nObj; ++x) {
    int lx = A1.L.obj[static_cast<size_t>(x)];
    n.comp.push_back(Y.compose(A2.counit.comp[static_cast<size_t>(lx)],
                               A2.L.mor[static_cast<size_t>(A1.unit.comp[static_cast<size_t>(x)])]));
  }
  return n;
}

// the composite adjunction of act_f -| R_f and act_g -| R_g
inline Adjunction compose_adjunction(const FinCat& Xb, const FinCat& Xc, const FinCat& Xd,
                                     const Adjunction& Af, const Adjunction& Ag) {
  (void)Xc;
  Adjunction A;
  A.L = compose_functor(Ag.L, Af.L);
  A.R = compose_functor(Af.R, Ag.R);
  for (int x = 0; x < Xb.nObj; ++x)
    A.unit.comp.push_back(Xb.compose(
        Af.R.mor[static_cast<size_t>(Ag.unit.comp[static_cast<size_t>(Af.L.obj[static_cast<size_t>(x)])])],
        Af.unit.comp[static_cast<size_t>(x)]));
  for (int z = 0; z < Xd.nObj; ++z)
    A.counit.comp.push_back(Xd.compose(
        Ag.counit.comp[static_cast<size_t>(z)],
        Ag.L.mor[static_cast<size_t>(Af.counit.comp[static_cast<size_t>(Ag.R.obj[static_cast<size_t>(z)])])]));
  return A;
}

inline AdjointDual adjoint_valued_dual(const CatDiagram& D) {
  std::string w;
  if (!D.validate(&w)) throw Error(ErrCode::InvalidInput, "diagram: " + w);
  AdjointDual R;
  R.adj.assign(static_cast<size_t>(D.base.nMor()), AdjointResult{});
  for (int f = 0; f < D.base.nMor(); ++f) {
    int b = D.base.src[static_cast<size_t>(f)], c = D.base.dst[static_cast<size_t>(f)];
    R.adj[static_cast<size_t>(f)] = find_right_adjoint(
        D.fib[static_cast<size_t>(b)], D.fib[static_cast<size_t>(c)], D.act[static_cast<size_t>(f)]);
    if (R.adj[static_cast<size_t>(f)].status != AdjointResult::Status::Found)
      R.offenders.push_back(f);
  }
  if (!R.offenders.empty()) return R;

  R.unitors_ok = true;
  for (int b = 0; b < D.base.nObj; ++b) {
    int idb = D.base.idOf[static_cast<size_t>(b)];
    const FinCat& Xb = D.fib[static_cast<size_t>(b)];
    FinNat u = right_adjoint_comparison(Xb, Xb, *R.adj[static_cast<size_t>(idb)].adj,
                                        identity_adjunction(Xb));
    for (int c : u.comp)
      if (!Xb.is_iso(c)) R.unitors_ok = false;
    R.unitor.push_back(u);
  }
  R.compositors_ok = true;
  for (int f = 0; f < D.base.nMor(); ++f)
    for (int g = 0; g < D.base.nMor(); ++g) {
      if (D.base.dst[static_cast<size_t>(f)] != D.base.src[static_cast<size_t>(g)]) continue;
      int b = D.base.src[static_cast<size_t>(f)];
      int c = D.base.dst[static_cast<size_t>(f)];
      int d = D.base.dst[static_cast<size_t>(g)];
      int gf = D.base.compose(g, f);
      Adjunction comp = compose_adjunction(D.fib[static_cast<size_t>(b)], D.fib[static_cast<size_t>(c)],
                                           D.fib[static_cast<size_t>(d)],
                                           *R.adj[static_cast<size_t>(f)].adj,
                                           *R.adj[static_cast<size_t>(g)].adj);
      FinNat gamma = right_adjoint_comparison(D.fib[static_cast<size_t>(b)],
                                              D.fib[static_cast<size_t>(d)], comp,
                                              *R.adj[static_cast<size_t>(gf)].adj);
      for (int cc : gamma.comp)
        if (!D.fib[static_cast<size_t>(b)].is_iso(cc)) R.compositors_ok = false;
      R.compositor[{g, f}] = gamma;
    }

  // pasting cocycle on triples and against the unitors
  R.cocycle_ok = true;
  for (int f = 0; f < D.base.nMor(); ++f)
    for (int g = 0; g < D.base.nMor(); ++g) {
      if (D.base.dst[static_cast<size_t>(f)] != D.base.src[static_cast<size_t>(g)]) continue;
      for (int h = 0; h < D.base.nMor(); ++h) {
        if (D.base.dst[static_cast<size_t>(g)] != D.base.src[static_cast<size_t>(h)]) continue;
        int b = D.base.src[static_cast<size_t>(f)];
        int e = D.base.dst[static_cast<size_t>(h)];
        int hg = D.base.compose(h, g);
        int gf = D.base.compose(g, f);
        const FinCat& Xb = D.fib[static_cast<size_t>(b)];
        const FinFunctor& Rf = R.adj[static_cast<size_t>(f)].adj->R;
        const FinFunctor& Rh = R.adj[static_cast<size_t>(h)].adj->R;
        for (int z = 0; z < D.fib[static_cast<size_t>(e)].nObj; ++z) {
          int path1 = Xb.compose(
              R.compositor.at({hg, f}).comp[static_cast<size_t>(z)],
              Rf.mor[static_cast<size_t>(R.compositor.at({h, g}).comp[static_cast<size_t>(z)])]);
          int path2 = Xb.compose(
              R.compositor.at({h, gf}).comp[static_cast<size_t>(z)],
              R.compositor.at({g, f}).comp[static_cast<size_t>(Rh.obj[static_cast<size_t>(z)])]);
          if (path1 != path2) R.cocycle_ok = false;
        }
      }
    }
  for (int f = 0; f < D.base.nMor(); ++f) {
    int b = D.base.src[static_cast<size_t>(f)], c = D.base.dst[static_cast<size_t>(f)];
    int idb = D.base.idOf[static_cast<size_t>(b)], idc = D.base.idOf[static_cast<size_t>(c)];
    const FinFunctor& Rf = R.adj[static_cast<size_t>(f)].adj->R;
    for (int z = 0; z < D.fib[static_cast<size_t>(c)].nObj; ++z) {
      // composing with an identity matches whiskering the unitor
      if (R.compositor.at({idc, f}).comp[static_cast<size_t>(z)] !=
          Rf.mor[static_cast<size_t>(R.unitor[static_cast<size_t>(c)].comp[static_cast<size_t>(z)])])
        R.cocycle_ok = false;
      if (R.compositor.at({f, idb}).comp[static_cast<size_t>(z)] !=
          R.unitor[static_cast<size_t>(b)].comp[static_cast<size_t>(Rf.obj[static_cast<size_t>(z)])])
        R.cocycle_ok = false;
    }
  }
  R.ok = R.unitors_ok && R.compositors_ok && R.cocycle_ok;
  return R;
}

}  // namespace laxkit
