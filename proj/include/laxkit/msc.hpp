#pragma once
// Categories enriched in marked simplicial sets, with strictly associative
// and unital composition stored simplexwise. Provides the cells built from
// subset posets (composition by union), suspensions, boundary variants that
// keep factorization triangles separate, the collapse functors between them,
// enriched-functor enumeration, and pushout verification by Hom-set
// bijection plus a strict hom-level colimit comparison for injective legs.

#include <map>

#include "scaled.hpp"

namespace laxkit {

struct HomComp {
  ProductSSet P;  // hom(i,j) x hom(j,k)
  SMap m;         // into hom(i,k)
};

struct MarkedSCat {
  int nObj = 0;
  std::vector<std::vector<SSetX>> hom;                  // [src][dst]
  std::vector<int> idv;                                 // identity vertex in hom(i,i)
  std::vector<std::vector<std::vector<HomComp>>> comp;  // [i][j][k]

  const SSetX& H(int i, int j) const {
    return hom[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }

  SRef compose_ref(int i, int j, int k, const SRef& r1, const SRef& r2) const {
    const HomComp& c = comp[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
    return c.m.apply(c.P.pair_ref(r1, r2));
  }

  // identity vertex degenerated up to dimension d
  SRef id_ref(int i, int d) const {
    Mono s;
    s.dom = static_cast<int8_t>(d);
    s.cod = 0;
    for (int t = 0; t <= d; ++t) s.v[static_cast<size_t>(t)] = 0;
    return SRef{idv[static_cast<size_t>(i)], s};
  }

  bool validate(std::string* why = nullptr) const {
    for (int i = 0; i < nObj; ++i)
      for (int j = 0; j < nObj; ++j)
        if (!H(i, j).s.validate(why)) return false;
    for (int i = 0; i < nObj; ++i)
      if (idv[static_cast<size_t>(i)] < 0 || idv[static_cast<size_t>(i)] >= H(i, i).s.n[0]) {
        if (why) *why = "identity vertex out of range";
        return false;
      }
    for (int i = 0; i < nObj; ++i)
      for (int j = 0; j < nObj; ++j)
        for (int k = 0; k < nObj; ++k) {
          const HomComp& c = comp[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
          if (!c.m.validate(c.P.sset, H(i, k).s, why)) return false;
          // marked x marked lands marked
          for (size_t e = 0; e < c.P.comp[1].size(); ++e) {
            auto [r1, r2] = c.P.comp[1][e];
            if (H(i, j).is_marked(r1) && H(j, k).is_marked(r2) &&
                !H(i, k).is_marked(c.m.img[1][e])) {
              if (why) *why = "composition does not preserve marking";
              return false;
            }
          }
        }
    // units
    for (int i = 0; i < nObj; ++i)
      for (int j = 0; j < nObj; ++j)
        for (int d = 0; d <= 3; ++d)
          for (const SRef& x : H(i, j).s.all_simplices(d)) {
            if (compose_ref(i, i, j, id_ref(i, d), x) != x) {
              if (why) *why = "left unit fails";
              return false;
            }
            if (compose_ref(i, j, j, x, id_ref(j, d)) != x) {
              if (why) *why = "right unit fails";
              return false;
            }
          }
    // associativity, on all triples of simplices of equal dimension
    for (int i = 0; i < nObj; ++i)
      for (int j = 0; j < nObj; ++j)
        for (int k = 0; k < nObj; ++k)
          for (int l = 0; l < nObj; ++l)
            for (int d = 0; d <= 3; ++d)
              for (const SRef& x : H(i, j).s.all_simplices(d))
                for (const SRef& y : H(j, k).s.all_simplices(d))
                  for (const SRef& z : H(k, l).s.all_simplices(d))
                    if (compose_ref(i, k, l, compose_ref(i, j, k, x, y), z) !=
                        compose_ref(i, j, l, x, compose_ref(j, k, l, y, z))) {
                      if (why) *why = "associativity fails";
                      return false;
                    }
    return true;
  }
};

// assembles composition products once homs exist; rule fills in the map
inline void msc_finish_comp(MarkedSCat& X,
                            const std::function<SMap(int, int, int, const ProductSSet&)>& rule) {
  X.comp.assign(static_cast<size_t>(X.nObj), {});
  for (int i = 0; i < X.nObj; ++i) {
    X.comp[static_cast<size_t>(i)].assign(static_cast<size_t>(X.nObj), {});
    for (int j = 0; j < X.nObj; ++j) {
      X.comp[static_cast<size_t>(i)][static_cast<size_t>(j)].resize(static_cast<size_t>(X.nObj));
      for (int k = 0; k < X.nObj; ++k) {
        HomComp& c = X.comp[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
        c.P = product(X.H(i, j).s, X.H(j, k).s);
        c.m = rule(i, j, k, c.P);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// poset nerves with chain bookkeeping, and vertex-determined maps

struct PosetNerve {
  SSetX x;
  std::array<std::vector<std::vector<int>>, 4> chains;

  // normal form of the simplex with the given weakly increasing vertex tuple
  SRef from_weak_chain(const std::vector<int>& weak) const {
    std::vector<int> strict;
    Mono s;
    s.dom = static_cast<int8_t>(weak.size() - 1);
    for (size_t t = 0; t < weak.size(); ++t) {
      if (strict.empty() || strict.back() != weak[t]) strict.push_back(weak[t]);
      s.v[t] = static_cast<int8_t>(strict.size() - 1);
    }
    s.cod = static_cast<int8_t>(strict.size() - 1);
    int cell = index_of(chains[strict.size() - 1], strict);
    if (cell < 0) throw Error(ErrCode::InvalidInput, "vertex tuple is not a chain of the nerve");
    return SRef{cell, s};
  }
};

inline PosetNerve poset_nerve(int m, const std::function<bool(int, int)>& leq) {
  PosetNerve N;
  std::vector<std::vector<bool>> rel(static_cast<size_t>(m),
                                     std::vector<bool>(static_cast<size_t>(m)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) rel[static_cast<size_t>(a)][static_cast<size_t>(b)] = leq(a, b);
  N.x = with_scaling(nerve_of_poset(m, rel, &N.chains), Scaling::Flat);
  return N;
}

// simplicial map determined by vertex images; the target must be vertex-rigid
// (no two cells share a vertex tuple), as simplices and poset nerves are
inline SMap smap_rigid(const SSet& X, const SSet& D, const std::vector<int>& vimg) {
  std::array<std::map<std::vector<int>, int>, 4> lut;
  for (int d = 0; d <= 3; ++d)
    for (int c = 0; c < D.n[d]; ++c) {
      bool fresh = lut[static_cast<size_t>(d)].emplace(D.vertices(SRef::of_cell(c, d)), c).second;
      if (!fresh) throw Error(ErrCode::InvalidInput, "target is not vertex-rigid");
    }
  SMap m;
  for (int d = 0; d <= 3; ++d)
    for (int c = 0; c < X.n[d]; ++c) {
      std::vector<int> vs = X.vertices(SRef::of_cell(c, d));
      std::vector<int> strict;
      Mono s;
      s.dom = static_cast<int8_t>(d);
      for (int t = 0; t <= d; ++t) {
        int w = vimg[static_cast<size_t>(vs[static_cast<size_t>(t)])];
        if (strict.empty() || strict.back() != w) strict.push_back(w);
        s.v[static_cast<size_t>(t)] = static_cast<int8_t>(strict.size() - 1);
      }
      s.cod = static_cast<int8_t>(strict.size() - 1);
      auto it = lut[strict.size() - 1].find(strict);
      if (it == lut[strict.size() - 1].end())
        throw Error(ErrCode::InvalidInput, "image tuple is not a simplex of the target");
      m.img[d].push_back(SRef{it->second, s});
    }
  return m;
}

// ---------------------------------------------------------------------------
// functors

struct MSCFunctor {
  std::vector<int> obj;
  std::vector<std::vector<SMap>> hom;  // [i][j]

  bool operator==(const MSCFunctor& o) const { return obj == o.obj && hom == o.hom; }
  bool operator<(const MSCFunctor& o) const { return std::tie(obj, hom) < std::tie(o.obj, o.hom); }
};

inline MSCFunctor msc_functor_skeleton(const MarkedSCat& A) {
  MSCFunctor F;
  F.obj.assign(static_cast<size_t>(A.nObj), 0);
  F.hom.assign(static_cast<size_t>(A.nObj), std::vector<SMap>(static_cast<size_t>(A.nObj)));
  return F;
}

inline MSCFunctor msc_identity(const MarkedSCat& A) {
  MSCFunctor F = msc_functor_skeleton(A);
  for (int i = 0; i < A.nObj; ++i) {
    F.obj[static_cast<size_t>(i)] = i;
    for (int j = 0; j < A.nObj; ++j)
      F.hom[static_cast<size_t>(i)][static_cast<size_t>(j)] = SMap::identity(A.H(i, j).s);
  }
  return F;
}

inline MSCFunctor msc_compose(const MarkedSCat& A, const MSCFunctor& G, const MSCFunctor& F) {
  // G after F, where F leaves A
  MSCFunctor R;
  for (int v : F.obj) R.obj.push_back(G.obj[static_cast<size_t>(v)]);
  R.hom.resize(static_cast<size_t>(A.nObj));
  for (int i = 0; i < A.nObj; ++i)
    for (int j = 0; j < A.nObj; ++j) {
      size_t fi = static_cast<size_t>(F.obj[static_cast<size_t>(i)]);
      size_t fj = static_cast<size_t>(F.obj[static_cast<size_t>(j)]);
      R.hom[static_cast<size_t>(i)].push_back(
          compose(G.hom[fi][fj], F.hom[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    }
  return R;
}

inline bool msc_functor_valid(const MarkedSCat& A, const MarkedSCat& X, const MSCFunctor& F,
                              std::string* why = nullptr) {
  if (static_cast<int>(F.obj.size()) != A.nObj || static_cast<int>(F.hom.size()) != A.nObj) {
    if (why) *why = "object map size";
    return false;
  }
  for (int v : F.obj)
    if (v < 0 || v >= X.nObj) {
      if (why) *why = "object image out of range";
      return false;
    }
  for (int i = 0; i < A.nObj; ++i)
    for (int j = 0; j < A.nObj; ++j) {
      const SMap& h = F.hom[static_cast<size_t>(i)][static_cast<size_t>(j)];
      const SSetX& src = A.H(i, j);
      const SSetX& dst = X.H(F.obj[static_cast<size_t>(i)], F.obj[static_cast<size_t>(j)]);
      if (!h.validate(src.s, dst.s, why)) return false;
      for (int c = 0; c < src.s.n[1]; ++c)
        if (src.marked[static_cast<size_t>(c)] && !dst.is_marked(h.img[1][static_cast<size_t>(c)])) {
          if (why) *why = "marked edge not preserved";
          return false;
        }
      for (int c = 0; c < src.s.n[2]; ++c)
        if (src.thin[static_cast<size_t>(c)] && !dst.is_thin(h.img[2][static_cast<size_t>(c)])) {
          if (why) *why = "thin triangle not preserved";
          return false;
        }
    }
  for (int i = 0; i < A.nObj; ++i) {
    SRef img = F.hom[static_cast<size_t>(i)][static_cast<size_t>(i)].apply(
        SRef::of_cell(A.idv[static_cast<size_t>(i)], 0));
    if (img != SRef::of_cell(X.idv[static_cast<size_t>(F.obj[static_cast<size_t>(i)])], 0)) {
      if (why) *why = "identity vertex not preserved";
      return false;
    }
  }
  for (int i = 0; i < A.nObj; ++i)
    for (int j = 0; j < A.nObj; ++j)
      for (int k = 0; k < A.nObj; ++k) {
        const HomComp& c = A.comp[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
        for (int d = 0; d <= 3; ++d)
          for (size_t cc = 0; cc < c.P.comp[d].size(); ++cc) {
            auto [r1, r2] = c.P.comp[d][cc];
            SRef lhs = F.hom[static_cast<size_t>(i)][static_cast<size_t>(k)].apply(c.m.img[d][cc]);
            SRef rhs = X.compose_ref(
                F.obj[static_cast<size_t>(i)], F.obj[static_cast<size_t>(j)],
                F.obj[static_cast<size_t>(k)],
                F.hom[static_cast<size_t>(i)][static_cast<size_t>(j)].apply(r1),
                F.hom[static_cast<size_t>(j)][static_cast<size_t>(k)].apply(r2));
            if (lhs != rhs) {
              if (why) *why = "composition square fails";
              return false;
            }
          }
      }
  return true;
}

// ---------------------------------------------------------------------------
// basic cells

inline MarkedSCat msc_point() {
  MarkedSCat X;
  X.nObj = 1;
  X.hom = {{standard_simplex_x(0, Scaling::Flat)}};
  X.idv = {0};
  msc_finish_comp(X, [](int, int, int, const ProductSSet& P) {
    SMap m;
    for (int d = 0; d <= 3; ++d)
      for (size_t c = 0; c < P.comp[d].size(); ++c) m.img[d].push_back(P.comp[d][c].first);
    return m;
  });
  return X;
}

// two objects, hom(0,1) = M; composing with an endpoint identity projects
inline MarkedSCat suspension(const SSetX& M) {
  MarkedSCat X;
  X.nObj = 2;
  SSetX pt = standard_simplex_x(0, Scaling::Flat);
  SSetX none;
  X.hom = {{pt, M}, {none, pt}};
  X.idv = {0, 0};
  msc_finish_comp(X, [](int i, int j, int k, const ProductSSet& P) {
    SMap m;
    (void)k;
    for (int d = 0; d <= 3; ++d)
      for (size_t c = 0; c < P.comp[d].size(); ++c)
        m.img[d].push_back(i == j ? P.comp[d][c].second : P.comp[d][c].first);
    return m;
  });
  return X;
}

// functor between suspensions from a map of the middle homs
inline MSCFunctor suspension_functor(const SMap& f) {
  MSCFunctor F;
  F.obj = {0, 1};
  SMap ptm;
  ptm.img[0] = {SRef::of_cell(0, 0)};
  SMap none;
  F.hom = {{ptm, f}, {none, ptm}};
  return F;
}

inline MarkedSCat cell_c2() { return suspension(standard_simplex_x(1, Scaling::Flat)); }

inline MarkedSCat cell_bd_c2() {
  return suspension(with_scaling(boundary_sset(1), Scaling::Flat));
}

// two parallel edges sharing both endpoints
struct ParallelPair {
  SSetX x;
  PushoutSSet po;  // fromX carries the first edge, fromY the second

  SRef v0() const { return po.fromX.img[0][0]; }
  SRef v1() const { return po.fromX.img[0][1]; }
  SRef e0() const { return po.fromX.img[1][0]; }
  SRef e1() const { return po.fromY.img[1][0]; }
};

inline ParallelPair parallel_pair() {
  ParallelPair PP;
  SMap incl;
  SSetX bd = with_scaling(boundary_sset(1, &incl), Scaling::Flat);
  SSetX edge = standard_simplex_x(1, Scaling::Flat);
  PP.x = pushout_x(bd, edge, edge, incl, incl, &PP.po);
  return PP;
}

struct BdC3 {
  MarkedSCat cat;
  ParallelPair pp;
};

inline BdC3 cell_bd_c3_full() {
  BdC3 B;
  B.pp = parallel_pair();
  B.cat = suspension(B.pp.x);
  return B;
}

inline MarkedSCat cell_bd_c3() { return cell_bd_c3_full().cat; }

// ---------------------------------------------------------------------------
// orientals: objects 0..n, hom(i,j) the nerve of subsets of {i..j} containing
// both endpoints, ordered by inclusion, composition by union

namespace detail {
inline std::vector<int> oriental_hom_elems(int n, int i, int j) {
  std::vector<int> elems;  // bitmasks, ascending
  for (int S = 0; S < (1 << (n + 1)); ++S) {
    if (!(S & (1 << i)) || !(S & (1 << j))) continue;
    bool ok = true;
    for (int b = 0; b <= n && ok; ++b)
      if (S & (1 << b)) ok = b >= i && b <= j;
    if (ok) elems.push_back(S);
  }
  return elems;
}
}  // namespace detail

struct Oriental {
  MarkedSCat cat;
  std::vector<std::vector<std::vector<int>>> elems;  // [i][j] -> subset bitmasks
  std::vector<std::vector<PosetNerve>> nerves;

  int vtx(int i, int j, int mask) const {
    return index_of(elems[static_cast<size_t>(i)][static_cast<size_t>(j)], mask);
  }
};

inline Oriental oriental_full(int n) {
  if (n < 0 || n > 3) throw Error(ErrCode::TruncationBound, "oriental dimension must be 0..3");
  Oriental O;
  MarkedSCat& X = O.cat;
  X.nObj = n + 1;
  O.elems.assign(static_cast<size_t>(n + 1), {});
  O.nerves.assign(static_cast<size_t>(n + 1), {});
  X.hom.resize(static_cast<size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    O.elems[static_cast<size_t>(i)].resize(static_cast<size_t>(n + 1));
    O.nerves[static_cast<size_t>(i)].resize(static_cast<size_t>(n + 1));
    for (int j = 0; j <= n; ++j) {
      if (j < i) {
        X.hom[static_cast<size_t>(i)].push_back(SSetX{});
        continue;
      }
      auto& el = O.elems[static_cast<size_t>(i)][static_cast<size_t>(j)];
      el = detail::oriental_hom_elems(n, i, j);
      PosetNerve& N = O.nerves[static_cast<size_t>(i)][static_cast<size_t>(j)];
      N = poset_nerve(static_cast<int>(el.size()), [&el](int a, int b) {
        return (el[static_cast<size_t>(a)] & el[static_cast<size_t>(b)]) ==
               el[static_cast<size_t>(a)];
      });
      X.hom[static_cast<size_t>(i)].push_back(N.x);
    }
    X.idv.push_back(0);
  }
  msc_finish_comp(X, [&O](int i, int j, int k, const ProductSSet& P) {
    SMap m;
    if (j < i || k < j) return m;
    for (int d = 0; d <= 3; ++d)
      for (size_t c = 0; c < P.comp[d].size(); ++c) {
        std::vector<int> weak;
        for (int v = 0; v <= d; ++v) {
          int vs = P.sset.vertex(SRef::of_cell(static_cast<int>(c), d), v);
          auto [va, vb] = P.comp[0][static_cast<size_t>(vs)];
          int un = O.elems[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(va.cell)] |
                   O.elems[static_cast<size_t>(j)][static_cast<size_t>(k)][static_cast<size_t>(vb.cell)];
          weak.push_back(O.vtx(i, k, un));
        }
        m.img[d].push_back(
            O.nerves[static_cast<size_t>(i)][static_cast<size_t>(k)].from_weak_chain(weak));
      }
    return m;
  });
  return O;
}

inline MarkedSCat oriental(int n) { return oriental_full(n).cat; }

// two-simplex cell with its connecting 2-morphism marked invertible
inline MarkedSCat oriental2_sharp() {
  MarkedSCat X = oriental(2);
  X.hom[0][2].marked[0] = true;
  return X;
}

// three objects; hom(0,2) keeps the direct arrow and the formal composite as
// two discrete vertices
inline MarkedSCat boundary_oriental2() {
  MarkedSCat X;
  X.nObj = 3;
  SSetX pt = standard_simplex_x(0, Scaling::Flat);
  SSetX none;
  SSetX disc2 = with_scaling(boundary_sset(1), Scaling::Flat);
  X.hom = {{pt, pt, disc2}, {none, pt, pt}, {none, none, pt}};
  X.idv = {0, 0, 0};
  msc_finish_comp(X, [](int i, int j, int k, const ProductSSet& P) {
    SMap m;
    for (int d = 0; d <= 3; ++d)
      for (size_t c = 0; c < P.comp[d].size(); ++c) {
        if (i == j) {
          m.img[d].push_back(P.comp[d][c].second);
        } else if (j == k) {
          m.img[d].push_back(P.comp[d][c].first);
        } else {  // the only genuine composite lands on the composite vertex
          Mono s;
          s.dom = static_cast<int8_t>(d);
          s.cod = 0;
          for (int t = 0; t <= d; ++t) s.v[static_cast<size_t>(t)] = 0;
          m.img[d].push_back(SRef{1, s});
        }
      }
    return m;
  });
  return X;
}

// hom(0,3) replacement: two triangles glued along the endpoints of their long
// edges. fromX carries the triangle factoring through object 1, fromY the one
// through object 2.
struct GluedSquareHom {
  SSetX x;
  PushoutSSet po;

  SRef va(int v) const { return po.fromX.img[0][static_cast<size_t>(v)]; }
  SRef vb(int v) const { return po.fromY.img[0][static_cast<size_t>(v)]; }
  SRef ea(int e) const { return po.fromX.img[1][static_cast<size_t>(e)]; }
  SRef eb(int e) const { return po.fromY.img[1][static_cast<size_t>(e)]; }
};

inline GluedSquareHom glued_square_hom() {
  GluedSquareHom G;
  SSetX tri = standard_simplex_x(2, Scaling::Flat);
  SSetX pts = with_scaling(boundary_sset(1), Scaling::Flat);
  SMap ends;  // the two points land on the endpoints of the long edge
  ends.img[0] = {SRef::of_cell(0, 0), SRef::of_cell(2, 0)};
  G.x = pushout_x(pts, tri, tri, ends, ends, &G.po);
  return G;
}

struct BoundaryOriental3 {
  MarkedSCat cat;
  GluedSquareHom G;
};

inline BoundaryOriental3 boundary_oriental3_full() {
  Oriental O3 = oriental_full(3);
  BoundaryOriental3 B;
  B.G = glued_square_hom();
  MarkedSCat& X = B.cat;
  X = O3.cat;
  X.hom[0][3] = B.G.x;
  const GluedSquareHom& G = B.G;

  msc_finish_comp(X, [&O3, &G](int i, int j, int k, const ProductSSet& P) {
    SMap m;
    if (j < i || k < j) return m;
    if (i == j) {
      for (int d = 0; d <= 3; ++d)
        for (size_t c = 0; c < P.comp[d].size(); ++c) m.img[d].push_back(P.comp[d][c].second);
      return m;
    }
    if (j == k) {
      for (int d = 0; d <= 3; ++d)
        for (size_t c = 0; c < P.comp[d].size(); ++c) m.img[d].push_back(P.comp[d][c].first);
      return m;
    }
    if (!(i == 0 && k == 3))
      return O3.cat.comp[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)].m;
    // composites landing in the glued hom(0,3)
    SMap phi;  // the edge-shaped factor, sent into the glued square
    bool second;
    if (j == 1) {
      // (0,1) x (1,3): runs along the short edges of the first triangle
      phi.img[0] = {G.va(1), G.va(2)};
      phi.img[1] = {G.ea(2)};
      second = true;
    } else {
      // (0,2) x (2,3): along the second triangle
      phi.img[0] = {G.vb(1), G.vb(2)};
      phi.img[1] = {G.eb(2)};
      second = false;
    }
    for (int d = 0; d <= 3; ++d)
      for (size_t c = 0; c < P.comp[d].size(); ++c)
        m.img[d].push_back(phi.apply(second ? P.comp[d][c].second : P.comp[d][c].first));
    return m;
  });
  return B;
}

inline MarkedSCat boundary_oriental3() { return boundary_oriental3_full().cat; }

// ---------------------------------------------------------------------------
// collapse functors onto the walking-2-morphism cells

namespace detail {
inline void set_rigid_hom(MSCFunctor& F, const MarkedSCat& A, const MarkedSCat& X, int i, int j,
                          const std::vector<int>& vimg) {
  F.hom[static_cast<size_t>(i)][static_cast<size_t>(j)] = smap_rigid(
      A.H(i, j).s, X.H(F.obj[static_cast<size_t>(i)], F.obj[static_cast<size_t>(j)]).s, vimg);
}
}  // namespace detail

// oriental(2) -> cell_c2; i names the crushed generator
inline MSCFunctor collapse_phi2(int i) {
  MarkedSCat A = oriental(2), X = cell_c2();
  MSCFunctor F = msc_functor_skeleton(A);
  F.obj = i == 0 ? std::vector<int>{0, 0, 1} : std::vector<int>{0, 1, 1};
  for (int a = 0; a < 3; ++a) detail::set_rigid_hom(F, A, X, a, a, {0});
  detail::set_rigid_hom(F, A, X, 0, 2, {0, 1});
  if (i == 0) {
    detail::set_rigid_hom(F, A, X, 0, 1, {0});
    detail::set_rigid_hom(F, A, X, 1, 2, {1});
  } else {
    detail::set_rigid_hom(F, A, X, 0, 1, {1});
    detail::set_rigid_hom(F, A, X, 1, 2, {0});
  }
  return F;
}

// boundary_oriental2 -> cell_bd_c2
inline MSCFunctor collapse_bd_phi2(int i) {
  MarkedSCat A = boundary_oriental2(), X = cell_bd_c2();
  MSCFunctor F = msc_functor_skeleton(A);
  F.obj = i == 0 ? std::vector<int>{0, 0, 1} : std::vector<int>{0, 1, 1};
  for (int a = 0; a < 3; ++a) detail::set_rigid_hom(F, A, X, a, a, {0});
  detail::set_rigid_hom(F, A, X, 0, 2, {0, 1});
  if (i == 0) {
    detail::set_rigid_hom(F, A, X, 0, 1, {0});
    detail::set_rigid_hom(F, A, X, 1, 2, {1});
  } else {
    detail::set_rigid_hom(F, A, X, 0, 1, {1});
    detail::set_rigid_hom(F, A, X, 1, 2, {0});
  }
  return F;
}

// oriental(3) -> cell_c2
inline MSCFunctor collapse_phi3(int i) {
  MarkedSCat A = oriental(3), X = cell_c2();
  MSCFunctor F = msc_functor_skeleton(A);
  F.obj = i == 0 ? std::vector<int>{0, 0, 0, 1} : std::vector<int>{0, 1, 1, 1};
  for (int a = 0; a < 4; ++a) detail::set_rigid_hom(F, A, X, a, a, {0});
  if (i == 0) {
    detail::set_rigid_hom(F, A, X, 0, 1, {0});
    detail::set_rigid_hom(F, A, X, 0, 2, {0, 0});
    detail::set_rigid_hom(F, A, X, 1, 2, {0});
    detail::set_rigid_hom(F, A, X, 0, 3, {0, 0, 1, 1});
    detail::set_rigid_hom(F, A, X, 1, 3, {0, 1});
    detail::set_rigid_hom(F, A, X, 2, 3, {1});
  } else {
    detail::set_rigid_hom(F, A, X, 0, 1, {1});
    detail::set_rigid_hom(F, A, X, 0, 2, {0, 1});
    detail::set_rigid_hom(F, A, X, 1, 2, {0});
    detail::set_rigid_hom(F, A, X, 0, 3, {0, 1, 0, 1});
    detail::set_rigid_hom(F, A, X, 1, 3, {0, 0});
    detail::set_rigid_hom(F, A, X, 2, 3, {0});
  }
  return F;
}

// boundary_oriental3 -> cell_bd_c3
inline MSCFunctor collapse_bd_phi3(int i) {
  BoundaryOriental3 B = boundary_oriental3_full();
  BdC3 C = cell_bd_c3_full();
  const MarkedSCat& A = B.cat;
  const MarkedSCat& X = C.cat;
  MSCFunctor F = msc_functor_skeleton(A);
  F.obj = i == 0 ? std::vector<int>{0, 0, 0, 1} : std::vector<int>{0, 1, 1, 1};
  for (int a = 0; a < 4; ++a) detail::set_rigid_hom(F, A, X, a, a, {0});

  SSet edge = standard_simplex_sset(1);
  SSet tri = standard_simplex_sset(2);
  SMap mE0, mE1;  // the edge onto each parallel copy
  mE0.img[0] = {C.pp.v0(), C.pp.v1()};
  mE0.img[1] = {C.pp.e0()};
  mE1.img[0] = {C.pp.v0(), C.pp.v1()};
  mE1.img[1] = {C.pp.e1()};
  SMap s0 = smap_rigid(tri, edge, {0, 0, 1});
  SMap s1 = smap_rigid(tri, edge, {0, 1, 1});
  SMap vtx1;  // point onto the shared far end
  vtx1.img[0] = {C.pp.v1()};

  SMap hA = compose(mE0, i == 0 ? s0 : s1);
  SMap hB = compose(mE1, i == 0 ? s1 : s0);
  F.hom[0][3] = pushout_induced(B.G.po, tri, tri, hA, hB);

  if (i == 0) {
    detail::set_rigid_hom(F, A, X, 0, 1, {0});
    detail::set_rigid_hom(F, A, X, 0, 2, {0, 0});
    detail::set_rigid_hom(F, A, X, 1, 2, {0});
    F.hom[1][3] = mE0;
    F.hom[2][3] = vtx1;
  } else {
    F.hom[0][1] = vtx1;
    F.hom[0][2] = mE1;
    detail::set_rigid_hom(F, A, X, 1, 2, {0});
    detail::set_rigid_hom(F, A, X, 1, 3, {0, 0});
    detail::set_rigid_hom(F, A, X, 2, 3, {0});
  }
  return F;
}

inline MSCFunctor collapse_map(int n, int i) {
  if (i < 0 || i > 1) throw Error(ErrCode::InvalidInput, "collapse index must be 0 or 1");
  if (n == 2) return collapse_phi2(i);
  if (n == 3) return collapse_phi3(i);
  throw Error(ErrCode::InvalidInput, "collapse is defined for dimensions 2 and 3");
}

inline MSCFunctor collapse_map_boundary(int n, int i) {
  if (i < 0 || i > 1) throw Error(ErrCode::InvalidInput, "collapse index must be 0 or 1");
  if (n == 2) return collapse_bd_phi2(i);
  if (n == 3) return collapse_bd_phi3(i);
  throw Error(ErrCode::InvalidInput, "collapse is defined for dimensions 2 and 3");
}

// ---------------------------------------------------------------------------
// enriched functor enumeration

inline std::vector<MSCFunctor> msc_homs(const MarkedSCat& A, const MarkedSCat& X) {
  std::vector<MSCFunctor> out;
  if (A.nObj == 0) {
    out.push_back(MSCFunctor{});
    return out;
  }
  if (X.nObj == 0) return out;

  // assign short-span homs first so composite constraints prune early
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < A.nObj; ++i)
    for (int j = 0; j < A.nObj; ++j) pairs.push_back({i, j});
  std::stable_sort(pairs.begin(), pairs.end(), [](auto a, auto b) {
    return std::abs(a.second - a.first) < std::abs(b.second - b.first);
  });

  std::vector<int> oRadix(static_cast<size_t>(A.nObj), X.nObj);
  std::vector<int> oAsn;
  first_assignment(oRadix, oAsn);
  do {
    MSCFunctor F;
    F.obj = oAsn;
    F.hom.assign(static_cast<size_t>(A.nObj), std::vector<SMap>(static_cast<size_t>(A.nObj)));
    std::vector<std::vector<bool>> assigned(static_cast<size_t>(A.nObj),
                                            std::vector<bool>(static_cast<size_t>(A.nObj), false));

    auto compat = [&](int i, int k) -> bool {
      if (!assigned[static_cast<size_t>(i)][static_cast<size_t>(k)]) return true;
      for (int j = 0; j < A.nObj; ++j) {
        if (!assigned[static_cast<size_t>(i)][static_cast<size_t>(j)] ||
            !assigned[static_cast<size_t>(j)][static_cast<size_t>(k)])
          continue;
        const HomComp& c = A.comp[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
        for (int d = 0; d <= 3; ++d)
          for (size_t cc = 0; cc < c.P.comp[d].size(); ++cc) {
            auto [r1, r2] = c.P.comp[d][cc];
            SRef lhs = F.hom[static_cast<size_t>(i)][static_cast<size_t>(k)].apply(c.m.img[d][cc]);
            SRef rhs = X.compose_ref(
                F.obj[static_cast<size_t>(i)], F.obj[static_cast<size_t>(j)],
                F.obj[static_cast<size_t>(k)],
                F.hom[static_cast<size_t>(i)][static_cast<size_t>(j)].apply(r1),
                F.hom[static_cast<size_t>(j)][static_cast<size_t>(k)].apply(r2));
            if (lhs != rhs) return false;
          }
      }
      return true;
    };

    std::function<void(size_t)> rec = [&](size_t p) {
      if (p == pairs.size()) {
        out.push_back(F);
        return;
      }
      auto [i, j] = pairs[p];
      const SSetX& src = A.H(i, j);
      const SSetX& dst = X.H(F.obj[static_cast<size_t>(i)], F.obj[static_cast<size_t>(j)]);
      for (const SMap& h : sset_maps(src, dst, true)) {
        if (i == j) {
          SRef img = h.apply(SRef::of_cell(A.idv[static_cast<size_t>(i)], 0));
          if (img != SRef::of_cell(X.idv[static_cast<size_t>(F.obj[static_cast<size_t>(i)])], 0))
            continue;
        }
        F.hom[static_cast<size_t>(i)][static_cast<size_t>(j)] = h;
        assigned[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
        bool ok = true;
        for (int t = 0; t < A.nObj && ok; ++t) ok = compat(i, t) && compat(t, j);
        if (ok) rec(p + 1);
        assigned[static_cast<size_t>(i)][static_cast<size_t>(j)] = false;
      }
      F.hom[static_cast<size_t>(i)][static_cast<size_t>(j)] = SMap{};
    };
    rec(0);
  } while (next_assignment(oRadix, oAsn));

  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// pushout squares and their verification

struct MSCSquare {
  MarkedSCat A, B, C, P;
  MSCFunctor ab, ac, bp, cp;
  std::string name;
};

struct PushoutReport {
  bool commutes = false;
  bool bijective = false;
  int homP = 0;
  int pairs = 0;
};

// checks that restriction along the square legs is a bijection
//   Hom(P,X) -> Hom(B,X) x_{Hom(A,X)} Hom(C,X)
inline PushoutReport verify_pushout(const MSCSquare& S, const MarkedSCat& X) {
  PushoutReport R;
  if (!(msc_compose(S.A, S.bp, S.ab) == msc_compose(S.A, S.cp, S.ac)))
    throw Error(ErrCode::InvalidInput, "pushout square does not commute");
  R.commutes = true;

  std::vector<MSCFunctor> homP = msc_homs(S.P, X);
  std::vector<MSCFunctor> homB = msc_homs(S.B, X);
  std::vector<MSCFunctor> homC = msc_homs(S.C, X);

  std::vector<MSCFunctor> resB, resC;
  for (const MSCFunctor& fb : homB) resB.push_back(msc_compose(S.A, fb, S.ab));
  for (const MSCFunctor& fc : homC) resC.push_back(msc_compose(S.A, fc, S.ac));
  std::sort(resB.begin(), resB.end());
  std::sort(resC.begin(), resC.end());
  int pairCount = 0;
  for (size_t ib = 0, ic = 0; ib < resB.size() && ic < resC.size();) {
    if (resB[ib] < resC[ic]) {
      ++ib;
    } else if (resC[ic] < resB[ib]) {
      ++ic;
    } else {
      size_t jb = ib, jc = ic;
      while (jb < resB.size() && resB[jb] == resB[ib]) ++jb;
      while (jc < resC.size() && resC[jc] == resC[ic]) ++jc;
      pairCount += static_cast<int>((jb - ib) * (jc - ic));
      ib = jb;
      ic = jc;
    }
  }

  std::vector<std::pair<MSCFunctor, MSCFunctor>> images;
  for (const MSCFunctor& fp : homP)
    images.push_back({msc_compose(S.B, fp, S.bp), msc_compose(S.C, fp, S.cp)});
  std::sort(images.begin(), images.end());
  bool distinct = std::adjacent_find(images.begin(), images.end()) == images.end();

  R.homP = static_cast<int>(homP.size());
  R.pairs = pairCount;
  R.bijective = distinct && static_cast<int>(homP.size()) == pairCount;
  return R;
}

// ---------------------------------------------------------------------------
// the named squares

inline MSCSquare square_oriental2() {
  MSCSquare S;
  S.name = "orientalpo2";
  S.A = cell_bd_c2();
  S.B = boundary_oriental2();
  S.C = cell_c2();
  S.P = oriental(2);

  S.ab = msc_functor_skeleton(S.A);
  S.ab.obj = {0, 2};
  detail::set_rigid_hom(S.ab, S.A, S.B, 0, 0, {0});
  detail::set_rigid_hom(S.ab, S.A, S.B, 1, 1, {0});
  detail::set_rigid_hom(S.ab, S.A, S.B, 0, 1, {0, 1});

  S.ac = msc_functor_skeleton(S.A);
  S.ac.obj = {0, 1};
  detail::set_rigid_hom(S.ac, S.A, S.C, 0, 0, {0});
  detail::set_rigid_hom(S.ac, S.A, S.C, 1, 1, {0});
  detail::set_rigid_hom(S.ac, S.A, S.C, 0, 1, {0, 1});

  S.bp = msc_functor_skeleton(S.B);
  S.bp.obj = {0, 1, 2};
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b)
      detail::set_rigid_hom(S.bp, S.B, S.P, a, b,
                            a == 0 && b == 2 ? std::vector<int>{0, 1} : std::vector<int>{0});

  S.cp = msc_functor_skeleton(S.C);
  S.cp.obj = {0, 2};
  detail::set_rigid_hom(S.cp, S.C, S.P, 0, 0, {0});
  detail::set_rigid_hom(S.cp, S.C, S.P, 1, 1, {0});
  detail::set_rigid_hom(S.cp, S.C, S.P, 0, 1, {0, 1});
  return S;
}

inline MSCSquare square_oriental3() {
  MSCSquare S;
  S.name = "orientalpo3";
  BdC3 A = cell_bd_c3_full();
  BoundaryOriental3 B = boundary_oriental3_full();
  Oriental P = oriental_full(3);
  S.A = A.cat;
  S.B = B.cat;
  S.C = cell_c2();
  S.P = P.cat;

  SSet edge = standard_simplex_sset(1);
  SSet tri = standard_simplex_sset(2);

  S.ab = msc_functor_skeleton(S.A);
  S.ab.obj = {0, 3};
  detail::set_rigid_hom(S.ab, S.A, S.B, 0, 0, {0});
  detail::set_rigid_hom(S.ab, S.A, S.B, 1, 1, {0});
  {
    SMap hA, hB;  // each parallel edge onto the long edge of its triangle
    hA.img[0] = {B.G.va(0), B.G.va(2)};
    hA.img[1] = {B.G.ea(1)};
    hB.img[0] = {B.G.vb(0), B.G.vb(2)};
    hB.img[1] = {B.G.eb(1)};
    S.ab.hom[0][1] = pushout_induced(A.pp.po, edge, edge, hA, hB);
  }

  S.ac = msc_functor_skeleton(S.A);
  S.ac.obj = {0, 1};
  detail::set_rigid_hom(S.ac, S.A, S.C, 0, 0, {0});
  detail::set_rigid_hom(S.ac, S.A, S.C, 1, 1, {0});
  S.ac.hom[0][1] =
      pushout_induced(A.pp.po, edge, edge, SMap::identity(edge), SMap::identity(edge));

  S.bp = msc_functor_skeleton(S.B);
  S.bp.obj = {0, 1, 2, 3};
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      if (a == 0 && b == 3) continue;
      S.bp.hom[static_cast<size_t>(a)][static_cast<size_t>(b)] = SMap::identity(S.B.H(a, b).s);
    }
  {
    int v03 = P.vtx(0, 3, 0b1001), v013 = P.vtx(0, 3, 0b1011);
    int v023 = P.vtx(0, 3, 0b1101), v0123 = P.vtx(0, 3, 0b1111);
    const SSet& N = S.P.H(0, 3).s;
    SMap hA = smap_rigid(tri, N, {v03, v013, v0123});
    SMap hB = smap_rigid(tri, N, {v03, v023, v0123});
    S.bp.hom[0][3] = pushout_induced(B.G.po, tri, tri, hA, hB);
  }

  S.cp = msc_functor_skeleton(S.C);
  S.cp.obj = {0, 3};
  detail::set_rigid_hom(S.cp, S.C, S.P, 0, 0, {0});
  detail::set_rigid_hom(S.cp, S.C, S.P, 1, 1, {0});
  detail::set_rigid_hom(S.cp, S.C, S.P, 0, 1, {P.vtx(0, 3, 0b1001), P.vtx(0, 3, 0b1111)});
  return S;
}

// the four collapse squares: crushing a generator of an oriental factors
// through its boundary inclusion
inline std::vector<MSCSquare> squares_c2po() {
  std::vector<MSCSquare> out;
  MSCSquare O2 = square_oriental2();
  MSCSquare O3 = square_oriental3();
  for (int i = 0; i <= 1; ++i) {
    MSCSquare S;
    S.name = "c2po[2," + std::to_string(i) + "]";
    S.A = O2.B;  // boundary of the triangle cell
    S.B = O2.A;  // boundary of the walking 2-morphism
    S.C = O2.P;  // the triangle cell
    S.P = O2.C;  // the walking 2-morphism
    S.ab = collapse_bd_phi2(i);
    S.ac = O2.bp;
    S.bp = O2.ac;
    S.cp = collapse_phi2(i);
    out.push_back(std::move(S));
  }
  for (int i = 0; i <= 1; ++i) {
    MSCSquare S;
    S.name = "c2po[3," + std::to_string(i) + "]";
    S.A = O3.B;
    S.B = O3.A;
    S.C = O3.P;
    S.P = O3.C;
    S.ab = collapse_bd_phi3(i);
    S.ac = O3.bp;
    S.bp = O3.ac;
    S.cp = collapse_phi3(i);
    out.push_back(std::move(S));
  }
  return out;
}

inline std::vector<MSCSquare> msc_squares(const std::string& name) {
  if (name == "orientalpo2") return {square_oriental2()};
  if (name == "orientalpo3") return {square_oriental3()};
  if (name == "c2po") return squares_c2po();
  throw Error(ErrCode::InvalidInput, "unknown pushout square: " + name);
}

// ---------------------------------------------------------------------------
// strict hom-level colimit comparison, for squares whose legs are injective

struct StrictColimitReport {
  bool applicable = false;
  bool objects_match = false;
  bool homs_match = false;

  bool ok() const { return applicable && objects_match && homs_match; }
};

namespace detail {
struct MultiUnion {
  SSetX x;
  std::vector<SMap> incl;
};

inline MultiUnion multi_union(const std::vector<const SSetX*>& parts) {
  MultiUnion U;
  for (const SSetX* p : parts) {
    PushoutSSet PO;
    U.x = disjoint_union_x(U.x, *p, &PO);
    for (SMap& m : U.incl) m = compose(PO.fromX, m);
    U.incl.push_back(PO.fromY);
  }
  return U;
}

// map out of a disjoint union given maps out of the parts
inline SMap union_induced(const MultiUnion& U, const std::vector<const SSetX*>& parts,
                          const std::vector<SMap>& maps) {
  SMap m;
  for (int d = 0; d <= 3; ++d)
    m.img[d].assign(static_cast<size_t>(U.x.s.n[d]), SRef{-1, Mono::id(d)});
  for (size_t t = 0; t < parts.size(); ++t)
    for (int d = 0; d <= 3; ++d)
      for (int c = 0; c < parts[t]->s.n[d]; ++c) {
        const SRef& q = U.incl[t].img[d][static_cast<size_t>(c)];
        assert(q.is_cell());
        m.img[d][static_cast<size_t>(q.cell)] = maps[t].img[d][static_cast<size_t>(c)];
      }
  return m;
}
}  // namespace detail

inline StrictColimitReport strict_colimit_comparison(const MSCSquare& S) {
  StrictColimitReport R;
  auto leg_injective = [](const MarkedSCat& A, const MarkedSCat& X, const MSCFunctor& F) {
    std::vector<bool> seen(static_cast<size_t>(X.nObj), false);
    for (int v : F.obj) {
      if (seen[static_cast<size_t>(v)]) return false;
      seen[static_cast<size_t>(v)] = true;
    }
    for (int i = 0; i < A.nObj; ++i)
      for (int j = 0; j < A.nObj; ++j)
        if (!injective_on_simplices(
                A.H(i, j).s,
                X.H(F.obj[static_cast<size_t>(i)], F.obj[static_cast<size_t>(j)]).s,
                F.hom[static_cast<size_t>(i)][static_cast<size_t>(j)]))
          return false;
    return true;
  };
  if (!leg_injective(S.A, S.B, S.ab) || !leg_injective(S.A, S.C, S.ac)) return R;
  R.applicable = true;

  // object pushout against the objects of P
  detail::UF uf(S.B.nObj + S.C.nObj);
  for (int a = 0; a < S.A.nObj; ++a)
    uf.unite(S.ab.obj[static_cast<size_t>(a)], S.B.nObj + S.ac.obj[static_cast<size_t>(a)]);
  std::map<int, int> classTo;
  std::vector<bool> hit(static_cast<size_t>(S.P.nObj), false);
  R.objects_match = true;
  auto record = [&](int root, int pObj) {
    auto it = classTo.find(root);
    if (it == classTo.end()) {
      if (hit[static_cast<size_t>(pObj)]) R.objects_match = false;
      hit[static_cast<size_t>(pObj)] = true;
      classTo[root] = pObj;
    } else if (it->second != pObj) {
      R.objects_match = false;
    }
  };
  for (int b = 0; b < S.B.nObj; ++b) record(uf.find(b), S.bp.obj[static_cast<size_t>(b)]);
  for (int c = 0; c < S.C.nObj; ++c) record(uf.find(S.B.nObj + c), S.cp.obj[static_cast<size_t>(c)]);
  for (bool h : hit) R.objects_match = R.objects_match && h;

  // hom-level: per pair of objects of P, the homs of B and C glued along
  // those of A must map isomorphically onto the hom of P
  R.homs_match = true;
  for (int x = 0; x < S.P.nObj && R.homs_match; ++x)
    for (int y = 0; y < S.P.nObj && R.homs_match; ++y) {
      std::vector<std::pair<int, int>> bPairs, cPairs, aPairs;
      for (int b1 = 0; b1 < S.B.nObj; ++b1)
        for (int b2 = 0; b2 < S.B.nObj; ++b2)
          if (S.bp.obj[static_cast<size_t>(b1)] == x && S.bp.obj[static_cast<size_t>(b2)] == y)
            bPairs.push_back({b1, b2});
      for (int c1 = 0; c1 < S.C.nObj; ++c1)
        for (int c2 = 0; c2 < S.C.nObj; ++c2)
          if (S.cp.obj[static_cast<size_t>(c1)] == x && S.cp.obj[static_cast<size_t>(c2)] == y)
            cPairs.push_back({c1, c2});
      for (int a1 = 0; a1 < S.A.nObj; ++a1)
        for (int a2 = 0; a2 < S.A.nObj; ++a2)
          if (S.bp.obj[static_cast<size_t>(S.ab.obj[static_cast<size_t>(a1)])] == x &&
              S.bp.obj[static_cast<size_t>(S.ab.obj[static_cast<size_t>(a2)])] == y)
            aPairs.push_back({a1, a2});

      std::vector<const SSetX*> aParts, bParts, cParts;
      for (auto [a1, a2] : aPairs) aParts.push_back(&S.A.H(a1, a2));
      for (auto [b1, b2] : bPairs) bParts.push_back(&S.B.H(b1, b2));
      for (auto [c1, c2] : cPairs) cParts.push_back(&S.C.H(c1, c2));
      detail::MultiUnion UA = detail::multi_union(aParts);
      detail::MultiUnion UB = detail::multi_union(bParts);
      detail::MultiUnion UC = detail::multi_union(cParts);

      auto locate = [](const std::vector<std::pair<int, int>>& ps, std::pair<int, int> q) {
        return static_cast<size_t>(index_of(ps, q));
      };
      std::vector<SMap> aToB, aToC;
      for (auto [a1, a2] : aPairs) {
        std::pair<int, int> bq{S.ab.obj[static_cast<size_t>(a1)], S.ab.obj[static_cast<size_t>(a2)]};
        std::pair<int, int> cq{S.ac.obj[static_cast<size_t>(a1)], S.ac.obj[static_cast<size_t>(a2)]};
        aToB.push_back(compose(UB.incl[locate(bPairs, bq)],
                               S.ab.hom[static_cast<size_t>(a1)][static_cast<size_t>(a2)]));
        aToC.push_back(compose(UC.incl[locate(cPairs, cq)],
                               S.ac.hom[static_cast<size_t>(a1)][static_cast<size_t>(a2)]));
      }
      SMap f = detail::union_induced(UA, aParts, aToB);
      SMap g = detail::union_induced(UA, aParts, aToC);

      PushoutSSet PO;
      SSetX cand = pushout_x(UA.x, UB.x, UC.x, f, g, &PO);

      std::vector<SMap> bToP, cToP;
      for (auto [b1, b2] : bPairs)
        bToP.push_back(S.bp.hom[static_cast<size_t>(b1)][static_cast<size_t>(b2)]);
      for (auto [c1, c2] : cPairs)
        cToP.push_back(S.cp.hom[static_cast<size_t>(c1)][static_cast<size_t>(c2)]);
      SMap hB = detail::union_induced(UB, bParts, bToP);
      SMap hC = detail::union_induced(UC, cParts, cToP);
      SMap induced = pushout_induced(PO, UB.x.s, UC.x.s, hB, hC);

      R.homs_match = is_strict_iso(cand, S.P.H(x, y), induced);
    }
  return R;
}

}  // namespace laxkit
