#pragma once
// Scalings (thin 2-simplices) and markings (marked edges) on 3-truncated
// simplicial sets; Gray tensor products; the saturation closure engine;
// enumeration of structure-preserving maps; isomorphism testing.
//
// Degenerate 2-simplices are always thin and degenerate edges always marked,
// so the stored flags range over nondegenerate cells only.

#include <algorithm>

#include "sset.hpp"

namespace laxkit {

enum class Scaling { Flat, Sharp };

struct SSetX {
  SSet s;
  std::vector<bool> thin;    // per 2-cell
  std::vector<bool> marked;  // per 1-cell

  bool is_thin(const SRef& r) const {
    assert(r.dim() == 2);
    if (!r.is_cell()) return true;
    return thin[static_cast<size_t>(r.cell)];
  }
  bool is_marked(const SRef& r) const {
    assert(r.dim() == 1);
    if (!r.is_cell()) return true;
    return marked[static_cast<size_t>(r.cell)];
  }
  int thin_count() const { return static_cast<int>(std::count(thin.begin(), thin.end(), true)); }
  int marked_count() const { return static_cast<int>(std::count(marked.begin(), marked.end(), true)); }
};

inline SSetX with_scaling(const SSet& s, Scaling sc) {
  SSetX X;
  X.s = s;
  X.thin.assign(static_cast<size_t>(s.n[2]), sc == Scaling::Sharp);
  X.marked.assign(static_cast<size_t>(s.n[1]), false);
  return X;
}

inline SSetX standard_simplex_x(int n, Scaling sc) { return with_scaling(standard_simplex_sset(n), sc); }

inline SSetX delta1_marked() {
  SSetX X = standard_simplex_x(1, Scaling::Flat);
  X.marked[0] = true;
  return X;
}

// ---------------------------------------------------------------------------
// products and tensors

// cartesian product: thin/marked componentwise
inline SSetX product_x(const SSetX& X, const SSetX& Y, ProductSSet* P_out = nullptr) {
  ProductSSet P = product(X.s, Y.s);
  SSetX R;
  R.s = P.sset;
  for (const auto& [rx, ry] : P.comp[2]) R.thin.push_back(X.is_thin(rx) && Y.is_thin(ry));
  for (const auto& [rx, ry] : P.comp[1]) R.marked.push_back(X.is_marked(rx) && Y.is_marked(ry));
  if (P_out) *P_out = P;
  return R;
}

// Gray tensor: (sigma_X, sigma_Y) thin iff both thin and the 1->2 edge of
// sigma_X or the 0->1 edge of sigma_Y is degenerate
inline SSetX gray_tensor(const SSetX& X, const SSetX& Y, ProductSSet* P_out = nullptr) {
  ProductSSet P = product(X.s, Y.s);
  SSetX R;
  R.s = P.sset;
  for (const auto& [rx, ry] : P.comp[2]) {
    bool both = X.is_thin(rx) && Y.is_thin(ry);
    bool esc = !X.s.face(rx, 0).is_cell() || !Y.s.face(ry, 2).is_cell();
    R.thin.push_back(both && esc);
  }
  for (const auto& [rx, ry] : P.comp[1]) R.marked.push_back(X.is_marked(rx) && Y.is_marked(ry));
  if (P_out) *P_out = P;
  return R;
}

// marked Gray tensor: membership in E (first factor) / F (second factor)
// replaces degeneracy; E, F are over nondegenerate edges, with degenerate
// edges always counting as members
inline SSetX marked_gray_tensor(const SSetX& X, const std::vector<bool>& E, const SSetX& Y,
                                const std::vector<bool>& F, ProductSSet* P_out = nullptr) {
  if (static_cast<int>(E.size()) != X.s.n[1] || static_cast<int>(F.size()) != Y.s.n[1])
    throw Error(ErrCode::InvalidMarking, "edge marking has wrong length");
  auto inE = [&](const SRef& r) { return !r.is_cell() || E[static_cast<size_t>(r.cell)]; };
  auto inF = [&](const SRef& r) { return !r.is_cell() || F[static_cast<size_t>(r.cell)]; };
  ProductSSet P = product(X.s, Y.s);
  SSetX R;
  R.s = P.sset;
  for (const auto& [rx, ry] : P.comp[2]) {
    bool both = X.is_thin(rx) && Y.is_thin(ry);
    bool esc = inE(X.s.face(rx, 0)) || inF(Y.s.face(ry, 2));
    R.thin.push_back(both && esc);
  }
  for (const auto& [rx, ry] : P.comp[1]) R.marked.push_back(X.is_marked(rx) && Y.is_marked(ry));
  if (P_out) *P_out = P;
  return R;
}

// ---------------------------------------------------------------------------
// saturation: least fixed point closing the scaling under the rule that for
// every 3-simplex (possibly degenerate) and inner face index i, thinness of
// the other three faces forces thinness of d_i

inline SSetX saturate_scaling(const SSetX& X) {
  SSetX R = X;
  std::vector<SRef> threes = X.s.all_simplices(3);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const SRef& t : threes)
      for (int i = 1; i <= 2; ++i) {
        SRef di = R.s.face(t, i);
        if (R.is_thin(di)) continue;
        bool others = true;
        for (int j = 0; j <= 3 && others; ++j)
          if (j != i) others = R.is_thin(R.s.face(t, j));
        if (others) {
          R.thin[static_cast<size_t>(di.cell)] = true;
          changed = true;
        }
      }
  }
  return R;
}

// ---------------------------------------------------------------------------
// pushouts, duals

inline SSetX pushout_x(const SSetX& Z, const SSetX& X, const SSetX& Y, const SMap& f, const SMap& g,
                       PushoutSSet* PO_out = nullptr) {
  PushoutSSet PO = pushout(Z.s, X.s, Y.s, f, g);
  SSetX R;
  R.s = PO.sset;
  R.thin.assign(static_cast<size_t>(PO.sset.n[2]), false);
  R.marked.assign(static_cast<size_t>(PO.sset.n[1]), false);
  for (int c = 0; c < X.s.n[2]; ++c)
    if (X.thin[static_cast<size_t>(c)]) {
      SRef q = PO.fromX.img[2][static_cast<size_t>(c)];
      if (q.is_cell()) R.thin[static_cast<size_t>(q.cell)] = true;
    }
  for (int c = 0; c < Y.s.n[2]; ++c)
    if (Y.thin[static_cast<size_t>(c)]) {
      SRef q = PO.fromY.img[2][static_cast<size_t>(c)];
      if (q.is_cell()) R.thin[static_cast<size_t>(q.cell)] = true;
    }
  for (int c = 0; c < X.s.n[1]; ++c)
    if (X.marked[static_cast<size_t>(c)]) {
      SRef q = PO.fromX.img[1][static_cast<size_t>(c)];
      if (q.is_cell()) R.marked[static_cast<size_t>(q.cell)] = true;
    }
  for (int c = 0; c < Y.s.n[1]; ++c)
    if (Y.marked[static_cast<size_t>(c)]) {
      SRef q = PO.fromY.img[1][static_cast<size_t>(c)];
      if (q.is_cell()) R.marked[static_cast<size_t>(q.cell)] = true;
    }
  if (PO_out) *PO_out = PO;
  return R;
}

inline SSetX disjoint_union_x(const SSetX& X, const SSetX& Y, PushoutSSet* PO_out = nullptr) {
  SSetX Z;
  SMap f, g;
  return pushout_x(Z, X, Y, f, g, PO_out);
}

inline SSetX op_dual_x(const SSetX& X) {
  SSetX R;
  R.s = op_dual_sset(X.s);
  R.thin = X.thin;  // op keeps cell indices
  R.marked = X.marked;
  return R;
}

// ---------------------------------------------------------------------------
// map enumeration: all simplicial maps X -> Y sending thin to thin (and, when
// requested, marked to marked), in deterministic lexicographic order on the
// images of the vertices of X

inline std::vector<SMap> sset_maps(const SSetX& X, const SSetX& Y, bool respect_marked = false) {
  std::array<std::vector<SRef>, 4> cand;
  for (int d = 0; d <= 3; ++d) cand[d] = Y.s.all_simplices(d);

  std::vector<SMap> out;
  SMap cur;
  for (int d = 0; d <= 3; ++d) cur.img[d].assign(static_cast<size_t>(X.s.n[d]), SRef{});

  std::function<void(int, int)> rec = [&](int d, int c) {
    if (d > 3) {
      out.push_back(cur);
      return;
    }
    if (c >= X.s.n[d]) {
      rec(d + 1, 0);
      return;
    }
    for (const SRef& r : cand[d]) {
      if (d == 2 && X.thin[static_cast<size_t>(c)] && !Y.is_thin(r)) continue;
      if (d == 1 && respect_marked && X.is_marked(SRef::of_cell(c, 1)) && !Y.is_marked(r)) continue;
      bool ok = true;
      for (int i = 0; d > 0 && i <= d && ok; ++i)
        ok = cur.apply(X.s.faces[d][static_cast<size_t>(c)][static_cast<size_t>(i)]) == Y.s.face(r, i);
      if (!ok) continue;
      cur.img[d][static_cast<size_t>(c)] = r;
      rec(d, c + 1);
    }
    cur.img[d][static_cast<size_t>(c)] = SRef{};
  };
  rec(0, 0);

  std::sort(out.begin(), out.end(), [&](const SMap& a, const SMap& b) {
    if (a.img[0] != b.img[0]) return a.img[0] < b.img[0];
    return a.img < b.img;
  });
  return out;
}

// maps of plain simplicial sets (no scaling constraint)
inline std::vector<SMap> sset_maps_plain(const SSet& X, const SSet& Y) {
  return sset_maps(with_scaling(X, Scaling::Flat), with_scaling(Y, Scaling::Flat));
}

// ---------------------------------------------------------------------------
// comparisons

inline bool ssetx_equal(const SSetX& A, const SSetX& B) {
  return A.s.n == B.s.n && A.s.faces == B.s.faces && A.thin == B.thin && A.marked == B.marked;
}

// does the cell bijection m present A and B as the same scaled/marked sset?
inline bool is_strict_iso(const SSetX& A, const SSetX& B, const SMap& m) {
  std::string why;
  if (!m.validate(A.s, B.s, &why)) return false;
  for (int d = 0; d <= 3; ++d) {
    if (A.s.n[d] != B.s.n[d]) return false;
    std::vector<bool> hit(static_cast<size_t>(B.s.n[d]), false);
    for (int c = 0; c < A.s.n[d]; ++c) {
      const SRef& r = m.img[d][static_cast<size_t>(c)];
      if (!r.is_cell() || hit[static_cast<size_t>(r.cell)]) return false;
      hit[static_cast<size_t>(r.cell)] = true;
    }
  }
  for (int c = 0; c < A.s.n[2]; ++c)
    if (A.thin[static_cast<size_t>(c)] != B.thin[static_cast<size_t>(m.img[2][static_cast<size_t>(c)].cell)])
      return false;
  for (int c = 0; c < A.s.n[1]; ++c)
    if (A.marked[static_cast<size_t>(c)] != B.marked[static_cast<size_t>(m.img[1][static_cast<size_t>(c)].cell)])
      return false;
  return true;
}

// exhaustive isomorphism search (cells assigned dimension by dimension)
inline bool ssetx_isomorphic(const SSetX& A, const SSetX& B, SMap* witness = nullptr) {
  for (int d = 0; d <= 3; ++d)
    if (A.s.n[d] != B.s.n[d]) return false;
  if (A.thin_count() != B.thin_count() || A.marked_count() != B.marked_count()) return false;

  SMap cur;
  std::array<std::vector<bool>, 4> used;
  for (int d = 0; d <= 3; ++d) {
    cur.img[d].assign(static_cast<size_t>(A.s.n[d]), SRef{});
    used[d].assign(static_cast<size_t>(B.s.n[d]), false);
  }
  std::function<bool(int, int)> rec = [&](int d, int c) -> bool {
    if (d > 3) return true;
    if (c >= A.s.n[d]) return rec(d + 1, 0);
    for (int t = 0; t < B.s.n[d]; ++t) {
      if (used[d][static_cast<size_t>(t)]) continue;
      if (d == 2 && A.thin[static_cast<size_t>(c)] != B.thin[static_cast<size_t>(t)]) continue;
      if (d == 1 && A.marked[static_cast<size_t>(c)] != B.marked[static_cast<size_t>(t)]) continue;
      SRef r = SRef::of_cell(t, d);
      bool ok = true;
      for (int i = 0; d > 0 && i <= d && ok; ++i)
        ok = cur.apply(A.s.faces[d][static_cast<size_t>(c)][static_cast<size_t>(i)]) == B.s.face(r, i);
      if (!ok) continue;
      used[d][static_cast<size_t>(t)] = true;
      cur.img[d][static_cast<size_t>(c)] = r;
      if (rec(d, c + 1)) return true;
      used[d][static_cast<size_t>(t)] = false;
    }
    cur.img[d][static_cast<size_t>(c)] = SRef{};
    return false;
  };
  if (!rec(0, 0)) return false;
  if (witness) *witness = cur;
  return true;
}

}  // namespace laxkit
