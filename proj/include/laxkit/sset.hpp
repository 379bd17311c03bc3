#pragma once
// 3-truncated finite simplicial sets.
//
// Only nondegenerate simplices ("cells") are stored; every simplex is a pair
// (cell c, monotone surjection s) in Eilenberg-Zilber normal form, written
// c.s below. Face maps on cells may land on degenerate simplices, so face
// tables hold such pairs (SRef).

#include <array>
#include <cassert>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mono.hpp"

namespace laxkit {

struct SRef {
  int cell = 0;
  Mono surj = Mono::id(0);  // [dim] ->> [base_dim]
  int dim() const { return surj.dom; }
  int base_dim() const { return surj.cod; }
  bool is_cell() const { return surj.is_identity(); }
  bool operator==(const SRef& o) const { return cell == o.cell && surj == o.surj; }
  bool operator!=(const SRef& o) const { return !(*this == o); }
  bool operator<(const SRef& o) const {
    if (surj.cod != o.surj.cod) return surj.cod < o.surj.cod;
    if (cell != o.cell) return cell < o.cell;
    return surj < o.surj;
  }
  static SRef of_cell(int c, int d) { return SRef{c, Mono::id(d)}; }
};

// all monotone surjections [d] ->> [k], lexicographic
inline const std::vector<Mono>& surjections(int d, int k) {
  static std::vector<Mono> table[4][4];
  static bool built = false;
  if (!built) {
    built = true;
    for (int dd = 0; dd <= 3; ++dd)
      for (int kk = 0; kk <= dd; ++kk) {
        std::vector<int> radix(static_cast<size_t>(dd) + 1, kk + 1);
        std::vector<int> a;
        if (!first_assignment(radix, a)) continue;
        do {
          bool mono = true;
          for (int i = 0; i < dd && mono; ++i) mono = a[i] <= a[i + 1];
          if (!mono) continue;
          Mono m;
          m.dom = static_cast<int8_t>(dd);
          m.cod = static_cast<int8_t>(kk);
          for (int i = 0; i <= dd; ++i) m.v[i] = static_cast<int8_t>(a[i]);
          if (m.is_surjective()) table[dd][kk].push_back(m);
        } while (next_assignment(radix, a));
      }
  }
  return table[d][k];
}

class SSet {
 public:
  std::array<int, 4> n{0, 0, 0, 0};  // cells per dimension
  // faces[d][c][i] = d_i(cell c), for 1 <= d <= 3, 0 <= i <= d
  std::array<std::vector<std::array<SRef, 4>>, 4> faces;

  int cells(int d) const { return d < 0 || d > 3 ? 0 : n[d]; }

  int add_cell(int d, const std::vector<SRef>& f) {
    assert(d >= 0 && d <= 3);
    std::array<SRef, 4> row{};
    if (d > 0) {
      assert(static_cast<int>(f.size()) == d + 1);
      for (int i = 0; i <= d; ++i) {
        assert(f[i].dim() == d - 1);
        row[i] = f[i];
      }
    }
    faces[d].push_back(row);
    return n[d]++;
  }

  // the simplex (cell c of dim k) pulled back along an arbitrary monotone
  // f: [e] -> [k]; result in normal form
  SRef act(int k, int c, const Mono& f) const {
    assert(f.cod == k);
    Mono inj, surj;
    ez_factor(f, inj, surj);
    SRef base = cell_face(k, c, inj);
    return SRef{base.cell, compose(base.surj, surj)};
  }

  SRef face(const SRef& r, int i) const {
    assert(r.dim() >= 1);
    return act(r.base_dim(), r.cell, compose(r.surj, Mono::coface(i, r.dim())));
  }

  static SRef degen(const SRef& r, const Mono& s) {  // r pulled back along surjection s
    assert(s.is_surjective() && s.cod == r.dim());
    return SRef{r.cell, compose(r.surj, s)};
  }

  // vertex j of the simplex r, as a dim-0 cell index
  int vertex(const SRef& r, int j) const {
    Mono pt;
    pt.dom = 0;
    pt.cod = static_cast<int8_t>(r.base_dim());
    pt.v[0] = r.surj.v[j];
    return act(r.base_dim(), r.cell, pt).cell;
  }
  std::vector<int> vertices(const SRef& r) const {
    std::vector<int> vs(static_cast<size_t>(r.dim()) + 1);
    for (int j = 0; j <= r.dim(); ++j) vs[static_cast<size_t>(j)] = vertex(r, j);
    return vs;
  }

  // all simplices of dimension d (cells and degeneracies), deterministic order
  std::vector<SRef> all_simplices(int d) const {
    std::vector<SRef> out;
    for (int k = 0; k <= d; ++k)
      for (int c = 0; c < n[k]; ++c)
        for (const Mono& s : surjections(d, k)) out.push_back(SRef{c, s});
    return out;
  }

  bool validate(std::string* why = nullptr) const {
    for (int d = 2; d <= 3; ++d)
      for (int c = 0; c < n[d]; ++c) {
        SRef rc = SRef::of_cell(c, d);
        for (int j = 1; j <= d; ++j)
          for (int i = 0; i < j; ++i) {
            if (face(face(rc, j), i) != face(face(rc, i), j - 1)) {
              if (why)
                *why = "simplicial identity fails at dim " + std::to_string(d) + " cell " +
                       std::to_string(c) + " (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
              return false;
            }
          }
      }
    for (int d = 1; d <= 3; ++d)
      for (int c = 0; c < n[d]; ++c)
        for (int i = 0; i <= d; ++i) {
          const SRef& f = faces[d][static_cast<size_t>(c)][static_cast<size_t>(i)];
          if (f.base_dim() > d - 1 || f.cell >= n[f.base_dim()] || !f.surj.is_surjective()) {
            if (why) *why = "bad face reference";
            return false;
          }
        }
    return true;
  }

 private:
  // iterated face of a cell along an injection [p] >-> [k]
  SRef cell_face(int k, int c, const Mono& inj) const {
    assert(inj.is_injective() && inj.cod == k);
    if (inj.dom == k) return SRef::of_cell(c, k);
    int a = -1;  // largest element of [k] missed by inj
    for (int x = k; x >= 0 && a < 0; --x) {
      bool hit = false;
      for (int i = 0; i <= inj.dom; ++i) hit = hit || inj.v[i] == x;
      if (!hit) a = x;
    }
    Mono rest;  // inj with values above a shifted down: inj = coface(a) . rest
    rest.dom = inj.dom;
    rest.cod = static_cast<int8_t>(k - 1);
    for (int i = 0; i <= inj.dom; ++i)
      rest.v[i] = static_cast<int8_t>(inj.v[i] < a ? inj.v[i] : inj.v[i] - 1);
    const SRef& fr = faces[k][static_cast<size_t>(c)][static_cast<size_t>(a)];
    return act(fr.base_dim(), fr.cell, compose(fr.surj, rest));
  }
};

// A simplicial map, stored on cells; degenerate simplices map by naturality.
struct SMap {
  std::array<std::vector<SRef>, 4> img;  // img[d][c] = image of cell c (an SRef in the target)

  SRef apply(const SRef& r) const {
    const SRef& ic = img[r.base_dim()][static_cast<size_t>(r.cell)];
    return SRef{ic.cell, compose(ic.surj, r.surj)};
  }
  bool operator==(const SMap& o) const { return img == o.img; }
  bool operator<(const SMap& o) const { return img < o.img; }

  static SMap identity(const SSet& X) {
    SMap m;
    for (int d = 0; d <= 3; ++d)
      for (int c = 0; c < X.n[d]; ++c) m.img[d].push_back(SRef::of_cell(c, d));
    return m;
  }
  bool validate(const SSet& X, const SSet& Y, std::string* why = nullptr) const {
    for (int d = 0; d <= 3; ++d) {
      if (static_cast<int>(img[d].size()) != X.n[d]) {
        if (why) *why = "size mismatch at dim " + std::to_string(d);
        return false;
      }
      for (int c = 0; c < X.n[d]; ++c) {
        const SRef& r = img[d][static_cast<size_t>(c)];
        if (r.dim() != d || r.cell >= Y.n[r.base_dim()]) {
          if (why) *why = "image out of range";
          return false;
        }
        for (int i = 0; d > 0 && i <= d; ++i) {
          if (apply(X.faces[d][static_cast<size_t>(c)][static_cast<size_t>(i)]) !=
              Y.face(img[d][static_cast<size_t>(c)], i)) {
            if (why)
              *why = "face compatibility fails at dim " + std::to_string(d) + " cell " +
                     std::to_string(c) + " face " + std::to_string(i);
            return false;
          }
        }
      }
    }
    return true;
  }
};

inline SMap compose(const SMap& g, const SMap& f) {  // g after f
  SMap r;
  for (int d = 0; d <= 3; ++d)
    for (const SRef& x : f.img[d]) r.img[d].push_back(g.apply(x));
  return r;
}

inline bool injective_on_simplices(const SSet& Z, const SSet& /*X*/, const SMap& f) {
  for (int d = 0; d <= 3; ++d) {
    std::vector<SRef> seen;
    for (const SRef& r : Z.all_simplices(d)) {
      SRef i = f.apply(r);
      if (index_of(seen, i) >= 0) return false;
      seen.push_back(i);
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// constructions

inline SSet standard_simplex_sset(int nn) {
  if (nn > 3 || nn < 0) throw Error(ErrCode::TruncationBound, "standard simplex dimension must be 0..3");
  SSet X;
  // cells of dim d: injective monotone [d] -> [nn], lexicographic
  std::array<std::vector<Mono>, 4> inj;
  for (int d = 0; d <= std::min(3, nn); ++d) {
    std::vector<int> radix(static_cast<size_t>(d) + 1, nn + 1);
    std::vector<int> a;
    first_assignment(radix, a);
    do {
      bool strict = true;
      for (int i = 0; i < d && strict; ++i) strict = a[i] < a[i + 1];
      if (!strict) continue;
      Mono m;
      m.dom = static_cast<int8_t>(d);
      m.cod = static_cast<int8_t>(nn);
      for (int i = 0; i <= d; ++i) m.v[i] = static_cast<int8_t>(a[i]);
      inj[d].push_back(m);
    } while (next_assignment(radix, a));
  }
  for (int d = 0; d <= std::min(3, nn); ++d)
    for (const Mono& J : inj[d]) {
      std::vector<SRef> fs;
      for (int i = 0; d > 0 && i <= d; ++i) {
        Mono JJ = compose(J, Mono::coface(i, d));
        fs.push_back(SRef::of_cell(index_of(inj[d - 1], JJ), d - 1));
      }
      X.add_cell(d, fs);
    }
  return X;
}

// nerve of a finite poset/preorder given by leq; cells = strictly increasing chains
inline SSet nerve_of_poset(int m, const std::vector<std::vector<bool>>& leq,
                           std::array<std::vector<std::vector<int>>, 4>* chains_out = nullptr) {
  SSet X;
  std::array<std::vector<std::vector<int>>, 4> chains;
  for (int x = 0; x < m; ++x) chains[0].push_back({x});
  for (int d = 1; d <= 3; ++d)
    for (const auto& ch : chains[d - 1])
      for (int y = 0; y < m; ++y)
        if (ch.back() != y && leq[static_cast<size_t>(ch.back())][static_cast<size_t>(y)]) {
          auto e = ch;
          e.push_back(y);
          chains[d].push_back(e);
        }
  for (int d = 0; d <= 3; ++d)
    for (const auto& ch : chains[d]) {
      std::vector<SRef> fs;
      for (int i = 0; d > 0 && i <= d; ++i) {
        std::vector<int> sub;
        for (int j = 0; j <= d; ++j)
          if (j != i) sub.push_back(ch[static_cast<size_t>(j)]);
        fs.push_back(SRef::of_cell(index_of(chains[d - 1], sub), d - 1));
      }
      X.add_cell(d, fs);
    }
  if (chains_out) *chains_out = chains;
  return X;
}

// subcomplex spanned by kept cells (must be face-closed); returns inclusion
inline SSet subcomplex(const SSet& X, const std::array<std::vector<bool>, 4>& keep, SMap* incl = nullptr) {
  SSet S;
  std::array<std::vector<int>, 4> newIdx;
  for (int d = 0; d <= 3; ++d) newIdx[d].assign(static_cast<size_t>(X.n[d]), -1);
  for (int d = 0; d <= 3; ++d)
    for (int c = 0; c < X.n[d]; ++c) {
      if (!keep[d][static_cast<size_t>(c)]) continue;
      std::vector<SRef> fs;
      for (int i = 0; d > 0 && i <= d; ++i) {
        SRef f = X.faces[d][static_cast<size_t>(c)][static_cast<size_t>(i)];
        int ni = newIdx[f.base_dim()][static_cast<size_t>(f.cell)];
        assert(ni >= 0 && "subcomplex not face-closed");
        fs.push_back(SRef{ni, f.surj});
      }
      newIdx[d][static_cast<size_t>(c)] = S.add_cell(d, fs);
    }
  if (incl) {
    for (int d = 0; d <= 3; ++d) {
      incl->img[d].clear();
      for (int c = 0; c < S.n[d]; ++c) incl->img[d].push_back(SRef{});
    }
    for (int d = 0; d <= 3; ++d)
      for (int c = 0; c < X.n[d]; ++c)
        if (newIdx[d][static_cast<size_t>(c)] >= 0)
          incl->img[d][static_cast<size_t>(newIdx[d][static_cast<size_t>(c)])] = SRef::of_cell(c, d);
  }
  return S;
}

inline SSet boundary_sset(int nn, SMap* incl = nullptr, SSet* full = nullptr) {
  SSet X = standard_simplex_sset(nn);
  std::array<std::vector<bool>, 4> keep;
  for (int d = 0; d <= 3; ++d) keep[d].assign(static_cast<size_t>(X.n[d]), d < nn);
  SSet B = subcomplex(X, keep, incl);
  if (full) *full = X;
  return B;
}

// inner horn of the 2-simplex: drop the top cell and the face skipping vertex k
inline SSet horn2(int k, SMap* incl = nullptr) {
  SSet X = standard_simplex_sset(2);
  std::array<std::vector<bool>, 4> keep;
  for (int d = 0; d <= 3; ++d) keep[d].assign(static_cast<size_t>(X.n[d]), true);
  keep[2][0] = false;
  SRef top = SRef::of_cell(0, 2);
  keep[1][static_cast<size_t>(X.face(top, k).cell)] = false;
  return subcomplex(X, keep, incl);
}

// ---------------------------------------------------------------------------
// product

struct ProductSSet {
  SSet sset;
  // per dim, per cell: the two component refs
  std::array<std::vector<std::pair<SRef, SRef>>, 4> comp;
  SMap projX, projY;
  std::array<std::map<std::pair<SRef, SRef>, int>, 4> lookup;

  // pair of refs of equal dim -> product ref (joint normal form)
  SRef pair_ref(const SRef& rx, const SRef& ry) const {
    assert(rx.dim() == ry.dim());
    int d = rx.dim();
    // build the joint surjection t collapsing positions where both repeat
    Mono t;
    t.dom = static_cast<int8_t>(d);
    int level = 0;
    t.v[0] = 0;
    for (int i = 1; i <= d; ++i) {
      bool bothRepeat = rx.surj.v[i] == rx.surj.v[i - 1] && ry.surj.v[i] == ry.surj.v[i - 1];
      if (!bothRepeat) ++level;
      t.v[i] = static_cast<int8_t>(level);
    }
    t.cod = static_cast<int8_t>(level);
    // strip t from both components: sx = sx' . t with sx'(t(i)) = sx(i)
    Mono sx, sy;
    sx.dom = sy.dom = t.cod;
    sx.cod = rx.surj.cod;
    sy.cod = ry.surj.cod;
    for (int i = 0; i <= d; ++i) {
      sx.v[t.v[i]] = rx.surj.v[i];
      sy.v[t.v[i]] = ry.surj.v[i];
    }
    auto it = lookup[t.cod].find({SRef{rx.cell, sx}, SRef{ry.cell, sy}});
    assert(it != lookup[t.cod].end());
    return SRef{it->second, t};
  }
};

inline ProductSSet product(const SSet& X, const SSet& Y) {
  ProductSSet P;
  for (int d = 0; d <= 3; ++d) {
    for (const SRef& rx : X.all_simplices(d))
      for (const SRef& ry : Y.all_simplices(d)) {
        bool jointDeg = false;
        for (int i = 0; i < d && !jointDeg; ++i)
          jointDeg = rx.surj.v[i] == rx.surj.v[i + 1] && ry.surj.v[i] == ry.surj.v[i + 1];
        if (jointDeg) continue;
        P.comp[d].push_back({rx, ry});
        P.lookup[d][{rx, ry}] = static_cast<int>(P.comp[d].size()) - 1;
      }
  }
  for (int d = 0; d <= 3; ++d)
    for (size_t c = 0; c < P.comp[d].size(); ++c) {
      std::vector<SRef> fs;
      for (int i = 0; d > 0 && i <= d; ++i)
        fs.push_back(P.pair_ref(X.face(P.comp[d][c].first, i), Y.face(P.comp[d][c].second, i)));
      P.sset.add_cell(d, fs);
    }
  for (int d = 0; d <= 3; ++d)
    for (size_t c = 0; c < P.comp[d].size(); ++c) {
      P.projX.img[d].push_back(P.comp[d][c].first);
      P.projY.img[d].push_back(P.comp[d][c].second);
    }
  return P;
}

// ---------------------------------------------------------------------------
// pushout along a span X <-f- Z -g-> Y (at least one leg injective on simplices)

struct PushoutSSet {
  SSet sset;
  SMap fromX, fromY;
};

namespace detail {
struct UF {
  std::vector<int> p;
  explicit UF(int nn) : p(static_cast<size_t>(nn)) {
    for (int i = 0; i < nn; ++i) p[static_cast<size_t>(i)] = i;
  }
  int find(int x) { return p[static_cast<size_t>(x)] == x ? x : p[static_cast<size_t>(x)] = find(p[static_cast<size_t>(x)]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};
}  // namespace detail

inline PushoutSSet pushout(const SSet& Z, const SSet& X, const SSet& Y, const SMap& f, const SMap& g) {
  if (!injective_on_simplices(Z, X, f) && !injective_on_simplices(Z, Y, g))
    throw Error(ErrCode::UnsupportedPushout, "pushout requires one injective leg");

  // index the simplices of X u Y per dimension
  std::array<std::vector<std::pair<int, SRef>>, 4> simp;  // (side, ref)
  std::array<std::map<std::pair<int, SRef>, int>, 4> sidx;
  for (int d = 0; d <= 3; ++d) {
    for (const SRef& r : X.all_simplices(d)) {
      sidx[d][{0, r}] = static_cast<int>(simp[d].size());
      simp[d].push_back({0, r});
    }
    for (const SRef& r : Y.all_simplices(d)) {
      sidx[d][{1, r}] = static_cast<int>(simp[d].size());
      simp[d].push_back({1, r});
    }
  }
  std::array<detail::UF, 4> uf{detail::UF(static_cast<int>(simp[0].size())),
                               detail::UF(static_cast<int>(simp[1].size())),
                               detail::UF(static_cast<int>(simp[2].size())),
                               detail::UF(static_cast<int>(simp[3].size()))};
  for (int d = 0; d <= 3; ++d)
    for (const SRef& r : Z.all_simplices(d))
      uf[d].unite(sidx[d].at({0, f.apply(r)}), sidx[d].at({1, g.apply(r)}));

  // quotient cells = classes all of whose members are nondegenerate
  PushoutSSet R;
  std::array<std::vector<int>, 4> cellOf;  // class root -> quotient cell index (or -1)
  std::array<std::vector<bool>, 4> degClass;
  for (int d = 0; d <= 3; ++d) {
    cellOf[d].assign(simp[d].size(), -1);
    degClass[d].assign(simp[d].size(), false);
    for (size_t k = 0; k < simp[d].size(); ++k)
      if (!simp[d][k].second.is_cell()) degClass[d][static_cast<size_t>(uf[d].find(static_cast<int>(k)))] = true;
  }

  // quotient normal form, memoized per simplex index
  std::array<std::vector<SRef>, 4> qnf;
  std::array<std::vector<bool>, 4> qdone;
  for (int d = 0; d <= 3; ++d) {
    qnf[d].assign(simp[d].size(), SRef{});
    qdone[d].assign(simp[d].size(), false);
  }

  // first pass per dimension: allocate quotient cells bottom-up and fill faces
  std::function<SRef(int, int)> norm = [&](int d, int idx) -> SRef {
    int root = uf[d].find(idx);
    if (qdone[d][static_cast<size_t>(root)]) {
      const SRef& nf = qnf[d][static_cast<size_t>(root)];
      return nf;
    }
    SRef result;
    if (!degClass[d][static_cast<size_t>(root)]) {
      // nondegenerate class: its quotient cell was allocated in the bottom-up sweep
      assert(cellOf[d][static_cast<size_t>(root)] >= 0);
      result = SRef::of_cell(cellOf[d][static_cast<size_t>(root)], d);
    } else {
      // find the minimal degenerate member and strip its surjection
      int pick = -1;
      for (size_t k = 0; k < simp[d].size(); ++k)
        if (uf[d].find(static_cast<int>(k)) == root && !simp[d][k].second.is_cell()) {
          pick = static_cast<int>(k);
          break;
        }
      auto [side, r] = simp[d][static_cast<size_t>(pick)];
      int kd = r.base_dim();
      SRef baseNf = norm(kd, sidx[kd].at({side, SRef::of_cell(r.cell, kd)}));
      result = SRef{baseNf.cell, compose(baseNf.surj, r.surj)};
    }
    qdone[d][static_cast<size_t>(root)] = true;
    qnf[d][static_cast<size_t>(root)] = result;
    return result;
  };

  for (int d = 0; d <= 3; ++d) {
    // allocate quotient cells of dim d in order of minimal member
    for (size_t k = 0; k < simp[d].size(); ++k) {
      int root = uf[d].find(static_cast<int>(k));
      if (root != static_cast<int>(k) || degClass[d][static_cast<size_t>(root)]) continue;
      auto [side, rep] = simp[d][k];  // representative is nondegenerate
      std::vector<SRef> fs;
      for (int i = 0; d > 0 && i <= d; ++i) {
        const SSet& S = side == 0 ? X : Y;
        SRef fr = S.face(rep, i);
        fs.push_back(norm(d - 1, sidx[d - 1].at({side, fr})));
      }
      cellOf[d][static_cast<size_t>(root)] = R.sset.add_cell(d, fs);
    }
  }
  for (int d = 0; d <= 3; ++d) {
    for (int c = 0; c < X.n[d]; ++c)
      R.fromX.img[d].push_back(norm(d, sidx[d].at({0, SRef::of_cell(c, d)})));
    for (int c = 0; c < Y.n[d]; ++c)
      R.fromY.img[d].push_back(norm(d, sidx[d].at({1, SRef::of_cell(c, d)})));
  }
  return R;
}

// map out of a pushout induced by maps on the two legs (must agree on the span)
inline SMap pushout_induced(const PushoutSSet& PO, const SSet& X, const SSet& Y, const SMap& hX,
                            const SMap& hY) {
  SMap m;
  for (int d = 0; d <= 3; ++d) {
    m.img[d].assign(static_cast<size_t>(PO.sset.n[d]), SRef{-1, Mono::id(d)});
    for (int c = 0; c < X.n[d]; ++c) {
      const SRef& q = PO.fromX.img[d][static_cast<size_t>(c)];
      if (q.is_cell()) m.img[d][static_cast<size_t>(q.cell)] = hX.img[d][static_cast<size_t>(c)];
    }
    for (int c = 0; c < Y.n[d]; ++c) {
      const SRef& q = PO.fromY.img[d][static_cast<size_t>(c)];
      if (q.is_cell() && m.img[d][static_cast<size_t>(q.cell)].cell < 0)
        m.img[d][static_cast<size_t>(q.cell)] = hY.img[d][static_cast<size_t>(c)];
    }
    for (const SRef& r : m.img[d]) {
      (void)r;
      assert(r.cell >= 0 && "pushout cell without preimage");
    }
  }
  return m;
}

inline SSet empty_sset() { return SSet{}; }

inline PushoutSSet disjoint_union(const SSet& X, const SSet& Y) {
  SMap f, g;  // empty maps out of the empty sset
  return pushout(empty_sset(), X, Y, f, g);
}

// ---------------------------------------------------------------------------
// op-dual: same cells, vertex order reversed

inline SRef op_ref(const SRef& r) { return SRef{r.cell, r.surj.reversed()}; }

inline SSet op_dual_sset(const SSet& X) {
  SSet R;
  for (int d = 0; d <= 3; ++d)
    for (int c = 0; c < X.n[d]; ++c) {
      std::vector<SRef> fs;
      for (int i = 0; d > 0 && i <= d; ++i)
        fs.push_back(op_ref(X.faces[d][static_cast<size_t>(c)][static_cast<size_t>(d - i)]));
      R.add_cell(d, fs);
    }
  return R;
}

}  // namespace laxkit
