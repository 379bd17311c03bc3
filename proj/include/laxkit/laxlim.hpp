#pragma once
// Partially lax and weighted (co)limits of Cat-valued diagrams over finite
// bases. Limits are computed as marked section categories of the total
// projection, colimits as localization presentations of the total category;
// both come with exhaustive universal-property verifiers over a fixed roster
// of probe categories.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fib.hpp"

namespace laxkit {

// ---------------------------------------------------------------------------
// diagrams with a marked class of base morphisms

// E contains the identities and is closed under composition with invertible
// morphisms; with an identity leg this forces every iso into E
struct MarkedDiagram {
  CatDiagram D;
  std::vector<char> E;  // per base morphism

  bool validate(std::string* why = nullptr) const {
    if (!D.validate(why)) return false;
    const FinCat& B = D.base;
    if (static_cast<int>(E.size()) != B.nMor()) {
      if (why) *why = "marking size does not match the base";
      return false;
    }
    for (int x = 0; x < B.nObj; ++x)
      if (!E[static_cast<size_t>(B.idOf[static_cast<size_t>(x)])]) {
        if (why) *why = "marking must contain the identities";
        return false;
      }
    for (int f = 0; f < B.nMor(); ++f) {
      if (!E[static_cast<size_t>(f)]) continue;
      for (int g = 0; g < B.nMor(); ++g) {
        if (!B.is_iso(g)) continue;
        if (B.dst[static_cast<size_t>(f)] == B.src[static_cast<size_t>(g)] &&
            !E[static_cast<size_t>(B.compose(g, f))]) {
          if (why) *why = "marking not closed under postcomposition with an iso";
          return false;
        }
        if (B.dst[static_cast<size_t>(g)] == B.src[static_cast<size_t>(f)] &&
            !E[static_cast<size_t>(B.compose(f, g))]) {
          if (why) *why = "marking not closed under precomposition with an iso";
          return false;
        }
      }
    }
    return true;
  }
};

inline MarkedDiagram mark_none(const CatDiagram& D) {
  MarkedDiagram M{D, std::vector<char>(static_cast<size_t>(D.base.nMor()), 0)};
  for (int m = 0; m < D.base.nMor(); ++m)
    if (D.base.is_iso(m)) M.E[static_cast<size_t>(m)] = 1;
  return M;
}

inline MarkedDiagram mark_all(const CatDiagram& D) {
  return MarkedDiagram{D, std::vector<char>(static_cast<size_t>(D.base.nMor()), 1)};
}

// ---------------------------------------------------------------------------
// marked section categories

struct SectionsCat {
  FinCat cat;
  std::vector<FinFunctor> secs;         // sections of the projection
  std::vector<std::vector<int>> nats;   // per cat morphism, component per base object
};

// strict sections of p: T -> B; marked base morphisms must land on
// cocartesian (kind 0) or cartesian (kind 1) edges; morphisms are
// transformations whose components lie over identities
inline SectionsCat sections_over(const FinCat& B, const FinCat& T, const FinFunctor& p,
                                 const std::vector<char>& marked, int kind) {
  SectionsCat R;
  std::vector<char> univ(static_cast<size_t>(T.nMor()), 0);
  for (int m = 0; m < T.nMor(); ++m)
    univ[static_cast<size_t>(m)] =
        kind == 0 ? mor_is_cocartesian(T, B, p, m) : mor_is_cartesian(T, B, p, m);

  std::vector<std::vector<int>> over(static_cast<size_t>(B.nObj));
  for (int t = 0; t < T.nObj; ++t) over[static_cast<size_t>(p.obj[static_cast<size_t>(t)])].push_back(t);

  FinFunctor s;
  s.obj.assign(static_cast<size_t>(B.nObj), -1);
  s.mor.assign(static_cast<size_t>(B.nMor()), -1);
  std::vector<int> free;
  for (int m = 0; m < B.nMor(); ++m)
    if (!B.is_identity(m)) free.push_back(m);

  std::function<void(size_t)> recM = [&](size_t k) {
    if (k == free.size()) {
      std::string why;
      if (s.validate(B, T, &why)) R.secs.push_back(s);
      return;
    }
    int f = free[k];
    int a = B.src[static_cast<size_t>(f)], b = B.dst[static_cast<size_t>(f)];
    for (int m :
         T.hom(s.obj[static_cast<size_t>(a)], s.obj[static_cast<size_t>(b)])) {
      if (p.mor[static_cast<size_t>(m)] != f) continue;
      if (marked[static_cast<size_t>(f)] && !univ[static_cast<size_t>(m)]) continue;
      s.mor[static_cast<size_t>(f)] = m;
      bool ok = true;
      for (int g = 0; g < B.nMor() && ok; ++g) {
        if (s.mor[static_cast<size_t>(g)] < 0) continue;
        if (B.dst[static_cast<size_t>(g)] == B.src[static_cast<size_t>(f)]) {
          int fg = B.compose(f, g);
          if (s.mor[static_cast<size_t>(fg)] >= 0)
            ok = s.mor[static_cast<size_t>(fg)] ==
                 T.compose(s.mor[static_cast<size_t>(f)], s.mor[static_cast<size_t>(g)]);
        }
        if (ok && B.dst[static_cast<size_t>(f)] == B.src[static_cast<size_t>(g)]) {
          int gf = B.compose(g, f);
          if (s.mor[static_cast<size_t>(gf)] >= 0)
            ok = s.mor[static_cast<size_t>(gf)] ==
                 T.compose(s.mor[static_cast<size_t>(g)], s.mor[static_cast<size_t>(f)]);
        }
      }
      if (ok) recM(k + 1);
    }
    s.mor[static_cast<size_t>(f)] = -1;
  };

  std::function<void(int)> recO = [&](int a) {
    if (a == B.nObj) {
      for (int x = 0; x < B.nObj; ++x)
        s.mor[static_cast<size_t>(B.idOf[static_cast<size_t>(x)])] =
            T.idOf[static_cast<size_t>(s.obj[static_cast<size_t>(x)])];
      recM(0);
      return;
    }
    for (int t : over[static_cast<size_t>(a)]) {
      s.obj[static_cast<size_t>(a)] = t;
      recO(a + 1);
    }
    s.obj[static_cast<size_t>(a)] = -1;
  };
  if (B.nObj == 0)
    R.secs.push_back(FinFunctor{});
  else
    recO(0);

  for (size_t i = 0; i < R.secs.size(); ++i) R.cat.add_object();
  std::map<std::tuple<int, int, std::vector<int>>, int> midx;
  for (size_t i = 0; i < R.secs.size(); ++i)
    for (size_t j = 0; j < R.secs.size(); ++j) {
      const FinFunctor& si = R.secs[i];
      const FinFunctor& sj = R.secs[j];
      std::vector<std::vector<int>> cands(static_cast<size_t>(B.nObj));
      bool feasible = true;
      for (int a = 0; a < B.nObj && feasible; ++a) {
        for (int m : T.hom(si.obj[static_cast<size_t>(a)], sj.obj[static_cast<size_t>(a)]))
          if (p.mor[static_cast<size_t>(m)] == B.idOf[static_cast<size_t>(a)])
            cands[static_cast<size_t>(a)].push_back(m);
        feasible = !cands[static_cast<size_t>(a)].empty();
      }
      if (!feasible && B.nObj > 0) continue;
      std::vector<int> radix, asn;
      for (auto& c : cands) radix.push_back(static_cast<int>(c.size()));
      if (B.nObj == 0) {
        int id = R.cat.add_morphism(static_cast<int>(i), static_cast<int>(j));
        R.nats.push_back({});
        midx[{static_cast<int>(i), static_cast<int>(j), {}}] = id;
        continue;
      }
      first_assignment(radix, asn);
      do {
        std::vector<int> comp(static_cast<size_t>(B.nObj));
        for (int a = 0; a < B.nObj; ++a)
          comp[static_cast<size_t>(a)] = cands[static_cast<size_t>(a)][static_cast<size_t>(asn[static_cast<size_t>(a)])];
        bool nat = true;
        for (int f = 0; f < B.nMor() && nat; ++f) {
          int a = B.src[static_cast<size_t>(f)], b = B.dst[static_cast<size_t>(f)];
          nat = T.compose(sj.mor[static_cast<size_t>(f)], comp[static_cast<size_t>(a)]) ==
                T.compose(comp[static_cast<size_t>(b)], si.mor[static_cast<size_t>(f)]);
        }
        if (nat) {
          int id = R.cat.add_morphism(static_cast<int>(i), static_cast<int>(j));
          R.nats.push_back(comp);
          midx[{static_cast<int>(i), static_cast<int>(j), comp}] = id;
        }
      } while (next_assignment(radix, asn));
    }
  for (size_t i = 0; i < R.secs.size(); ++i) {
    std::vector<int> idc;
    for (int a = 0; a < B.nObj; ++a)
      idc.push_back(T.idOf[static_cast<size_t>(R.secs[i].obj[static_cast<size_t>(a)])]);
    R.cat.set_identity(static_cast<int>(i), midx.at({static_cast<int>(i), static_cast<int>(i), idc}));
  }
  for (int m1 = 0; m1 < R.cat.nMor(); ++m1)
    for (int m2 = 0; m2 < R.cat.nMor(); ++m2) {
      if (R.cat.dst[static_cast<size_t>(m1)] != R.cat.src[static_cast<size_t>(m2)]) continue;
      std::vector<int> comp;
      for (int a = 0; a < B.nObj; ++a)
        comp.push_back(T.compose(R.nats[static_cast<size_t>(m2)][static_cast<size_t>(a)],
                                 R.nats[static_cast<size_t>(m1)][static_cast<size_t>(a)]));
      R.cat.set_comp(m2, m1,
                     midx.at({R.cat.src[static_cast<size_t>(m1)],
                              R.cat.dst[static_cast<size_t>(m2)], comp}));
    }
  return R;
}

// sections of a total projection; E is indexed by the morphisms of the
// original base, which the opposite base shares
inline SectionsCat sections_cat(const Groth& G, const std::vector<char>& E) {
  return sections_over(G.base1, G.total1, G.proj1, E, G.variance);
}

struct LaxLimit {
  Groth G;
  SectionsCat S;
};

inline LaxLimit lax_limit(const MarkedDiagram& M) {
  std::string why;
  if (!M.validate(&why)) throw Error(ErrCode::InvalidMarking, why);
  LaxLimit R;
  R.G = grothendieck(M.D, 0);
  R.S = sections_cat(R.G, M.E);
  return R;
}

inline LaxLimit oplax_limit(const MarkedDiagram& M) {
  std::string why;
  if (!M.validate(&why)) throw Error(ErrCode::InvalidMarking, why);
  LaxLimit R;
  R.G = grothendieck(M.D, 1);
  R.S = sections_cat(R.G, M.E);
  return R;
}

// ---------------------------------------------------------------------------
// cones out of a fixed category, through the two-categorical transformation
// enumerator over a universe of categories

struct ConeCat {
  NatLaxCat N;            // transformations const_b => diagram, and modifications
  CatUniverse U;
  std::vector<int> uidx;  // universe object per base object
  int ub = -1;            // universe object holding the cone tip
};

inline ConeCat nat_elax_to_constant(const MarkedDiagram& M, const FinCat& b,
                                    long long budget = 50000000) {
  std::string why;
  if (!M.validate(&why)) throw Error(ErrCode::InvalidMarking, why);
  ConeCat R;
  const FinCat& A = M.D.base;
  std::vector<FinCat> cats{b};
  auto idx_of = [&cats](const FinCat& c) {
    for (size_t i = 0; i < cats.size(); ++i)
      if (cats[i] == c) return static_cast<int>(i);
    cats.push_back(c);
    return static_cast<int>(cats.size()) - 1;
  };
  R.ub = 0;
  for (int a = 0; a < A.nObj; ++a) R.uidx.push_back(idx_of(M.D.fib[static_cast<size_t>(a)]));
  R.U = two_cat_of_universe(cats);
  TwoCatFrom1 A2 = two_cat_from_fincat(A);

  TwoFunctor Fd;
  Fd.obj = R.uidx;
  size_t n = static_cast<size_t>(A.nObj);
  Fd.homf.assign(n, std::vector<FinFunctor>(n));
  for (int x = 0; x < A.nObj; ++x)
    for (int y = 0; y < A.nObj; ++y) {
      const FunCat& FC = R.U.fc[static_cast<size_t>(R.uidx[static_cast<size_t>(x)])]
                             [static_cast<size_t>(R.uidx[static_cast<size_t>(y)])];
      FinFunctor& h = Fd.homf[static_cast<size_t>(x)][static_cast<size_t>(y)];
      for (int f : A2.gmor[static_cast<size_t>(x)][static_cast<size_t>(y)]) {
        int o = FC.obj_index(M.D.act[static_cast<size_t>(f)]);
        h.obj.push_back(o);
        h.mor.push_back(FC.cat.idOf[static_cast<size_t>(o)]);
      }
    }

  TwoFunctor Cb = constant_two_functor(A2.cat, R.U.cat, R.ub);
  Marking1 E2 = marking_none(A2.cat);
  for (int x = 0; x < A.nObj; ++x)
    for (int y = 0; y < A.nObj; ++y) {
      const auto& gm = A2.gmor[static_cast<size_t>(x)][static_cast<size_t>(y)];
      for (size_t k = 0; k < gm.size(); ++k)
        E2[static_cast<size_t>(x)][static_cast<size_t>(y)][k] =
            M.E[static_cast<size_t>(gm[k])] != 0;
    }
  R.N = nat_lax(A2.cat, R.U.cat, Cb, Fd, LaxDir::Lax, &E2, budget);
  return R;
}

// the diagram a |-> Fun(b, F a) with postcomposition action
struct FunDiagram {
  CatDiagram D;
  std::vector<FunCat> fc;
};

inline FunDiagram fun_from_diagram(const FinCat& b, const CatDiagram& F) {
  FunDiagram R;
  R.D.base = F.base;
  for (int a = 0; a < F.base.nObj; ++a) {
    R.fc.push_back(fun_cat(b, F.fib[static_cast<size_t>(a)]));
    R.D.fib.push_back(R.fc.back().cat);
  }
  for (int f = 0; f < F.base.nMor(); ++f) {
    int s = F.base.src[static_cast<size_t>(f)], t = F.base.dst[static_cast<size_t>(f)];
    const FinFunctor& u = F.act[static_cast<size_t>(f)];
    FinFunctor post;
    for (const FinFunctor& G : R.fc[static_cast<size_t>(s)].objs)
      post.obj.push_back(R.fc[static_cast<size_t>(t)].obj_index(compose_functor(u, G)));
    for (auto& [sG, tG, nu] : R.fc[static_cast<size_t>(s)].mors) {
      FinNat w;
      for (int x = 0; x < b.nObj; ++x)
        w.comp.push_back(u.mor[static_cast<size_t>(nu.comp[static_cast<size_t>(x)])]);
      post.mor.push_back(R.fc[static_cast<size_t>(t)].mor_index(
          post.obj[static_cast<size_t>(sG)], post.obj[static_cast<size_t>(tG)], w));
    }
    R.D.act.push_back(post);
  }
  return R;
}

// ---------------------------------------------------------------------------
// bounded localization by rewriting on composable words
//
// Generators are the nonidentity morphisms plus a formal reversal for each
// inverted one. Seed rules contract adjacent generators through the
// composition table and cancel reversal pairs; completion resolves critical
// overlaps until the system is confluent or the budget runs out. When it
// converges and the set of irreducible words is finite, those words are the
// morphisms of the localization on the nose.

struct LocalizeOutcome {
  bool complete = false;
  FinCat cat;       // meaningful when complete
  FinFunctor quot;  // original category -> localized, when complete
};

inline LocalizeOutcome bounded_localize(const FinCat& C, const std::vector<char>& invert,
                                        long long budget = 2000000) {
  LocalizeOutcome R;
  using Word = std::vector<int>;
  std::vector<std::pair<int, bool>> gen;  // (morphism, reversed)
  std::vector<int> fwd(static_cast<size_t>(C.nMor()), -1);
  for (int m = 0; m < C.nMor(); ++m)
    if (!C.is_identity(m)) {
      fwd[static_cast<size_t>(m)] = static_cast<int>(gen.size());
      gen.push_back({m, false});
    }
  std::vector<int> bwd(static_cast<size_t>(C.nMor()), -1);
  for (int m = 0; m < C.nMor(); ++m)
    if (!C.is_identity(m) && invert[static_cast<size_t>(m)]) {
      bwd[static_cast<size_t>(m)] = static_cast<int>(gen.size());
      gen.push_back({m, true});
    }
  auto gsrc = [&](int g) {
    auto [m, rev] = gen[static_cast<size_t>(g)];
    return rev ? C.dst[static_cast<size_t>(m)] : C.src[static_cast<size_t>(m)];
  };
  auto gdst = [&](int g) {
    auto [m, rev] = gen[static_cast<size_t>(g)];
    return rev ? C.src[static_cast<size_t>(m)] : C.dst[static_cast<size_t>(m)];
  };

  long long steps = 0;
  bool exhausted = false;
  auto spend = [&](long long k) {
    steps += k;
    if (steps > budget) exhausted = true;
    return !exhausted;
  };

  auto shortlex_less = [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };

  std::vector<std::pair<Word, Word>> rules;
  std::map<Word, Word> byLhs;
  // leftmost innermost rewriting; every rule is shortlex-decreasing
  auto normalize = [&](Word w) {
    bool changed = true;
    while (changed && !exhausted) {
      changed = false;
      for (size_t i = 0; i < w.size() && !changed; ++i)
        for (auto& [l, r] : rules) {
          if (i + l.size() > w.size()) continue;
          if (!std::equal(l.begin(), l.end(), w.begin() + static_cast<long>(i))) continue;
          Word nw(w.begin(), w.begin() + static_cast<long>(i));
          nw.insert(nw.end(), r.begin(), r.end());
          nw.insert(nw.end(), w.begin() + static_cast<long>(i + l.size()), w.end());
          w = std::move(nw);
          changed = true;
          break;
        }
      spend(1 + static_cast<long long>(rules.size()));
    }
    return w;
  };

  auto add_rule = [&](Word a, Word b) {
    // orient and store unless already derivable
    a = normalize(std::move(a));
    b = normalize(std::move(b));
    if (a == b || exhausted) return false;
    if (shortlex_less(a, b)) std::swap(a, b);
    auto it = byLhs.find(a);
    if (it != byLhs.end() && it->second == b) return false;
    rules.push_back({a, b});
    byLhs[a] = b;
    spend(4);
    return true;
  };

  for (int a = 0; a < C.nMor(); ++a) {
    if (C.is_identity(a)) continue;
    for (int b2 = 0; b2 < C.nMor(); ++b2) {
      if (C.is_identity(b2)) continue;
      if (C.dst[static_cast<size_t>(a)] != C.src[static_cast<size_t>(b2)]) continue;
      int c = C.compose(b2, a);
      Word rhs = C.is_identity(c) ? Word{} : Word{fwd[static_cast<size_t>(c)]};
      add_rule({fwd[static_cast<size_t>(a)], fwd[static_cast<size_t>(b2)]}, rhs);
    }
  }
  for (int m = 0; m < C.nMor(); ++m)
    if (bwd[static_cast<size_t>(m)] >= 0) {
      add_rule({fwd[static_cast<size_t>(m)], bwd[static_cast<size_t>(m)]}, {});
      add_rule({bwd[static_cast<size_t>(m)], fwd[static_cast<size_t>(m)]}, {});
    }

  // completion: resolve overlap and containment critical pairs
  bool grew = true;
  while (grew && !exhausted) {
    grew = false;
    size_t nr = rules.size();
    for (size_t i = 0; i < nr && !exhausted; ++i)
      for (size_t j = 0; j < nr && !exhausted; ++j) {
        const Word l1 = rules[i].first, r1 = rules[i].second;
        const Word l2 = rules[j].first, r2 = rules[j].second;
        spend(1);
        // suffix of l1 meets prefix of l2
        for (size_t k = 1; k < l1.size() && k < l2.size() + 1; ++k) {
          if (k > l1.size() || k > l2.size()) break;
          if (!std::equal(l1.end() - static_cast<long>(k), l1.end(), l2.begin())) continue;
          Word sup(l1.begin(), l1.end());
          sup.insert(sup.end(), l2.begin() + static_cast<long>(k), l2.end());
          Word via1 = r1;
          via1.insert(via1.end(), l2.begin() + static_cast<long>(k), l2.end());
          Word via2(l1.begin(), l1.end() - static_cast<long>(k));
          via2.insert(via2.end(), r2.begin(), r2.end());
          if (add_rule(via1, via2)) grew = true;
        }
        // l2 contained in l1
        if (l2.size() < l1.size())
          for (size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
            if (!std::equal(l2.begin(), l2.end(), l1.begin() + static_cast<long>(pos))) continue;
            Word via2(l1.begin(), l1.begin() + static_cast<long>(pos));
            via2.insert(via2.end(), r2.begin(), r2.end());
            via2.insert(via2.end(), l1.begin() + static_cast<long>(pos + l2.size()), l1.end());
            if (add_rule(r1, via2)) grew = true;
          }
      }
  }
  if (exhausted) return R;

  // irreducible words by length; prefixes of irreducible words are
  // irreducible, so the first empty level ends the search
  auto irreducible_tail = [&](const Word& w) {
    for (auto& [l, r] : rules) {
      (void)r;
      if (l.size() > w.size()) continue;
      if (std::equal(l.begin(), l.end(), w.end() - static_cast<long>(l.size()))) return false;
    }
    return true;
  };
  std::vector<std::pair<int, Word>> nfs;  // (source object, word)
  for (int x = 0; x < C.nObj; ++x) nfs.push_back({x, {}});
  std::vector<std::pair<int, Word>> level = nfs;
  while (!level.empty() && !exhausted) {
    std::vector<std::pair<int, Word>> next;
    for (auto& [sx, w] : level) {
      int at = w.empty() ? sx : gdst(w.back());
      for (int g = 0; g < static_cast<int>(gen.size()); ++g) {
        if (gsrc(g) != at) continue;
        Word ext = w;
        ext.push_back(g);
        spend(1 + static_cast<long long>(rules.size()));
        if (irreducible_tail(ext)) next.push_back({sx, ext});
      }
    }
    nfs.insert(nfs.end(), next.begin(), next.end());
    level = std::move(next);
    if (nfs.size() > 4096) exhausted = true;
  }
  if (exhausted) return R;

  std::sort(nfs.begin(), nfs.end(), [&](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a < b;
  });
  FinCat L;
  for (int x = 0; x < C.nObj; ++x) L.add_object();
  std::map<std::pair<int, Word>, int> widx;
  for (auto& [sx, w] : nfs) {
    int tx = w.empty() ? sx : gdst(w.back());
    widx[{sx, w}] = L.add_morphism(sx, tx);
  }
  for (int x = 0; x < C.nObj; ++x) L.set_identity(x, widx.at({x, {}}));
  for (auto& [k1, m1] : widx)
    for (auto& [k2, m2] : widx) {
      int mid1 = k1.second.empty() ? k1.first : gdst(k1.second.back());
      if (mid1 != k2.first) continue;
      Word cat = k1.second;
      cat.insert(cat.end(), k2.second.begin(), k2.second.end());
      cat = normalize(std::move(cat));
      if (exhausted) return R;
      L.set_comp(m2, m1, widx.at({k1.first, cat}));
    }
  R.complete = true;
  R.cat = L;
  R.quot = identity_functor(C);
  for (int m = 0; m < C.nMor(); ++m) {
    if (C.is_identity(m)) {
      R.quot.mor[static_cast<size_t>(m)] =
          L.idOf[static_cast<size_t>(C.src[static_cast<size_t>(m)])];
      continue;
    }
    Word w = normalize({fwd[static_cast<size_t>(m)]});
    R.quot.mor[static_cast<size_t>(m)] = widx.at({C.src[static_cast<size_t>(m)], w});
  }
  return R;
}

// ---------------------------------------------------------------------------
// colimit presentations

struct CoconePresentation {
  enum class Status { Complete, Unverified };
  int variance = 0;  // 0: lax cocones out of the diagram; 1: oplax
  FinCat total;
  std::vector<char> invert;      // per total morphism
  std::vector<FinFunctor> leg;   // fibre inclusion per base object
  Status status = Status::Unverified;
  FinCat localized;              // when Complete
  FinFunctor quot;               // total -> localized, when Complete
};

inline std::vector<FinFunctor> groth_legs(const Groth& G, const CatDiagram& D) {
  std::vector<FinFunctor> legs;
  for (int a = 0; a < D.base.nObj; ++a) {
    const FinCat& F = D.fib[static_cast<size_t>(a)];
    FinFunctor leg;
    for (int x = 0; x < F.nObj; ++x) leg.obj.push_back(G.objIdx.at({a, x}));
    for (int u = 0; u < F.nMor(); ++u) {
      int pin = G.variance == 0 ? F.src[static_cast<size_t>(u)] : F.dst[static_cast<size_t>(u)];
      leg.mor.push_back(G.morIdx.at(
          {G.objIdx.at({a, pin}), D.base.idOf[static_cast<size_t>(a)], u}));
    }
    legs.push_back(leg);
  }
  return legs;
}

inline CoconePresentation make_colimit_presentation(const MarkedDiagram& M, int variance,
                                                    long long budget) {
  std::string why;
  if (!M.validate(&why)) throw Error(ErrCode::InvalidMarking, why);
  Groth G = grothendieck(M.D, variance);
  CoconePresentation P;
  P.variance = variance;
  P.total = G.total1;
  P.leg = groth_legs(G, M.D);
  P.invert.assign(static_cast<size_t>(G.total1.nMor()), 0);
  for (int m = 0; m < G.total1.nMor(); ++m) {
    if (!M.E[static_cast<size_t>(G.proj1.mor[static_cast<size_t>(m)])]) continue;
    bool univ = variance == 0 ? mor_is_cocartesian(G.total1, G.base1, G.proj1, m)
                              : mor_is_cartesian(G.total1, G.base1, G.proj1, m);
    P.invert[static_cast<size_t>(m)] = univ;
  }
  LocalizeOutcome loc = bounded_localize(P.total, P.invert, budget);
  if (loc.complete) {
    P.status = CoconePresentation::Status::Complete;
    P.localized = loc.cat;
    P.quot = loc.quot;
  }
  return P;
}

inline CoconePresentation lax_colimit(const MarkedDiagram& M, long long budget = 2000000) {
  return make_colimit_presentation(M, 0, budget);
}

inline CoconePresentation oplax_colimit(const MarkedDiagram& M, long long budget = 2000000) {
  return make_colimit_presentation(M, 1, budget);
}

// ---------------------------------------------------------------------------
// cocones under a marked diagram, enumerated from transformation data

struct LaxCocone {
  std::vector<FinFunctor> leg;  // per base object, into the target
  std::vector<FinNat> sq;       // per base morphism

  bool operator==(const LaxCocone&) const = default;
};

struct CoconeCat {
  FinCat cat;
  std::vector<LaxCocone> objs;
  std::vector<std::vector<FinNat>> mods;  // per cat morphism, component per base object
};

// variance 0: squares run leg_a => leg_b . F(f); variance 1 reverses them.
// Squares over marked morphisms must have invertible components.
inline CoconeCat marked_cocones(const MarkedDiagram& M, const FinCat& C, int variance,
                                long long* budget = nullptr) {
  const FinCat& A = M.D.base;
  auto spend = [&](long long k) {
    if (!budget) return;
    *budget -= k;
    if (*budget < 0)
      throw Error(ErrCode::ResourceBudget, "cocone enumeration exceeded the step budget");
  };
  CoconeCat R;
  std::vector<std::vector<FinFunctor>> legCands;
  for (int a = 0; a < A.nObj; ++a) {
    legCands.push_back(all_functors(M.D.fib[static_cast<size_t>(a)], C));
    spend(static_cast<long long>(legCands.back().size()));
  }
  std::vector<int> radix, asn;
  for (auto& v : legCands) radix.push_back(static_cast<int>(v.size()));
  std::vector<int> freeMor;
  for (int f = 0; f < A.nMor(); ++f)
    if (!A.is_identity(f)) freeMor.push_back(f);

  auto identity_nat = [&](const FinFunctor& leg) {
    FinNat n;
    for (int x : leg.obj) n.comp.push_back(C.idOf[static_cast<size_t>(x)]);
    return n;
  };

  if (A.nObj == 0) {
    R.objs.push_back(LaxCocone{});
  } else if (first_assignment(radix, asn)) {
    do {
      std::vector<FinFunctor> legs;
      for (int a = 0; a < A.nObj; ++a)
        legs.push_back(legCands[static_cast<size_t>(a)][static_cast<size_t>(asn[static_cast<size_t>(a)])]);
      // candidate squares per nonidentity base morphism
      std::vector<std::vector<FinNat>> sqCands;
      bool feasible = true;
      for (int f : freeMor) {
        int s = A.src[static_cast<size_t>(f)], t = A.dst[static_cast<size_t>(f)];
        FinFunctor via = compose_functor(legs[static_cast<size_t>(t)], M.D.act[static_cast<size_t>(f)]);
        std::vector<FinNat> cands =
            variance == 0
                ? all_nats(M.D.fib[static_cast<size_t>(s)], C, legs[static_cast<size_t>(s)], via)
                : all_nats(M.D.fib[static_cast<size_t>(s)], C, via, legs[static_cast<size_t>(s)]);
        spend(static_cast<long long>(cands.size()) + 1);
        if (M.E[static_cast<size_t>(f)]) {
          std::vector<FinNat> keep;
          for (auto& n : cands) {
            bool inv = true;
            for (int c : n.comp) inv = inv && C.is_iso(c);
            if (inv) keep.push_back(n);
          }
          cands = keep;
        }
        feasible = feasible && !cands.empty();
        sqCands.push_back(std::move(cands));
        if (!feasible) break;
      }
      if (!feasible) continue;
      std::vector<int> r2, a2;
      for (auto& v : sqCands) r2.push_back(static_cast<int>(v.size()));
      bool any = freeMor.empty() || first_assignment(r2, a2);
      while (any) {
        spend(1);
        LaxCocone t;
        t.leg = legs;
        t.sq.assign(static_cast<size_t>(A.nMor()), FinNat{});
        for (int x = 0; x < A.nObj; ++x)
          t.sq[static_cast<size_t>(A.idOf[static_cast<size_t>(x)])] =
              identity_nat(legs[static_cast<size_t>(x)]);
        for (size_t k = 0; k < freeMor.size(); ++k)
          t.sq[static_cast<size_t>(freeMor[k])] = sqCands[k][static_cast<size_t>(a2[k])];
        // squares paste along base composition
        bool ok = true;
        for (int f = 0; f < A.nMor() && ok; ++f)
          for (int g = 0; g < A.nMor() && ok; ++g) {
            if (A.dst[static_cast<size_t>(f)] != A.src[static_cast<size_t>(g)]) continue;
            int gf = A.compose(g, f);
            const FinCat& Fs = M.D.fib[static_cast<size_t>(A.src[static_cast<size_t>(f)])];
            const FinFunctor& af = M.D.act[static_cast<size_t>(f)];
            for (int x = 0; x < Fs.nObj && ok; ++x) {
              int viaPair =
                  variance == 0
                      ? C.compose(t.sq[static_cast<size_t>(g)]
                                      .comp[static_cast<size_t>(af.obj[static_cast<size_t>(x)])],
                                  t.sq[static_cast<size_t>(f)].comp[static_cast<size_t>(x)])
                      : C.compose(t.sq[static_cast<size_t>(f)].comp[static_cast<size_t>(x)],
                                  t.sq[static_cast<size_t>(g)]
                                      .comp[static_cast<size_t>(af.obj[static_cast<size_t>(x)])]);
              ok = t.sq[static_cast<size_t>(gf)].comp[static_cast<size_t>(x)] == viaPair;
            }
          }
        if (ok) R.objs.push_back(t);
        any = !freeMor.empty() && next_assignment(r2, a2);
      }
    } while (next_assignment(radix, asn));
  }

  for (size_t i = 0; i < R.objs.size(); ++i) R.cat.add_object();
  std::map<std::tuple<int, int, std::vector<FinNat>>, int> midx;
  for (size_t i = 0; i < R.objs.size(); ++i)
    for (size_t j = 0; j < R.objs.size(); ++j) {
      const LaxCocone& t = R.objs[i];
      const LaxCocone& t2 = R.objs[j];
      std::vector<std::vector<FinNat>> muCands;
      bool feasible = true;
      for (int a = 0; a < A.nObj && feasible; ++a) {
        muCands.push_back(all_nats(M.D.fib[static_cast<size_t>(a)], C,
                                   t.leg[static_cast<size_t>(a)], t2.leg[static_cast<size_t>(a)]));
        spend(static_cast<long long>(muCands.back().size()));
        feasible = !muCands.back().empty();
      }
      if (!feasible && A.nObj > 0) continue;
      std::vector<int> r2, a2;
      for (auto& v : muCands) r2.push_back(static_cast<int>(v.size()));
      if (A.nObj == 0) {
        int id = R.cat.add_morphism(static_cast<int>(i), static_cast<int>(j));
        R.mods.push_back({});
        midx[{static_cast<int>(i), static_cast<int>(j), {}}] = id;
        continue;
      }
      first_assignment(r2, a2);
      do {
        spend(1);
        std::vector<FinNat> mu;
        for (int a = 0; a < A.nObj; ++a)
          mu.push_back(muCands[static_cast<size_t>(a)][static_cast<size_t>(a2[static_cast<size_t>(a)])]);
        bool ok = true;
        for (int f = 0; f < A.nMor() && ok; ++f) {
          int s = A.src[static_cast<size_t>(f)], b = A.dst[static_cast<size_t>(f)];
          const FinCat& Fs = M.D.fib[static_cast<size_t>(s)];
          const FinFunctor& af = M.D.act[static_cast<size_t>(f)];
          for (int x = 0; x < Fs.nObj && ok; ++x) {
            int mb = mu[static_cast<size_t>(b)].comp[static_cast<size_t>(af.obj[static_cast<size_t>(x)])];
            int ma = mu[static_cast<size_t>(s)].comp[static_cast<size_t>(x)];
            ok = variance == 0
                     ? C.compose(t2.sq[static_cast<size_t>(f)].comp[static_cast<size_t>(x)], ma) ==
                           C.compose(mb, t.sq[static_cast<size_t>(f)].comp[static_cast<size_t>(x)])
                     : C.compose(ma, t.sq[static_cast<size_t>(f)].comp[static_cast<size_t>(x)]) ==
                           C.compose(t2.sq[static_cast<size_t>(f)].comp[static_cast<size_t>(x)], mb);
          }
        }
        if (ok) {
          int id = R.cat.add_morphism(static_cast<int>(i), static_cast<int>(j));
          R.mods.push_back(mu);
          midx[{static_cast<int>(i), static_cast<int>(j), mu}] = id;
        }
      } while (next_assignment(r2, a2));
    }
  for (size_t i = 0; i < R.objs.size(); ++i) {
    std::vector<FinNat> idm;
    for (int a = 0; a < A.nObj; ++a) idm.push_back(identity_nat(R.objs[i].leg[static_cast<size_t>(a)]));
    R.cat.set_identity(static_cast<int>(i), midx.at({static_cast<int>(i), static_cast<int>(i), idm}));
  }
  for (int m1 = 0; m1 < R.cat.nMor(); ++m1)
    for (int m2 = 0; m2 < R.cat.nMor(); ++m2) {
      if (R.cat.dst[static_cast<size_t>(m1)] != R.cat.src[static_cast<size_t>(m2)]) continue;
      std::vector<FinNat> mu;
      for (int a = 0; a < A.nObj; ++a)
        mu.push_back(vcomp_nat(C, R.mods[static_cast<size_t>(m2)][static_cast<size_t>(a)],
                               R.mods[static_cast<size_t>(m1)][static_cast<size_t>(a)]));
      R.cat.set_comp(m2, m1,
                     midx.at({R.cat.src[static_cast<size_t>(m1)],
                              R.cat.dst[static_cast<size_t>(m2)], mu}));
    }
  return R;
}

// functors out of a presentation that invert the marked edges, with all
// transformations between them
struct InvertingFunCat {
  FinCat cat;
  std::vector<FinFunctor> objs;
  std::vector<std::tuple<int, int, FinNat>> mors;
};

inline InvertingFunCat inverting_fun_cat(const CoconePresentation& P, const FinCat& C,
                                         long long* budget = nullptr) {
  auto spend = [&](long long k) {
    if (!budget) return;
    *budget -= k;
    if (*budget < 0)
      throw Error(ErrCode::ResourceBudget, "functor enumeration exceeded the step budget");
  };
  InvertingFunCat R;
  for (const FinFunctor& h : all_functors(P.total, C)) {
    spend(1);
    bool ok = true;
    for (int m = 0; m < P.total.nMor() && ok; ++m)
      if (P.invert[static_cast<size_t>(m)]) ok = C.is_iso(h.mor[static_cast<size_t>(m)]);
    if (ok) R.objs.push_back(h);
  }
  for (size_t i = 0; i < R.objs.size(); ++i) R.cat.add_object();
  std::map<std::tuple<int, int, FinNat>, int> midx;
  for (size_t i = 0; i < R.objs.size(); ++i)
    for (size_t j = 0; j < R.objs.size(); ++j)
      for (const FinNat& n : all_nats(P.total, C, R.objs[i], R.objs[j])) {
        spend(1);
        int id = R.cat.add_morphism(static_cast<int>(i), static_cast<int>(j));
        R.mors.push_back({static_cast<int>(i), static_cast<int>(j), n});
        midx[{static_cast<int>(i), static_cast<int>(j), n}] = id;
      }
  for (size_t i = 0; i < R.objs.size(); ++i) {
    FinNat idn;
    for (int x : R.objs[i].obj) idn.comp.push_back(C.idOf[static_cast<size_t>(x)]);
    R.cat.set_identity(static_cast<int>(i), midx.at({static_cast<int>(i), static_cast<int>(i), idn}));
  }
  for (int m1 = 0; m1 < R.cat.nMor(); ++m1)
    for (int m2 = 0; m2 < R.cat.nMor(); ++m2) {
      auto& [s1, t1, n1] = R.mors[static_cast<size_t>(m1)];
      auto& [s2, t2, n2] = R.mors[static_cast<size_t>(m2)];
      if (t1 != s2) continue;
      R.cat.set_comp(m2, m1, midx.at({s1, t2, vcomp_nat(C, n2, n1)}));
    }
  return R;
}

// the canonical universal edge of the total category over f at fibre object
// x; variance 0 is the cocartesian lift (a,x) -> (b, act x) and variance 1
// the cartesian lift (b, act x) -> (a, x), both with identity carrier and
// both keyed at (a, x)
inline int canonical_edge(const Groth& G, const CatDiagram& D, int f, int x) {
  int a = D.base.src[static_cast<size_t>(f)];
  int b = D.base.dst[static_cast<size_t>(f)];
  const FinFunctor& act = D.act[static_cast<size_t>(f)];
  return G.morIdx.at({G.objIdx.at({a, x}), f,
                      D.fib[static_cast<size_t>(b)].idOf[static_cast<size_t>(act.obj[static_cast<size_t>(x)])]});
}

// verifies that functors out of the presentation inverting the marked edges
// are the same thing as marked cocones under the diagram, for every category
// in the probe roster; throws on budget exhaustion, never a silent verdict
inline bool verify_colimit(const CoconePresentation& P, const MarkedDiagram& M,
                           long long budget = 50000000, std::string* why = nullptr);

// deterministic roster of probe categories, each within three objects and
// eight morphisms
inline std::vector<FinCat> test_universe_cats() {
  std::vector<FinCat> out;
  out.push_back(terminal_cat());
  out.push_back(discrete_cat(2));
  out.push_back(chain_cat(1));
  out.push_back(chain_cat(2));
  out.push_back(two_parallel_arrows_cat());
  {
    FinCat C;  // walking isomorphism
    C.add_object();
    C.add_object();
    int i0 = C.add_morphism(0, 0), i1 = C.add_morphism(1, 1);
    int u = C.add_morphism(0, 1), v = C.add_morphism(1, 0);
    C.set_identity(0, i0);
    C.set_identity(1, i1);
    C.set_comp(i0, i0, i0);
    C.set_comp(i1, i1, i1);
    C.set_comp(u, i0, u);
    C.set_comp(i1, u, u);
    C.set_comp(v, i1, v);
    C.set_comp(i0, v, v);
    C.set_comp(v, u, i0);
    C.set_comp(u, v, i1);
    out.push_back(C);
  }
  {
    FinCat C;  // two-element group on one object
    C.add_object();
    int e = C.add_morphism(0, 0), g = C.add_morphism(0, 0);
    C.set_identity(0, e);
    C.set_comp(e, e, e);
    C.set_comp(e, g, g);
    C.set_comp(g, e, g);
    C.set_comp(g, g, e);
    out.push_back(C);
  }
  {
    FinCat C;  // walking idempotent
    C.add_object();
    int e = C.add_morphism(0, 0), s = C.add_morphism(0, 0);
    C.set_identity(0, e);
    C.set_comp(e, e, e);
    C.set_comp(e, s, s);
    C.set_comp(s, e, s);
    C.set_comp(s, s, s);
    out.push_back(C);
  }
  out.push_back(poset_cat(3, [](int x, int y) { return x == 0 && y > 0; }));   // span
  out.push_back(poset_cat(3, [](int x, int y) { return x < 2 && y == 2; }));   // cospan
  return out;
}

inline bool verify_colimit(const CoconePresentation& P, const MarkedDiagram& M,
                           long long budget, std::string* why) {
  std::string mwhy;
  if (!M.validate(&mwhy)) throw Error(ErrCode::InvalidMarking, mwhy);
  Groth G = grothendieck(M.D, P.variance);
  if (!(G.total1 == P.total)) {
    if (why) *why = "presentation total does not match the diagram";
    return false;
  }
  const FinCat& A = M.D.base;
  std::vector<FinCat> probes = test_universe_cats();
  for (size_t ci = 0; ci < probes.size(); ++ci) {
    const FinCat& C = probes[ci];
    InvertingFunCat FC = inverting_fun_cat(P, C, &budget);
    CoconeCat CC = marked_cocones(M, C, P.variance, &budget);
    auto fail = [&](const std::string& m) {
      if (why) *why = "probe " + std::to_string(ci) + ": " + m;
      return false;
    };
    if (FC.objs.size() != CC.objs.size()) return fail("object counts differ");
    // canonical comparison: restrict along the legs, squares from the
    // canonical universal edges
    FinFunctor K;
    for (const FinFunctor& h : FC.objs) {
      LaxCocone t;
      for (int a = 0; a < A.nObj; ++a)
        t.leg.push_back(compose_functor(h, P.leg[static_cast<size_t>(a)]));
      t.sq.assign(static_cast<size_t>(A.nMor()), FinNat{});
      for (int f = 0; f < A.nMor(); ++f) {
        int s = A.src[static_cast<size_t>(f)];
        FinNat n;
        for (int x = 0; x < M.D.fib[static_cast<size_t>(s)].nObj; ++x)
          n.comp.push_back(h.mor[static_cast<size_t>(canonical_edge(G, M.D, f, x))]);
        t.sq[static_cast<size_t>(f)] = n;
      }
      int at = index_of(CC.objs, t);
      if (at < 0) return fail("comparison cocone missing");
      K.obj.push_back(at);
    }
    for (size_t m = 0; m < FC.mors.size(); ++m) {
      auto& [si, ti, nu] = FC.mors[m];
      std::vector<FinNat> mu;
      for (int a = 0; a < A.nObj; ++a) {
        FinNat comp;
        for (int x : P.leg[static_cast<size_t>(a)].obj)
          comp.comp.push_back(nu.comp[static_cast<size_t>(x)]);
        mu.push_back(comp);
      }
      int found = -1;
      for (int mm = 0; mm < CC.cat.nMor() && found < 0; ++mm)
        if (CC.cat.src[static_cast<size_t>(mm)] == K.obj[static_cast<size_t>(si)] &&
            CC.cat.dst[static_cast<size_t>(mm)] == K.obj[static_cast<size_t>(ti)] &&
            CC.mods[static_cast<size_t>(mm)] == mu)
          found = mm;
      if (found < 0) return fail("comparison modification missing");
      K.mor.push_back(found);
    }
    std::string fwhy;
    if (!K.validate(FC.cat, CC.cat, &fwhy)) return fail("comparison not a functor: " + fwhy);
    if (!is_equivalence_functor(FC.cat, CC.cat, K)) return fail("comparison not an equivalence");
  }
  return true;
}

// ---------------------------------------------------------------------------
// weighted limits: base-preserving functors between the totals

struct OverFunctorCat {
  Groth GW, GF;
  FinCat cat;
  std::vector<FinFunctor> funs;        // total(W) -> total(F) over the base
  std::vector<std::vector<int>> nats;  // per cat morphism, component per total(W) object
};

inline OverFunctorCat weighted_limit(const CatDiagram& W, const CatDiagram& F) {
  std::string why;
  if (!W.validate(&why) || !F.validate(&why)) throw Error(ErrCode::InvalidInput, why);
  if (!(W.base == F.base))
    throw Error(ErrCode::InvalidInput, "weight and diagram must share their base");
  OverFunctorCat R;
  R.GW = grothendieck(W, 0);
  R.GF = grothendieck(F, 0);
  const FinCat& TW = R.GW.total1;
  const FinCat& TF = R.GF.total1;
  std::vector<char> cocW(static_cast<size_t>(TW.nMor())), cocF(static_cast<size_t>(TF.nMor()));
  for (int m = 0; m < TW.nMor(); ++m)
    cocW[static_cast<size_t>(m)] = mor_is_cocartesian(TW, R.GW.base1, R.GW.proj1, m);
  for (int m = 0; m < TF.nMor(); ++m)
    cocF[static_cast<size_t>(m)] = mor_is_cocartesian(TF, R.GF.base1, R.GF.proj1, m);

  std::vector<std::vector<int>> over(static_cast<size_t>(W.base.nObj));
  for (int t = 0; t < TF.nObj; ++t)
    over[static_cast<size_t>(R.GF.proj1.obj[static_cast<size_t>(t)])].push_back(t);

  FinFunctor h;
  h.obj.assign(static_cast<size_t>(TW.nObj), -1);
  h.mor.assign(static_cast<size_t>(TW.nMor()), -1);
  std::vector<int> free;
  for (int m = 0; m < TW.nMor(); ++m)
    if (!TW.is_identity(m)) free.push_back(m);

  std::function<void(size_t)> recM = [&](size_t k) {
    if (k == free.size()) {
      std::string vwhy;
      if (h.validate(TW, TF, &vwhy)) R.funs.push_back(h);
      return;
    }
    int m = free[k];
    int s = TW.src[static_cast<size_t>(m)], t = TW.dst[static_cast<size_t>(m)];
    for (int c : TF.hom(h.obj[static_cast<size_t>(s)], h.obj[static_cast<size_t>(t)])) {
      if (R.GF.proj1.mor[static_cast<size_t>(c)] != R.GW.proj1.mor[static_cast<size_t>(m)]) continue;
      if (cocW[static_cast<size_t>(m)] && !cocF[static_cast<size_t>(c)]) continue;
      h.mor[static_cast<size_t>(m)] = c;
      bool ok = true;
      for (int g = 0; g < TW.nMor() && ok; ++g) {
        if (h.mor[static_cast<size_t>(g)] < 0) continue;
        if (TW.dst[static_cast<size_t>(g)] == TW.src[static_cast<size_t>(m)]) {
          int mg = TW.compose(m, g);
          if (h.mor[static_cast<size_t>(mg)] >= 0)
            ok = h.mor[static_cast<size_t>(mg)] ==
                 TF.compose(h.mor[static_cast<size_t>(m)], h.mor[static_cast<size_t>(g)]);
        }
        if (ok && TW.dst[static_cast<size_t>(m)] == TW.src[static_cast<size_t>(g)]) {
          int gm = TW.compose(g, m);
          if (h.mor[static_cast<size_t>(gm)] >= 0)
            ok = h.mor[static_cast<size_t>(gm)] ==
                 TF.compose(h.mor[static_cast<size_t>(g)], h.mor[static_cast<size_t>(m)]);
        }
      }
      if (ok) recM(k + 1);
    }
    h.mor[static_cast<size_t>(m)] = -1;
  };
  std::function<void(int)> recO = [&](int o) {
    if (o == TW.nObj) {
      for (int x = 0; x < TW.nObj; ++x)
        h.mor[static_cast<size_t>(TW.idOf[static_cast<size_t>(x)])] =
            TF.idOf[static_cast<size_t>(h.obj[static_cast<size_t>(x)])];
      recM(0);
      return;
    }
    for (int t : over[static_cast<size_t>(R.GW.proj1.obj[static_cast<size_t>(o)])]) {
      h.obj[static_cast<size_t>(o)] = t;
      recO(o + 1);
    }
    h.obj[static_cast<size_t>(o)] = -1;
  };
  if (TW.nObj == 0)
    R.funs.push_back(FinFunctor{});
  else
    recO(0);

  for (size_t i = 0; i < R.funs.size(); ++i) R.cat.add_object();
  std::map<std::tuple<int, int, std::vector<int>>, int> midx;
  for (size_t i = 0; i < R.funs.size(); ++i)
    for (size_t j = 0; j < R.funs.size(); ++j) {
      const FinFunctor& hi = R.funs[i];
      const FinFunctor& hj = R.funs[j];
      std::vector<std::vector<int>> cands(static_cast<size_t>(TW.nObj));
      bool feasible = true;
      for (int o = 0; o < TW.nObj && feasible; ++o) {
        int a = R.GW.proj1.obj[static_cast<size_t>(o)];
        for (int c : TF.hom(hi.obj[static_cast<size_t>(o)], hj.obj[static_cast<size_t>(o)]))
          if (R.GF.proj1.mor[static_cast<size_t>(c)] == W.base.idOf[static_cast<size_t>(a)])
            cands[static_cast<size_t>(o)].push_back(c);
        feasible = !cands[static_cast<size_t>(o)].empty();
      }
      if (!feasible && TW.nObj > 0) continue;
      std::vector<int> radix, asn;
      for (auto& c : cands) radix.push_back(static_cast<int>(c.size()));
      if (TW.nObj == 0) {
        int id = R.cat.add_morphism(static_cast<int>(i), static_cast<int>(j));
        R.nats.push_back({});
        midx[{static_cast<int>(i), static_cast<int>(j), {}}] = id;
        continue;
      }
      first_assignment(radix, asn);
      do {
        std::vector<int> comp(static_cast<size_t>(TW.nObj));
        for (int o = 0; o < TW.nObj; ++o)
          comp[static_cast<size_t>(o)] = cands[static_cast<size_t>(o)][static_cast<size_t>(asn[static_cast<size_t>(o)])];
        bool nat = true;
        for (int m = 0; m < TW.nMor() && nat; ++m) {
          int s = TW.src[static_cast<size_t>(m)], t = TW.dst[static_cast<size_t>(m)];
          nat = TF.compose(hj.mor[static_cast<size_t>(m)], comp[static_cast<size_t>(s)]) ==
                TF.compose(comp[static_cast<size_t>(t)], hi.mor[static_cast<size_t>(m)]);
        }
        if (nat) {
          int id = R.cat.add_morphism(static_cast<int>(i), static_cast<int>(j));
          R.nats.push_back(comp);
          midx[{static_cast<int>(i), static_cast<int>(j), comp}] = id;
        }
      } while (next_assignment(radix, asn));
    }
  for (size_t i = 0; i < R.funs.size(); ++i) {
    std::vector<int> idc;
    for (int o = 0; o < TW.nObj; ++o)
      idc.push_back(TF.idOf[static_cast<size_t>(R.funs[i].obj[static_cast<size_t>(o)])]);
    R.cat.set_identity(static_cast<int>(i), midx.at({static_cast<int>(i), static_cast<int>(i), idc}));
  }
  for (int m1 = 0; m1 < R.cat.nMor(); ++m1)
    for (int m2 = 0; m2 < R.cat.nMor(); ++m2) {
      if (R.cat.dst[static_cast<size_t>(m1)] != R.cat.src[static_cast<size_t>(m2)]) continue;
      std::vector<int> comp;
      for (int o = 0; o < TW.nObj; ++o)
        comp.push_back(TF.compose(R.nats[static_cast<size_t>(m2)][static_cast<size_t>(o)],
                                  R.nats[static_cast<size_t>(m1)][static_cast<size_t>(o)]));
      R.cat.set_comp(m2, m1,
                     midx.at({R.cat.src[static_cast<size_t>(m1)],
                              R.cat.dst[static_cast<size_t>(m2)], comp}));
    }
  return R;
}

// ---------------------------------------------------------------------------
// weighted colimits: the fibre product of the weight's cartesian total with
// the diagram's cocartesian total, localized at the jointly universal edges

struct WeightedColimit {
  Groth GW;  // cartesian total of the weight, based over the diagram's base
  Groth GF;  // cocartesian total of the diagram
  std::vector<std::pair<int, int>> objPair, morPair;
  std::map<std::pair<int, int>, int> objIdx, morIdx;
  CoconePresentation P;  // total is the fibre product
};

inline WeightedColimit weighted_colimit(const CatDiagram& W, const CatDiagram& F,
                                        long long budget = 2000000) {
  std::string why;
  if (!W.validate(&why) || !F.validate(&why)) throw Error(ErrCode::InvalidInput, why);
  if (!(W.base == op_cat(F.base)))
    throw Error(ErrCode::InvalidInput, "weight must live over the opposite of the base");
  WeightedColimit R;
  R.GW = grothendieck(W, 1);
  R.GF = grothendieck(F, 0);
  const FinCat& TW = R.GW.total1;
  const FinCat& TF = R.GF.total1;
  FinCat T;
  for (int i = 0; i < TW.nObj; ++i)
    for (int j = 0; j < TF.nObj; ++j) {
      if (R.GW.proj1.obj[static_cast<size_t>(i)] != R.GF.proj1.obj[static_cast<size_t>(j)])
        continue;
      R.objIdx[{i, j}] = T.add_object();
      R.objPair.push_back({i, j});
    }
  for (int mw = 0; mw < TW.nMor(); ++mw)
    for (int mf = 0; mf < TF.nMor(); ++mf) {
      if (R.GW.proj1.mor[static_cast<size_t>(mw)] != R.GF.proj1.mor[static_cast<size_t>(mf)])
        continue;
      int m = T.add_morphism(R.objIdx.at({TW.src[static_cast<size_t>(mw)], TF.src[static_cast<size_t>(mf)]}),
                             R.objIdx.at({TW.dst[static_cast<size_t>(mw)], TF.dst[static_cast<size_t>(mf)]}));
      R.morIdx[{mw, mf}] = m;
      R.morPair.push_back({mw, mf});
    }
  for (auto& [p, o] : R.objIdx)
    T.set_identity(o, R.morIdx.at({TW.idOf[static_cast<size_t>(p.first)],
                                   TF.idOf[static_cast<size_t>(p.second)]}));
  for (size_t m1 = 0; m1 < R.morPair.size(); ++m1)
    for (size_t m2 = 0; m2 < R.morPair.size(); ++m2) {
      auto [w1, f1] = R.morPair[m1];
      auto [w2, f2] = R.morPair[m2];
      if (TW.dst[static_cast<size_t>(w1)] != TW.src[static_cast<size_t>(w2)]) continue;
      if (TF.dst[static_cast<size_t>(f1)] != TF.src[static_cast<size_t>(f2)]) continue;
      T.set_comp(static_cast<int>(m2), static_cast<int>(m1),
                 R.morIdx.at({TW.compose(w2, w1), TF.compose(f2, f1)}));
    }

  R.P.variance = 0;
  R.P.total = T;
  R.P.invert.assign(static_cast<size_t>(T.nMor()), 0);
  for (size_t m = 0; m < R.morPair.size(); ++m) {
    auto [mw, mf] = R.morPair[m];
    R.P.invert[m] = mor_is_cartesian(TW, R.GW.base1, R.GW.proj1, mw) &&
                    mor_is_cocartesian(TF, R.GF.base1, R.GF.proj1, mf);
  }
  // structure maps from the fibre products of weight and diagram fibres
  const FinCat& A = F.base;
  for (int a = 0; a < A.nObj; ++a) {
    ProductCat pr = product_cat(W.fib[static_cast<size_t>(a)], F.fib[static_cast<size_t>(a)]);
    FinFunctor leg;
    for (auto& [w, x] : pr.objPair)
      leg.obj.push_back(R.objIdx.at({R.GW.objIdx.at({a, w}), R.GF.objIdx.at({a, x})}));
    for (auto& [omega, u] : pr.morPair) {
      int ew = R.GW.morIdx.at({R.GW.objIdx.at({a, W.fib[static_cast<size_t>(a)].dst[static_cast<size_t>(omega)]}),
                               A.idOf[static_cast<size_t>(a)], omega});
      int ef = R.GF.morIdx.at({R.GF.objIdx.at({a, F.fib[static_cast<size_t>(a)].src[static_cast<size_t>(u)]}),
                               A.idOf[static_cast<size_t>(a)], u});
      leg.mor.push_back(R.morIdx.at({ew, ef}));
    }
    R.P.leg.push_back(leg);
  }
  LocalizeOutcome loc = bounded_localize(T, R.P.invert, budget);
  if (loc.complete) {
    R.P.status = CoconePresentation::Status::Complete;
    R.P.localized = loc.cat;
    R.P.quot = loc.quot;
  }
  return R;
}

// cocones indexed by the weight: functors psi_a: W(a) -> Fun(F(a), C) with
// invertible coherence squares, and their modifications
struct WeightCoconeCat {
  FinCat cat;
  std::vector<FunCat> fc;                          // Fun(F(a), C) per base object
  std::vector<std::vector<FinFunctor>> objs;       // psi per base object
  std::vector<std::vector<FinNat>> sqs;            // per object of cat, square per base morphism
  std::vector<std::vector<FinNat>> mods;           // per morphism of cat
};

inline WeightCoconeCat weight_cocones(const CatDiagram& W, const CatDiagram& F, const FinCat& C,
                                      long long* budget = nullptr) {
  auto spend = [&](long long k) {
    if (!budget) return;
    *budget -= k;
    if (*budget < 0)
      throw Error(ErrCode::ResourceBudget, "weighted cocone enumeration exceeded the step budget");
  };
  const FinCat& A = F.base;
  WeightCoconeCat R;
  for (int a = 0; a < A.nObj; ++a) R.fc.push_back(fun_cat(F.fib[static_cast<size_t>(a)], C));
  // restriction along the diagram's action
  std::vector<FinFunctor> res(static_cast<size_t>(A.nMor()));
  for (int f = 0; f < A.nMor(); ++f) {
    int a = A.src[static_cast<size_t>(f)], b = A.dst[static_cast<size_t>(f)];
    FinFunctor r;
    for (const FinFunctor& G : R.fc[static_cast<size_t>(b)].objs)
      r.obj.push_back(R.fc[static_cast<size_t>(a)].obj_index(
          compose_functor(G, F.act[static_cast<size_t>(f)])));
    for (auto& [sG, tG, nu] : R.fc[static_cast<size_t>(b)].mors) {
      FinNat w;
      for (int x = 0; x < F.fib[static_cast<size_t>(a)].nObj; ++x)
        w.comp.push_back(nu.comp[static_cast<size_t>(F.act[static_cast<size_t>(f)].obj[static_cast<size_t>(x)])]);
      r.mor.push_back(R.fc[static_cast<size_t>(a)].mor_index(r.obj[static_cast<size_t>(sG)],
                                                             r.obj[static_cast<size_t>(tG)], w));
    }
    res[static_cast<size_t>(f)] = r;
  }

  std::vector<std::vector<FinFunctor>> psiCands;
  for (int a = 0; a < A.nObj; ++a) {
    psiCands.push_back(all_functors(W.fib[static_cast<size_t>(a)], R.fc[static_cast<size_t>(a)].cat));
    spend(static_cast<long long>(psiCands.back().size()));
  }
  std::vector<int> freeMor;
  for (int f = 0; f < A.nMor(); ++f)
    if (!A.is_identity(f)) freeMor.push_back(f);

  auto identity_sq = [&](int a, const FinFunctor& psi, const FinCat& dom) {
    FinNat n;
    for (int w = 0; w < dom.nObj; ++w)
      n.comp.push_back(R.fc[static_cast<size_t>(a)].cat.idOf[static_cast<size_t>(psi.obj[static_cast<size_t>(w)])]);
    return n;
  };

  std::vector<int> radix, asn;
  for (auto& v : psiCands) radix.push_back(static_cast<int>(v.size()));
  if (A.nObj == 0) {
    R.objs.push_back({});
    R.sqs.push_back({});
  } else if (first_assignment(radix, asn)) {
    do {
      std::vector<FinFunctor> psi;
      for (int a = 0; a < A.nObj; ++a)
        psi.push_back(psiCands[static_cast<size_t>(a)][static_cast<size_t>(asn[static_cast<size_t>(a)])]);
      std::vector<std::vector<FinNat>> sqCands;
      bool feasible = true;
      for (int f : freeMor) {
        int a = A.src[static_cast<size_t>(f)], b = A.dst[static_cast<size_t>(f)];
        // W acts contravariantly: W.act[f]: W(b) -> W(a)
        FinFunctor lhs = compose_functor(psi[static_cast<size_t>(a)], W.act[static_cast<size_t>(f)]);
        FinFunctor rhs = compose_functor(res[static_cast<size_t>(f)], psi[static_cast<size_t>(b)]);
        std::vector<FinNat> cands =
            all_nats(W.fib[static_cast<size_t>(b)], R.fc[static_cast<size_t>(a)].cat, lhs, rhs);
        spend(static_cast<long long>(cands.size()) + 1);
        std::vector<FinNat> keep;
        for (auto& n : cands) {
          bool inv = true;
          for (int c : n.comp) inv = inv && R.fc[static_cast<size_t>(a)].cat.is_iso(c);
          if (inv) keep.push_back(n);
        }
        feasible = feasible && !keep.empty();
        sqCands.push_back(std::move(keep));
        if (!feasible) break;
      }
      if (!feasible) continue;
      std::vector<int> r2, a2;
      for (auto& v : sqCands) r2.push_back(static_cast<int>(v.size()));
      bool any = freeMor.empty() || first_assignment(r2, a2);
      while (any) {
        spend(1);
        std::vector<FinNat> sq(static_cast<size_t>(A.nMor()));
        for (int a = 0; a < A.nObj; ++a)
          sq[static_cast<size_t>(A.idOf[static_cast<size_t>(a)])] =
              identity_sq(a, psi[static_cast<size_t>(a)], W.fib[static_cast<size_t>(a)]);
        for (size_t k = 0; k < freeMor.size(); ++k)
          sq[static_cast<size_t>(freeMor[k])] = sqCands[k][static_cast<size_t>(a2[k])];
        bool ok = true;
        for (int f = 0; f < A.nMor() && ok; ++f)
          for (int g = 0; g < A.nMor() && ok; ++g) {
            if (A.dst[static_cast<size_t>(f)] != A.src[static_cast<size_t>(g)]) continue;
            int gf = A.compose(g, f);
            int a = A.src[static_cast<size_t>(f)];
            int c = A.dst[static_cast<size_t>(g)];
            const FinCat& Wc = W.fib[static_cast<size_t>(c)];
            for (int w = 0; w < Wc.nObj && ok; ++w) {
              int viaPair = R.fc[static_cast<size_t>(a)].cat.compose(
                  res[static_cast<size_t>(f)].mor[static_cast<size_t>(sq[static_cast<size_t>(g)].comp[static_cast<size_t>(w)])],
                  sq[static_cast<size_t>(f)].comp[static_cast<size_t>(W.act[static_cast<size_t>(g)].obj[static_cast<size_t>(w)])]);
              ok = sq[static_cast<size_t>(gf)].comp[static_cast<size_t>(w)] == viaPair;
            }
          }
        if (ok) {
          R.objs.push_back(psi);
          R.sqs.push_back(sq);
        }
        any = !freeMor.empty() && next_assignment(r2, a2);
      }
    } while (next_assignment(radix, asn));
  }

  for (size_t i = 0; i < R.objs.size(); ++i) R.cat.add_object();
  std::map<std::tuple<int, int, std::vector<FinNat>>, int> midx;
  for (size_t i = 0; i < R.objs.size(); ++i)
    for (size_t j = 0; j < R.objs.size(); ++j) {
      std::vector<std::vector<FinNat>> muCands;
      bool feasible = true;
      for (int a = 0; a < A.nObj && feasible; ++a) {
        muCands.push_back(all_nats(W.fib[static_cast<size_t>(a)], R.fc[static_cast<size_t>(a)].cat,
                                   R.objs[i][static_cast<size_t>(a)], R.objs[j][static_cast<size_t>(a)]));
        spend(static_cast<long long>(muCands.back().size()));
        feasible = !muCands.back().empty();
      }
      if (!feasible && A.nObj > 0) continue;
      std::vector<int> r2, a2;
      for (auto& v : muCands) r2.push_back(static_cast<int>(v.size()));
      if (A.nObj == 0) {
        int id = R.cat.add_morphism(static_cast<int>(i), static_cast<int>(j));
        R.mods.push_back({});
        midx[{static_cast<int>(i), static_cast<int>(j), {}}] = id;
        continue;
      }
      first_assignment(r2, a2);
      do {
        spend(1);
        std::vector<FinNat> mu;
        for (int a = 0; a < A.nObj; ++a)
          mu.push_back(muCands[static_cast<size_t>(a)][static_cast<size_t>(a2[static_cast<size_t>(a)])]);
        bool ok = true;
        for (int f = 0; f < A.nMor() && ok; ++f) {
          int a = A.src[static_cast<size_t>(f)], b = A.dst[static_cast<size_t>(f)];
          const FinCat& fca = R.fc[static_cast<size_t>(a)].cat;
          const FinCat& Wb = W.fib[static_cast<size_t>(b)];
          for (int w = 0; w < Wb.nObj && ok; ++w)
            ok = fca.compose(R.sqs[j][static_cast<size_t>(f)].comp[static_cast<size_t>(w)],
                             mu[static_cast<size_t>(a)]
                                 .comp[static_cast<size_t>(W.act[static_cast<size_t>(f)].obj[static_cast<size_t>(w)])]) ==
                 fca.compose(res[static_cast<size_t>(f)].mor[static_cast<size_t>(mu[static_cast<size_t>(b)].comp[static_cast<size_t>(w)])],
                             R.sqs[i][static_cast<size_t>(f)].comp[static_cast<size_t>(w)]);
        }
        if (ok) {
          int id = R.cat.add_morphism(static_cast<int>(i), static_cast<int>(j));
          R.mods.push_back(mu);
          midx[{static_cast<int>(i), static_cast<int>(j), mu}] = id;
        }
      } while (next_assignment(r2, a2));
    }
  for (size_t i = 0; i < R.objs.size(); ++i) {
    std::vector<FinNat> idm;
    for (int a = 0; a < A.nObj; ++a)
      idm.push_back(identity_sq(a, R.objs[i][static_cast<size_t>(a)], W.fib[static_cast<size_t>(a)]));
    R.cat.set_identity(static_cast<int>(i), midx.at({static_cast<int>(i), static_cast<int>(i), idm}));
  }
  for (int m1 = 0; m1 < R.cat.nMor(); ++m1)
    for (int m2 = 0; m2 < R.cat.nMor(); ++m2) {
      if (R.cat.dst[static_cast<size_t>(m1)] != R.cat.src[static_cast<size_t>(m2)]) continue;
      std::vector<FinNat> mu;
      for (int a = 0; a < A.nObj; ++a)
        mu.push_back(vcomp_nat(R.fc[static_cast<size_t>(a)].cat,
                               R.mods[static_cast<size_t>(m2)][static_cast<size_t>(a)],
                               R.mods[static_cast<size_t>(m1)][static_cast<size_t>(a)]));
      R.cat.set_comp(m2, m1,
                     midx.at({R.cat.src[static_cast<size_t>(m1)],
                              R.cat.dst[static_cast<size_t>(m2)], mu}));
    }
  return R;
}

// verifies the weighted universal property: functors out of the fibre
// product inverting the canonical class correspond to weight-indexed cocones
inline bool verify_weighted_colimit(const WeightedColimit& WC, const CatDiagram& W,
                                    const CatDiagram& F, long long budget = 50000000,
                                    std::string* why = nullptr) {
  const FinCat& A = F.base;
  std::vector<FinCat> probes = test_universe_cats();
  for (size_t ci = 0; ci < probes.size(); ++ci) {
    const FinCat& C = probes[ci];
    auto fail = [&](const std::string& m) {
      if (why) *why = "probe " + std::to_string(ci) + ": " + m;
      return false;
    };
    InvertingFunCat FC = inverting_fun_cat(WC.P, C, &budget);
    WeightCoconeCat R = weight_cocones(W, F, C, &budget);
    if (FC.objs.size() != R.objs.size()) return fail("object counts differ");
    FinFunctor K;
    for (const FinFunctor& h : FC.objs) {
      std::vector<FinFunctor> psi;
      std::vector<FinNat> sq(static_cast<size_t>(A.nMor()));
      for (int a = 0; a < A.nObj; ++a) {
        const FinCat& Wa = W.fib[static_cast<size_t>(a)];
        const FinCat& Fa = F.fib[static_cast<size_t>(a)];
        FinFunctor pa;
        for (int w = 0; w < Wa.nObj; ++w) {
          FinFunctor slice;
          int wt = WC.GW.objIdx.at({a, w});
          for (int x = 0; x < Fa.nObj; ++x)
            slice.obj.push_back(h.obj[static_cast<size_t>(WC.objIdx.at({wt, WC.GF.objIdx.at({a, x})}))]);
          for (int u = 0; u < Fa.nMor(); ++u) {
            int ef = WC.GF.morIdx.at({WC.GF.objIdx.at({a, Fa.src[static_cast<size_t>(u)]}),
                                      A.idOf[static_cast<size_t>(a)], u});
            slice.mor.push_back(h.mor[static_cast<size_t>(WC.morIdx.at({WC.GW.total1.idOf[static_cast<size_t>(wt)], ef}))]);
          }
          pa.obj.push_back(R.fc[static_cast<size_t>(a)].obj_index(slice));
        }
        for (int om = 0; om < Wa.nMor(); ++om) {
          int ew = WC.GW.morIdx.at({WC.GW.objIdx.at({a, Wa.dst[static_cast<size_t>(om)]}),
                                    A.idOf[static_cast<size_t>(a)], om});
          FinNat n;
          for (int x = 0; x < Fa.nObj; ++x) {
            int et = WC.GF.total1.idOf[static_cast<size_t>(WC.GF.objIdx.at({a, x}))];
            n.comp.push_back(h.mor[static_cast<size_t>(WC.morIdx.at({ew, et}))]);
          }
          pa.mor.push_back(R.fc[static_cast<size_t>(a)].mor_index(
              pa.obj[static_cast<size_t>(Wa.src[static_cast<size_t>(om)])],
              pa.obj[static_cast<size_t>(Wa.dst[static_cast<size_t>(om)])], n));
        }
        psi.push_back(pa);
      }
      for (int f = 0; f < A.nMor(); ++f) {
        int a = A.src[static_cast<size_t>(f)], b = A.dst[static_cast<size_t>(f)];
        const FinCat& Wb = W.fib[static_cast<size_t>(b)];
        const FinCat& Fa = F.fib[static_cast<size_t>(a)];
        FinNat s;
        for (int w = 0; w < Wb.nObj; ++w) {
          // jointly universal edge at (W(f) w, x) -> (w, F(f) x)
          int ew = WC.GW.morIdx.at({WC.GW.objIdx.at({b, w}), f,
                                    W.fib[static_cast<size_t>(a)]
                                        .idOf[static_cast<size_t>(W.act[static_cast<size_t>(f)].obj[static_cast<size_t>(w)])]});
          FinNat n;
          for (int x = 0; x < Fa.nObj; ++x) {
            int ef = WC.GF.morIdx.at({WC.GF.objIdx.at({a, x}), f,
                                      F.fib[static_cast<size_t>(b)]
                                          .idOf[static_cast<size_t>(F.act[static_cast<size_t>(f)].obj[static_cast<size_t>(x)])]});
            n.comp.push_back(h.mor[static_cast<size_t>(WC.morIdx.at({ew, ef}))]);
          }
          int lhsObj = psi[static_cast<size_t>(a)]
                           .obj[static_cast<size_t>(W.act[static_cast<size_t>(f)].obj[static_cast<size_t>(w)])];
          // target object: restriction of psi_b(w) along the action
          int rhsObj = R.fc[static_cast<size_t>(a)].obj_index(compose_functor(
              R.fc[static_cast<size_t>(b)].objs[static_cast<size_t>(psi[static_cast<size_t>(b)].obj[static_cast<size_t>(w)])],
              F.act[static_cast<size_t>(f)]));
          s.comp.push_back(R.fc[static_cast<size_t>(a)].mor_index(lhsObj, rhsObj, n));
        }
        sq[static_cast<size_t>(f)] = s;
      }
      int at = -1;
      for (size_t k = 0; k < R.objs.size() && at < 0; ++k)
        if (R.objs[k] == psi && R.sqs[k] == sq) at = static_cast<int>(k);
      if (at < 0) return fail("comparison cocone missing");
      K.obj.push_back(at);
    }
    for (size_t m = 0; m < FC.mors.size(); ++m) {
      auto& [si, ti, nu] = FC.mors[m];
      std::vector<FinNat> mu;
      for (int a = 0; a < A.nObj; ++a) {
        const FinCat& Wa = W.fib[static_cast<size_t>(a)];
        const FinCat& Fa = F.fib[static_cast<size_t>(a)];
        FinNat comp;
        for (int w = 0; w < Wa.nObj; ++w) {
          int wt = WC.GW.objIdx.at({a, w});
          FinNat n;
          for (int x = 0; x < Fa.nObj; ++x)
            n.comp.push_back(nu.comp[static_cast<size_t>(WC.objIdx.at({wt, WC.GF.objIdx.at({a, x})}))]);
          comp.comp.push_back(R.fc[static_cast<size_t>(a)].mor_index(
              R.objs[static_cast<size_t>(K.obj[static_cast<size_t>(si)])][static_cast<size_t>(a)]
                  .obj[static_cast<size_t>(w)],
              R.objs[static_cast<size_t>(K.obj[static_cast<size_t>(ti)])][static_cast<size_t>(a)]
                  .obj[static_cast<size_t>(w)],
              n));
        }
        mu.push_back(comp);
      }
      int found = -1;
      for (int mm = 0; mm < R.cat.nMor() && found < 0; ++mm)
        if (R.cat.src[static_cast<size_t>(mm)] == K.obj[static_cast<size_t>(si)] &&
            R.cat.dst[static_cast<size_t>(mm)] == K.obj[static_cast<size_t>(ti)] &&
            R.mods[static_cast<size_t>(mm)] == mu)
          found = mm;
      if (found < 0) return fail("comparison modification missing");
      K.mor.push_back(found);
    }
    std::string fwhy;
    if (!K.validate(FC.cat, R.cat, &fwhy)) return fail("comparison not a functor: " + fwhy);
    if (!is_equivalence_functor(FC.cat, R.cat, K)) return fail("comparison not an equivalence");
  }
  return true;
}

}  // namespace laxkit
