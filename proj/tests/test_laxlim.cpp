#include <catch2/catch_amalgamated.hpp>

#include <laxkit/laxlim.hpp>

using namespace laxkit;

namespace {

FinCat walking_iso_cat() {
  FinCat C;
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
  return C;
}

FinCat group_z2_cat() {
  FinCat C;
  C.add_object();
  int e = C.add_morphism(0, 0), g = C.add_morphism(0, 0);
  C.set_identity(0, e);
  C.set_comp(e, e, e);
  C.set_comp(e, g, g);
  C.set_comp(g, e, g);
  C.set_comp(g, g, e);
  return C;
}

int only_arrow(const FinCat& C) {
  for (int m = 0; m < C.nMor(); ++m)
    if (!C.is_identity(m)) return m;
  return -1;
}

// every morphism of a discrete domain is an identity
FinFunctor discrete_functor(const FinCat& A, const FinCat& B, std::vector<int> obj) {
  FinFunctor F;
  F.obj = std::move(obj);
  for (int m = 0; m < A.nMor(); ++m)
    F.mor.push_back(B.idOf[static_cast<size_t>(F.obj[static_cast<size_t>(A.src[static_cast<size_t>(m)])])]);
  return F;
}

CatDiagram diagram_over(const FinCat& base, std::vector<FinCat> fibs,
                        const std::map<int, FinFunctor>& gen) {
  CatDiagram D;
  D.base = base;
  D.fib = std::move(fibs);
  D.act.resize(static_cast<size_t>(base.nMor()));
  for (int m = 0; m < base.nMor(); ++m) {
    auto it = gen.find(m);
    D.act[static_cast<size_t>(m)] =
        it != gen.end() ? it->second
                        : identity_functor(D.fib[static_cast<size_t>(base.src[static_cast<size_t>(m)])]);
  }
  return D;
}

// discrete two-point fibre mapping into an interval fibre, identities marked
MarkedDiagram arrow_diagram() {
  FinCat base = chain_cat(1);
  int f = only_arrow(base);
  FinCat F0 = discrete_cat(2), F1 = chain_cat(1);
  FinFunctor u = discrete_functor(F0, F1, {0, 1});
  return mark_none(diagram_over(base, {F0, F1}, {{f, u}}));
}

}  // namespace

TEST_CASE("markings must contain identities and absorb isomorphisms") {
  CatDiagram D = constant_diagram(walking_iso_cat(), terminal_cat());
  MarkedDiagram bare{D, std::vector<char>(static_cast<size_t>(D.base.nMor()), 0)};
  REQUIRE(!bare.validate());
  for (int x = 0; x < D.base.nObj; ++x)
    bare.E[static_cast<size_t>(D.base.idOf[static_cast<size_t>(x)])] = 1;
  // identities alone are not iso-closed on the walking isomorphism
  REQUIRE(!bare.validate());
  MarkedDiagram least = mark_none(D);
  REQUIRE(least.validate());
  for (int m = 0; m < D.base.nMor(); ++m) REQUIRE(least.E[static_cast<size_t>(m)] == 1);
  REQUIRE(mark_all(D).validate());
}

TEST_CASE("limits over a point base return the fibre") {
  for (const FinCat& V : {two_parallel_arrows_cat(), chain_cat(1), group_z2_cat()}) {
    MarkedDiagram M = mark_none(constant_diagram(terminal_cat(), V));
    REQUIRE(fincat_isomorphic(lax_limit(M).S.cat, V));
    REQUIRE(fincat_isomorphic(oplax_limit(M).S.cat, V));
  }
}

TEST_CASE("lax limit of an arrow diagram matches its transformation cones") {
  MarkedDiagram M = arrow_diagram();
  LaxLimit L = lax_limit(M);
  REQUIRE(L.S.cat.validate());
  REQUIRE(L.S.cat.nObj == 3);
  REQUIRE(L.S.cat.nMor() == 4);
  LaxLimit Lo = oplax_limit(M);
  REQUIRE(Lo.S.cat.nObj == 3);
  REQUIRE(Lo.S.cat.nMor() == 4);
  // independent path: enumerate transformations from the constant point
  ConeCat K = nat_elax_to_constant(M, terminal_cat());
  REQUIRE(K.N.cat.validate());
  REQUIRE(fincat_isomorphic(L.S.cat, K.N.cat));
}

TEST_CASE("constant diagrams have functor categories as lax limits") {
  CatDiagram D = constant_diagram(chain_cat(1), chain_cat(1));
  LaxLimit L = lax_limit(mark_none(D));
  REQUIRE(fincat_isomorphic(L.S.cat, fun_cat(chain_cat(1), chain_cat(1)).cat));
  // full marking collapses the constant diagram back to its value
  LaxLimit LP = lax_limit(mark_all(D));
  REQUIRE(fincat_isomorphic(LP.S.cat, chain_cat(1)));
}

TEST_CASE("oplax limits are opposites of lax limits of opposite diagrams") {
  MarkedDiagram M = arrow_diagram();
  CatDiagram Dop;
  Dop.base = M.D.base;
  for (const FinCat& F : M.D.fib) Dop.fib.push_back(op_cat(F));
  Dop.act = M.D.act;
  MarkedDiagram Mop{Dop, M.E};
  REQUIRE(Mop.validate());
  REQUIRE(fincat_isomorphic(oplax_limit(M).S.cat, op_cat(lax_limit(Mop).S.cat)));
}

TEST_CASE("larger markings cut out subfamilies of sections") {
  MarkedDiagram M = arrow_diagram();
  SectionsCat S0 = lax_limit(M).S;
  SectionsCat S1 = lax_limit(mark_all(M.D)).S;
  REQUIRE(S1.secs.size() == 2);
  REQUIRE(S1.secs.size() <= S0.secs.size());
  for (const FinFunctor& s : S1.secs) REQUIRE(index_of(S0.secs, s) >= 0);
}

TEST_CASE("cones from a category agree with lax limits of functor diagrams") {
  MarkedDiagram M = arrow_diagram();
  FinCat b = chain_cat(1);
  ConeCat K = nat_elax_to_constant(M, b);
  FunDiagram FD = fun_from_diagram(b, M.D);
  MarkedDiagram M2{FD.D, M.E};
  REQUIRE(M2.validate());
  LaxLimit L2 = lax_limit(M2);
  REQUIRE(K.N.cat.nObj == 4);
  REQUIRE(fincat_isomorphic(K.N.cat, L2.S.cat));
}

TEST_CASE("representable weights collapse weighted limits to diagram values") {
  FinCat A = chain_cat(1);
  MarkedDiagram M = arrow_diagram();
  OverFunctorCat WL0 = weighted_limit(representable_weight(A, 0), M.D);
  REQUIRE(WL0.cat.validate());
  REQUIRE(fincat_isomorphic(WL0.cat, M.D.fib[0]));
  OverFunctorCat WL1 = weighted_limit(representable_weight(A, 1), M.D);
  REQUIRE(fincat_isomorphic(WL1.cat, M.D.fib[1]));
}

TEST_CASE("weighted limits agree with strict ends on gaunt instances") {
  FinCat A = chain_cat(1);
  MarkedDiagram M = arrow_diagram();
  for (int a = 0; a < 2; ++a) {
    CatDiagram W = representable_weight(A, a);
    OverFunctorCat WL = weighted_limit(W, M.D);
    EndCat E = end_limit(W, M.D);
    REQUIRE(fincat_isomorphic(WL.cat, E.cat));
  }
}

TEST_CASE("weighted limits stay equivalent to ends beyond gaunt fibres") {
  FinCat A = chain_cat(1);
  int f = only_arrow(A);
  FinCat Z2 = group_z2_cat();
  CatDiagram F = diagram_over(A, {Z2, Z2}, {{f, identity_functor(Z2)}});
  CatDiagram W = representable_weight(A, 0);
  OverFunctorCat WL = weighted_limit(W, F);
  EndCat E = end_limit(W, F);
  REQUIRE(E.cat.nObj == 1);
  REQUIRE(E.cat.nMor() == 2);
  REQUIRE(WL.cat.nObj == 2);
  REQUIRE(WL.cat.nMor() == 8);
  REQUIRE(!fincat_isomorphic(WL.cat, E.cat));
  bool equivalent = false;
  for (const FinFunctor& K : all_functors(E.cat, WL.cat))
    equivalent = equivalent || is_equivalence_functor(E.cat, WL.cat, K);
  REQUIRE(equivalent);
}

TEST_CASE("weighted limits restrict to marked lax limits over the weight total") {
  FinCat A = chain_cat(1);
  MarkedDiagram M = arrow_diagram();
  CatDiagram W = representable_weight(A, 0);
  Groth GW = grothendieck(W, 0);
  CatDiagram D2;
  D2.base = GW.total1;
  for (int o = 0; o < GW.total1.nObj; ++o)
    D2.fib.push_back(M.D.fib[static_cast<size_t>(GW.proj1.obj[static_cast<size_t>(o)])]);
  for (int m = 0; m < GW.total1.nMor(); ++m)
    D2.act.push_back(M.D.act[static_cast<size_t>(GW.proj1.mor[static_cast<size_t>(m)])]);
  std::vector<char> E2(static_cast<size_t>(GW.total1.nMor()), 0);
  for (int m = 0; m < GW.total1.nMor(); ++m)
    E2[static_cast<size_t>(m)] = mor_is_cocartesian(GW.total1, GW.base1, GW.proj1, m);
  MarkedDiagram M2{D2, E2};
  REQUIRE(M2.validate());
  REQUIRE(fincat_isomorphic(lax_limit(M2).S.cat, weighted_limit(W, M.D).cat));
}

TEST_CASE("bounded localization inverts an interval to the walking isomorphism") {
  FinCat C = chain_cat(1);
  int f = only_arrow(C);
  std::vector<char> inv(static_cast<size_t>(C.nMor()), 0);
  inv[static_cast<size_t>(f)] = 1;
  LocalizeOutcome L = bounded_localize(C, inv);
  REQUIRE(L.complete);
  REQUIRE(L.cat.validate());
  REQUIRE(fincat_isomorphic(L.cat, walking_iso_cat()));
  std::string why;
  REQUIRE(L.quot.validate(C, L.cat, &why));
  REQUIRE(L.cat.is_iso(L.quot.mor[static_cast<size_t>(f)]));
}

TEST_CASE("localizing a composable chain rewrites through the inverse") {
  FinCat C = chain_cat(2);
  int f01 = -1, f02 = -1, f12 = -1;
  for (int m = 0; m < C.nMor(); ++m) {
    if (C.is_identity(m)) continue;
    if (C.src[static_cast<size_t>(m)] == 0 && C.dst[static_cast<size_t>(m)] == 1) f01 = m;
    if (C.src[static_cast<size_t>(m)] == 0 && C.dst[static_cast<size_t>(m)] == 2) f02 = m;
    if (C.src[static_cast<size_t>(m)] == 1 && C.dst[static_cast<size_t>(m)] == 2) f12 = m;
  }
  std::vector<char> inv(static_cast<size_t>(C.nMor()), 0);
  inv[static_cast<size_t>(f01)] = 1;
  LocalizeOutcome L = bounded_localize(C, inv);
  REQUIRE(L.complete);
  REQUIRE(L.cat.validate());
  REQUIRE(L.cat.nObj == 3);
  REQUIRE(L.cat.nMor() == 7);
  int invm = -1;
  REQUIRE(L.cat.is_iso(L.quot.mor[static_cast<size_t>(f01)], &invm));
  REQUIRE(L.cat.compose(L.quot.mor[static_cast<size_t>(f02)], invm) ==
          L.quot.mor[static_cast<size_t>(f12)]);
  bool equivalent = false;
  for (const FinFunctor& K : all_functors(L.cat, chain_cat(1)))
    equivalent = equivalent || is_equivalence_functor(L.cat, chain_cat(1), K);
  REQUIRE(equivalent);
}

TEST_CASE("localization reports free loops as unverified") {
  FinCat C = two_parallel_arrows_cat();
  std::vector<char> inv(static_cast<size_t>(C.nMor()), 0);
  inv[static_cast<size_t>(only_arrow(C))] = 1;
  LocalizeOutcome L = bounded_localize(C, inv);
  REQUIRE(!L.complete);
}

TEST_CASE("lax colimit with least marking is presented by the total category") {
  MarkedDiagram M = arrow_diagram();
  CoconePresentation P = lax_colimit(M);
  REQUIRE(P.total.nObj == 4);
  REQUIRE(P.total.nMor() == 8);
  REQUIRE(P.status == CoconePresentation::Status::Complete);
  REQUIRE(fincat_isomorphic(P.localized, P.total));
  std::string why;
  REQUIRE(verify_colimit(P, M, 50000000, &why));
  // a corrupted inverted class must be rejected, not patched over
  CoconePresentation bad = P;
  for (int m = 0; m < bad.total.nMor(); ++m)
    if (!bad.invert[static_cast<size_t>(m)] && !bad.total.is_identity(m)) {
      bad.invert[static_cast<size_t>(m)] = 1;
      break;
    }
  REQUIRE(!verify_colimit(bad, M, 50000000, &why));
}

TEST_CASE("oplax colimit with invertible transport collapses to the fibre") {
  FinCat I = chain_cat(1);
  MarkedDiagram M = mark_all(constant_diagram(I, I));
  CoconePresentation P = oplax_colimit(M);
  REQUIRE(P.status == CoconePresentation::Status::Complete);
  REQUIRE(P.localized.validate());
  REQUIRE(P.localized.nObj == 4);
  REQUIRE(P.localized.nMor() == 12);
  bool equivalent = false;
  for (const FinFunctor& K : all_functors(P.localized, I))
    equivalent = equivalent || is_equivalence_functor(P.localized, I, K);
  REQUIRE(equivalent);
  std::string why;
  REQUIRE(verify_colimit(P, M, 100000000, &why));
}

TEST_CASE("complete presentations satisfy the one-categorical mapping property") {
  FinCat I = chain_cat(1);
  MarkedDiagram M = mark_all(constant_diagram(I, I));
  CoconePresentation P = oplax_colimit(M);
  REQUIRE(P.status == CoconePresentation::Status::Complete);
  for (const FinCat& C : {chain_cat(2), two_parallel_arrows_cat()}) {
    InvertingFunCat FC = inverting_fun_cat(P, C);
    FunCat FL = fun_cat(P.localized, C);
    REQUIRE(FC.objs.size() == FL.objs.size());
    REQUIRE(FC.cat.nMor() == FL.cat.nMor());
  }
}

TEST_CASE("weighted colimit over a point presents the product") {
  CatDiagram W = constant_diagram(terminal_cat(), chain_cat(1));
  CatDiagram F = constant_diagram(terminal_cat(), discrete_cat(2));
  WeightedColimit WC = weighted_colimit(W, F);
  REQUIRE(WC.P.total.nObj == 4);
  REQUIRE(WC.P.total.nMor() == 6);
  REQUIRE(fincat_isomorphic(WC.P.total, product_cat(chain_cat(1), discrete_cat(2)).cat));
  REQUIRE(WC.P.status == CoconePresentation::Status::Complete);
  REQUIRE(fincat_isomorphic(WC.P.localized, WC.P.total));
  std::string why;
  REQUIRE(verify_weighted_colimit(WC, W, F, 100000000, &why));
}

TEST_CASE("corepresentable weights collapse weighted colimits to diagram values") {
  FinCat A = chain_cat(1);
  MarkedDiagram M = arrow_diagram();
  for (int a = 0; a < 2; ++a) {
    CatDiagram W = representable_weight(op_cat(A), a);
    WeightedColimit WC = weighted_colimit(W, M.D);
    REQUIRE(WC.P.status == CoconePresentation::Status::Complete);
    REQUIRE(WC.P.localized.validate());
    bool equivalent = false;
    for (const FinFunctor& K : all_functors(WC.P.localized, M.D.fib[static_cast<size_t>(a)]))
      equivalent = equivalent ||
                   is_equivalence_functor(WC.P.localized, M.D.fib[static_cast<size_t>(a)], K);
    REQUIRE(equivalent);
    std::string why;
    REQUIRE(verify_weighted_colimit(WC, W, M.D, 200000000, &why));
  }
}

TEST_CASE("budget exhaustion and malformed inputs raise typed errors") {
  MarkedDiagram M = arrow_diagram();
  {
    MarkedDiagram bad = M;
    bad.E.assign(bad.E.size(), 0);
    try {
      lax_limit(bad);
      REQUIRE(false);
    } catch (const Error& e) {
      REQUIRE(e.code == ErrCode::InvalidMarking);
    }
  }
  {
    CatDiagram W = constant_diagram(chain_cat(1), terminal_cat());
    try {
      weighted_limit(W, constant_diagram(terminal_cat(), terminal_cat()));
      REQUIRE(false);
    } catch (const Error& e) {
      REQUIRE(e.code == ErrCode::InvalidInput);
    }
    try {
      weighted_colimit(W, constant_diagram(chain_cat(1), terminal_cat()));
      REQUIRE(false);
    } catch (const Error& e) {
      REQUIRE(e.code == ErrCode::InvalidInput);
    }
  }
  {
    CoconePresentation P = lax_colimit(M);
    try {
      verify_colimit(P, M, 1);
      REQUIRE(false);
    } catch (const Error& e) {
      REQUIRE(e.code == ErrCode::ResourceBudget);
    }
  }
  try {
    nat_elax_to_constant(M, chain_cat(1), 1);
    REQUIRE(false);
  } catch (const Error& e) {
    REQUIRE(e.code == ErrCode::ResourceBudget);
  }
}
