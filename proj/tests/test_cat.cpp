#include <catch2/catch_amalgamated.hpp>

#include "laxkit/fincat.hpp"

using namespace laxkit;

namespace {

// two objects with mutually inverse nonidentity arrows
FinCat walking_iso() {
  FinCat C;
  C.add_object();
  C.add_object();
  int i0 = C.add_morphism(0, 0), i1 = C.add_morphism(1, 1);
  int f = C.add_morphism(0, 1), g = C.add_morphism(1, 0);
  C.set_identity(0, i0);
  C.set_identity(1, i1);
  C.set_comp(i0, i0, i0);
  C.set_comp(i1, i1, i1);
  C.set_comp(f, i0, f);
  C.set_comp(i1, f, f);
  C.set_comp(g, i1, g);
  C.set_comp(i0, g, g);
  C.set_comp(g, f, i0);
  C.set_comp(f, g, i1);
  return C;
}

}  // namespace

TEST_CASE("basic builders validate") {
  CHECK(discrete_cat(3).validate());
  CHECK(chain_cat(2).validate());
  CHECK(terminal_cat().validate());
  CHECK(op_cat(chain_cat(2)).validate());
  CHECK(walking_iso().validate());
  CHECK(chain_cat(2).is_gaunt());
  CHECK_FALSE(walking_iso().is_gaunt());

  ProductCat P = product_cat(chain_cat(1), chain_cat(1));
  CHECK(P.cat.nObj == 4);
  CHECK(P.cat.nMor() == 9);
  CHECK(P.cat.validate());
}

TEST_CASE("functor and transformation enumeration") {
  FinCat c1 = chain_cat(1);
  FunCat F = fun_cat(c1, c1);
  CHECK(F.objs.size() == 3);
  CHECK(F.cat.validate());

  FinCat empty;
  FunCat E = fun_cat(empty, c1);
  CHECK(E.cat.nObj == 1);
  CHECK(E.cat.nMor() == 1);

  CHECK(nat_set(c1, c1, identity_functor(c1), identity_functor(c1)).nObj == 1);

  // functors [1] -> walking iso: any of the 4 morphisms can be the image
  CHECK(all_functors(c1, walking_iso()).size() == 4);
}

TEST_CASE("comma categories") {
  FinCat c1 = chain_cat(1);
  CommaCat arrow = comma(c1, c1, c1, identity_functor(c1), identity_functor(c1));
  CHECK(arrow.cat.nObj == 3);
  CHECK(arrow.cat.validate());

  FinCat c2 = chain_cat(2);
  FinCat pt = terminal_cat();
  CommaCat slice = comma(pt, c2, c2, constant_functor(pt, c2, 0), identity_functor(c2));
  CHECK(slice.cat.nObj == 3);  // arrows out of the bottom element
  CHECK(slice.cat.validate());

  FinCat empty;
  CommaCat none = comma(empty, empty, empty, FinFunctor{}, FinFunctor{});
  CHECK(none.cat.nObj == 0);
}

TEST_CASE("left adjoint found by initial objects") {
  // monotone surjection {0<1<2} -> {0<1} collapsing the top two
  FinCat D = chain_cat(2), C = chain_cat(1);
  FinFunctor G;
  G.obj = {0, 1, 1};
  for (int m = 0; m < D.nMor(); ++m)
    G.mor.push_back(C.hom(G.obj[static_cast<size_t>(D.src[static_cast<size_t>(m)])],
                          G.obj[static_cast<size_t>(D.dst[static_cast<size_t>(m)])])[0]);
  REQUIRE(G.validate(D, C));

  AdjointResult r = find_left_adjoint(D, C, G);
  REQUIRE(r.status == AdjointResult::Status::Found);
  CHECK(r.adj->L.obj == std::vector<int>{0, 1});
  CHECK(r.adj->triangles_hold(C, D));

  // the right adjoint of the reversed functor mirrors it
  AdjointResult rr = find_right_adjoint(op_cat(D), op_cat(C), op_functor(G));
  REQUIRE(rr.status == AdjointResult::Status::Found);
  CHECK(rr.adj->R.obj == r.adj->L.obj);
}

TEST_CASE("identity and terminal adjoints") {
  FinCat C = chain_cat(1);
  AdjointResult r = find_left_adjoint(C, C, identity_functor(C));
  REQUIRE(r.status == AdjointResult::Status::Found);
  CHECK(r.adj->L == identity_functor(C));

  FinCat pt = terminal_cat();
  FinFunctor toPt = constant_functor(C, pt, 0);
  AdjointResult s = find_left_adjoint(C, pt, toPt);
  REQUIRE(s.status == AdjointResult::Status::Found);
  CHECK(s.adj->L.obj == std::vector<int>{0});  // bottom element
}

TEST_CASE("missing and ambiguous adjoints are reported") {
  FinCat D = discrete_cat(2), C = chain_cat(1);
  FinFunctor G;
  G.obj = {0, 1};
  G.mor = {C.idOf[0], C.idOf[1]};
  REQUIRE(G.validate(D, C));
  CHECK(find_left_adjoint(D, C, G).status == AdjointResult::Status::NotFound);

  FinCat I = walking_iso();
  FinCat pt = terminal_cat();
  FinFunctor toPt = constant_functor(I, pt, 0);
  AdjointResult amb = find_left_adjoint(I, pt, toPt);
  CHECK(amb.status == AdjointResult::Status::Ambiguous);
  CHECK(amb.witness_object == 0);
}

TEST_CASE("ends compute strict family categories") {
  FinCat A = chain_cat(1);
  FinCat pt = terminal_cat();

  // constant point weight: the end is the ordinary limit
  CatDiagram W = constant_diagram(A, pt);
  CatDiagram F;
  F.base = A;
  F.fib = {chain_cat(1), terminal_cat()};
  FinFunctor collapse = constant_functor(chain_cat(1), terminal_cat(), 0);
  // morphism order in chain_cat(1): id0, 0->1, id1
  F.act = {identity_functor(F.fib[0]), collapse, identity_functor(F.fib[1])};
  REQUIRE(F.base.nMor() == 3);
  REQUIRE(F.validate());
  EndCat E = end_limit(W, F);
  CHECK(fincat_isomorphic(E.cat, chain_cat(1)));

  // one-object base: the end is the functor category
  CatDiagram W0 = constant_diagram(pt, chain_cat(1));
  CatDiagram F0 = constant_diagram(pt, chain_cat(1));
  EndCat E0 = end_limit(W0, F0);
  FunCat FC = fun_cat(chain_cat(1), chain_cat(1));
  CHECK(E0.cat.nObj == FC.cat.nObj);
  CHECK(E0.cat.nMor() == FC.cat.nMor());
  CHECK(E0.cat.validate());
}

TEST_CASE("representable weights recover the fibre") {
  // F over [1]: F(0) = [1], F(1) = two points, the arrow collapses to point 1
  FinCat A = chain_cat(1);
  CatDiagram F;
  F.base = A;
  F.fib = {chain_cat(1), discrete_cat(2)};
  FinFunctor mid;
  mid.obj = {1, 1};
  mid.mor = {F.fib[1].idOf[1], F.fib[1].idOf[1], F.fib[1].idOf[1]};
  F.act = {identity_functor(F.fib[0]), mid, identity_functor(F.fib[1])};
  REQUIRE(A.is_identity(0));  // morphism order: id0, 0->1, id1
  REQUIRE(F.validate());

  for (int a = 0; a < A.nObj; ++a) {
    EndCat E = end_limit(representable_weight(A, a), F);
    CHECK(fincat_isomorphic(E.cat, F.fib[static_cast<size_t>(a)]));
  }
}

TEST_CASE("equivalence predicates") {
  FinCat I = walking_iso(), pt = terminal_cat();
  FinFunctor toPt = constant_functor(I, pt, 0);
  // every hom of the walking isomorphism is a singleton, so this collapse is
  // an equivalence but not an isomorphism
  CHECK(is_equivalence_functor(I, pt, toPt));
  CHECK_FALSE(fincat_isomorphic(I, pt));

  FinFunctor two = constant_functor(discrete_cat(2), pt, 0);
  CHECK_FALSE(is_fully_faithful_functor(discrete_cat(2), pt, two));

  FinFunctor pick;
  pick.obj = {0};
  pick.mor = {I.idOf[0]};
  CHECK(is_equivalence_functor(pt, I, pick));
  CHECK(fincat_isomorphic(chain_cat(1), chain_cat(1)));
  CHECK_FALSE(fincat_isomorphic(chain_cat(1), discrete_cat(2)));
}
