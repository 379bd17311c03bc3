#include <catch2/catch_amalgamated.hpp>

#include "laxkit/scaled.hpp"
#include "laxkit/sset.hpp"

using namespace laxkit;

namespace {

// independent oracle for products of standard simplices: the product of
// nerves is the nerve of the product poset, so nondegenerate k-simplices
// are strict (k+1)-chains
int strict_chains_in_product_poset(int m, int n, int len) {
  std::vector<std::pair<int, int>> pts;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= n; ++b) pts.push_back({a, b});
  auto le = [](std::pair<int, int> x, std::pair<int, int> y) {
    return x.first <= y.first && x.second <= y.second;
  };
  std::function<int(std::vector<int>&)> count = [&](std::vector<int>& ch) -> int {
    if (static_cast<int>(ch.size()) == len) return 1;
    int total = 0;
    for (size_t q = 0; q < pts.size(); ++q) {
      if (!ch.empty()) {
        auto last = pts[static_cast<size_t>(ch.back())];
        if (!(le(last, pts[q]) && pts[q] != last)) continue;
      }
      ch.push_back(static_cast<int>(q));
      total += count(ch);
      ch.pop_back();
    }
    return total;
  };
  std::vector<int> ch;
  return count(ch);
}

SSetX product_poset_nerve(int m, int n) {
  std::vector<std::pair<int, int>> pts;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= n; ++b) pts.push_back({a, b});
  std::vector<std::vector<bool>> leq(pts.size(), std::vector<bool>(pts.size()));
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = 0; j < pts.size(); ++j)
      leq[i][j] = pts[i].first <= pts[j].first && pts[i].second <= pts[j].second;
  return with_scaling(nerve_of_poset(static_cast<int>(pts.size()), leq), Scaling::Flat);
}

std::vector<std::pair<int, int>> grid_vertices(const ProductSSet& P, const SSet& prod, const SRef& r) {
  std::vector<std::pair<int, int>> out;
  for (int v : prod.vertices(r))
    out.push_back({P.comp[0][static_cast<size_t>(v)].first.cell, P.comp[0][static_cast<size_t>(v)].second.cell});
  return out;
}

SSetX random_scaling(const SSet& base, SplitMix64& rng, double p) {
  SSetX X = with_scaling(base, Scaling::Flat);
  for (size_t i = 0; i < X.thin.size(); ++i) X.thin[i] = rng.chance(p);
  return X;
}

bool scaling_leq(const SSetX& A, const SSetX& B) {
  for (size_t i = 0; i < A.thin.size(); ++i)
    if (A.thin[i] && !B.thin[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("monotone map algebra") {
  // simplicial identities at the level of generators
  for (int n = 1; n <= 3; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        CHECK(compose(Mono::coface(j, n), Mono::coface(i, n - 1)) ==
              compose(Mono::coface(i, n), Mono::coface(j - 1, n - 1)));
  // every monotone map factors uniquely as injection after surjection
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      std::vector<int> radix(static_cast<size_t>(m) + 1, n + 1);
      std::vector<int> a;
      if (!first_assignment(radix, a)) continue;
      do {
        bool mono = true;
        for (int i = 0; i < m && mono; ++i) mono = a[i] <= a[i + 1];
        if (!mono) continue;
        Mono f;
        f.dom = static_cast<int8_t>(m);
        f.cod = static_cast<int8_t>(n);
        for (int i = 0; i <= m; ++i) f.v[i] = static_cast<int8_t>(a[i]);
        Mono inj, surj;
        ez_factor(f, inj, surj);
        CHECK(inj.is_injective());
        CHECK(surj.is_surjective());
        CHECK(compose(inj, surj) == f);
      } while (next_assignment(radix, a));
    }
  // reversal is a contravariant involution
  Mono s1 = Mono::codegen(1, 1);
  CHECK(s1.reversed() == Mono::codegen(0, 1));
  CHECK(Mono::coface(0, 2).reversed() == Mono::coface(2, 2));
}

TEST_CASE("standard simplices") {
  SSetX d1 = standard_simplex_x(1, Scaling::Flat);
  CHECK(d1.s.n[0] == 2);
  CHECK(d1.s.n[1] == 1);
  CHECK(d1.s.n[2] == 0);
  CHECK(d1.s.validate());

  SSetX d2f = standard_simplex_x(2, Scaling::Flat);
  CHECK(d2f.s.n[2] == 1);
  CHECK_FALSE(d2f.thin[0]);
  CHECK(standard_simplex_x(2, Scaling::Sharp).thin[0]);

  SSetX d3 = standard_simplex_x(3, Scaling::Flat);
  CHECK(d3.s.n[2] == 4);
  CHECK(d3.s.n[3] == 1);
  CHECK(d3.s.validate());
  CHECK(d3.thin_count() == 0);

  CHECK_THROWS_AS(standard_simplex_x(4, Scaling::Flat), Error);
}

TEST_CASE("simplicial identities hold on all simplices, including degenerate") {
  ProductSSet P = product(standard_simplex_sset(1), standard_simplex_sset(2));
  const SSet& X = P.sset;
  REQUIRE(X.validate());
  for (int d = 2; d <= 3; ++d)
    for (const SRef& r : X.all_simplices(d))
      for (int j = 1; j <= d; ++j)
        for (int i = 0; i < j; ++i) CHECK(X.face(X.face(r, j), i) == X.face(X.face(r, i), j - 1));
}

TEST_CASE("boundaries and horns") {
  SSet b2 = boundary_sset(2);
  CHECK(b2.n[0] == 3);
  CHECK(b2.n[1] == 3);
  CHECK(b2.n[2] == 0);
  SSet b3 = boundary_sset(3);
  CHECK(b3.n[2] == 4);
  CHECK(b3.n[3] == 0);
  CHECK(b3.validate());
  SSet h = horn2(1);
  CHECK(h.n[0] == 3);
  CHECK(h.n[1] == 2);
  CHECK(h.validate());
}

TEST_CASE("products match chain counts in the product poset") {
  struct Case {
    int m, n;
  } cases[] = {{1, 1}, {1, 2}, {2, 2}};
  for (auto [m, n] : cases) {
    ProductSSet P = product(standard_simplex_sset(m), standard_simplex_sset(n));
    REQUIRE(P.sset.validate());
    for (int d = 0; d <= 3; ++d) CHECK(P.sset.n[d] == strict_chains_in_product_poset(m, n, d + 1));
    // cross-validate against an independently built nerve
    CHECK(ssetx_isomorphic(with_scaling(P.sset, Scaling::Flat), product_poset_nerve(m, n)));
  }
}

TEST_CASE("square and prism cell counts") {
  ProductSSet sq = product(standard_simplex_sset(1), standard_simplex_sset(1));
  CHECK(sq.sset.n[0] == 4);
  CHECK(sq.sset.n[1] == 5);
  CHECK(sq.sset.n[2] == 2);
  CHECK(sq.sset.n[3] == 0);

  ProductSSet pr = product(standard_simplex_sset(1), standard_simplex_sset(2));
  CHECK(pr.sset.n[0] == 6);
  CHECK(pr.sset.n[1] == 12);
  CHECK(pr.sset.n[3] == 3);
}

TEST_CASE("product with a point is the identity") {
  SSetX Y = with_scaling(product(standard_simplex_sset(1), standard_simplex_sset(1)).sset, Scaling::Flat);
  Y.thin[0] = true;
  SSetX L = product_x(Y, standard_simplex_x(0, Scaling::Flat));
  SSetX R = product_x(standard_simplex_x(0, Scaling::Flat), Y);
  CHECK(ssetx_equal(L, Y));
  CHECK(ssetx_equal(R, Y));
}

TEST_CASE("tensor scaling rule on the square") {
  SSetX d1 = standard_simplex_x(1, Scaling::Flat);
  ProductSSet P;
  SSetX G = gray_tensor(d1, d1, &P);
  REQUIRE(G.s.n[2] == 2);
  CHECK(G.thin_count() == 1);
  for (int c = 0; c < 2; ++c) {
    auto vs = grid_vertices(P, G.s, SRef::of_cell(c, 2));
    bool through10 = vs[1] == std::pair<int, int>{1, 0};
    CHECK(G.thin[static_cast<size_t>(c)] == through10);
  }
}

TEST_CASE("tensor units are strict") {
  SSetX pt = standard_simplex_x(0, Scaling::Flat);
  SSetX Y = gray_tensor(standard_simplex_x(1, Scaling::Flat), standard_simplex_x(2, Scaling::Sharp));
  CHECK(ssetx_equal(gray_tensor(pt, Y), Y));
  CHECK(ssetx_equal(gray_tensor(Y, pt), Y));
}

TEST_CASE("tensor is associative via the canonical regrouping") {
  SSetX A = standard_simplex_x(1, Scaling::Flat);
  SSetX B = standard_simplex_x(1, Scaling::Flat);
  SSetX C = standard_simplex_x(1, Scaling::Flat);

  ProductSSet PAB, PL, PBC, PR;
  SSetX AB = gray_tensor(A, B, &PAB);
  SSetX L = gray_tensor(AB, C, &PL);
  SSetX BC = gray_tensor(B, C, &PBC);
  SSetX R = gray_tensor(A, BC, &PR);

  SMap m;
  for (int d = 0; d <= 3; ++d)
    for (size_t c = 0; c < PL.comp[d].size(); ++c) {
      auto [rab, rc] = PL.comp[d][c];
      auto [ra0, rb0] = PAB.comp[rab.base_dim()][static_cast<size_t>(rab.cell)];
      SRef ra{ra0.cell, compose(ra0.surj, rab.surj)};
      SRef rb{rb0.cell, compose(rb0.surj, rab.surj)};
      m.img[d].push_back(PR.pair_ref(ra, PBC.pair_ref(rb, rc)));
    }
  CHECK(is_strict_iso(L, R, m));
}

TEST_CASE("tensor reverses under the dual") {
  SSetX X = standard_simplex_x(1, Scaling::Flat);
  SSetX Y = standard_simplex_x(2, Scaling::Flat);
  ProductSSet PXY, POP;
  SSetX G = gray_tensor(X, Y, &PXY);
  SSetX L = op_dual_x(G);
  SSetX R = gray_tensor(op_dual_x(Y), op_dual_x(X), &POP);
  SMap m;
  for (int d = 0; d <= 3; ++d)
    for (size_t c = 0; c < PXY.comp[d].size(); ++c) {
      auto [rx, ry] = PXY.comp[d][c];
      m.img[d].push_back(POP.pair_ref(op_ref(ry), op_ref(rx)));
    }
  CHECK(is_strict_iso(L, R, m));
}

TEST_CASE("dual is an involution") {
  SSetX X = gray_tensor(standard_simplex_x(1, Scaling::Flat), standard_simplex_x(2, Scaling::Flat));
  X.marked[0] = true;
  CHECK(ssetx_equal(op_dual_x(op_dual_x(X)), X));
  CHECK(op_dual_x(X).s.validate());
}

TEST_CASE("marked tensor specializations") {
  SSetX d1 = standard_simplex_x(1, Scaling::Flat);
  SSetX d2 = standard_simplex_x(2, Scaling::Sharp);

  std::vector<bool> minimal1(1, false), sharp1(1, true);
  std::vector<bool> minimalY(static_cast<size_t>(d2.s.n[1]), false);

  SSetX viaMin = marked_gray_tensor(d1, minimal1, d2, minimalY);
  CHECK(ssetx_equal(viaMin, gray_tensor(d1, d2)));

  std::vector<bool> sharpY(static_cast<size_t>(d2.s.n[1]), true);
  SSetX viaSharp = marked_gray_tensor(d1, sharp1, d2, sharpY);
  CHECK(viaSharp.thin == product_x(d1, d2).thin);

  // left marking alone already releases every product-of-thin triangle whose
  // escape edge sits in the first factor
  SSetX both = marked_gray_tensor(delta1_marked(), sharp1, d1, minimal1);
  CHECK(both.s.n[2] == 2);
  CHECK(both.thin_count() == 2);

  CHECK_THROWS_AS(marked_gray_tensor(d1, std::vector<bool>{}, d2, minimalY), Error);
}

TEST_CASE("saturation closes the inner-face rule") {
  SSetX d3 = standard_simplex_x(3, Scaling::Flat);
  for (int i = 1; i <= 2; ++i) {
    SSetX Ui = d3;
    for (int j = 0; j <= 3; ++j)
      if (j != i) Ui.thin[static_cast<size_t>(Ui.s.face(SRef::of_cell(0, 3), j).cell)] = true;
    CHECK(Ui.thin_count() == 3);
    SSetX sat = saturate_scaling(Ui);
    CHECK(sat.thin_count() == 4);
  }
  CHECK(ssetx_equal(saturate_scaling(d3), d3));
}

TEST_CASE("saturation is idempotent, monotone, and dual-compatible") {
  SSet cube = product(product(standard_simplex_sset(1), standard_simplex_sset(1)).sset,
                      standard_simplex_sset(1))
                  .sset;
  REQUIRE(cube.validate());
  SplitMix64 rng(417);
  for (int trial = 0; trial < 40; ++trial) {
    SSetX X = random_scaling(cube, rng, 0.35);
    SSetX S = saturate_scaling(X);
    CHECK(scaling_leq(X, S));
    CHECK(ssetx_equal(saturate_scaling(S), S));
    SSetX Y = X;
    for (size_t i = 0; i < Y.thin.size(); ++i) Y.thin[i] = Y.thin[i] || rng.chance(0.2);
    CHECK(scaling_leq(S, saturate_scaling(Y)));
    CHECK(ssetx_equal(op_dual_x(S), saturate_scaling(op_dual_x(X))));
  }
}

TEST_CASE("pushouts glue along injective legs") {
  // parallel edges
  {
    SSetX d1 = standard_simplex_x(1, Scaling::Flat);
    SSetX pts = with_scaling(boundary_sset(1), Scaling::Flat);
    SMap f;
    f.img[0] = {SRef::of_cell(0, 0), SRef::of_cell(1, 0)};
    SSetX W = pushout_x(pts, d1, d1, f, f);
    CHECK(W.s.n[0] == 2);
    CHECK(W.s.n[1] == 2);
    CHECK(W.s.validate());
  }
  // two wedges glued along both endpoints
  {
    SMap incl;
    SSet h = horn2(1, &incl);
    SSetX H = with_scaling(h, Scaling::Flat);
    SSetX pts = with_scaling(boundary_sset(1), Scaling::Flat);
    SMap f;
    f.img[0] = {SRef::of_cell(0, 0), SRef::of_cell(2, 0)};  // endpoints of the wedge
    SSetX W = pushout_x(pts, H, H, f, f);
    CHECK(W.s.n[0] == 4);
    CHECK(W.s.n[1] == 4);
    CHECK(W.s.validate());
  }
  // disjoint union
  {
    SSetX A = standard_simplex_x(2, Scaling::Sharp);
    SSetX B = standard_simplex_x(1, Scaling::Flat);
    SSetX U = disjoint_union_x(A, B);
    CHECK(U.s.n[0] == 5);
    CHECK(U.s.n[1] == 4);
    CHECK(U.s.n[2] == 1);
    CHECK(U.thin_count() == 1);
  }
  // neither leg injective is refused
  {
    SSetX pt = standard_simplex_x(0, Scaling::Flat);
    SSetX two = with_scaling(boundary_sset(1), Scaling::Flat);
    SMap collapse;
    collapse.img[0] = {SRef::of_cell(0, 0), SRef::of_cell(0, 0)};
    CHECK_THROWS_AS(pushout_x(two, pt, pt, collapse, collapse), Error);
  }
}

TEST_CASE("pushout carries scaling and marking along") {
  SSetX A = standard_simplex_x(2, Scaling::Sharp);
  SSetX B = standard_simplex_x(2, Scaling::Flat);
  A.marked[0] = true;
  SSetX edge = standard_simplex_x(1, Scaling::Flat);
  // glue along edge 0 of each (the 1->2 edge)
  SMap f, g;
  f.img[0] = {SRef::of_cell(1, 0), SRef::of_cell(2, 0)};
  f.img[1] = {A.s.faces[2][0][0]};
  g = f;
  SSetX W = pushout_x(edge, A, B, f, g, nullptr);
  CHECK(W.s.n[0] == 4);
  CHECK(W.s.n[1] == 5);
  CHECK(W.s.n[2] == 2);
  CHECK(W.thin_count() == 1);
  CHECK(W.marked_count() == 1);
  CHECK(W.s.validate());
}

TEST_CASE("map enumeration respects scaling and ordering") {
  SSetX d0 = standard_simplex_x(0, Scaling::Flat);
  SSetX d1 = standard_simplex_x(1, Scaling::Flat);
  SSetX sq = with_scaling(product(standard_simplex_sset(1), standard_simplex_sset(1)).sset, Scaling::Flat);

  CHECK(sset_maps(d0, sq).size() == 4);

  auto maps = sset_maps(d1, d1);
  REQUIRE(maps.size() == 3);
  // lexicographic on vertex images: (0,0) < (0,1) < (1,1)
  CHECK(maps[0].img[0] == std::vector<SRef>{SRef::of_cell(0, 0), SRef::of_cell(0, 0)});
  CHECK(maps[1].img[0] == std::vector<SRef>{SRef::of_cell(0, 0), SRef::of_cell(1, 0)});
  CHECK(maps[2].img[0] == std::vector<SRef>{SRef::of_cell(1, 0), SRef::of_cell(1, 0)});
  for (const auto& m : maps) CHECK(m.validate(d1.s, d1.s));

  SSetX d2s = standard_simplex_x(2, Scaling::Sharp);
  SSetX d2f = standard_simplex_x(2, Scaling::Flat);
  CHECK(sset_maps(d2s, d2f).size() == 9);   // all ten 2-simplices except the nonthin cell
  CHECK(sset_maps(d2s, d2s).size() == 10);
  CHECK(sset_maps(d2f, d2f).size() == 10);

  // marked-respecting enumeration
  CHECK(sset_maps(delta1_marked(), d1, true).size() == 2);
  CHECK(sset_maps(delta1_marked(), delta1_marked(), true).size() == 3);
}

TEST_CASE("isomorphism testing distinguishes scalings") {
  SSetX a = standard_simplex_x(2, Scaling::Flat);
  SSetX b = standard_simplex_x(2, Scaling::Sharp);
  CHECK(ssetx_isomorphic(a, a));
  CHECK_FALSE(ssetx_isomorphic(a, b));

  SSetX sq1 = gray_tensor(standard_simplex_x(1, Scaling::Flat), standard_simplex_x(1, Scaling::Flat));
  SSetX sq2 = op_dual_x(sq1);
  SMap w;
  CHECK(ssetx_isomorphic(sq1, sq2, &w));
  CHECK(is_strict_iso(sq1, sq2, w));
}
