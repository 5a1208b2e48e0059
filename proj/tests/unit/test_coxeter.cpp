#include <doctest.h>

#include <numeric>

#include "coxeter_oracles.hpp"
#include "klsc/bmsheaf.hpp"
#include "klsc/errors.hpp"

using namespace klsc;

namespace {

UniPoly P(std::vector<long long> c) { return UniPoly(std::move(c)); }

std::shared_ptr<const CoxeterGroup> group(const std::string& type) {
  return std::make_shared<CoxeterGroup>(CartanDatum::named(type));
}

CoxElement longest(const CoxeterGroup& W) {
  return W.from_weight(Weight(static_cast<std::size_t>(W.rank()), -1));
}

BruhatInterval full(std::shared_ptr<const CoxeterGroup> W) {
  return enumerate_interval(W, W->identity(), longest(*W));
}

std::shared_ptr<const MomentGraph> graph(const BruhatInterval& I) { return std::make_shared<MomentGraph>(bruhat_graph(I)); }

}  // namespace

TEST_CASE("Cartan data") {
  CartanDatum a3 = CartanDatum::named("A3");
  CHECK(a3.matrix() == std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  CartanDatum b2 = CartanDatum::named("B2"), c2 = CartanDatum::named("C2");
  CHECK(b2(0, 1) == c2(1, 0));
  CHECK(b2(1, 0) == c2(0, 1));
  CHECK(CartanDatum::named("G2")(0, 1) * CartanDatum::named("G2")(1, 0) == 3);
  CHECK(CartanDatum::named("E8").rank() == 8);
  CHECK(a3.simple_root(1) == std::vector<long long>{-1, 2, -1});

  CHECK_THROWS_AS(CartanDatum::named("H3"), InputError);
  CHECK_THROWS_AS(CartanDatum::named("I2(5)"), InputError);
  CHECK_THROWS_AS(CartanDatum::named("E9"), InputError);
  CHECK_THROWS_AS(CartanDatum::named("Q2"), InputError);
  CHECK_THROWS_AS(CartanDatum::from_matrix({{2, 1}, {-1, 2}}), InputError);
  CHECK_THROWS_AS(CartanDatum::from_matrix({{2, 0}, {-1, 2}}), InputError);
  CHECK_THROWS_AS(CartanDatum::from_matrix({{1}}), InputError);
}

TEST_CASE("group orders from full intervals") {
  const std::vector<std::pair<std::string, int>> orders = {{"A1", 2}, {"A2", 6},  {"A3", 24}, {"B2", 8},
                                                           {"B3", 48}, {"C3", 48}, {"G2", 12}, {"D4", 192}};
  for (const auto& [t, n] : orders) CHECK(full(group(t)).size() == n);
  // Affine A_1: infinite group, intervals are still finite.
  auto W = std::make_shared<CoxeterGroup>(CartanDatum::from_matrix({{2, -2}, {-2, 2}}));
  CoxElement w = W->from_word({0, 1, 0, 1, 0});
  CHECK(w.length() == 5);
  CHECK(enumerate_interval(W, W->identity(), w).size() == 1 + 2 * 4 + 1);
}

TEST_CASE("words, permutations and normal forms") {
  auto W = group("A3");
  CoxElement x = W->from_word({1, 0, 1});
  CHECK(x.word == std::vector<int>{0, 1, 0});  // lex-min reduced word of s2 s1 s2
  CHECK(W->from_word({0, 0}) == W->identity());
  CHECK(W->to_permutation(W->from_word({0})) == std::vector<int>{2, 1, 3, 4});
  for (const auto& p : oracle::all_perms(4)) {
    CoxElement y = W->from_permutation(p);
    CHECK(W->to_permutation(y) == p);
    CHECK(y.length() == oracle::inversions(p));
    CHECK(W->inverse(W->inverse(y)) == y);
  }
  CHECK(W->multiply(x, W->inverse(x)) == W->identity());
  CHECK_THROWS_AS(W->from_word({3}), InputError);
  CHECK_THROWS_AS(W->from_permutation({1, 1, 2, 3}), InputError);
  CHECK_THROWS_AS(group("B2")->to_permutation(group("B2")->identity()), InputError);
}

TEST_CASE("Bruhat order against the subword property and the tableau criterion") {
  for (const char* t : {"A3", "B3", "G2"}) {
    auto W = group(t);
    BruhatInterval I = full(W);
    for (const auto& w : I.elements) {
      auto below = oracle::subword_products(*W, w);
      for (const auto& x : I.elements) CHECK(W->leq(x, w) == (below.count(x.weight) > 0));
    }
    // The poset built from covers agrees with the order.
    for (int a = 0; a < I.size(); ++a)
      for (int b = 0; b < I.size(); ++b)
        CHECK(I.poset->leq(a, b) == W->leq(I.elements[static_cast<std::size_t>(a)], I.elements[static_cast<std::size_t>(b)]));
  }
  auto W = group("A3");
  for (const auto& x : oracle::all_perms(4))
    for (const auto& w : oracle::all_perms(4))
      CHECK(W->leq(W->from_permutation(x), W->from_permutation(w)) == oracle::bruhat_leq(x, w));
}

TEST_CASE("interval enumeration") {
  auto A2 = group("A2");
  CHECK(enumerate_interval(A2, A2->identity(), longest(*A2)).size() == 6);
  auto A3 = group("A3");
  CoxElement w3412 = A3->from_permutation({3, 4, 1, 2});
  BruhatInterval I = enumerate_interval(A3, A3->identity(), w3412);
  CHECK(I.size() == 14);
  CHECK(I.elements[static_cast<std::size_t>(I.bottom)] == A3->identity());
  CHECK(I.poset->rank(I.top) == 4);
  CHECK(enumerate_interval(A3, w3412, w3412).size() == 1);
  CHECK_THROWS_AS(enumerate_interval(A3, A3->from_word({0}), A3->from_word({1})), InputError);
  CHECK_THROWS_AS(enumerate_interval(group("D4"), group("D4")->identity(), longest(*group("D4")), 100), InputError);
}

TEST_CASE("Bruhat graph") {
  auto A2 = group("A2");
  MomentGraph G = bruhat_graph(full(A2));
  // 3 reflections, 6 elements, each edge counted from both ends.
  CHECK(G.edges.size() == 9);
  for (int x = 0; x < G.size(); ++x) CHECK(G.incident[static_cast<std::size_t>(x)].size() == 3);

  auto A1 = group("A1");
  MomentGraph g1 = bruhat_graph(enumerate_interval(A1, A1->identity(), A1->from_word({0})));
  REQUIRE(g1.edges.size() == 1);
  CHECK(g1.edges[0].root.coeffs == std::vector<long long>{1});
  CHECK(g1.edges[0].label == std::vector<long long>{2});

  auto A3 = group("A3");
  MomentGraph g4 = bruhat_graph(full(A3));
  CHECK(g4.edges.size() == 6 * 24 / 2);
  const int e = g4.interval.index_of(A3->identity()), s1 = g4.interval.index_of(A3->from_permutation({2, 1, 3, 4}));
  bool found = false;
  for (const auto& E : g4.edges)
    if (E.lo == e && E.hi == s1) {
      found = true;
      CHECK(A3->epsilon_coordinates(E.root) == std::vector<long long>{1, -1, 0, 0});
    }
  CHECK(found);

  for (const char* t : {"A3", "B3", "G2"}) {
    auto W = group(t);
    MomentGraph H = bruhat_graph(full(W));
    for (const auto& E : H.edges) {
      const CoxElement& lo = H.interval.elements[static_cast<std::size_t>(E.lo)];
      const CoxElement& hi = H.interval.elements[static_cast<std::size_t>(E.hi)];
      CHECK(hi.length() > lo.length());
      CHECK(std::all_of(E.root.coeffs.begin(), E.root.coeffs.end(), [](long long c) { return c >= 0; }));
      CHECK(W->multiply(E.reflection, lo) == hi);
      CHECK(W->reflect(E.root, lo) == hi);
      CHECK(W->multiply(E.reflection, E.reflection) == W->identity());
    }
  }
}

TEST_CASE("open subgraph above a vertex") {
  auto A2 = group("A2");
  MomentGraph G = bruhat_graph(full(A2));
  OpenSubgraph O = gamma_gt(G, G.interval.bottom);
  CHECK(O.vertices.size() == 5);
  CHECK(O.edges.size() == 9);
  CHECK(gamma_gt(G, G.interval.top).vertices.empty());
  CHECK(gamma_gt(G, G.interval.top).edges.empty());

  auto A1 = group("A1");
  MomentGraph g1 = bruhat_graph(enumerate_interval(A1, A1->identity(), A1->from_word({0})));
  OpenSubgraph o1 = gamma_gt(g1, g1.interval.bottom);
  CHECK(o1.vertices == std::vector<int>{g1.interval.top});
  CHECK(o1.edges.size() == 1);
}

TEST_CASE("p-GKM condition") {
  CHECK(p_gkm_check(bruhat_graph(full(group("A2"))), 5).ok);
  CHECK(p_gkm_check(bruhat_graph(full(group("A1"))), 3).ok);
  GkmResult r = p_gkm_check(bruhat_graph(full(group("A3"))), 2);
  CHECK_FALSE(r.ok);
  CHECK(r.vertex >= 0);
  // alpha_1 = (2,-1,0) and alpha_3 = (0,-1,2) agree mod 2.
  CHECK_FALSE(p_gkm_check(bruhat_graph(full(group("A1"))), 2).ok);
  CHECK(p_gkm_check(bruhat_graph(full(group("A3"))), 5).ok);
}

TEST_CASE("R-polynomials") {
  auto A2 = group("A2");
  BruhatInterval I = full(A2);
  Kernel K = coxeter_R_kernel(I);
  CHECK(verify_kernel(K).ok);
  CHECK(K(I.bottom, I.top) == P({-1, 2, -2, 1}));
  for (int x = 0; x < I.size(); ++x) {
    CHECK(K(x, x) == P({1}));
    for (int y : I.poset->upper_covers(x)) CHECK(K(x, y) == P({-1, 1}));
  }
  for (const char* t : {"A3", "B2", "B3", "G2"}) CHECK(verify_kernel(coxeter_R_kernel(full(group(t)))).ok);
}

TEST_CASE("KL polynomials from the R-kernel against the Hecke recursion") {
  auto A3 = group("A3");
  BruhatInterval I = full(A3);
  KLSTable T = solve_kls(coxeter_R_kernel(I));
  oracle::KLOracle<oracle::PermOps> kl(oracle::PermOps{4});
  for (int x = 0; x < I.size(); ++x)
    for (int w = 0; w < I.size(); ++w) {
      if (!I.poset->leq(x, w)) continue;
      auto px = A3->to_permutation(I.elements[static_cast<std::size_t>(x)]);
      auto pw = A3->to_permutation(I.elements[static_cast<std::size_t>(w)]);
      CHECK(T(x, w) == kl.P(px, pw));
    }
  const int e = I.bottom;
  CHECK(T(e, I.index_of(A3->from_permutation({3, 4, 1, 2}))) == P({1, 1}));
  CHECK(T(e, I.index_of(A3->from_permutation({4, 2, 3, 1}))) == P({1, 1}));

  for (const char* t : {"B3", "G2", "B2"}) {
    auto W = group(t);
    BruhatInterval J = full(W);
    KLSTable U = solve_kls(coxeter_R_kernel(J));
    oracle::KLOracle<oracle::GroupOps> o(oracle::GroupOps{W.get(), J.elements});
    for (int x = 0; x < J.size(); ++x)
      for (int w = 0; w < J.size(); ++w)
        if (J.poset->leq(x, w))
          CHECK(U(x, w) == o.P(J.elements[static_cast<std::size_t>(x)], J.elements[static_cast<std::size_t>(w)]));
    CHECK(nonnegative(U));
    CHECK(monotonicity_check(U).ok);
  }
}

TEST_CASE("moment graph sheaf: small intervals") {
  auto A1 = group("A1");
  auto g1 = graph(enumerate_interval(A1, A1->identity(), A1->from_word({0})));
  BMSheaf s1 = compute_bm(g1, FieldSpec::rationals());
  CHECK(s1.stalk_shapes[static_cast<std::size_t>(g1->interval.bottom)] == FreeModuleShape({0}));

  auto g3 = graph(full(group("A2")));
  BMSheaf s3 = compute_bm(g3, FieldSpec::rationals());
  for (int x = 0; x < g3->size(); ++x) CHECK(s3.stalk_shapes[static_cast<std::size_t>(x)] == FreeModuleShape({0}));

  auto A3 = group("A3");
  auto g4 = graph(enumerate_interval(A3, A3->identity(), A3->from_permutation({3, 4, 1, 2})));
  BMSheaf s4 = compute_bm(g4, FieldSpec::rationals());
  CHECK(s4.stalk_shapes[static_cast<std::size_t>(g4->interval.bottom)] == FreeModuleShape({0, 1}));
  CHECK(kl_from_sheaf(s4, g4->interval.bottom) == P({1, 1}));
  CHECK(kl_from_sheaf(s4, g4->interval.top) == P({1}));
}

TEST_CASE("moment graph sheaf agrees with the R-kernel recursion") {
  for (const char* t : {"A2", "A3", "B2", "G2"}) {
    auto W = group(t);
    BruhatInterval F = full(W);
    for (const auto& w : F.elements) {
      auto G = graph(enumerate_interval(W, W->identity(), w));
      BMSheaf S = compute_bm(G, FieldSpec::rationals());
      KLSTable T = solve_kls(coxeter_R_kernel(G->interval));
      for (int v = 0; v < G->size(); ++v) CHECK(kl_from_sheaf(S, v) == T(v, G->interval.top));
      CHECK(S.stalk_shapes[static_cast<std::size_t>(G->interval.top)] == FreeModuleShape({0}));
    }
  }
}

TEST_CASE("moment graph sheaf: lower endpoint and shuffled order") {
  auto A3 = group("A3");
  CoxElement w0 = longest(*A3), v = A3->from_permutation({1, 3, 2, 4});
  auto G = graph(enumerate_interval(A3, v, w0));
  BMSheaf S = compute_bm(G, FieldSpec::rationals());
  auto H = graph(full(A3));
  BMSheaf T = compute_bm(H, FieldSpec::rationals());
  for (int x = 0; x < G->size(); ++x)
    CHECK(kl_from_sheaf(S, x) == kl_from_sheaf(T, H->interval.index_of(G->interval.elements[static_cast<std::size_t>(x)])));

  auto G2 = graph(enumerate_interval(A3, A3->identity(), A3->from_permutation({4, 2, 3, 1})));
  BMSheaf a = compute_bm(G2, FieldSpec::rationals());
  BuildOptions o;
  o.shuffle_seed = 7;
  BMSheaf b = compute_bm(G2, FieldSpec::rationals(), o);
  for (int x = 0; x < G2->size(); ++x) CHECK(a.stalk_shapes[static_cast<std::size_t>(x)] == b.stalk_shapes[static_cast<std::size_t>(x)]);
  CHECK(a.global_dims == b.global_dims);
}

TEST_CASE("moment graph sheaf: flabbiness") {
  auto A3 = group("A3");
  auto G = graph(enumerate_interval(A3, A3->identity(), A3->from_permutation({3, 4, 1, 2})));
  PosetSheaf<Rational> sh = bm_sheaf<Rational>(G, FieldSpec::rationals());
  const RankedPoset& Pp = *G->interval.poset;
  std::vector<int> Q = Pp.strict_upper_set(G->interval.bottom);
  for (int y : Q) {
    std::vector<int> Qs = Pp.upper_set(y);
    // Order Q with Q' first so restriction keeps a leading block of rows.
    std::vector<int> order = Qs;
    for (int z : Q)
      if (std::find(Qs.begin(), Qs.end(), z) == Qs.end()) order.push_back(z);
    for (int i = 0; i <= sh.top_degree(); ++i) {
      Mat<Rational> B = sh.sections(order, i);
      Index rows = 0;
      for (int z : Qs) rows += sh.stalk_dim(z, i);
      CHECK(rank(Mat<Rational>(B.topRows(rows))) == sh.sections_dims(Qs)[static_cast<std::size_t>(i)]);
    }
  }
}

TEST_CASE("moment graph sheaf in positive characteristic") {
  auto A3 = group("A3");
  auto G = graph(full(A3));
  BMSheaf q = compute_bm(G, FieldSpec::rationals());
  BuildOptions o;
  o.degree_bound = 4;
  BMSheaf p5 = compute_bm(G, FieldSpec::prime(5), o);
  for (int x = 0; x < G->size(); ++x) CHECK(q.stalk_shapes[static_cast<std::size_t>(x)] == p5.stalk_shapes[static_cast<std::size_t>(x)]);
  CHECK_THROWS_AS(compute_bm(G, FieldSpec::prime(2)), InputError);
}

TEST_CASE("structure ring of a moment graph") {
  auto A1 = group("A1");
  auto g0 = graph(enumerate_interval(A1, A1->identity(), A1->identity()));
  CHECK(structure_sections(*g0, 3) == GradedDims{1, 1, 1, 1});
  auto A2 = group("A2");
  auto p0 = graph(enumerate_interval(A2, A2->identity(), A2->identity()));
  CHECK(structure_sections(*p0, 2) == GradedDims{1, 2, 3});
  // One variable and alpha = 2x: pairs (a x^i, b x^i) are congruent for i >= 1.
  auto g1 = graph(enumerate_interval(A1, A1->identity(), A1->from_word({0})));
  CHECK(structure_sections(*g1, 3) == GradedDims{1, 2, 2, 2});
  // Smooth Schubert varieties: the sheaf is the structure sheaf.
  for (const char* t : {"A2", "B2"}) {
    auto G = graph(full(group(t)));
    BuildOptions o;
    o.degree_bound = G->interval.poset->rank(G->interval.top) + 1;
    BMSheaf S = compute_bm(G, FieldSpec::rationals(), o);
    CHECK(structure_sections(*G, S.top_degree) == S.global_dims);
    CHECK(structure_sections(*G, 0) == GradedDims{1});
  }
}

TEST_CASE("moment graph sheaf: global sections lift the stalks on lower intervals") {
  // Free with one generator in degree d + l(x) for each stalk generator of
  // degree d at x, including the singular Schubert varieties 3412 and 4231.
  auto A3 = group("A3");
  std::vector<std::pair<std::shared_ptr<const CoxeterGroup>, CoxElement>> cases = {
      {A3, A3->from_permutation({3, 4, 1, 2})}, {A3, A3->from_permutation({4, 2, 3, 1})}};
  for (const char* t : {"A2", "B2"}) {
    auto W = group(t);
    for (const auto& w : full(W).elements) cases.emplace_back(W, w);
  }
  for (const auto& [W, w] : cases) {
    auto G = graph(enumerate_interval(W, W->identity(), w));
    BuildOptions o;
    o.degree_bound = w.length() + 1;
    PosetSheaf<Rational> sh = bm_sheaf<Rational>(G, FieldSpec::rationals(), o);
    std::vector<int> all(static_cast<std::size_t>(G->size()));
    std::iota(all.begin(), all.end(), 0);
    FreeModuleShape lifted;
    for (int x = 0; x < G->size(); ++x) {
      const FreeModuleShape s = sh.stalk_shape(x).shifted(G->interval.elements[static_cast<std::size_t>(x)].length());
      for (int d : s.degrees()) lifted.add(d);
    }
    CHECK(sh.sections_shape(all) == lifted);
  }
}
