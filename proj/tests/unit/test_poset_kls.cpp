#include "doctest.h"

#include "klsc/errors.hpp"
#include "klsc/kls.hpp"
#include "oracles.hpp"

using namespace klsc;

TEST_CASE("mobius values") {
  auto B2 = boolean_lattice(2);
  CHECK(B2.mobius(0, 0) == 1);
  CHECK(B2.mobius(0, 3) == 1);
  auto U34 = oracle::uniform_flats(3, 4);
  CHECK(U34->size() == 12);
  CHECK(U34->mobius(0, U34->size() - 1) == -3);
  CHECK_THROWS_AS(B2.mobius(1, 2), std::invalid_argument);
}

TEST_CASE("mobius inversion holds on every interval") {
  auto check = [](const RankedPoset& P) {
    for (int x = 0; x < P.size(); ++x)
      for (int y = 0; y < P.size(); ++y) {
        if (!P.less(x, y)) continue;
        long long s = 0;
        for (int z : P.interval(x, y)) s += P.mobius(x, z);
        CHECK(s == 0);
      }
  };
  check(boolean_lattice(4));
  check(*oracle::uniform_flats(3, 5));
  check(*oracle::square_cone_faces());
}

TEST_CASE("is_eulerian") {
  CHECK(is_eulerian(*oracle::square_cone_faces()));
  CHECK_FALSE(is_eulerian(chain(2)));
  CHECK(is_eulerian(boolean_lattice(3)));
}

TEST_CASE("rank sizes and top-heaviness") {
  auto U34 = oracle::uniform_flats(3, 4);
  CHECK(rank_sizes(*U34) == std::vector<long long>{1, 4, 6, 1});
  CHECK(top_heavy_check(*U34).ok);
  CHECK(rank_sizes(chain(4)) == std::vector<long long>{1, 1, 1, 1, 1});
  CHECK(top_heavy_check(chain(0)).ok);

  // h = [1,3,2,3,1]
  std::vector<std::string> names;
  std::vector<int> rank = {0, 1, 1, 1, 2, 2, 3, 3, 3, 4};
  for (std::size_t i = 0; i < rank.size(); ++i) names.push_back(std::to_string(i));
  std::vector<std::pair<int, int>> rel;
  for (std::size_t a = 0; a < rank.size(); ++a)
    for (std::size_t b = 0; b < rank.size(); ++b)
      if (rank[b] == rank[a] + 1) rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
  RankedPoset P(names, rank, rel);
  auto th = top_heavy_check(P);
  CHECK_FALSE(th.ok);
  CHECK(th.j == 1);
  CHECK(th.k == 2);
}

TEST_CASE("characteristic polynomials") {
  auto B1 = boolean_lattice(1);
  CHECK(characteristic_polynomial(B1, 0, 1) == UniPoly{-1, 1});
  auto B2 = boolean_lattice(2);
  CHECK(characteristic_polynomial(B2, 0, 3) == UniPoly{1, -2, 1});
  auto U34 = oracle::uniform_flats(3, 4);
  int E = U34->size() - 1;
  CHECK(characteristic_polynomial(*U34, 0, E) == UniPoly{-3, 6, -4, 1});
  for (int x = 0; x < U34->size(); ++x)
    for (int y = 0; y < U34->size(); ++y)
      if (U34->less(x, y)) CHECK(characteristic_polynomial(*U34, x, y).eval(1) == 0);
}

TEST_CASE("lattice operations") {
  auto B3 = boolean_lattice(3);
  CHECK(B3.is_lattice());
  CHECK(*B3.join(1, 2) == 3);
  CHECK(*B3.meet(3, 6) == 2);
  CHECK(is_geometric_lattice(B3));
  CHECK(is_geometric_lattice(*oracle::uniform_flats(3, 4)));
  CHECK_FALSE(is_geometric_lattice(*oracle::square_cone_faces()));
  auto up = B3.strict_upper_set(1);
  CHECK(B3.is_upper_set(up));
  CHECK(B3.is_upper_set(B3.upper_closure({1, 2})));
  CHECK_FALSE(B3.is_upper_set({1}));
}

TEST_CASE("verify_kernel") {
  auto sq = oracle::square_cone_faces();
  Kernel K = eulerian_kernel(sq);
  CHECK(verify_kernel(K).ok);
  Kernel K1 = eulerian_kernel(std::make_shared<RankedPoset>(chain(0)));
  CHECK(verify_kernel(K1).ok);
  Kernel bad = K;
  bad(0, 5) = bad(0, 5) + UniPoly{1};
  auto res = verify_kernel(bad);
  CHECK_FALSE(res.ok);
  CHECK(res.axiom == "inversion");
  CHECK(sq->leq(res.x, res.z));
  CHECK_THROWS(eulerian_kernel(std::make_shared<RankedPoset>(chain(2))));
}

TEST_CASE("solve_kls on the three kernel families") {
  auto sq = oracle::square_cone_faces();
  KLSTable T = solve_kls(eulerian_kernel(sq));
  CHECK(T(0, 9) == UniPoly{1, 1});
  CHECK(T(1, 9) == UniPoly{1});
  CHECK(kalai_check(T).ok);
  CHECK(monotonicity_check(T).ok);

  auto simplex = std::make_shared<RankedPoset>(boolean_lattice(3));
  KLSTable S = solve_kls(eulerian_kernel(simplex));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      if (simplex->leq(x, y)) CHECK(S(x, y) == UniPoly{1});

  auto U34 = oracle::uniform_flats(3, 4);
  int E = U34->size() - 1;
  Kernel MK = matroid_kernel(U34);
  CHECK(verify_kernel(MK).ok);
  CHECK(MK(0, E) == UniPoly{-3, 6, -4, 1});
  KLSTable M = solve_kls(MK);
  CHECK(M(0, E) == UniPoly{1, 2});
  CHECK(z_polynomial(M, 0, E) == UniPoly{1, 6, 6, 1});
  CHECK(monotonicity_check(M).ok);
  CHECK(nonnegative(M));

  auto B4 = std::make_shared<RankedPoset>(boolean_lattice(4));
  KLSTable B = solve_kls(matroid_kernel(B4));
  CHECK(z_polynomial(B, 0, 15) == UniPoly{1, 4, 6, 4, 1});
  CHECK(z_polynomial(B, 3, 3) == UniPoly{1});
}

TEST_CASE("solve_kls is independent of the same-rank order") {
  auto U35 = oracle::uniform_flats(3, 5);
  Kernel K = matroid_kernel(U35);
  KLSTable a = solve_kls(K);
  std::vector<int> ord = U35->top_down_order();
  // Reverse within each rank level.
  for (std::size_t i = 0; i < ord.size();) {
    std::size_t j = i;
    while (j < ord.size() && U35->rank(ord[j]) == U35->rank(ord[i])) ++j;
    std::reverse(ord.begin() + static_cast<long>(i), ord.begin() + static_cast<long>(j));
    i = j;
  }
  KLSTable b = solve_kls(K, &ord);
  for (int x = 0; x < U35->size(); ++x)
    for (int y = 0; y < U35->size(); ++y)
      if (U35->leq(x, y)) CHECK(a(x, y) == b(x, y));
}

TEST_CASE("solver rejects an invalid kernel") {
  auto sq = oracle::square_cone_faces();
  Kernel K = eulerian_kernel(sq);
  K(0, 9) = K(0, 9) + UniPoly{0, 0, 5};
  CHECK_THROWS_AS(solve_kls(K), ConsistencyError);
}
