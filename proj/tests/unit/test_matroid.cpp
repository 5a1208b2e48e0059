#include <doctest.h>

#include <numeric>

#include "klsc/errors.hpp"
#include "klsc/matroid.hpp"
#include "oracles.hpp"

using namespace klsc;

namespace {

UniPoly P(std::vector<long long> c) { return UniPoly(std::move(c)); }

Matroid fano() { return Matroid::projective_plane(2); }

Matroid k4() { return Matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

int count_rank(const Matroid& M, int r) {
  int c = 0;
  for (const auto& F : M.flats()) c += F.rank == r;
  return c;
}

}  // namespace

TEST_CASE("flats of standard matroids") {
  Matroid u34 = Matroid::uniform(3, 4);
  CHECK(u34.flats().size() == 1 + 4 + 6 + 1);
  CHECK(u34.rank() == 3);
  CHECK(u34.flats().front().set == 0);
  CHECK(u34.flats().back().set == 0xF);

  // Same lattice as the brute-force oracle, by rank sizes.
  auto L = oracle::uniform_flats(3, 5);
  CHECK(rank_sizes(*Matroid::uniform(3, 5).lattice()) == rank_sizes(*L));

  CHECK(Matroid::boolean(4).flats().size() == 16);
  Matroid F = fano();
  CHECK(F.ground_size() == 7);
  CHECK(count_rank(F, 1) == 7);
  CHECK(count_rank(F, 2) == 7);
  for (const auto& f : F.flats())
    if (f.rank == 2) CHECK(std::popcount(f.set) == 3);

  Matroid K = k4();
  CHECK(count_rank(K, 1) == 6);
  CHECK(count_rank(K, 2) == 7);  // four triangles, three pairs of opposite edges
}

TEST_CASE("matroid constructors agree") {
  std::vector<std::vector<int>> bases;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) bases.push_back({a, b});
  Matroid a = Matroid::from_bases(4, bases);
  Mat<Rational> M(2, 4);
  M << Rational(1), Rational(0), Rational(1), Rational(1),  //
      Rational(0), Rational(1), Rational(1), Rational(2);
  Matroid b = Matroid::from_matrix(M);
  Matroid c = Matroid::uniform(2, 4);
  REQUIRE(a.flats().size() == c.flats().size());
  REQUIRE(b.flats().size() == c.flats().size());
  for (std::size_t k = 0; k < c.flats().size(); ++k) {
    CHECK(a.flats()[k].set == c.flats()[k].set);
    CHECK(b.flats()[k].set == c.flats()[k].set);
  }
  std::vector<Matroid::Flat> fl(c.flats().begin(), c.flats().end());
  CHECK(Matroid::from_flats(4, fl).flats().size() == fl.size());
}

TEST_CASE("invalid matroid input") {
  CHECK_THROWS_AS(Matroid::from_bases(3, {{0, 1}, {2}}), InputError);
  CHECK_THROWS_AS(Matroid::from_bases(3, {{0, 1}, {0, 3}}), InputError);
  // {0,1} and {2,3} without the exchange partners.
  CHECK_THROWS_AS(Matroid::from_bases(4, {{0, 1}, {2, 3}}), InputError);
  // Element 2 is a loop.
  CHECK_THROWS_AS(Matroid::from_bases(3, {{0, 1}}), InputError);
  // Not a geometric lattice: a chain of length 2.
  CHECK_THROWS_AS(Matroid::from_flats(2, {{0, 0}, {1, 1}, {3, 2}}), InputError);
}

TEST_CASE("contraction and Mobius algebra maps") {
  Matroid u = Matroid::uniform(3, 4);
  const int a = u.flat_index(0b0001);
  Matroid c = u.contraction(a);
  CHECK(c.ground_size() == 3);
  CHECK(c.rank() == 2);
  CHECK(c.flats().size() == 1 + 3 + 1);

  const int b = u.flat_index(0b0010);
  MobiusTerm t = mobius_product(u, a, b);
  CHECK(t.flat == u.flat_index(0b0011));
  CHECK(t.hbar_power == 0);
  MobiusTerm s = mobius_product(u, a, a);
  CHECK(s.flat == a);
  CHECK(s.hbar_power == 1);
  const int ab = u.flat_index(0b0011), cd = u.flat_index(0b1100);
  MobiusTerm top = mobius_product(u, ab, cd);
  CHECK(top.flat == u.top());
  CHECK(top.hbar_power == 1);

  auto r = rho(u, ab);
  CHECK(r[static_cast<std::size_t>(a)] == 1);
  CHECK(r[static_cast<std::size_t>(ab)] == 2);
  CHECK_FALSE(r[static_cast<std::size_t>(cd)].has_value());
  auto ph = phi(u, a);
  CHECK(ph[static_cast<std::size_t>(b)].flat == ab);
  CHECK(ph[static_cast<std::size_t>(a)].hbar_power == 1);
}

TEST_CASE("uniform U_{3,4} sheaf") {
  Matroid u = Matroid::uniform(3, 4);
  MatroidIH ih = compute_matroid_ih(u, FieldSpec::rationals());
  CHECK(ih.stalks[static_cast<std::size_t>(u.bottom())] == P({1, 2}));
  CHECK(ih.stalk_shapes[static_cast<std::size_t>(u.bottom())] == FreeModuleShape({0, 1, 1}));
  CHECK(ih.Z == P({1, 6, 6, 1}));
  // Rank-2 contractions are uniform of rank 2: P = 1.
  for (const auto& F : u.flats())
    if (F.rank == 1) CHECK(ih.stalks[static_cast<std::size_t>(u.flat_index(F.set))] == P({1}));
}

TEST_CASE("rank three closed forms") {
  // For a rank-3 matroid P = 1 + (coatoms - atoms) t and Z = 1 + c t + c t^2 + t^3
  // with c the number of coatoms.
  for (const Matroid& M : {Matroid::uniform(3, 5), Matroid::uniform(3, 6), fano(), k4()}) {
    const long long atoms = count_rank(M, 1), coatoms = count_rank(M, 2);
    MatroidIH ih = compute_matroid_ih(M, FieldSpec::rationals());
    CHECK(ih.stalks[0] == P({1, coatoms - atoms}));
    CHECK(ih.Z == P({1, coatoms, coatoms, 1}));
  }
}

TEST_CASE("sheaf route agrees with the recursion") {
  std::vector<Matroid> corpus;
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) corpus.push_back(Matroid::uniform(k, n));
  corpus.push_back(fano());
  corpus.push_back(k4());
  for (const Matroid& M : corpus) {
    KLSTable T = solve_kls(matroid_kernel(M.lattice()));
    MatroidIH ih = compute_matroid_ih(M, FieldSpec::rationals());
    for (int F = 0; F < M.lattice()->size(); ++F) CHECK(ih.stalks[static_cast<std::size_t>(F)] == T(F, M.top()));
    CHECK(ih.Z == z_polynomial(T, M.bottom(), M.top()));
  }
}

TEST_CASE("Boolean matroid") {
  for (int n = 1; n <= 4; ++n) {
    MatroidIH ih = compute_matroid_ih(Matroid::boolean(n), FieldSpec::rationals());
    UniPoly binom = UniPoly::constant(1);
    for (int k = 0; k < n; ++k) binom = binom * P({1, 1});
    CHECK(ih.Z == binom);
    for (const auto& s : ih.stalks) CHECK(s == UniPoly::constant(1));
  }
}

TEST_CASE("modular coefficients") {
  auto L = fano().lattice();
  CHECK(p_trivial_criterion(*L, 3));
  CHECK(p_trivial_criterion(*L, 5));
  CHECK_FALSE(p_trivial_criterion(*L, 2));
  CHECK_FALSE(p_trivial_criterion(*Matroid::uniform(3, 4).lattice(), 3));

  Matroid F = fano();
  for (int p : {3, 5}) {
    MatroidIH ih = compute_matroid_ih(F, FieldSpec::prime(static_cast<std::uint32_t>(p)));
    CHECK(ih.stalks[0] == UniPoly::constant(1));
  }
  MatroidIH ih2 = compute_matroid_ih(F, FieldSpec::prime(2));
  CHECK(ih2.stalks[0] != UniPoly::constant(1));
}
