#include <doctest.h>

#include <bit>
#include <cmath>
#include <numeric>

#include "klsc/errors.hpp"
#include "klsc/fan.hpp"

using namespace klsc;

namespace {

Vec<Rational> v(std::initializer_list<long long> xs) {
  Vec<Rational> out(static_cast<Index>(xs.size()));
  Index k = 0;
  for (long long x : xs) out[k++] = Rational(x);
  return out;
}

UniPoly P(std::vector<long long> c) { return UniPoly(std::move(c)); }

std::vector<int> dim_counts(const Fan& F) {
  int maxdim = 0;
  for (int c = 0; c < F.size(); ++c) maxdim = std::max(maxdim, F.cone_dim(c));
  std::vector<int> out(static_cast<std::size_t>(maxdim) + 1, 0);
  for (int c = 0; c < F.size(); ++c) ++out[static_cast<std::size_t>(F.cone_dim(c))];
  return out;
}

std::vector<Vec<Rational>> square_cone_rays() { return {v({1, 0, 1}), v({-1, 0, 1}), v({0, 1, 1}), v({0, -1, 1})}; }

Fan four_orthants() {
  return Fan::from_cones(2, {v({1, 0}), v({0, 1}), v({-1, 0}), v({0, -1})}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

std::vector<Vec<Rational>> simplex(int d) {
  std::vector<Vec<Rational>> out;
  for (int k = 0; k <= d; ++k) {
    Vec<Rational> x = Vec<Rational>::Zero(d);
    if (k < d) x[k] = Rational(1);
    out.push_back(x);
  }
  return out;
}

std::vector<Vec<Rational>> cube() {
  std::vector<Vec<Rational>> out;
  for (int m = 0; m < 8; ++m) out.push_back(v({m & 1, m >> 1 & 1, m >> 2 & 1}));
  return out;
}

std::vector<Vec<Rational>> polygon(int n) {
  // Lattice points in convex position on the parabola y = x^2.
  std::vector<Vec<Rational>> out;
  for (int k = 0; k < n; ++k) out.push_back(v({k, k * k}));
  return out;
}

std::vector<Vec<Rational>> square_pyramid() {
  return {v({0, 0, 0}), v({1, 0, 0}), v({0, 1, 0}), v({1, 1, 0}), v({0, 0, 1})};
}

std::vector<Vec<Rational>> prism() {
  return {v({0, 0, 0}), v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1}), v({1, 0, 1}), v({0, 1, 1})};
}

std::vector<int> all_elements(const Fan& F) {
  std::vector<int> out(static_cast<std::size_t>(F.size()));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace

TEST_CASE("face enumeration") {
  Fan sq = face_lattice(3, square_cone_rays());
  CHECK(dim_counts(sq) == std::vector<int>{1, 4, 4, 1});
  // Opposite rays 0,1 and 2,3 never share a facet.
  CHECK(sq.index_of(0b0011) < 0);
  CHECK(sq.index_of(0b1100) < 0);
  CHECK(sq.index_of(0b0101) >= 0);
  CHECK_FALSE(sq.is_simplicial());

  Fan ray = face_lattice(2, {v({2, 4})});
  CHECK(ray.size() == 2);
  CHECK(ray.rays()[0] == v({1, 2}));  // primitive

  Fan s3 = face_lattice(3, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})});
  CHECK(dim_counts(s3) == std::vector<int>{1, 3, 3, 1});
  CHECK(s3.is_simplicial());

  Fan cubecone = cone_over_polytope(cube());
  CHECK(cubecone.rays().size() == 8);
  CHECK(dim_counts(cubecone) == std::vector<int>{1, 8, 12, 6, 1});

  Fan seg = cone_over_polytope({v({0}), v({3})});
  CHECK(dim_counts(seg) == std::vector<int>{1, 2, 1});

  CHECK(dim_counts(cone_over_polytope(prism())) == std::vector<int>{1, 6, 9, 5, 1});
  CHECK(dim_counts(cone_over_polytope(square_pyramid())) == std::vector<int>{1, 5, 8, 5, 1});
}

TEST_CASE("poset view of a fan") {
  Fan sq = face_lattice(3, square_cone_rays());
  const RankedPoset& P = *sq.poset();
  CHECK(P.rank(sq.max_cone(0)) == 0);
  CHECK(P.rank(sq.zero_cone()) == 3);
  CHECK(is_eulerian(P));
  for (int c = 0; c < sq.size(); ++c) CHECK(P.leq(c, sq.zero_cone()));
}

TEST_CASE("invalid fans") {
  // Contains the line spanned by (1,0).
  CHECK_THROWS_AS(face_lattice(2, {v({1, 0}), v({-1, 0}), v({0, 1})}), InputError);
  // (1,1) is not extreme.
  CHECK_THROWS_AS(face_lattice(2, {v({1, 0}), v({0, 1}), v({1, 1})}), InputError);
  // Whole plane.
  CHECK_THROWS_AS(face_lattice(2, {v({1, 0}), v({0, 1}), v({-1, 0}), v({0, -1})}), InputError);
  // The shared rays 0, 1 span a face of the simplicial cone but not of the square cone.
  auto rays = square_cone_rays();
  rays.push_back(v({0, -1, -1}));
  CHECK_THROWS_AS(Fan::from_cones(3, rays, {{0, 1, 2, 3}, {0, 1, 4}}), InputError);
  CHECK_THROWS_AS(Fan::from_cones(2, {v({1, 0, 0})}, {{0}}), InputError);
  CHECK_THROWS_AS(cone_over_polytope({v({0, 0}), v({1, 1}), v({2, 2})}), InputError);
  CHECK_THROWS_AS(cone_over_polytope({v({0, 0}), v({2, 0}), v({0, 2}), v({1, 1})}), InputError);
}

TEST_CASE("conewise polynomials on the four orthants") {
  Fan F = four_orthants();
  ConewiseSections A = structure_sections(F, all_elements(F), 4);
  // Free with basis 1, |x|, |y|, |xy|: dims (i+1) + 2i + (i-1).
  CHECK(A.dims == GradedDims{1, 4, 8, 12, 16});
  CHECK(A.shape == FreeModuleShape({0, 1, 1, 2}));

  // Single cone: the polynomial ring on its span.
  Fan s = face_lattice(2, {v({1, 0}), v({1, 1})});
  ConewiseSections B = structure_sections(s, all_elements(s), 3);
  CHECK(B.dims == GradedDims{1, 2, 3, 4});
  CHECK(B.shape == FreeModuleShape({0}));
}

TEST_CASE("square cone sheaf") {
  Fan sq = face_lattice(3, square_cone_rays());
  PosetSheaf<Rational> sh = fan_ih(sq);
  const int top = sq.max_cone(0);
  CHECK(sh.stalk_shape(top) == FreeModuleShape({0, 1}));
  CHECK(sh.stalk_poincare(top) == P({1, 1}));
  for (int c = 0; c < sq.size(); ++c)
    if (c != top) CHECK(sh.stalk_shape(c) == FreeModuleShape({0}));

  GradedModule<Rational> M = sh.boundary_module(top);
  CHECK(M.is_consistent());
  CHECK(minimal_generator_degrees(M) == FreeModuleShape({0, 1}));

  // The boundary is a union of simplicial cones, so it agrees with the
  // conewise polynomials on the proper faces.
  std::vector<int> bd = sq.poset()->strict_upper_set(top);
  ConewiseSections A = structure_sections(sq, bd, sh.top_degree());
  CHECK(sh.sections_dims(bd) == A.dims);

  KLSTable T = solve_kls(eulerian_kernel(sq.poset()));
  CHECK(T(top, sq.zero_cone()) == P({1, 1}));
}

TEST_CASE("four orthants: simplicial fan sheaf is the structure sheaf") {
  Fan F = four_orthants();
  PosetSheaf<Rational> sh = fan_ih(F);
  for (int c = 0; c < F.size(); ++c) CHECK(sh.stalk_shape(c) == FreeModuleShape({0}));
  auto all = all_elements(F);
  ConewiseSections A = structure_sections(F, all, sh.top_degree());
  CHECK(sh.sections_dims(all) == A.dims);
  CHECK(sh.sections_shape(all) == FreeModuleShape({0, 1, 1, 2}));
  for (int i = 0; i <= sh.top_degree(); ++i) CHECK(rank(sh.sections_direct(all, i)) == A.dims[static_cast<std::size_t>(i)]);
}

TEST_CASE("g-polynomials against closed forms and the recursion") {
  struct Case {
    std::vector<Vec<Rational>> verts;
    UniPoly g;
  };
  std::vector<Case> corpus;
  for (int d = 1; d <= 4; ++d) corpus.push_back({simplex(d), P({1})});
  for (int n = 4; n <= 6; ++n) corpus.push_back({polygon(n), P({1, n - 3})});
  // Three-dimensional polytopes: g = 1 + (f_0 - 4) t.
  corpus.push_back({cube(), P({1, 4})});
  corpus.push_back({square_pyramid(), P({1, 1})});
  corpus.push_back({prism(), P({1, 2})});
  for (const auto& c : corpus) {
    Fan F = cone_over_polytope(c.verts);
    PosetSheaf<Rational> sh = fan_ih(F);
    CHECK(sh.stalk_poincare(F.max_cone(0)) == c.g);
    KLSTable T = solve_kls(eulerian_kernel(F.poset()));
    CHECK(T(F.max_cone(0), F.zero_cone()) == c.g);
    for (int x = 0; x < F.size(); ++x) CHECK(sh.stalk_poincare(x) == T(x, F.zero_cone()));
    CHECK(kalai_check(T).ok);
    CHECK(monotonicity_check(T).ok);
    // Simpliciality criterion.
    bool flat = true;
    for (int x = 0; x < F.size(); ++x) flat &= sh.stalk_shape(x) == FreeModuleShape({0});
    CHECK(flat == F.is_simplicial());
  }
  CHECK(g_polynomial(polygon(4)) == P({1, 1}));
}

TEST_CASE("unimodular change of coordinates") {
  auto check = [](const Fan& A, const Mat<Rational>& U) {
    std::vector<Vec<Rational>> moved;
    for (const auto& r : A.rays()) moved.push_back(U * r);
    Fan B = face_lattice(A.ambient_dim(), moved);
    PosetSheaf<Rational> sa = fan_ih(A), sb = fan_ih(B);
    REQUIRE(A.size() == B.size());
    for (int c = 0; c < A.size(); ++c) CHECK(sa.stalk_shape(c) == sb.stalk_shape(B.index_of(A.cone_rays(c))));
  };
  Mat<Rational> U3(3, 3);
  U3 << Rational(1), Rational(2), Rational(0),  //
      Rational(0), Rational(1), Rational(-3),   //
      Rational(0), Rational(0), Rational(1);
  check(face_lattice(3, square_cone_rays()), U3);
  Mat<Rational> U4 = Mat<Rational>::Identity(4, 4);
  U4(0, 3) = Rational(5);
  U4(2, 1) = Rational(-1);
  check(cone_over_polytope(prism()), U4);
}
