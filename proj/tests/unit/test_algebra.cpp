#include "doctest.h"

#include "klsc/graded.hpp"
#include "klsc/linalg.hpp"
#include "klsc/poly.hpp"

using namespace klsc;

TEST_CASE("rational arithmetic stays canonical across the big-number path") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b) == Rational(1, 2));
  CHECK((a - a).is_zero());
  CHECK(Rational(-4, -8) == Rational(1, 2));
  Rational big(1LL << 61);
  Rational sq = big * big;
  CHECK(sq / big == big);
  CHECK((sq - sq).is_zero());
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational(3, 4) < Rational(4, 5));
  CHECK_THROWS(Rational::parse("x/2"));
}

TEST_CASE("prime field arithmetic") {
  Fp a(3, 5), b(4, 5);
  CHECK((a + b).value() == 2);
  CHECK((a * b).value() == 2);
  CHECK((a / b * b) == a);
  CHECK(Fp(0) == Fp(5, 5));
  CHECK((Fp(1) + Fp(4, 5)).is_zero());
  CHECK_THROWS(Fp(1, 3) + Fp(1, 5));
}

TEST_CASE("poly_reverse_check") {
  CHECK(poly_reverse_check(UniPoly{1, 6, 6, 1}, 3));
  CHECK(poly_reverse_check(UniPoly{1}, 0));
  CHECK_FALSE(poly_reverse_check(UniPoly{1, 2}, 3));
}

TEST_CASE("monomial_space_dim matches enumeration") {
  CHECK(monomial_space_dim(1, 5) == 1);
  CHECK(monomial_space_dim(2, 2) == 3);
  CHECK(monomial_space_dim(3, 2) == 6);
  for (int d = 0; d <= 4; ++d)
    for (int i = 0; i <= 5; ++i) CHECK(MonomialBasis::get(d, i).size() == monomial_space_dim(d, i));
}

TEST_CASE("UniPoly arithmetic") {
  UniPoly f{1, 1};
  CHECK(f * f == UniPoly{1, 2, 1});
  CHECK(UniPoly::t_minus_one_pow(3) == UniPoly{-1, 3, -3, 1});
  CHECK(UniPoly{}.degree() == UniPoly::kMinusInfinity);
  CHECK((f - f).is_zero());
  CHECK(UniPoly{1, 2}.reversed(3) == UniPoly{0, 0, 2, 1});
}

TEST_CASE("kernel, image and solve") {
  Mat<Rational> I = Mat<Rational>::Identity(3, 3);
  CHECK(kernel(I).cols() == 0);
  Mat<Rational> A(2, 2);
  A << 1, 1, 2, 2;
  CHECK(image(A).cols() == 1);
  CHECK(kernel(A).cols() == 1);

  Mat<Fp> B(1, 2);
  B << Fp(1, 2), Fp(-1, 2);
  Mat<Fp> K = kernel(B);
  REQUIRE(K.cols() == 1);
  CHECK(K(0, 0) == Fp(1, 2));
  CHECK(K(1, 0) == Fp(1, 2));

  Vec<Rational> b(2);
  b << 1, 3;
  CHECK_FALSE(solve(A, b).has_value());
  b << 1, 2;
  auto x = solve(A, b);
  REQUIRE(x.has_value());
  CHECK(A * *x == b);

  // Empty kernel and an inconsistent system are different answers.
  Vec<Rational> c(3);
  c << 1, 2, 3;
  auto y = solve(I, c);
  REQUIRE(y.has_value());
  CHECK(*y == c);
}

TEST_CASE("multiplication and substitution matrices") {
  LinearForm<Rational> f(2);
  f << 1, 2;  // x + 2y
  SparseMat<Rational> m = multiplication_matrix<Rational>(f, 1);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 2);
  // x * (x) = x^2, y * 2 ... check via MultiPoly.
  Vec<Rational> xcoord(2);
  xcoord << 1, 0;
  auto prod = MultiPoly<Rational>::from_coordinates(2, 2, apply<Rational>(m, xcoord));
  auto expect = MultiPoly<Rational>::from_linear_form(f) * MultiPoly<Rational>::variable(2, 0);
  CHECK(prod == expect);

  Mat<Rational> M(2, 1);
  M << 1, -1;  // x -> z, y -> -z
  SparseMat<Rational> s = substitution_matrix<Rational>(M, 2);
  CHECK(s.rows() == 1);
  Vec<Rational> xy(3);
  xy << 0, 1, 0;
  CHECK(apply<Rational>(s, xy)[0] == Rational(-1));
}

TEST_CASE("minimal generators of a free module are its shape") {
  FreeModuleShape shape({0, 1});
  auto M = GradedModule<Rational>::free(2, FieldSpec::rationals(), shape, 3);
  CHECK(M.is_consistent());
  CHECK(minimal_generator_degrees(M) == shape);
  auto N = GradedModule<Rational>::free(2, FieldSpec::rationals(), shape, 1);
  CHECK_THROWS_AS(minimal_generator_degrees(N), TruncationError);
  auto F = GradedModule<Fp>::free(1, FieldSpec::prime(3), FreeModuleShape({0, 0, 2}), 4);
  CHECK(minimal_generator_degrees(F) == FreeModuleShape({0, 0, 2}));
}
