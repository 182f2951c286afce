#include "eqdecomp/bipolynomial.hpp"
#include "eqdecomp/errors.hpp"
#include "eqdecomp/linalg.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace eqdecomp;
using fixture::poly;

TEST_CASE("det_exact agrees with cofactor expansion on random integer matrices") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = trial % 6 + 1;
    const IntMatrix m = oracle::random_int_matrix(rng, n, n, -5, 5);
    CHECK(Rational(det_exact(m)) == oracle::laplace_det(to_rational(m)));
  }
}

TEST_CASE("det_exact agrees with cofactor expansion on random rational matrices") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const RationalMatrix m = oracle::random_rational_matrix(rng, trial % 5 + 1);
    CHECK(det_exact(m) == oracle::laplace_det(m));
  }
}

TEST_CASE("det_exact edge cases") {
  CHECK(det_exact(IntMatrix(0, 0)) == 1);
  CHECK(det_exact(fixture::int_matrix({{1, 2}, {2, 4}})) == 0);
  CHECK(det_exact(fixture::int_matrix({{0, 1}, {1, 0}})) == -1);
  CHECK(det_exact(RationalMatrix(RationalMatrix::Identity(4, 4) * Rational(1, 2))) == Rational(1, 16));
  CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("mat_inverse") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalMatrix m = oracle::random_rational_matrix(rng, trial % 4 + 2);
    if (det_exact(m) == 0) continue;
    const RationalMatrix inv = mat_inverse(m);
    CHECK(RationalMatrix(m * inv) == RationalMatrix::Identity(m.rows(), m.rows()));
  }
  try {
    mat_inverse(fixture::rational_matrix({{1, 2}, {2, 4}}));
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.column() == 1);
  }
}

TEST_CASE("char_poly matches pointwise determinants and is monic of degree n") {
  std::mt19937 rng(14);
  std::uniform_int_distribution<int> point(-20, 20);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = trial % 6 + 1;
    const IntMatrix m = oracle::random_int_matrix(rng, n, n, -3, 3);
    const UniPoly p = char_poly(m);
    CHECK(p.degree() == static_cast<std::size_t>(n));
    CHECK(p.is_monic());
    CHECK(p.coefficient(static_cast<std::size_t>(n - 1)) == -Rational(m.trace()));
    CHECK(p.coefficient(0) == (n % 2 == 0 ? 1 : -1) * Rational(det_exact(m)));
    for (int k = 0; k < 5; ++k) {
      const Rational x(point(rng));
      CHECK(p.evaluate(x) == oracle::char_poly_at(to_rational(m), x));
    }
  }
}

TEST_CASE("char_poly of small fixed matrices") {
  CHECK(char_poly(IntMatrix(0, 0)) == poly({1}));
  CHECK(char_poly(fixture::int_matrix({{0, 1}, {1, 0}})) == poly({-1, 0, 1}));
  CHECK(char_poly(fixture::int_matrix({{3, 1}, {2, 1}})) == poly({1, -4, 1}));
  const UniPoly full = char_poly(fixture::digraph5_matrix());
  CHECK(full == poly({0, -2, 9, -5, -3, 1}));
  CHECK(full.coefficient(4) == -3);  // roots sum to the trace, 3
}

TEST_CASE("polynomial arithmetic and display") {
  const UniPoly x = UniPoly::x();
  CHECK((x - UniPoly::constant(2)) * (x + UniPoly::constant(2)) == poly({-4, 0, 1}));
  CHECK(poly({1, -4, 1}).to_string() == "x^2 - 4*x + 1");
  CHECK(poly({0, -2, 1, 1}).to_string() == "x^3 + x^2 - 2*x");
  CHECK(UniPoly().to_string() == "0");
  CHECK(poly({1, 1}).pow(3) == poly({1, 3, 3, 1}));
  CHECK_FALSE(UniPoly().degree().has_value());
}

TEST_CASE("polynomial division") {
  const auto [q, r] = poly_divmod(poly({-1, 0, 0, 1}), poly({-1, 1}));
  CHECK(q == poly({1, 1, 1}));
  CHECK(r.is_zero());
  CHECK(poly_div_exact(poly({0, -2, 1, 1}), poly({0, 1})) == poly({-2, 1, 1}));
  CHECK_THROWS_AS(poly_div_exact(poly({1, 0, 1}), poly({-1, 1})), InexactDivisionError);
}

TEST_CASE("interpolation recovers random polynomials") {
  std::mt19937 rng(15);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c;
    for (int k = 0; k <= trial % 7; ++k) c.emplace_back(coef(rng));
    const UniPoly p(c);
    std::vector<Rational> xs, ys;
    for (int k = 0; k <= trial % 7; ++k) {
      xs.emplace_back(k * 2 - 3);
      ys.push_back(p.evaluate(xs.back()));
    }
    CHECK(interpolate(xs, ys) == p);
  }
}

TEST_CASE("bipolynomial arithmetic and term table order") {
  const BiPoly u = BiPoly::u(), t = BiPoly::t();
  const BiPoly p = BiPoly(1) - u * u * t * t;
  CHECK(p.to_string() == "1 - u^2*t^2");
  CHECK(p.degree_u() == 2);
  CHECK(p.degree_t() == 2);
  CHECK((u + t) * (u - t) == u * u - t * t);
  CHECK((BiPoly(1) + t).pow(2) == BiPoly(1) + BiPoly(2) * t + t * t);
  CHECK(p.evaluate(Integer(2), Integer(3)) == 1 - 36);
  CHECK(p.specialize_u(Integer(0)) == IntPoly::constant(1));
}

TEST_CASE("exact bipolynomial division") {
  const BiPoly u = BiPoly::u(), t = BiPoly::t();
  const BiPoly a = BiPoly(1) - (BiPoly(1) - u) * t;
  const BiPoly b = BiPoly(1) + u * t * t + BiPoly(3) * t;
  CHECK(bipoly_div_exact(a * b, a) == b);
  CHECK(bipoly_div_exact(a * b, b) == a);
  CHECK_THROWS_AS(bipoly_div_exact(a * b + t, a), InexactDivisionError);
}

TEST_CASE("bipoly_det matches pointwise evaluation") {
  std::mt19937 rng(16);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<unsigned> deg(0, 2);
  for (int trial = 0; trial < 15; ++trial) {
    const Index n = trial % 4 + 1;
    Matrix<BiPoly> m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        BiPoly e;
        for (int k = 0; k < 3; ++k) e.add_term({deg(rng), deg(rng)}, Integer(coef(rng)));
        m(i, j) = e;
      }
    const BiPoly d = bipoly_det(m);
    for (int u0 = -2; u0 <= 2; ++u0)
      for (int t0 = -2; t0 <= 2; ++t0) {
        RationalMatrix at(n, n);
        for (Index i = 0; i < n; ++i)
          for (Index j = 0; j < n; ++j) at(i, j) = Rational(m(i, j).evaluate(Integer(u0), Integer(t0)));
        CHECK(Rational(d.evaluate(Integer(u0), Integer(t0))) == oracle::laplace_det(at));
      }
  }
}

TEST_CASE("poly_matrix_det of xI - M is the characteristic polynomial") {
  const IntMatrix m = fixture::digraph5_matrix();
  Matrix<UniPoly> xm(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      xm(i, j) = UniPoly::constant(Rational(-m(i, j)));
      if (i == j) xm(i, j) = xm(i, j) + UniPoly::x();
    }
  CHECK(poly_matrix_det(xm, 5) == char_poly(m));
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(to_string(Rational(-2, 4)) == "-1/2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}
