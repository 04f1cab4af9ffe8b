#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bgsys/linalg.hpp"
#include "bgsys/multipoly.hpp"
#include "bgsys/rational.hpp"
#include "bgsys/tseries.hpp"
#include "test_support.hpp"

using namespace bgsys;

TEST_CASE("rationals stay canonical") {
  Rational a(2, 6);
  CHECK(a == Rational(1, 3));
  CHECK(a.numerator() == 1);
  CHECK(a.denominator() == 3);

  Rational b(3, -6);
  CHECK(b == Rational(-1, 2));
  CHECK(b.denominator() == 2);  // denominator stays positive

  CHECK(Rational("4/8") == Rational(1, 2));
  CHECK(Rational("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational(1, 0), error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), error);
  CHECK_THROWS_AS(Rational("abc"), error);
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK((Rational(2, 3) * Rational(9, 4)).str() == "3/2");
}

TEST_CASE("generalized binomials, negative upper index included") {
  CHECK(binomial_general(5, 2) == Rational(10));
  CHECK(binomial_general(3, 0) == Rational(1));
  CHECK(binomial_general(1, 3) == Rational(0));  // passes through zero
  CHECK(binomial_general(-1, 2) == Rational(1));
  CHECK(binomial_general(-1, 3) == Rational(-1));
  CHECK(binomial_general(-2, 3) == Rational(-4));  // (-2)(-3)(-4)/6
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(5) == Rational(120));
}

TEST_CASE("geometric series expansions") {
  TSeries s = geometric_series(2, 6);
  CHECK(s.coeff(0) == Rational(1));
  CHECK(s.coeff(1) == Rational(0));
  CHECK(s.coeff(2) == Rational(1));
  CHECK(s.coeff(4) == Rational(1));
  CHECK(s.coeff(6) == Rational(1));

  TSeries t = geometric_series(1, 3);
  for (int k = 0; k <= 3; ++k) CHECK(t.coeff(k) == Rational(1));

  CHECK_THROWS_AS(geometric_series(0, 5), error);
  CHECK_THROWS_AS(geometric_series(-2, 5), error);
}

TEST_CASE("cube of 1/(1-t^2) matches the known expansion") {
  TSeries s = geometric_series(2, 6);
  TSeries cube = s * s * s;
  CHECK(cube.coeff(0) == Rational(1));
  CHECK(cube.coeff(2) == Rational(3));
  CHECK(cube.coeff(4) == Rational(6));
  CHECK(cube.coeff(6) == Rational(10));
  CHECK(cube.coeff(1) == Rational(0));
  CHECK(cube.coeff(3) == Rational(0));
}

TEST_CASE("series times its denominator is one") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 30; ++trial) {
    int d = static_cast<int>(testsupport::rng_int(gen, 1, 7));
    int T = static_cast<int>(testsupport::rng_int(gen, 0, 15));
    TSeries inv = geometric_series(d, T);
    TSeries denom(T);
    denom.set_coeff(0, Rational(1));
    if (d <= T) denom.set_coeff(d, Rational(-1));
    CHECK(inv * denom == TSeries::one(T));
  }
}

TEST_CASE("series ring axioms on random triples") {
  std::mt19937_64 gen(12);
  auto random_series = [&](int T) {
    TSeries s(T);
    for (int k = 0; k <= T; ++k)
      if (testsupport::rng_int(gen, 0, 1)) s.set_coeff(k, testsupport::random_scalar(gen));
    return s;
  };
  for (int trial = 0; trial < 25; ++trial) {
    int T = 8;
    TSeries a = random_series(T), b = random_series(T), c = random_series(T);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
  }
}

namespace {

PolyRingPtr xy_ring() {
  return std::make_shared<const PolyRing>(std::vector<std::string>{"x", "y", "z"});
}

MultiPoly random_poly(std::mt19937_64& gen, const PolyRingPtr& ring) {
  MultiPoly p(ring);
  int terms = static_cast<int>(testsupport::rng_int(gen, 0, 5));
  for (int t = 0; t < terms; ++t) {
    MultiPoly::Exponents e(ring->arity());
    for (auto& x : e) x = static_cast<int>(testsupport::rng_int(gen, 0, 3));
    p.add_term(e, testsupport::random_scalar(gen));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial evaluation") {
  auto ring = xy_ring();
  MultiPoly xy = MultiPoly::var(ring, 0) * MultiPoly::var(ring, 1);
  CHECK(xy.eval({{"x", Rational(2)}, {"y", Rational(3)}}) == Rational(6));

  MultiPoly zero = MultiPoly::zero(ring);
  CHECK(zero.eval({}) == Rational(0));

  CHECK_THROWS_AS(xy.eval({{"x", Rational(2)}}), error);  // y unassigned

  // variables not occurring in the polynomial need no assignment
  MultiPoly just_x = MultiPoly::var(ring, 0, 2);
  CHECK(just_x.eval({{"x", Rational(-3)}}) == Rational(9));
}

TEST_CASE("polynomial partial derivatives") {
  auto ring = xy_ring();
  MultiPoly x = MultiPoly::var(ring, 0), y = MultiPoly::var(ring, 1);
  MultiPoly p = x * x * y;  // x^2 y
  MultiPoly expect = Rational(2) * (x * y);
  CHECK(p.partial("x") == expect);
  CHECK(MultiPoly::constant(ring, Rational(7)).partial("x").is_zero());
}

TEST_CASE("second partials commute on random polynomials") {
  std::mt19937_64 gen(13);
  auto ring = xy_ring();
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly p = random_poly(gen, ring);
    CHECK(p.partial(0).partial(1) == p.partial(1).partial(0));
  }
}

TEST_CASE("polynomial ring axioms on random triples") {
  std::mt19937_64 gen(14);
  auto ring = xy_ring();
  for (int trial = 0; trial < 25; ++trial) {
    MultiPoly a = random_poly(gen, ring), b = random_poly(gen, ring), c = random_poly(gen, ring);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + (b + c) == (a + b) + c);
  }
}

TEST_CASE("ring mismatch is rejected") {
  auto r1 = xy_ring();
  auto r2 = std::make_shared<const PolyRing>(std::vector<std::string>{"u"});
  MultiPoly a = MultiPoly::var(r1, 0);
  MultiPoly b = MultiPoly::var(r2, 0);
  CHECK_THROWS_AS(a + b, error);
  CHECK_THROWS_AS(TSeries(3) + TSeries(4), error);
}

TEST_CASE("matrix rank, inverse, determinant") {
  QMatrix m(2, 2);
  m.at(0, 0) = Rational(1);
  m.at(0, 1) = Rational(2);
  m.at(1, 0) = Rational(3);
  m.at(1, 1) = Rational(4);
  CHECK(m.rank() == 2);
  CHECK(m.det() == Rational(-2));
  QMatrix inv = m.inverse();
  CHECK(inv * m == QMatrix::identity(2));
  CHECK(m * inv == QMatrix::identity(2));

  QMatrix s(2, 2);  // rank 1
  s.at(0, 0) = Rational(1);
  s.at(0, 1) = Rational(2);
  s.at(1, 0) = Rational(2);
  s.at(1, 1) = Rational(4);
  CHECK(s.rank() == 1);
  CHECK(s.kernel_dim() == 1);
  CHECK(s.det() == Rational(0));
  CHECK_THROWS_AS(s.inverse(), error);
  CHECK_THROWS_AS(QMatrix(3, 3).inverse(), error);
}

TEST_CASE("characteristic polynomial and integer eigenvalues") {
  QMatrix d(3, 3);
  d.at(0, 0) = Rational(2);
  d.at(1, 1) = Rational(-2);
  // det(xI - A) = (x-2)(x+2)x = x^3 - 4x
  std::vector<Rational> p = d.char_poly();
  CHECK(p == std::vector<Rational>{Rational(0), Rational(-4), Rational(0), Rational(1)});

  std::vector<std::pair<long, int>> eig;
  CHECK(integer_eigenvalues(d, eig));
  CHECK(eig == std::vector<std::pair<long, int>>{{-2, 1}, {0, 1}, {2, 1}});

  QMatrix irr(2, 2);  // eigenvalues +-sqrt(2)
  irr.at(0, 1) = Rational(2);
  irr.at(1, 0) = Rational(1);
  CHECK_FALSE(integer_eigenvalues(irr, eig));

  QMatrix rep(2, 2);  // repeated eigenvalue 3
  rep.at(0, 0) = Rational(3);
  rep.at(1, 1) = Rational(3);
  CHECK(integer_eigenvalues(rep, eig));
  CHECK(eig == std::vector<std::pair<long, int>>{{3, 2}});
}
