#include <vector>

#include "doctest.h"

#include "fibfub/binet.hpp"
#include "fibfub/qsqrt5.hpp"
#include "fibfub/triangle.hpp"

using namespace fibfub::tri;
using fibfub::exact::BigInt;
using fibfub::exact::Polynomial;
using fibfub::exact::QSqrt5;
using fibfub::exact::Rational;

TEST_CASE("first three polynomials") {
  // p_1 = 1/sqrt5
  const auto p1 = binet_polynomial(1);
  CHECK(p1.p.degree() == 0);
  CHECK(binet_polynomial_scaled_coefficients(p1) == std::vector<Rational>{1});

  // p_2 = (1/(2 sqrt5)) (n-1) n = (1/sqrt5)(n^2/2 - n/2)
  const auto p2 = binet_polynomial(2);
  CHECK(p2.p.degree() == 2);
  CHECK(binet_polynomial_scaled_coefficients(p2) ==
        std::vector<Rational>{0, Rational(-1, 2), Rational(1, 2)});

  // p_3 = (1/(24 sqrt5)) (3n^4 - 14n^3 + 21n^2 - 10n)
  const auto p3 = binet_polynomial(3);
  CHECK(p3.p.degree() == 4);
  CHECK(binet_polynomial_scaled_coefficients(p3) ==
        std::vector<Rational>{0, Rational(-10, 24), Rational(21, 24), Rational(-14, 24),
                              Rational(3, 24)});
}

TEST_CASE("degree, purity and final condition up to r = 6") {
  for (int r = 1; r <= 6; ++r) {
    const auto bp = binet_polynomial(r);
    CHECK(bp.p.degree() == 2 * r - 2);
    for (int i = 0; i <= bp.p.degree(); ++i) CHECK(bp.p.coeff(i).a == 0);
    CHECK(bp.p.eval(BigInt(r)) == QSqrt5::inv_sqrt5());
    // Conjugation negates a pure sqrt5-multiple polynomial.
    CHECK(bp.p.conjugated() == -bp.p);
  }
  CHECK_THROWS_AS(binet_polynomial(0), std::domain_error);
}

TEST_CASE("difference equation holds symbolically") {
  Polynomial previous = binet_polynomial(1).p;
  for (int r = 2; r <= 6; ++r) {
    const Polynomial current = binet_polynomial(r).p;
    const Polynomial lhs = current.shifted_by_one() - current;
    const Polynomial rhs =
        Polynomial({QSqrt5(Rational(2 - r)), QSqrt5(Rational(1))}) * previous;
    CHECK(lhs == rhs);
    previous = current;
  }
}

TEST_CASE("decomposition reproduces the right diagonals") {
  // r=1, n=5: (1/sqrt5) alpha^6 - (1/sqrt5) beta^6 = F_6 = 8.
  const auto p1 = binet_polynomial(1);
  const QSqrt5 v =
      p1.p.eval(BigInt(5)) * fibfub::exact::pow(QSqrt5::alpha(), 6) +
      p1.p.conjugated().eval(BigInt(5)) * fibfub::exact::pow(QSqrt5::beta(), 6);
  CHECK(v.to_integer() == 8);

  // r=2: d_4^{(2)} = 18, d_5^{(2)} = 50.
  const auto p2 = binet_polynomial(2);
  const auto conj2 = p2.p.conjugated();
  const QSqrt5 d4 = p2.p.eval(BigInt(4)) * fibfub::exact::pow(QSqrt5::alpha(), 4) +
                    conj2.eval(BigInt(4)) * fibfub::exact::pow(QSqrt5::beta(), 4);
  CHECK(d4.to_integer() == 18);
  const QSqrt5 d5 = p2.p.eval(BigInt(5)) * fibfub::exact::pow(QSqrt5::alpha(), 5) +
                    conj2.eval(BigInt(5)) * fibfub::exact::pow(QSqrt5::beta(), 5);
  CHECK(d5.to_integer() == 50);
  CHECK(d5.to_integer() == t_value(5, 4));

  for (int r = 1; r <= 5; ++r) {
    const auto report = verify_binet_decomposition(r, 30);
    CHECK(report.ok());
    CHECK(report.checks == 31 - r);
  }
}

TEST_CASE("decomposition stays exact at n = 500") {
  // alpha^500 in exact arithmetic against the hundred-digit product
  // F_500 * S(500,499); S(500,499) = C(500,2).
  const auto p2 = binet_polynomial(2);
  const QSqrt5 value =
      p2.p.eval(BigInt(500)) * fibfub::exact::pow(QSqrt5::alpha(), 500) +
      p2.p.conjugated().eval(BigInt(500)) * fibfub::exact::pow(QSqrt5::beta(), 500);
  const BigInt expected = fibfub::comb::fibonacci(500) * BigInt(500 * 499 / 2);
  CHECK(value.to_integer() == expected);
  CHECK(value.to_integer() == t_value(500, 499));
}
