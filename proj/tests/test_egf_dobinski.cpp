#include <cmath>

#include "doctest.h"

#include "fibfub/dobinski.hpp"
#include "fibfub/egf.hpp"
#include "fibfub/sequences.hpp"

using namespace fibfub::comb;
using fibfub::exact::QSqrt5;
using fibfub::exact::Rational;

TEST_CASE("egf coefficients reproduce the sequences") {
  const auto f = egf_fib_fubini(15);
  const auto l = egf_lucas_fubini(15);
  for (int n = 0; n <= 15; ++n) {
    CHECK(f.egf_coefficient(n).to_integer() == fib_fubini(n));
    CHECK(l.egf_coefficient(n).to_integer() == lucas_fubini(n));
  }
  // F_3 = 10, so the raw t^3 coefficient is 10/6.
  CHECK(f.coeff(3) == QSqrt5(Rational(10, 6)));
}

TEST_CASE("egf at order zero is the constant 1") {
  const auto f = egf_fib_fubini(0);
  CHECK(f.order() == 0);
  CHECK(f.coeff(0).to_integer() == 1);
  const auto l = egf_lucas_fubini(0);
  CHECK(l.coeff(0).to_integer() == 1);
}

TEST_CASE("derivative identity") {
  CHECK(egf_derivative_identity_fib(1, 10).match);
  CHECK(egf_derivative_identity_fib(3, 10).match);
  CHECK(egf_derivative_identity_lucas(1, 10).match);
  CHECK(egf_derivative_identity_lucas(3, 10).match);
  CHECK_THROWS_AS(egf_derivative_identity_fib(0, 10), std::domain_error);
  CHECK_THROWS_AS(egf_derivative_identity_lucas(11, 10), std::domain_error);
}

TEST_CASE("dobinski route approximates the exact values") {
  const auto r4 = fib_fubini_dobinski(4, 1e-12);
  CHECK(std::abs(r4.approximation - 38.0) < 1e-9 * 38.0);
  CHECK(r4.terms_used >= 1);

  const auto r0 = fib_fubini_dobinski(0, 1e-12);
  CHECK(std::abs(r0.approximation - 1.0) < 1e-9);

  const auto r10 = fib_fubini_dobinski(10, 1e-12);
  const double exact10 = 988033.0;
  CHECK(std::abs(r10.approximation - exact10) / exact10 <= r10.tail_bound);
  CHECK(std::abs(r10.approximation - exact10) / exact10 < 1e-9);
}

TEST_CASE("dobinski tail bound is honest for both families") {
  for (int n = 0; n <= 15; ++n) {
    const auto f = fib_fubini_dobinski(n, 1e-12);
    const double exact_f = fib_fubini(n).convert_to<double>();
    CHECK(std::abs(f.approximation - exact_f) / exact_f <= f.tail_bound);
    CHECK(f.tail_bound >= 0.0);

    const auto l = lucas_fubini_dobinski(n, 1e-12);
    const double exact_l = lucas_fubini(n).convert_to<double>();
    CHECK(std::abs(l.approximation - exact_l) / exact_l <= l.tail_bound);
  }
}

TEST_CASE("dobinski preconditions") {
  CHECK_THROWS_AS(fib_fubini_dobinski(-1, 1e-12), std::domain_error);
  CHECK_THROWS_AS(fib_fubini_dobinski(3, 0.0), std::domain_error);
  CHECK_THROWS_AS(fib_fubini_dobinski(3, 1.5), std::domain_error);
}
