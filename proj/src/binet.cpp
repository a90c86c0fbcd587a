#include "fibfub/binet.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "fibfub/triangle.hpp"

namespace fibfub::tri {

using exact::BigInt;
using exact::Polynomial;
using exact::QSqrt5;
using exact::Rational;

namespace {

const QSqrt5 kInvSqrt5 = QSqrt5::inv_sqrt5();

// Unique polynomial p with p(x+1) - p(x) = g(x) and p(final_at) = 1/sqrt5.
// Back-substitution on the triangular system: the coefficient of x^j in
// p(x+1) - p(x) is sum_{i>j} C(i,j) c_i, with diagonal entry (j+1) c_{j+1}.
Polynomial solve_difference_equation(const Polynomial& g, int final_at) {
  if (g.is_zero()) throw std::logic_error("difference equation: zero right-hand side");
  const int d = g.degree() + 1;
  std::vector<QSqrt5> c(d + 1);
  for (int j = d - 1; j >= 0; --j) {
    QSqrt5 acc;
    for (int i = j + 2; i <= d; ++i) {
      acc += c[i] * QSqrt5(Rational(exact::binomial(i, j)));
    }
    c[j + 1] = (g.coeff(j) - acc) / QSqrt5(Rational(j + 1));
  }
  Polynomial body(c);  // constant term still zero
  c[0] = kInvSqrt5 - body.eval(BigInt(final_at));
  return Polynomial(std::move(c));
}

}  // namespace

BinetPolynomial binet_polynomial(int r) {
  if (r < 1) throw std::domain_error("binet_polynomial: requires r >= 1");
  Polynomial p = Polynomial::constant(kInvSqrt5);  // p_1
  for (int s = 1; s < r; ++s) {
    // p_{s+1}(n+1) - p_{s+1}(n) = (n+1-s) p_s(n)
    const Polynomial rhs = Polynomial({QSqrt5(Rational(1 - s)), QSqrt5(1L)}) * p;
    p = solve_difference_equation(rhs, s + 1);
  }
  return {r, p};
}

std::vector<Rational> binet_polynomial_scaled_coefficients(const BinetPolynomial& bp) {
  // Coefficient a + b sqrt5 with a = 0 equals (5b)/sqrt5.
  std::vector<Rational> scaled;
  scaled.reserve(bp.p.degree() + 1);
  for (int i = 0; i <= bp.p.degree(); ++i) {
    const QSqrt5& c = bp.p.coeff(i);
    if (c.a != 0) throw std::logic_error("binet polynomial: coefficient not a sqrt5 multiple");
    scaled.push_back(5 * c.b);
  }
  return scaled;
}

VerifyReport verify_binet_decomposition(int r, int n_max) {
  if (r < 1 || n_max < r) {
    throw std::domain_error("verify_binet_decomposition: requires r >= 1, n_max >= r");
  }
  VerifyReport report;
  report.suite = "binet-decomposition";
  const BinetPolynomial bp = binet_polynomial(r);
  const Polynomial conj = bp.p.conjugated();
  const QSqrt5 alpha = QSqrt5::alpha();
  const QSqrt5 beta = QSqrt5::beta();
  for (int n = r; n <= n_max; ++n) {
    const QSqrt5 value =
        bp.p.eval(BigInt(n)) * exact::pow(alpha, n + 2 - r) +
        conj.eval(BigInt(n)) * exact::pow(beta, n + 2 - r);
    const BigInt expected = t_value(n, n - r + 1);
    ++report.checks;
    if (!value.is_integer() || value.to_integer() != expected) {
      std::ostringstream actual;
      actual << value;
      report.add_failure("binet/decomposition",
                         "r=" + std::to_string(r) + " n=" + std::to_string(n),
                         expected.str(), actual.str());
    }
  }
  return report;
}

}  // namespace fibfub::tri
