#include "fibfub/egf.hpp"

#include <stdexcept>

#include "fibfub/sequences.hpp"

namespace fibfub::comb {

using exact::QSqrt5;
using exact::Rational;
using exact::TruncatedSeries;

TruncatedSeries exp_t_minus_one(int order) {
  TruncatedSeries s = TruncatedSeries::exponential(order);
  s.set_coeff(0, QSqrt5());
  return s;
}

namespace {

// alpha e^{(e^t-1)alpha} -+ beta e^{(e^t-1)beta}, over sqrt5 for the
// Fibonacci family.
TruncatedSeries egf_closed_form(int order, bool fibonacci_family) {
  const QSqrt5 alpha = QSqrt5::alpha();
  const QSqrt5 beta = QSqrt5::beta();
  const TruncatedSeries e = exp_t_minus_one(order);
  const TruncatedSeries ea = series_exp(e * alpha);
  const TruncatedSeries eb = series_exp(e * beta);
  if (fibonacci_family) {
    return (ea * alpha - eb * beta) * QSqrt5::inv_sqrt5();
  }
  return ea * alpha + eb * beta;
}

DerivativeCheck derivative_identity(int r, int order, bool fibonacci_family) {
  if (r < 1 || r > order) {
    throw std::domain_error("egf_derivative_identity: requires 1 <= r <= order");
  }
  // Left side: r-fold formal derivative of the EGF, computed with enough
  // headroom that all coefficients up to `order` are exact.
  TruncatedSeries lhs = egf_closed_form(order + r, fibonacci_family);
  for (int i = 0; i < r; ++i) lhs = lhs.derivative();

  const QSqrt5 alpha = QSqrt5::alpha();
  const QSqrt5 beta = QSqrt5::beta();
  const TruncatedSeries e = exp_t_minus_one(order);
  const TruncatedSeries ea = series_exp(e * alpha);
  const TruncatedSeries eb = series_exp(e * beta);
  TruncatedSeries rhs(order);
  for (int i = 1; i <= r; ++i) {
    const QSqrt5 apow = exact::pow(alpha, i + 1);
    const QSqrt5 bpow = exact::pow(beta, i + 1);
    const TruncatedSeries inner =
        fibonacci_family ? ea * apow - eb * bpow : ea * apow + eb * bpow;
    const TruncatedSeries term = TruncatedSeries::exponential_mt(i, order) * inner;
    rhs = rhs + term * QSqrt5(Rational(stirling2(r, i)));
  }
  if (fibonacci_family) rhs = rhs * QSqrt5::inv_sqrt5();

  for (int n = 0; n <= order; ++n) {
    if (lhs.coeff(n) != rhs.coeff(n)) return {false, n};
  }
  return {true, -1};
}

}  // namespace

TruncatedSeries egf_fib_fubini(int order) { return egf_closed_form(order, true); }

TruncatedSeries egf_lucas_fubini(int order) { return egf_closed_form(order, false); }

DerivativeCheck egf_derivative_identity_fib(int r, int order) {
  return derivative_identity(r, order, true);
}

DerivativeCheck egf_derivative_identity_lucas(int r, int order) {
  return derivative_identity(r, order, false);
}

}  // namespace fibfub::comb
