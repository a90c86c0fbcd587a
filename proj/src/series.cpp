#include "fibfub/series.hpp"

#include <ostream>
#include <stdexcept>

namespace fibfub::exact {

namespace {
void require_same_order(const TruncatedSeries& x, const TruncatedSeries& y) {
  if (x.order() != y.order()) {
    throw std::invalid_argument("TruncatedSeries: order mismatch");
  }
}
}  // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order), c_(order + 1) {
  if (order < 0) throw std::domain_error("TruncatedSeries: negative order");
}

TruncatedSeries::TruncatedSeries(int order, std::vector<QSqrt5> coefficients)
    : order_(order), c_(std::move(coefficients)) {
  if (order < 0) throw std::domain_error("TruncatedSeries: negative order");
  c_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::constant(const QSqrt5& c, int order) {
  TruncatedSeries s(order);
  s.c_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::exponential(int order) { return exponential_mt(1, order); }

TruncatedSeries TruncatedSeries::exponential_mt(int m, int order) {
  TruncatedSeries s(order);
  QSqrt5 coeff(1L);
  s.c_[0] = coeff;
  for (int n = 1; n <= order; ++n) {
    coeff *= QSqrt5(Rational(m, n));  // m^n/n! built up incrementally
    s.c_[n] = coeff;
  }
  return s;
}

const QSqrt5& TruncatedSeries::coeff(int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("TruncatedSeries: coefficient index");
  return c_[n];
}

void TruncatedSeries::set_coeff(int n, QSqrt5 value) {
  if (n < 0 || n > order_) throw std::out_of_range("TruncatedSeries: coefficient index");
  c_[n] = std::move(value);
}

QSqrt5 TruncatedSeries::egf_coefficient(int n) const {
  return coeff(n) * QSqrt5(Rational(factorial(n)));
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order_ == 0) return TruncatedSeries(0);
  TruncatedSeries d(order_ - 1);
  for (int n = 0; n < order_; ++n) {
    d.c_[n] = c_[n + 1] * QSqrt5(Rational(n + 1));
  }
  return d;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order < 0 || new_order > order_) {
    throw std::invalid_argument("TruncatedSeries::truncated: bad order");
  }
  TruncatedSeries t(new_order);
  for (int n = 0; n <= new_order; ++n) t.c_[n] = c_[n];
  return t;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(order_);
  for (int n = 0; n <= order_; ++n) r.c_[n] = -c_[n];
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y) {
  require_same_order(x, y);
  TruncatedSeries r(x.order_);
  for (int n = 0; n <= x.order_; ++n) r.c_[n] = x.c_[n] + y.c_[n];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y) {
  require_same_order(x, y);
  TruncatedSeries r(x.order_);
  for (int n = 0; n <= x.order_; ++n) r.c_[n] = x.c_[n] - y.c_[n];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
  require_same_order(x, y);
  TruncatedSeries r(x.order_);
  for (int i = 0; i <= x.order_; ++i) {
    if (x.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= x.order_; ++j) {
      r.c_[i + j] += x.c_[i] * y.c_[j];
    }
  }
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& x, const QSqrt5& scalar) {
  TruncatedSeries r(x.order_);
  for (int n = 0; n <= x.order_; ++n) r.c_[n] = x.c_[n] * scalar;
  return r;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
  if (!s.coeff(0).is_zero()) {
    throw std::domain_error("series_exp: nonzero constant term");
  }
  const int order = s.order();
  // exp(s) = sum_{k<=N} s^k/k!; s^k has no terms below t^k.
  TruncatedSeries result = TruncatedSeries::constant(QSqrt5(1L), order);
  TruncatedSeries term = TruncatedSeries::constant(QSqrt5(1L), order);
  for (int k = 1; k <= order; ++k) {
    term = term * s * QSqrt5(Rational(1, k));
    result = result + term;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
  os << "[";
  for (int n = 0; n <= s.order(); ++n) {
    if (n) os << ", ";
    os << s.coeff(n);
  }
  return os << "] + O(t^" << s.order() + 1 << ")";
}

}  // namespace fibfub::exact
