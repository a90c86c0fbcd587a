#pragma once

#include <iosfwd>
#include <vector>

#include "fibfub/qsqrt5.hpp"

namespace fibfub::exact {

// Formal power series over Q(sqrt5) truncated at a fixed order N: exactly
// the coefficients of t^0 .. t^N are represented. Binary operations require
// matching orders; coefficients beyond N are never consulted.
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<QSqrt5> coefficients);

  static TruncatedSeries constant(const QSqrt5& c, int order);
  /// e^t truncated: coefficients 1/n!.
  static TruncatedSeries exponential(int order);
  /// e^{m t} truncated: coefficients m^n/n!.
  static TruncatedSeries exponential_mt(int m, int order);

  int order() const { return order_; }
  const QSqrt5& coeff(int n) const;
  void set_coeff(int n, QSqrt5 value);

  /// n! * coeff(n): the EGF-style coefficient.
  QSqrt5 egf_coefficient(int n) const;

  /// Formal derivative; result has order N-1 (order 0 stays order 0).
  TruncatedSeries derivative() const;

  /// Copy truncated to a lower order M <= N.
  TruncatedSeries truncated(int new_order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y);
  friend TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y);
  friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y);
  friend TruncatedSeries operator*(const TruncatedSeries& x, const QSqrt5& scalar);
  friend TruncatedSeries operator*(const QSqrt5& scalar, const TruncatedSeries& x) {
    return x * scalar;
  }

 private:
  int order_ = 0;
  std::vector<QSqrt5> c_;  // order_+1 entries
};

/// Formal exponential of a series with zero constant term.
/// Throws std::domain_error if coeff(0) != 0.
TruncatedSeries series_exp(const TruncatedSeries& s);

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

}  // namespace fibfub::exact
