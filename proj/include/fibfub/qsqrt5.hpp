#pragma once

#include <iosfwd>
#include <utility>

#include "fibfub/bigint.hpp"

namespace fibfub::exact {

// Element a + b*sqrt(5) of the real quadratic field Q(sqrt(5)).
// Arithmetic is exact; both components stay individually reduced.
struct QSqrt5 {
  Rational a{};  // rational part
  Rational b{};  // coefficient of sqrt(5)

  QSqrt5() = default;
  QSqrt5(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit QSqrt5(Rational r) : a(std::move(r)) {}
  explicit QSqrt5(const BigInt& i) : a(i) {}
  explicit QSqrt5(long i) : a(i) {}

  static QSqrt5 alpha();        // (1 + sqrt5)/2
  static QSqrt5 beta();         // (1 - sqrt5)/2
  static QSqrt5 sqrt5();        // 0 + 1*sqrt5
  static QSqrt5 inv_sqrt5();    // 0 + (1/5)*sqrt5

  QSqrt5 conjugate() const { return QSqrt5(a, -b); }

  /// Field norm x * conj(x) = a^2 - 5 b^2; zero iff x is zero.
  Rational norm() const { return a * a - 5 * b * b; }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
  bool is_integer() const;

  /// The value as a rational; requires b == 0.
  Rational to_rational() const;

  /// The value as an integer; requires b == 0 and denominator 1.
  BigInt to_integer() const;

  friend bool operator==(const QSqrt5&, const QSqrt5&) = default;

  QSqrt5 operator-() const { return QSqrt5(-a, -b); }
  friend QSqrt5 operator+(const QSqrt5& x, const QSqrt5& y) {
    return QSqrt5(x.a + y.a, x.b + y.b);
  }
  friend QSqrt5 operator-(const QSqrt5& x, const QSqrt5& y) {
    return QSqrt5(x.a - y.a, x.b - y.b);
  }
  friend QSqrt5 operator*(const QSqrt5& x, const QSqrt5& y) {
    return QSqrt5(x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a);
  }
  friend QSqrt5 operator/(const QSqrt5& x, const QSqrt5& y);

  QSqrt5& operator+=(const QSqrt5& x) { return *this = *this + x; }
  QSqrt5& operator-=(const QSqrt5& x) { return *this = *this - x; }
  QSqrt5& operator*=(const QSqrt5& x) { return *this = *this * x; }
  QSqrt5& operator/=(const QSqrt5& x) { return *this = *this / x; }
};

/// Multiplicative inverse; throws std::domain_error on zero.
QSqrt5 inverse(const QSqrt5& x);

/// x^n by binary powering, n >= 0.
QSqrt5 pow(const QSqrt5& x, int n);

/// F_n = (alpha^n - beta^n)/(alpha - beta), exact.
QSqrt5 binet_fibonacci(int n);

/// L_n = alpha^n + beta^n, exact.
QSqrt5 binet_lucas(int n);

std::ostream& operator<<(std::ostream& os, const QSqrt5& x);

}  // namespace fibfub::exact
