#pragma once

#include <iosfwd>
#include <vector>

#include "fibfub/qsqrt5.hpp"

namespace fibfub::exact {

// Dense univariate polynomial over Q(sqrt5), coefficients in ascending
// degree with a nonzero leading coefficient (the zero polynomial is empty).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<QSqrt5> coefficients);

  static Polynomial constant(const QSqrt5& c);
  /// c * x^degree
  static Polynomial monomial(const QSqrt5& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  bool is_zero() const { return coef_.empty(); }

  /// Coefficient of x^i (zero beyond the degree).
  const QSqrt5& coeff(int i) const;
  const std::vector<QSqrt5>& coefficients() const { return coef_; }

  QSqrt5 eval(const QSqrt5& x) const;
  QSqrt5 eval(const BigInt& n) const { return eval(QSqrt5(n)); }

  /// p(x + 1)
  Polynomial shifted_by_one() const;

  /// Coefficient-wise conjugation (sqrt5 -> -sqrt5).
  Polynomial conjugated() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

 private:
  void trim();
  std::vector<QSqrt5> coef_;
};

/// p^n by repeated multiplication, n >= 0.
Polynomial pow(const Polynomial& p, int n);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace fibfub::exact
