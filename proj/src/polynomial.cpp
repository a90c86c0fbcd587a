#include "fibfub/polynomial.hpp"

#include <ostream>
#include <stdexcept>

namespace fibfub::exact {

namespace {
const QSqrt5 kZero{};
}

Polynomial::Polynomial(std::vector<QSqrt5> coefficients) : coef_(std::move(coefficients)) {
  trim();
}

void Polynomial::trim() {
  while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
}

Polynomial Polynomial::constant(const QSqrt5& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const QSqrt5& c, int degree) {
  if (degree < 0) throw std::domain_error("Polynomial::monomial: negative degree");
  std::vector<QSqrt5> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

const QSqrt5& Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coef_.size())) return kZero;
  return coef_[i];
}

QSqrt5 Polynomial::eval(const QSqrt5& x) const {
  QSqrt5 acc;
  for (int i = degree(); i >= 0; --i) acc = acc * x + coef_[i];
  return acc;
}

Polynomial Polynomial::shifted_by_one() const {
  // Horner over x+1: acc <- acc*(x+1) + c_i.
  const Polynomial x_plus_1({QSqrt5(1L), QSqrt5(1L)});
  Polynomial acc;
  for (int i = degree(); i >= 0; --i) {
    acc = acc * x_plus_1 + constant(coef_[i]);
  }
  return acc;
}

Polynomial Polynomial::conjugated() const {
  std::vector<QSqrt5> v;
  v.reserve(coef_.size());
  for (const auto& c : coef_) v.push_back(c.conjugate());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  std::vector<QSqrt5> v;
  v.reserve(coef_.size());
  for (const auto& c : coef_) v.push_back(-c);
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<QSqrt5> v(std::max(p.coef_.size(), q.coef_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] = p.coeff(static_cast<int>(i)) + q.coeff(static_cast<int>(i));
  }
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial();
  std::vector<QSqrt5> v(p.coef_.size() + q.coef_.size() - 1);
  for (size_t i = 0; i < p.coef_.size(); ++i) {
    for (size_t j = 0; j < q.coef_.size(); ++j) {
      v[i + j] += p.coef_[i] * q.coef_[j];
    }
  }
  return Polynomial(std::move(v));
}

Polynomial pow(const Polynomial& p, int n) {
  if (n < 0) throw std::domain_error("Polynomial pow: negative exponent");
  Polynomial r = Polynomial::constant(QSqrt5(1L));
  for (int i = 0; i < n; ++i) r = r * p;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  for (int i = 0; i <= p.degree(); ++i) {
    if (i) os << " + ";
    os << "(" << p.coeff(i) << ")*x^" << i;
  }
  return os;
}

}  // namespace fibfub::exact
