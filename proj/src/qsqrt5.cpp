#include "fibfub/qsqrt5.hpp"

#include <ostream>
#include <stdexcept>

namespace fibfub::exact {

QSqrt5 QSqrt5::alpha() { return QSqrt5(Rational(1, 2), Rational(1, 2)); }
QSqrt5 QSqrt5::beta() { return QSqrt5(Rational(1, 2), Rational(-1, 2)); }
QSqrt5 QSqrt5::sqrt5() { return QSqrt5(Rational(0), Rational(1)); }
QSqrt5 QSqrt5::inv_sqrt5() { return QSqrt5(Rational(0), Rational(1, 5)); }

bool QSqrt5::is_integer() const {
  using boost::multiprecision::denominator;
  return b == 0 && denominator(a) == 1;
}

Rational QSqrt5::to_rational() const {
  if (b != 0) throw std::logic_error("QSqrt5: value has a sqrt5 component");
  return a;
}

BigInt QSqrt5::to_integer() const {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (b != 0) throw std::logic_error("QSqrt5: value has a sqrt5 component");
  if (denominator(a) != 1) throw std::logic_error("QSqrt5: value is not an integer");
  return numerator(a);
}

QSqrt5 inverse(const QSqrt5& x) {
  if (x.is_zero()) throw std::domain_error("QSqrt5: division by zero");
  // 1/x = conj(x) / (x conj(x)); the norm is nonzero since sqrt5 is
  // irrational, so a^2 = 5 b^2 only at zero.
  const Rational n = x.norm();
  return QSqrt5(x.a / n, -x.b / n);
}

QSqrt5 operator/(const QSqrt5& x, const QSqrt5& y) { return x * inverse(y); }

QSqrt5 pow(const QSqrt5& x, int n) {
  if (n < 0) throw std::domain_error("QSqrt5 pow: negative exponent");
  QSqrt5 r(Rational(1), Rational(0));
  QSqrt5 b = x;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

QSqrt5 binet_fibonacci(int n) {
  if (n < 0) throw std::domain_error("binet_fibonacci: negative index");
  return (pow(QSqrt5::alpha(), n) - pow(QSqrt5::beta(), n)) / QSqrt5::sqrt5();
}

QSqrt5 binet_lucas(int n) {
  if (n < 0) throw std::domain_error("binet_lucas: negative index");
  return pow(QSqrt5::alpha(), n) + pow(QSqrt5::beta(), n);
}

std::ostream& operator<<(std::ostream& os, const QSqrt5& x) {
  if (x.b == 0) return os << x.a;
  if (x.a == 0) return os << "(" << x.b << ")*sqrt5";
  return os << "(" << x.a << " + (" << x.b << ")*sqrt5)";
}

}  // namespace fibfub::exact
