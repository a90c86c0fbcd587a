#include "fibfub/bigint.hpp"

#include <stdexcept>

namespace fibfub::exact {

BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

BigInt ipow(const BigInt& base, int exponent) {
  if (exponent < 0) throw std::domain_error("ipow: negative exponent");
  BigInt r = 1;
  BigInt b = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace fibfub::exact
