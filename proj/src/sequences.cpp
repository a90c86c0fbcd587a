#include "fibfub/sequences.hpp"

#include <stdexcept>

#include "fibfub/qsqrt5.hpp"

namespace fibfub::comb {

using exact::QSqrt5;
using exact::Rational;

std::vector<BigInt> stirling2_row(int n) {
  if (n < 0) throw std::domain_error("stirling2_row: negative n");
  std::vector<BigInt> row{1};  // row 0: S(0,0) = 1
  for (int m = 1; m <= n; ++m) {
    std::vector<BigInt> next(m + 1);
    for (int k = 1; k <= m; ++k) {
      // S(m,k) = S(m-1,k-1) + k S(m-1,k)
      next[k] = k < m ? BigInt(row[k - 1] + k * row[k]) : row[k - 1];
    }
    row = std::move(next);
  }
  return row;
}

BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return stirling2_row(n)[k];
}

Stirling2Table::Stirling2Table(int max_n) {
  if (max_n < 0) throw std::domain_error("Stirling2Table: negative max_n");
  rows_.reserve(max_n + 1);
  rows_.push_back({1});
  for (int n = 1; n <= max_n; ++n) {
    const auto& prev = rows_.back();
    std::vector<BigInt> row(n + 1);
    for (int k = 1; k <= n; ++k) {
      row[k] = k < n ? BigInt(prev[k - 1] + k * prev[k]) : prev[k - 1];
    }
    rows_.push_back(std::move(row));
  }
}

const BigInt& Stirling2Table::value(int n, int k) const {
  static const BigInt zero = 0;
  if (n < 0 || n > max_n()) throw std::out_of_range("Stirling2Table: row out of range");
  if (k < 0 || k > n) return zero;
  return rows_[n][k];
}

BigInt stirling2_explicit(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::domain_error("stirling2_explicit: requires 0 <= k <= n");
  }
  BigInt sum = 0;
  for (int j = 0; j <= k; ++j) {
    const BigInt term = exact::binomial(k, j) * exact::ipow(BigInt(j), n);
    if ((k - j) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const BigInt kfact = exact::factorial(k);
  if (sum % kfact != 0) {
    throw std::logic_error("stirling2_explicit: alternating sum not divisible by k!");
  }
  return sum / kfact;
}

BigInt stirling1_signed(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  // s(m,k) = s(m-1,k-1) - (m-1) s(m-1,k)
  std::vector<BigInt> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<BigInt> next(m + 1);
    for (int j = 1; j <= m; ++j) {
      next[j] = j < m ? BigInt(row[j - 1] - (m - 1) * row[j]) : row[j - 1];
    }
    row = std::move(next);
  }
  return row[k];
}

BigInt fibonacci(int n) {
  if (n < 0) throw std::domain_error("fibonacci: negative index");
  BigInt a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

BigInt lucas(int n) {
  if (n < 0) throw std::domain_error("lucas: negative index");
  BigInt a = 2, b = 1;
  for (int i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

namespace {

// sum_k weight(k) S(n,k) with Fibonacci/Lucas weights precomputed once.
template <typename WeightAt>
BigInt weighted_stirling_sum(int n, WeightAt weight_of_k_plus_1) {
  const auto row = stirling2_row(n);
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) {
    if (row[k] == 0) continue;
    sum += weight_of_k_plus_1(k + 1) * row[k];
  }
  return sum;
}

std::vector<BigInt> fibonacci_prefix(int count) {
  std::vector<BigInt> f(count);
  for (int i = 0; i < count; ++i) f[i] = i < 2 ? BigInt(i) : BigInt(f[i - 1] + f[i - 2]);
  return f;
}

std::vector<BigInt> lucas_prefix(int count) {
  std::vector<BigInt> l(count);
  for (int i = 0; i < count; ++i) {
    l[i] = i == 0 ? BigInt(2) : i == 1 ? BigInt(1) : BigInt(l[i - 1] + l[i - 2]);
  }
  return l;
}

}  // namespace

BigInt fubini(int n) {
  if (n < 0) throw std::domain_error("fubini: negative index");
  const auto row = stirling2_row(n);
  BigInt sum = 0;
  BigInt kfact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) kfact *= k;
    sum += kfact * row[k];
  }
  return sum;
}

BigInt fib_fubini(int n) {
  if (n < 0) throw std::domain_error("fib_fubini: negative index");
  const auto f = fibonacci_prefix(n + 2);
  return weighted_stirling_sum(n, [&](int i) { return f[i]; });
}

BigInt lucas_fubini(int n) {
  if (n < 0) throw std::domain_error("lucas_fubini: negative index");
  const auto l = lucas_prefix(n + 2);
  return weighted_stirling_sum(n, [&](int i) { return l[i]; });
}

namespace {

// The explicit double sum over Q(sqrt5):
//   sum_{k=0..n} sum_{j=0..k} (-1)^{k-j} C(k,j) (alpha^{k+1} -+ beta^{k+1}) j^n / k!,
// divided by sqrt5 for the Fibonacci family. Must be a plain integer.
BigInt explicit_double_sum(int n, bool fibonacci_family) {
  const QSqrt5 alpha = QSqrt5::alpha();
  const QSqrt5 beta = QSqrt5::beta();
  QSqrt5 total;
  QSqrt5 alpha_pow = alpha;  // alpha^{k+1}
  QSqrt5 beta_pow = beta;
  BigInt kfact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      kfact *= k;
      alpha_pow *= alpha;
      beta_pow *= beta;
    }
    BigInt inner = 0;
    for (int j = 0; j <= k; ++j) {
      const BigInt term = exact::binomial(k, j) * exact::ipow(BigInt(j), n);
      if ((k - j) % 2 == 0) {
        inner += term;
      } else {
        inner -= term;
      }
    }
    const QSqrt5 binet = fibonacci_family ? alpha_pow - beta_pow : alpha_pow + beta_pow;
    total += binet * QSqrt5(Rational(inner, kfact));
  }
  if (fibonacci_family) total /= QSqrt5::sqrt5();
  return total.to_integer();
}

}  // namespace

BigInt fib_fubini_explicit(int n) {
  if (n < 0) throw std::domain_error("fib_fubini_explicit: negative index");
  return explicit_double_sum(n, true);
}

BigInt lucas_fubini_explicit(int n) {
  if (n < 0) throw std::domain_error("lucas_fubini_explicit: negative index");
  return explicit_double_sum(n, false);
}

}  // namespace fibfub::comb
