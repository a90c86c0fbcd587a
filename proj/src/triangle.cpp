#include "fibfub/triangle.hpp"

#include <sstream>
#include <stdexcept>

#include "fibfub/polynomial.hpp"

namespace fibfub::tri {

using comb::fibonacci;
using comb::stirling1_signed;
using comb::stirling2;
using comb::Stirling2Table;
using exact::Polynomial;
using exact::QSqrt5;

BigInt t_value(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::domain_error("t_value: requires 0 <= k <= n");
  return fibonacci(k + 1) * stirling2(n, k);
}

BigInt t_value_or_zero(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return t_value(n, k);
}

Triangle::Triangle(int max_row) {
  if (max_row < 0) throw std::domain_error("Triangle: negative max_row");
  const Stirling2Table s2(max_row);
  std::vector<BigInt> fib(max_row + 2);
  for (int i = 0; i < static_cast<int>(fib.size()); ++i) {
    fib[i] = i < 2 ? BigInt(i) : BigInt(fib[i - 1] + fib[i - 2]);
  }
  rows_.resize(max_row + 1);
  for (int n = 0; n <= max_row; ++n) {
    rows_[n].resize(n + 1);
    for (int k = 0; k <= n; ++k) rows_[n][k] = fib[k + 1] * s2.value(n, k);
  }
}

const BigInt& Triangle::at(int n, int k) const {
  if (n < 0 || n > max_row() || k < 0 || k > n) {
    throw std::domain_error("Triangle::at: index outside the triangle");
  }
  return rows_[n][k];
}

const std::vector<BigInt>& Triangle::row(int n) const {
  if (n < 0 || n > max_row()) throw std::domain_error("Triangle::row: out of range");
  return rows_[n];
}

BigInt Triangle::row_sum(int n) const {
  BigInt sum = 0;
  for (const auto& v : row(n)) sum += v;
  return sum;
}

SequenceTable left_diagonal(int k, int n_max) {
  if (k < 1 || k > n_max) throw std::domain_error("left_diagonal: requires 1 <= k <= n_max");
  SequenceTable t;
  t.name = "T(n," + std::to_string(k) + ")";
  t.offset = k;
  const BigInt fib = fibonacci(k + 1);
  for (int n = k; n <= n_max; ++n) t.values.push_back(fib * stirling2(n, k));
  return t;
}

SequenceTable right_diagonal(int r, int n_max) {
  if (r < 1 || r > n_max) throw std::domain_error("right_diagonal: requires 1 <= r <= n_max");
  SequenceTable t;
  t.name = "d^(" + std::to_string(r) + ")";
  t.offset = r;
  for (int n = r; n <= n_max; ++n) t.values.push_back(t_value(n, n - r + 1));
  return t;
}

RecurrenceSpec left_recurrence_from_stirling(int k) {
  if (k < 1) throw std::domain_error("left recurrence: requires k >= 1");
  RecurrenceSpec spec;
  spec.order = k;
  spec.valid_from = k + 1;
  // 0 = sum_{j=0..k} s(k+1,k-j+1) T(n-j,k) with s(k+1,k+1) = 1, so
  // c_j = -s(k+1,k-j+1).
  for (int j = 1; j <= k; ++j) spec.coefficients.push_back(-stirling1_signed(k + 1, k - j + 1));
  return spec;
}

RecurrenceSpec left_recurrence_from_charpoly(int k) {
  if (k < 1) throw std::domain_error("left recurrence: requires k >= 1");
  // Characteristic polynomial (x-1)(x-2)...(x-k), monic of degree k.
  Polynomial p = Polynomial::constant(QSqrt5(1L));
  for (int i = 1; i <= k; ++i) {
    p = p * Polynomial({QSqrt5(exact::Rational(-i)), QSqrt5(1L)});
  }
  RecurrenceSpec spec;
  spec.order = k;
  spec.valid_from = k + 1;
  for (int j = 1; j <= k; ++j) spec.coefficients.push_back((-p.coeff(k - j)).to_integer());
  return spec;
}

RecurrenceSpec left_diag_recurrence(int k) {
  const RecurrenceSpec from_stirling = left_recurrence_from_stirling(k);
  const RecurrenceSpec from_charpoly = left_recurrence_from_charpoly(k);
  if (from_stirling != from_charpoly) {
    throw std::logic_error("left_diag_recurrence: derivations disagree");
  }
  return from_stirling;
}

std::vector<BigInt> right_charpoly_descending(int r) {
  if (r < 1) throw std::domain_error("right recurrence: requires r >= 1");
  const Polynomial base({QSqrt5(-1L), QSqrt5(-1L), QSqrt5(1L)});  // x^2 - x - 1
  const Polynomial q = exact::pow(base, 2 * r - 1);
  std::vector<BigInt> desc;
  for (int i = q.degree(); i >= 0; --i) desc.push_back(q.coeff(i).to_integer());
  return desc;
}

RecurrenceSpec right_diag_recurrence(int r) {
  const auto desc = right_charpoly_descending(r);
  RecurrenceSpec spec;
  spec.order = static_cast<int>(desc.size()) - 1;  // 2(2r-1)
  spec.valid_from = r + spec.order;
  for (int j = 1; j <= spec.order; ++j) spec.coefficients.push_back(-desc[j]);
  return spec;
}

namespace {

std::string big_str(const BigInt& v) { return v.str(); }

}  // namespace

VerifyReport verify_triangle_recurrence(int max_row) {
  if (max_row < 2) throw std::domain_error("verify_triangle_recurrence: requires max_row >= 2");
  VerifyReport report;
  report.suite = "triangle-row-recurrence";
  const Triangle tr(max_row);
  std::vector<BigInt> fib(max_row + 3);
  for (int i = 0; i < static_cast<int>(fib.size()); ++i) {
    fib[i] = i < 2 ? BigInt(i) : BigInt(fib[i - 1] + fib[i - 2]);
  }
  for (int n = 2; n <= max_row; ++n) {
    for (int k = 1; k <= n; ++k) {
      // Cleared form: F_k T(n,k) = F_{k+1} T(n-1,k-1) + k F_k T(n-1,k).
      const BigInt lhs = fib[k] * tr.at(n, k);
      const BigInt rhs = fib[k + 1] * tr.at(n - 1, k - 1) +
                         k * fib[k] * (k <= n - 1 ? tr.at(n - 1, k) : BigInt(0));
      ++report.checks;
      if (lhs != rhs) {
        report.add_failure("triangle/row-recurrence",
                           "n=" + std::to_string(n) + " k=" + std::to_string(k),
                           big_str(rhs), big_str(lhs));
      }
    }
  }
  return report;
}

VerifyReport verify_left_recurrence(int k, int n_max) {
  if (k < 1 || n_max < 2 * k + 1) {
    throw std::domain_error("verify_left_recurrence: requires k >= 1, n_max >= 2k+1");
  }
  VerifyReport report;
  report.suite = "left-diagonal-recurrence";
  std::vector<BigInt> s1(k + 2);  // s(k+1, m) for m = 0..k+1
  for (int m = 0; m <= k + 1; ++m) s1[m] = stirling1_signed(k + 1, m);
  const comb::Stirling2Table s2(n_max);
  const BigInt fib = fibonacci(k + 1);
  for (int n = k + 1; n <= n_max; ++n) {
    BigInt acc_t = 0;
    BigInt acc_s = 0;
    for (int j = 0; j <= k; ++j) {
      const BigInt& coeff = s1[k - j + 1];
      acc_s += coeff * s2.value(n - j, k);
      acc_t += coeff * fib * s2.value(n - j, k);
    }
    ++report.checks;
    if (acc_t != 0) {
      report.add_failure("left-diagonal/annihilation-T",
                         "k=" + std::to_string(k) + " n=" + std::to_string(n), "0",
                         big_str(acc_t));
    }
    ++report.checks;
    if (acc_s != 0) {
      report.add_failure("left-diagonal/annihilation-S",
                         "k=" + std::to_string(k) + " n=" + std::to_string(n), "0",
                         big_str(acc_s));
    }
  }
  return report;
}

VerifyReport verify_right_recurrence(int r, int n_max) {
  const RecurrenceSpec spec = right_diag_recurrence(r);
  if (n_max < spec.valid_from) {
    throw std::domain_error("verify_right_recurrence: requires n_max >= r + 2(2r-1)");
  }
  VerifyReport report;
  report.suite = "right-diagonal-recurrence";
  const SequenceTable d = right_diagonal(r, n_max);
  auto value_at = [&](int n) -> const BigInt& { return d.values[n - r]; };
  for (long n = spec.valid_from; n <= n_max; ++n) {
    BigInt rhs = 0;
    for (int j = 1; j <= spec.order; ++j) {
      rhs += spec.coefficients[j - 1] * value_at(static_cast<int>(n) - j);
    }
    ++report.checks;
    if (rhs != value_at(static_cast<int>(n))) {
      report.add_failure("right-diagonal/recurrence",
                         "r=" + std::to_string(r) + " n=" + std::to_string(n),
                         big_str(value_at(static_cast<int>(n))), big_str(rhs));
    }
  }
  return report;
}

VerifyReport verify_mixed_recurrence(int r, int n_max) {
  if (r < 2 || n_max < r + 1) {
    throw std::domain_error("verify_mixed_recurrence: requires r >= 2, n_max >= r+1");
  }
  VerifyReport report;
  report.suite = "mixed-diagonal-recurrence";
  std::vector<BigInt> fib(n_max + 3);
  for (int i = 0; i < static_cast<int>(fib.size()); ++i) {
    fib[i] = i < 2 ? BigInt(i) : BigInt(fib[i - 1] + fib[i - 2]);
  }
  for (int n = r + 1; n <= n_max; ++n) {
    // Cleared form of
    // d_n^{(r)} = (F_{n-r+2}/F_{n-r+1}) d_{n-1}^{(r)} + (n-r+1) d_{n-1}^{(r-1)}.
    const BigInt lhs = fib[n - r + 1] * t_value(n, n - r + 1);
    const BigInt rhs = fib[n - r + 2] * t_value(n - 1, n - r) +
                       (n - r + 1) * fib[n - r + 1] * t_value(n - 1, n - r + 1);
    ++report.checks;
    if (lhs != rhs) {
      report.add_failure("mixed-recurrence/cleared",
                         "r=" + std::to_string(r) + " n=" + std::to_string(n), big_str(rhs),
                         big_str(lhs));
    }
  }
  return report;
}

}  // namespace fibfub::tri
