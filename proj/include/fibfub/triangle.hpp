#pragma once

#include <vector>

#include "fibfub/report.hpp"
#include "fibfub/sequences.hpp"

namespace fibfub::tri {

using comb::BigInt;
using comb::SequenceTable;

/// Triangle entry T(n,k) = F_{k+1} S(n,k); requires 0 <= k <= n.
BigInt t_value(int n, int k);

/// T(n,k) with out-of-triangle k treated as zero (k > n or k < 0).
BigInt t_value_or_zero(int n, int k);

// The triangle with rows 0..max_row; row n holds entries k = 0..n, where
// T(0,0) = 1 and T(n,0) = 0 for n >= 1. Immutable after construction.
class Triangle {
 public:
  explicit Triangle(int max_row);

  int max_row() const { return static_cast<int>(rows_.size()) - 1; }
  const BigInt& at(int n, int k) const;
  const std::vector<BigInt>& row(int n) const;
  BigInt row_sum(int n) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

// Constant-coefficient linear recurrence a_n = sum_{j=1..order} c_j a_{n-j},
// valid for indices n >= valid_from.
struct RecurrenceSpec {
  int order = 0;
  std::vector<BigInt> coefficients;  // c_1 .. c_order
  long valid_from = 0;

  friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

/// Left-down diagonal (T(n,k))_{n=k..n_max} for fixed k >= 1.
SequenceTable left_diagonal(int k, int n_max);

/// Right-down diagonal d_n^{(r)} = T(n, n-r+1) for n = r..n_max, r >= 1.
SequenceTable right_diagonal(int r, int n_max);

/// Order-k recurrence of the k-th left diagonal with coefficients
/// c_j = -s(k+1, k-j+1) (signed Stirling numbers of the first kind).
RecurrenceSpec left_recurrence_from_stirling(int k);

/// Same recurrence derived by expanding the characteristic polynomial
/// (x-1)(x-2)...(x-k).
RecurrenceSpec left_recurrence_from_charpoly(int k);

/// The left-diagonal recurrence; both derivations are computed and must
/// agree (std::logic_error otherwise).
RecurrenceSpec left_diag_recurrence(int k);

/// Order-2(2r-1) recurrence of the r-th right diagonal, obtained by
/// expanding the characteristic polynomial (x^2 - x - 1)^{2r-1}.
RecurrenceSpec right_diag_recurrence(int r);

/// Descending coefficient list of (x^2 - x - 1)^{2r-1}.
std::vector<BigInt> right_charpoly_descending(int r);

/// Checks the denominator-cleared row recurrence
/// F_k T(n,k) = F_{k+1} T(n-1,k-1) + k F_k T(n-1,k)
/// for 2 <= n <= max_row, 1 <= k <= n.
VerifyReport verify_triangle_recurrence(int max_row);

/// Checks sum_{j=0..k} s(k+1,k-j+1) T(n-j,k) = 0 for k+1 <= n <= n_max,
/// and the same annihilation with S(n,k) in place of T(n,k).
VerifyReport verify_left_recurrence(int k, int n_max);

/// Checks d_n = sum c_j d_{n-j} on the r-th right diagonal for all valid n.
VerifyReport verify_right_recurrence(int r, int n_max);

/// Checks the cleared mixed recurrence
/// F_{n-r+1} d_n^{(r)} = F_{n-r+2} d_{n-1}^{(r)} + (n-r+1) F_{n-r+1} d_{n-1}^{(r-1)}
/// for r+1 <= n <= n_max, r >= 2.
VerifyReport verify_mixed_recurrence(int r, int n_max);

}  // namespace fibfub::tri
