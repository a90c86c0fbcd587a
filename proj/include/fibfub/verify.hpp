#pragma once

#include "fibfub/report.hpp"

namespace fibfub::cli {

// Verification suites run by the `verify` command. Each returns a report;
// bounds are indices up to which the identities are checked.

/// Route agreement (sum vs explicit) and Binet checks for n <= n_max,
/// plus the combined-sum identity F_{k+1} + L_{k+1} = 2 F_{k+2}.
VerifyReport verify_sequences(int n_max);

/// EGF coefficients times n! against the sum route for n <= order.
VerifyReport verify_egf(int order);

/// Derivative closed form for 1 <= r <= r_max at the given order,
/// both families.
VerifyReport verify_derivative(int r_max, int order);

/// Dobinski approximations against exact values for n <= n_max.
VerifyReport verify_dobinski(int n_max, double rel_tol);

/// Row recurrence, row sums and edge values of the triangle up to max_row.
VerifyReport verify_triangle_suite(int max_row);

/// Left-diagonal recurrences for k <= k_max, right-diagonal recurrences for
/// r <= r_max and the mixed recurrence, all with n <= n_max.
VerifyReport verify_diagonals(int k_max, int r_max, int n_max);

/// Binet polynomials (difference equation, degree, purity) for r <= r_max
/// and the exact decomposition of right diagonals for n <= n_max.
VerifyReport verify_binet(int r_max, int n_max);

/// Enumeration oracles against the counting formulas: partitions and
/// ordered partitions for n <= n_max, permutations and tilings for
/// k <= k_max, plus the tiling bijection.
VerifyReport verify_oracle(int n_max, int k_max);

}  // namespace fibfub::cli
