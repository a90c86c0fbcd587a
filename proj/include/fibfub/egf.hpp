#pragma once

#include "fibfub/series.hpp"

namespace fibfub::comb {

/// The series of e^t - 1 at the given order.
exact::TruncatedSeries exp_t_minus_one(int order);

/// EGF of the Fibonacci-Fubini numbers,
/// (alpha e^{(e^t-1)alpha} - beta e^{(e^t-1)beta}) / sqrt5, truncated.
exact::TruncatedSeries egf_fib_fubini(int order);

/// EGF of the Lucas-Fubini numbers,
/// alpha e^{(e^t-1)alpha} + beta e^{(e^t-1)beta}, truncated.
exact::TruncatedSeries egf_lucas_fubini(int order);

struct DerivativeCheck {
  bool match = false;
  int first_mismatch = -1;  // coefficient index, -1 when match
};

/// Compares the r-fold formal derivative of the Fibonacci-Fubini EGF with
/// the closed form sum_{i=1..r} S(r,i) e^{it}
/// (alpha^{i+1} e^{(e^t-1)alpha} - beta^{i+1} e^{(e^t-1)beta}) / sqrt5,
/// coefficient by coefficient up to the given order. Requires 1 <= r <= order.
DerivativeCheck egf_derivative_identity_fib(int r, int order);

/// Same check for the Lucas-Fubini closed form (no sqrt5 divisor, plus sign).
DerivativeCheck egf_derivative_identity_lucas(int r, int order);

}  // namespace fibfub::comb
