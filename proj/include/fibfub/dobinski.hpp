#pragma once

namespace fibfub::comb {

// Truncation of the two infinite series sum_k c^k k^n / k! (c = alpha and
// c = beta) in double precision, with a tail bound for the cut-off error.
struct DobinskiResult {
  double approximation = 0.0;
  int terms_used = 0;
  double tail_bound = 0.0;  // relative to the approximation
};

/// Fibonacci-Fubini number by the Dobinski-like series. Terms are summed
/// until the next alpha-series term drops below rel_tol times the partial
/// sum (and the term ratio has entered its < 1/2 decay regime), then a
/// geometric tail bound is attached. Requires n >= 0, 0 < rel_tol < 1.
DobinskiResult fib_fubini_dobinski(int n, double rel_tol);

/// Lucas-Fubini analogue.
DobinskiResult lucas_fubini_dobinski(int n, double rel_tol);

}  // namespace fibfub::comb
