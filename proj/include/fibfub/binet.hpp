#pragma once

#include "fibfub/polynomial.hpp"
#include "fibfub/report.hpp"

namespace fibfub::tri {

// Polynomial p_r with p_1 = 1/sqrt5 and
// p_{r+1}(n+1) - p_{r+1}(n) = (n+1-r) p_r(n),  p_{r+1}(r+1) = 1/sqrt5.
// The r-th right diagonal decomposes as
// d_n^{(r)} = p_r(n) alpha^{n+2-r} + conj(p_r)(n) beta^{n+2-r}.
struct BinetPolynomial {
  int r = 0;
  exact::Polynomial p;  // degree 2r-2, coefficients pure sqrt5-multiples
};

/// Solves the difference equation chain up to p_r; r >= 1.
BinetPolynomial binet_polynomial(int r);

/// The coefficients of p_r in units of 1/sqrt5 (ascending powers of n).
std::vector<exact::Rational> binet_polynomial_scaled_coefficients(const BinetPolynomial& bp);

/// Evaluates p_r(n) alpha^{n+2-r} + conj(p_r)(n) beta^{n+2-r} in exact
/// arithmetic for n = r..n_max and checks it equals the integer d_n^{(r)}.
VerifyReport verify_binet_decomposition(int r, int n_max);

}  // namespace fibfub::tri
