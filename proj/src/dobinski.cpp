#include "fibfub/dobinski.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace fibfub::comb {

namespace {

// Sums prefix_a * sum_k alpha^k k^n/k! + prefix_b * sum_k beta^k k^n/k!.
// The alpha series dominates; once k >= max(n, 9) the term ratio
// alpha (1+1/k)^n / (k+1) is below 1/2, so the tail is under twice the
// next term of each series.
DobinskiResult dobinski_sum(int n, double rel_tol, double prefix_a, double prefix_b) {
  if (n < 0) throw std::domain_error("dobinski: negative index");
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw std::domain_error("dobinski: rel_tol must be in (0,1)");
  }
  const double alpha = (1.0 + std::sqrt(5.0)) / 2.0;
  const double beta = (1.0 - std::sqrt(5.0)) / 2.0;
  const int decay_from = std::max(n, 9);

  double sum_a = 0.0, sum_b = 0.0;
  double apow = 1.0, bpow = 1.0, kfact = 1.0;
  int k = 0;
  for (;;) {
    const double kn = std::pow(static_cast<double>(k), n);  // 0^0 = 1
    sum_a += apow * kn / kfact;
    sum_b += bpow * kn / kfact;
    const double next_a =
        apow * alpha * std::pow(static_cast<double>(k + 1), n) / (kfact * (k + 1));
    const double approx = prefix_a * sum_a + prefix_b * sum_b;
    if (k + 1 >= decay_from && std::abs(prefix_a * next_a) < rel_tol * std::abs(approx)) {
      const double next_b =
          std::abs(bpow * beta) * std::pow(static_cast<double>(k + 1), n) / (kfact * (k + 1));
      const double tail_abs =
          2.0 * (std::abs(prefix_a) * next_a + std::abs(prefix_b) * next_b);
      return {approx, k + 1, tail_abs / std::abs(approx)};
    }
    apow *= alpha;
    bpow *= beta;
    kfact *= k + 1;
    ++k;
  }
}

}  // namespace

DobinskiResult fib_fubini_dobinski(int n, double rel_tol) {
  const double alpha = (1.0 + std::sqrt(5.0)) / 2.0;
  const double beta = (1.0 - std::sqrt(5.0)) / 2.0;
  const double s5 = std::sqrt(5.0);
  return dobinski_sum(n, rel_tol, alpha * std::exp(-alpha) / s5,
                      -beta * std::exp(-beta) / s5);
}

DobinskiResult lucas_fubini_dobinski(int n, double rel_tol) {
  const double alpha = (1.0 + std::sqrt(5.0)) / 2.0;
  const double beta = (1.0 - std::sqrt(5.0)) / 2.0;
  return dobinski_sum(n, rel_tol, alpha * std::exp(-alpha), beta * std::exp(-beta));
}

}  // namespace fibfub::comb
