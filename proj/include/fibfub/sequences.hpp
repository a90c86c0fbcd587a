#pragma once

#include <string>
#include <vector>

#include "fibfub/bigint.hpp"

namespace fibfub::comb {

using exact::BigInt;

// A named integer sequence; values[i] is the term with index offset + i.
struct SequenceTable {
  std::string name;
  long offset = 0;
  std::vector<BigInt> values;
};

/// Stirling number of the second kind S(n,k); 0 outside 0 <= k <= n.
BigInt stirling2(int n, int k);

/// Row n of the Stirling-second-kind triangle, entries k = 0..n.
std::vector<BigInt> stirling2_row(int n);

// Caller-owned table of Stirling numbers of the second kind, filled row by
// row up to max_n at construction.
class Stirling2Table {
 public:
  explicit Stirling2Table(int max_n);
  int max_n() const { return static_cast<int>(rows_.size()) - 1; }
  /// S(n,k) for n <= max_n; 0 outside 0 <= k <= n.
  const BigInt& value(int n, int k) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

/// S(n,k) via the alternating binomial sum divided by k!; requires
/// 0 <= k <= n. The division must be exact (internal-consistency check).
BigInt stirling2_explicit(int n, int k);

/// Signed Stirling number of the first kind s(n,k); 0 outside 0 <= k <= n.
BigInt stirling1_signed(int n, int k);

BigInt fibonacci(int n);
BigInt lucas(int n);

/// Ordered Bell number w_n = sum_k k! S(n,k).
BigInt fubini(int n);

/// Fibonacci-Fubini number: sum_k F_{k+1} S(n,k).
BigInt fib_fubini(int n);

/// Lucas-Fubini number: sum_k L_{k+1} S(n,k).
BigInt lucas_fubini(int n);

/// Fibonacci-Fubini number by the explicit double sum over Q(sqrt5).
/// The exact result must come out a plain integer.
BigInt fib_fubini_explicit(int n);

/// Lucas-Fubini number by the explicit double sum over Q(sqrt5).
BigInt lucas_fubini_explicit(int n);

}  // namespace fibfub::comb
