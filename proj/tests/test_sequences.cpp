#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "fibfub/sequences.hpp"

using namespace fibfub::comb;
using fibfub::exact::BigInt;
using fibfub::exact::Rational;

TEST_CASE("stirling2 table values") {
  CHECK(stirling2(7, 3) == 301);
  CHECK(stirling2(6, 4) == 65);
  CHECK(stirling2(5, 3) == 25);
  for (int n = 0; n <= 12; ++n) {
    CHECK(stirling2(n, n) == 1);
    if (n > 0) {
      CHECK(stirling2(n, 0) == 0);
      CHECK(stirling2(0, n) == 0);
      CHECK(stirling2(n, 1) == 1);
    }
  }
  CHECK(stirling2(4, 7) == 0);
  CHECK(stirling2(-1, 0) == 0);
}

TEST_CASE("stirling2 recurrence holds across the table") {
  const Stirling2Table table(25);
  for (int n = 1; n <= 25; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(table.value(n, k) == table.value(n - 1, k - 1) + k * table.value(n - 1, k));
    }
  }
}

TEST_CASE("stirling2 explicit formula agrees with the recurrence") {
  CHECK(stirling2_explicit(5, 3) == 25);
  CHECK(stirling2_explicit(9, 4) == stirling2(9, 4));
  for (int n = 0; n <= 14; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(stirling2_explicit(n, k) == stirling2(n, k));
    }
    if (n >= 1) CHECK(stirling2_explicit(n, 1) == 1);
  }
  CHECK_THROWS_AS(stirling2_explicit(3, 5), std::domain_error);
}

TEST_CASE("signed stirling1 values and falling factorial") {
  CHECK(stirling1_signed(5, 1) == 24);
  CHECK(stirling1_signed(5, 2) == -50);
  for (int k = 0; k <= 8; ++k) CHECK(stirling1_signed(k + 1, k + 1) == 1);
  // Coefficients of x(x-1)...(x-n+1) are s(n,k).
  for (int n = 0; n <= 10; ++n) {
    const auto coeffs = oracles::falling_factorial_coefficients(n);
    for (int k = 0; k <= n; ++k) {
      CHECK(Rational(stirling1_signed(n, k)) == coeffs[k]);
    }
  }
}

TEST_CASE("fibonacci and lucas") {
  CHECK(fibonacci(5) == 5);
  CHECK(fibonacci(10) == 55);
  CHECK(lucas(4) == 7);
  CHECK(fibonacci(0) == 0);
  CHECK(lucas(0) == 2);
  for (int n = 0; n <= 50; ++n) {
    CHECK(fibonacci(n) == oracles::fibonacci_iterative(n));
    CHECK(lucas(n) == oracles::lucas_iterative(n));
  }
}

TEST_CASE("fubini prefix") {
  const std::vector<long> expected{1, 1, 3, 13, 75, 541, 4683, 47293, 545835};
  for (size_t n = 0; n < expected.size(); ++n) {
    CHECK(fubini(static_cast<int>(n)) == expected[n]);
  }
  CHECK(fubini(9) == 7087261);
  CHECK(fubini(10) == 102247563);
}

TEST_CASE("fibonacci-fubini prefix") {
  const std::vector<long> expected{1, 1, 3, 10, 38, 164, 791, 4194, 24138, 149423, 988033,
                                   6939682};
  for (size_t n = 0; n < expected.size(); ++n) {
    CHECK(fib_fubini(static_cast<int>(n)) == expected[n]);
  }
  // Next term past the printed prefix, frozen from the Stirling sum and
  // cross-checked by the explicit route below.
  CHECK(fib_fubini(12) == 51532695);
}

TEST_CASE("lucas-fubini prefix") {
  const std::vector<long> expected{1, 3, 7, 22, 84, 366, 1771, 9388, 53990, 334093, 2209039,
                                   15516716};
  for (size_t n = 0; n < expected.size(); ++n) {
    CHECK(lucas_fubini(static_cast<int>(n)) == expected[n]);
  }
  CHECK(lucas_fubini(0) == 1);
  CHECK(lucas_fubini(10) == 2209039);
}

TEST_CASE("explicit routes agree with the stirling sums") {
  CHECK(fib_fubini_explicit(0) == 1);
  CHECK(fib_fubini_explicit(5) == 164);
  CHECK(lucas_fubini_explicit(0) == 1);
  CHECK(lucas_fubini_explicit(4) == 84);
  for (int n = 0; n <= 20; ++n) {
    CHECK(fib_fubini_explicit(n) == fib_fubini(n));
  }
  for (int n = 0; n <= 15; ++n) {
    CHECK(lucas_fubini_explicit(n) == lucas_fubini(n));
  }
}

TEST_CASE("combined weight identity") {
  // F_{k+1} + L_{k+1} = 2 F_{k+2}, so the two Fubini variants sum to
  // 2 sum_k F_{k+2} S(n,k); both sides from scratch.
  for (int n = 0; n <= 20; ++n) {
    const auto row = stirling2_row(n);
    BigInt rhs = 0;
    for (int k = 0; k <= n; ++k) rhs += 2 * fibonacci(k + 2) * row[k];
    CHECK(fib_fubini(n) + lucas_fubini(n) == rhs);
  }
}

TEST_CASE("fubini dominates fib-fubini") {
  for (int n = 0; n <= 2; ++n) CHECK(fubini(n) == fib_fubini(n));
  for (int n = 3; n <= 20; ++n) CHECK(fubini(n) > fib_fubini(n));
}
