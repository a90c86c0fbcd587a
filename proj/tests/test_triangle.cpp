#include <vector>

#include "doctest.h"

#include "fibfub/sequences.hpp"
#include "fibfub/triangle.hpp"

using namespace fibfub::tri;
using fibfub::comb::fib_fubini;
using fibfub::comb::fibonacci;
using fibfub::comb::stirling2;
using fibfub::exact::BigInt;

TEST_CASE("t_value basics") {
  CHECK(t_value(4, 2) == 14);
  CHECK(t_value(8, 4) == 8505);
  CHECK(t_value(9, 4) == 38850);
  CHECK(t_value(0, 0) == 1);
  for (int n = 1; n <= 10; ++n) CHECK(t_value(n, 0) == 0);
  CHECK_THROWS_AS(t_value(3, 4), std::domain_error);
  CHECK(t_value_or_zero(3, 4) == 0);
}

TEST_CASE("triangle rows 1..8") {
  const std::vector<std::vector<long>> rows{
      {1},
      {1, 2},
      {1, 6, 3},
      {1, 14, 18, 5},
      {1, 30, 75, 50, 8},
      {1, 62, 270, 325, 120, 13},
      {1, 126, 903, 1750, 1120, 273, 21},
      {1, 254, 2898, 8505, 8400, 3458, 588, 34},
  };
  const Triangle t(8);
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(t.at(n, k) == rows[n - 1][k - 1]);
    }
  }
  CHECK(t.at(0, 0) == 1);
  CHECK_THROWS_AS(t.at(9, 1), std::domain_error);
}

TEST_CASE("row sums and edges up to 40") {
  const Triangle t(40);
  for (int n = 0; n <= 40; ++n) {
    CHECK(t.row_sum(n) == fib_fubini(n));
    if (n >= 1) {
      CHECK(t.at(n, 1) == 1);
      CHECK(t.at(n, n) == fibonacci(n + 1));
    }
  }
}

TEST_CASE("row recurrence in cleared form") {
  // n=2, k=1: F_1 T(2,1) = F_2 T(1,0) + 1*F_1 T(1,1).
  CHECK(fibonacci(1) * t_value(2, 1) ==
        fibonacci(2) * t_value(1, 0) + 1 * fibonacci(1) * t_value(1, 1));
  CHECK(verify_triangle_recurrence(8).ok());
  const auto report = verify_triangle_recurrence(40);
  CHECK(report.ok());
  CHECK(report.checks > 0);
  CHECK_THROWS_AS(verify_triangle_recurrence(1), std::domain_error);
}

TEST_CASE("left diagonals") {
  const auto k2 = left_diagonal(2, 11);
  CHECK(k2.offset == 2);
  const std::vector<long> k2_expected{2, 6, 14, 30, 62, 126, 254, 510, 1022, 2046};
  REQUIRE(k2.values.size() == k2_expected.size());
  for (size_t i = 0; i < k2_expected.size(); ++i) CHECK(k2.values[i] == k2_expected[i]);

  const auto k1 = left_diagonal(1, 10);
  for (const auto& v : k1.values) CHECK(v == 1);

  const auto k5 = left_diagonal(5, 9);
  const std::vector<long> k5_expected{8, 120, 1120, 8400, 55608};
  REQUIRE(k5.values.size() == k5_expected.size());
  for (size_t i = 0; i < k5_expected.size(); ++i) CHECK(k5.values[i] == k5_expected[i]);
}

TEST_CASE("left diagonal recurrences") {
  const auto k2 = left_diag_recurrence(2);
  CHECK(k2.order == 2);
  CHECK(k2.valid_from == 3);
  CHECK(k2.coefficients == std::vector<BigInt>{3, -2});

  const auto k3 = left_diag_recurrence(3);
  CHECK(k3.coefficients == std::vector<BigInt>{6, -11, 6});

  const auto k4 = left_diag_recurrence(4);
  CHECK(k4.coefficients == std::vector<BigInt>{10, -35, 50, -24});

  // Lag-4 coefficient is -274, not -27; the substitution test below shows
  // the -27 variant breaks on the diagonal values.
  const auto k5 = left_diag_recurrence(5);
  CHECK(k5.coefficients == std::vector<BigInt>{15, -85, 225, -274, 120});

  for (int k = 1; k <= 8; ++k) {
    CHECK(left_recurrence_from_stirling(k) == left_recurrence_from_charpoly(k));
  }
}

TEST_CASE("left recurrence annihilates the diagonals") {
  CHECK(verify_left_recurrence(3, 20).ok());
  CHECK(verify_left_recurrence(8, 40).ok());
  // k=1, n=2: T(2,1) - T(1,1) = 0.
  CHECK(t_value(2, 1) - t_value(1, 1) == 0);
  // The k=5 variant with -27 in place of -274 must fail.
  const auto d5 = left_diagonal(5, 20);
  const auto good = left_diag_recurrence(5).coefficients;
  auto bad = good;
  bad[3] = -27;
  bool bad_fails = false;
  for (int n = 10; n <= 20; ++n) {
    BigInt acc_good = 0, acc_bad = 0;
    for (int j = 1; j <= 5; ++j) {
      acc_good += good[j - 1] * d5.values[n - j - 5];
      acc_bad += bad[j - 1] * d5.values[n - j - 5];
    }
    CHECK(acc_good == d5.values[n - 5]);
    if (acc_bad != d5.values[n - 5]) bad_fails = true;
  }
  CHECK(bad_fails);
  CHECK_THROWS_AS(verify_left_recurrence(5, 10), std::domain_error);
}

TEST_CASE("right diagonals") {
  const auto r1 = right_diagonal(1, 13);
  const std::vector<long> r1_expected{1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377};
  REQUIRE(r1.values.size() == r1_expected.size());
  for (size_t i = 0; i < r1_expected.size(); ++i) CHECK(r1.values[i] == r1_expected[i]);

  const auto r3 = right_diagonal(3, 7);
  const std::vector<long> r3_expected{1, 14, 75, 325, 1120};
  REQUIRE(r3.values.size() == r3_expected.size());
  for (size_t i = 0; i < r3_expected.size(); ++i) CHECK(r3.values[i] == r3_expected[i]);

  const auto r6 = right_diagonal(6, 9);
  const std::vector<long> r6_expected{1, 126, 2898, 38850};
  REQUIRE(r6.values.size() == r6_expected.size());
  for (size_t i = 0; i < r6_expected.size(); ++i) CHECK(r6.values[i] == r6_expected[i]);
}

TEST_CASE("right diagonal recurrences from the characteristic polynomial") {
  const auto r1 = right_diag_recurrence(1);
  CHECK(r1.order == 2);
  CHECK(r1.coefficients == std::vector<BigInt>{1, 1});
  CHECK(r1.valid_from == 3);

  const auto r2 = right_diag_recurrence(2);
  CHECK(r2.order == 6);
  CHECK(r2.coefficients == std::vector<BigInt>{3, 0, -5, 0, 3, 1});

  const auto r3 = right_diag_recurrence(3);
  CHECK(r3.order == 10);
  CHECK(r3.coefficients == std::vector<BigInt>{5, -5, -10, 15, 11, -15, -10, 5, 5, 1});

  const auto r4 = right_diag_recurrence(4);
  CHECK(r4.order == 14);
  CHECK(r4.coefficients ==
        std::vector<BigInt>{7, -14, -7, 49, -14, -77, 29, 77, -14, -49, -7, 14, 7, 1});
}

TEST_CASE("right recurrence holds on the diagonals") {
  // r=1, n=3: d_3 = d_2 + d_1, i.e. 3 = 2 + 1.
  CHECK(t_value(3, 3) == t_value(2, 2) + t_value(1, 1));
  for (int r = 1; r <= 4; ++r) {
    const auto report = verify_right_recurrence(r, 40);
    CHECK(report.ok());
    CHECK(report.checks > 0);
  }
  CHECK(verify_right_recurrence(2, 30).ok());
  CHECK_THROWS_AS(verify_right_recurrence(4, 16), std::domain_error);
}

TEST_CASE("mixed recurrence in cleared form") {
  // r=2, n=4: F_3 d_4 = F_4 d_3 + 3 F_3 d_3^{(1)} -> 2*18 = 3*6 + 18.
  CHECK(fibonacci(3) * t_value(4, 3) ==
        fibonacci(4) * t_value(3, 2) + 3 * fibonacci(3) * t_value(3, 3));
  CHECK(verify_mixed_recurrence(2, 25).ok());
  CHECK(verify_mixed_recurrence(5, 25).ok());
  for (int r = 2; r <= 6; ++r) CHECK(verify_mixed_recurrence(r, 40).ok());
  CHECK_THROWS_AS(verify_mixed_recurrence(1, 25), std::domain_error);
}
