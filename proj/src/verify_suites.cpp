#include "fibfub/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "fibfub/binet.hpp"
#include "fibfub/dobinski.hpp"
#include "fibfub/egf.hpp"
#include "fibfub/enumerate.hpp"
#include "fibfub/qsqrt5.hpp"
#include "fibfub/sequences.hpp"
#include "fibfub/triangle.hpp"

namespace fibfub::cli {

using comb::BigInt;
using exact::QSqrt5;
using exact::Rational;

namespace {

std::string idx(const std::string& name, long value) {
  return name + "=" + std::to_string(value);
}

}  // namespace

VerifyReport verify_sequences(int n_max) {
  VerifyReport report;
  report.suite = "sequences";
  for (int n = 0; n <= n_max; ++n) {
    const BigInt by_sum = comb::fib_fubini(n);
    const BigInt by_explicit = comb::fib_fubini_explicit(n);
    ++report.checks;
    if (by_sum != by_explicit) {
      report.add_failure("fib-fubini/route-agreement", idx("n", n), by_sum.str(),
                         by_explicit.str());
    }
    const BigInt l_sum = comb::lucas_fubini(n);
    const BigInt l_explicit = comb::lucas_fubini_explicit(n);
    ++report.checks;
    if (l_sum != l_explicit) {
      report.add_failure("lucas-fubini/route-agreement", idx("n", n), l_sum.str(),
                         l_explicit.str());
    }

    // Binet forms against the additive recurrences.
    ++report.checks;
    if (exact::binet_fibonacci(n).to_integer() != comb::fibonacci(n)) {
      report.add_failure("fibonacci/binet", idx("n", n), comb::fibonacci(n).str(),
                         exact::binet_fibonacci(n).to_integer().str());
    }
    ++report.checks;
    if (exact::binet_lucas(n).to_integer() != comb::lucas(n)) {
      report.add_failure("lucas/binet", idx("n", n), comb::lucas(n).str(),
                         exact::binet_lucas(n).to_integer().str());
    }

    // F_{k+1} + L_{k+1} = 2 F_{k+2} summed against the Stirling row.
    const auto row = comb::stirling2_row(n);
    BigInt combined = 0;
    for (int k = 0; k <= n; ++k) combined += 2 * comb::fibonacci(k + 2) * row[k];
    ++report.checks;
    if (by_sum + l_sum != combined) {
      report.add_failure("fib+lucas-fubini/combined-sum", idx("n", n),
                         BigInt(by_sum + l_sum).str(), combined.str());
    }

    // Fibonacci permutations are a subset of all permutations.
    const BigInt w = comb::fubini(n);
    ++report.checks;
    if (n <= 2 ? w != by_sum : w <= by_sum) {
      report.add_failure("fubini/dominates-fib-fubini", idx("n", n),
                         n <= 2 ? "equal" : "strictly greater", w.str() + " vs " + by_sum.str());
    }
  }
  // Explicit Stirling formula against the recurrence route.
  for (int n = 0; n <= std::min(n_max, 20); ++n) {
    for (int k = 0; k <= n; ++k) {
      ++report.checks;
      if (comb::stirling2_explicit(n, k) != comb::stirling2(n, k)) {
        report.add_failure("stirling2/explicit-vs-recurrence",
                           idx("n", n) + " " + idx("k", k), comb::stirling2(n, k).str(),
                           comb::stirling2_explicit(n, k).str());
      }
    }
  }
  return report;
}

VerifyReport verify_egf(int order) {
  VerifyReport report;
  report.suite = "egf";
  const auto f = comb::egf_fib_fubini(order);
  const auto l = comb::egf_lucas_fubini(order);
  for (int n = 0; n <= order; ++n) {
    ++report.checks;
    const QSqrt5 fc = f.egf_coefficient(n);
    if (!fc.is_integer() || fc.to_integer() != comb::fib_fubini(n)) {
      std::ostringstream got;
      got << fc;
      report.add_failure("fib-fubini/egf-coefficient", idx("n", n),
                         comb::fib_fubini(n).str(), got.str());
    }
    ++report.checks;
    const QSqrt5 lc = l.egf_coefficient(n);
    if (!lc.is_integer() || lc.to_integer() != comb::lucas_fubini(n)) {
      std::ostringstream got;
      got << lc;
      report.add_failure("lucas-fubini/egf-coefficient", idx("n", n),
                         comb::lucas_fubini(n).str(), got.str());
    }
  }
  return report;
}

VerifyReport verify_derivative(int r_max, int order) {
  VerifyReport report;
  report.suite = "derivative";
  for (int r = 1; r <= r_max; ++r) {
    const auto fib = comb::egf_derivative_identity_fib(r, order);
    ++report.checks;
    if (!fib.match) {
      report.add_failure("fib-fubini/egf-derivative", idx("r", r), "match",
                         "mismatch at coefficient " + std::to_string(fib.first_mismatch));
    }
    const auto luc = comb::egf_derivative_identity_lucas(r, order);
    ++report.checks;
    if (!luc.match) {
      report.add_failure("lucas-fubini/egf-derivative", idx("r", r), "match",
                         "mismatch at coefficient " + std::to_string(luc.first_mismatch));
    }
  }
  return report;
}

namespace {

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void check_dobinski(VerifyReport& report, const std::string& identity,
                    const comb::DobinskiResult& result, const BigInt& exact_value, long n) {
  const double exact_d = exact_value.convert_to<double>();
  const double rel = std::abs(result.approximation - exact_d) / exact_d;
  ++report.checks;
  if (!(rel <= result.tail_bound)) {
    report.add_failure(identity, idx("n", n),
                       "relative error <= " + format_double(result.tail_bound),
                       format_double(rel));
  }
}

}  // namespace

VerifyReport verify_dobinski(int n_max, double rel_tol) {
  VerifyReport report;
  report.suite = "dobinski";
  for (int n = 0; n <= n_max; ++n) {
    check_dobinski(report, "fib-fubini/dobinski", comb::fib_fubini_dobinski(n, rel_tol),
                   comb::fib_fubini(n), n);
    check_dobinski(report, "lucas-fubini/dobinski", comb::lucas_fubini_dobinski(n, rel_tol),
                   comb::lucas_fubini(n), n);
  }
  return report;
}

VerifyReport verify_triangle_suite(int max_row) {
  VerifyReport report;
  report.suite = "triangle";
  report.merge(tri::verify_triangle_recurrence(max_row));
  report.suite = "triangle";
  const tri::Triangle tr(max_row);
  for (int n = 0; n <= max_row; ++n) {
    ++report.checks;
    if (tr.row_sum(n) != comb::fib_fubini(n)) {
      report.add_failure("triangle/row-sum", idx("n", n), comb::fib_fubini(n).str(),
                         tr.row_sum(n).str());
    }
    if (n >= 1) {
      ++report.checks;
      if (tr.at(n, 1) != 1) {
        report.add_failure("triangle/left-edge", idx("n", n), "1", tr.at(n, 1).str());
      }
      ++report.checks;
      if (tr.at(n, n) != comb::fibonacci(n + 1)) {
        report.add_failure("triangle/right-edge", idx("n", n),
                           comb::fibonacci(n + 1).str(), tr.at(n, n).str());
      }
    }
  }
  return report;
}

namespace {

// First index where the recurrence with the given coefficients fails on the
// stored sequence values, or -1 if none fails. Starts at the first index
// whose full lag window is stored.
long first_recurrence_failure(const std::vector<BigInt>& coefficients,
                              const comb::SequenceTable& seq) {
  const int order = static_cast<int>(coefficients.size());
  for (long n = seq.offset + order; n < seq.offset + static_cast<long>(seq.values.size());
       ++n) {
    BigInt rhs = 0;
    for (int j = 1; j <= order; ++j) rhs += coefficients[j - 1] * seq.values[n - j - seq.offset];
    if (rhs != seq.values[n - seq.offset]) return n;
  }
  return -1;
}

std::string join_coefficients(const std::vector<BigInt>& cs) {
  std::string out;
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ", ";
    out += cs[i].str();
  }
  return out;
}

}  // namespace

VerifyReport verify_diagonals(int k_max, int r_max, int n_max) {
  VerifyReport report;
  report.suite = "diagonals";
  for (int k = 1; k <= k_max; ++k) {
    const auto from_stirling = tri::left_recurrence_from_stirling(k);
    const auto from_charpoly = tri::left_recurrence_from_charpoly(k);
    ++report.checks;
    if (from_stirling != from_charpoly) {
      report.add_failure("left-diagonal/coefficient-derivations", idx("k", k),
                         join_coefficients(from_charpoly.coefficients),
                         join_coefficients(from_stirling.coefficients));
    }
    report.merge(tri::verify_left_recurrence(k, n_max));
    report.suite = "diagonals";
  }
  if (k_max >= 5) {
    // The k=5 vector is (15, -85, 225, -274, 120). A quoted variant has -27
    // in place of -274; show where that variant breaks on the diagonal.
    auto variant = tri::left_diag_recurrence(5).coefficients;
    variant[3] = -27;
    const long bad_at = first_recurrence_failure(variant, tri::left_diagonal(5, n_max));
    report.notes.push_back(
        "left-diagonal k=5 coefficients are (15, -85, 225, -274, 120); the variant with -27 "
        "in place of -274 fails at n=" + std::to_string(bad_at));
  }
  for (int r = 1; r <= r_max; ++r) {
    report.merge(tri::verify_right_recurrence(r, n_max));
    report.suite = "diagonals";
  }
  if (r_max >= 3) {
    // r=3 lag-2/lag-3 coefficients are (-5, -10); a variant that collapses
    // both onto lag 2 does not hold.
    auto variant = tri::right_diag_recurrence(3).coefficients;
    variant[1] = -15;
    variant[2] = 0;
    const long bad_at = first_recurrence_failure(variant, tri::right_diagonal(3, n_max));
    report.notes.push_back(
        "right-diagonal r=3 coefficients at lags 2 and 3 are -5 and -10; collapsing them "
        "onto lag 2 as -15 fails at n=" + std::to_string(bad_at));
  }
  for (int r = 2; r <= r_max; ++r) {
    report.merge(tri::verify_mixed_recurrence(r, n_max));
    report.suite = "diagonals";
  }
  return report;
}

VerifyReport verify_binet(int r_max, int n_max) {
  VerifyReport report;
  report.suite = "binet";
  const QSqrt5 inv_sqrt5 = QSqrt5::inv_sqrt5();
  exact::Polynomial previous;
  for (int r = 1; r <= r_max; ++r) {
    const auto bp = tri::binet_polynomial(r);
    ++report.checks;
    if (bp.p.degree() != 2 * r - 2) {
      report.add_failure("binet/degree", idx("r", r), std::to_string(2 * r - 2),
                         std::to_string(bp.p.degree()));
    }
    bool pure = true;
    for (int i = 0; i <= bp.p.degree(); ++i) {
      if (bp.p.coeff(i).a != 0) pure = false;
    }
    ++report.checks;
    if (!pure) {
      report.add_failure("binet/sqrt5-multiples", idx("r", r), "all coefficients b*sqrt5",
                         "rational part present");
    }
    ++report.checks;
    if (bp.p.eval(exact::BigInt(r)) != inv_sqrt5) {
      report.add_failure("binet/final-condition", idx("r", r), "p_r(r) = 1/sqrt5",
                         "differs");
    }
    if (r >= 2) {
      // p_r(x+1) - p_r(x) = (x + 2 - r) p_{r-1}(x) as polynomials.
      const exact::Polynomial lhs = bp.p.shifted_by_one() - bp.p;
      const exact::Polynomial rhs =
          exact::Polynomial({QSqrt5(Rational(2 - r)), QSqrt5(1L)}) * previous;
      ++report.checks;
      if (lhs != rhs) {
        report.add_failure("binet/difference-equation", idx("r", r), "polynomial identity",
                           "differs");
      }
    }
    previous = bp.p;
    report.merge(tri::verify_binet_decomposition(r, n_max));
    report.suite = "binet";
  }
  return report;
}

VerifyReport verify_oracle(int n_max, int k_max) {
  VerifyReport report;
  report.suite = "oracle";
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      ++report.checks;
      const BigInt counted = enumeration::count_partitions(n, k);
      if (counted != comb::stirling2(n, k)) {
        report.add_failure("oracle/partition-count", idx("n", n) + " " + idx("k", k),
                           comb::stirling2(n, k).str(), counted.str());
      }
    }
    ++report.checks;
    const BigInt ordered = enumeration::count_fib_ordered_partitions(n);
    if (ordered != comb::fib_fubini(n)) {
      report.add_failure("oracle/ordered-partition-count", idx("n", n),
                         comb::fib_fubini(n).str(), ordered.str());
    }
  }
  for (int k = 0; k <= k_max; ++k) {
    const auto perms = enumeration::enumerate_fib_permutations(k);
    ++report.checks;
    if (BigInt(static_cast<long>(perms.size())) != comb::fibonacci(k + 1)) {
      report.add_failure("oracle/fib-permutation-count", idx("k", k),
                         comb::fibonacci(k + 1).str(), std::to_string(perms.size()));
    }
    const auto tilings = enumeration::enumerate_tilings(k);
    ++report.checks;
    if (BigInt(static_cast<long>(tilings.size())) != comb::fibonacci(k + 1)) {
      report.add_failure("oracle/tiling-count", idx("k", k), comb::fibonacci(k + 1).str(),
                         std::to_string(tilings.size()));
    }
    // The box-sliding map is a bijection onto the Fibonacci permutations.
    std::set<std::vector<int>> image;
    for (const auto& t : tilings) image.insert(enumeration::tiling_to_permutation(t).sigma);
    std::set<std::vector<int>> target;
    for (const auto& p : perms) target.insert(p.sigma);
    ++report.checks;
    if (image.size() != tilings.size() || image != target) {
      report.add_failure("oracle/tiling-bijection", idx("k", k),
                         "bijective onto Fibonacci permutations", "not a bijection");
    }
  }
  // Shape table: each shape of length k carries S(n,k) arrangements and the
  // grand total is the Fibonacci-Fubini number.
  for (int n = 1; n <= std::min(n_max, 8); ++n) {
    BigInt total = 0;
    for (const auto& entry : enumeration::count_by_shape(n)) {
      ++report.checks;
      if (entry.count != comb::stirling2(n, entry.k)) {
        report.add_failure("oracle/shape-count",
                           idx("n", n) + " " + idx("k", entry.k) + " shape=" +
                               enumeration::render_tiling(entry.shape),
                           comb::stirling2(n, entry.k).str(), entry.count.str());
      }
      total += entry.count;
    }
    ++report.checks;
    if (total != comb::fib_fubini(n)) {
      report.add_failure("oracle/shape-total", idx("n", n), comb::fib_fubini(n).str(),
                         total.str());
    }
  }
  return report;
}

}  // namespace fibfub::cli
