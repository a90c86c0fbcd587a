#include "fibfub/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibfub/binet.hpp"
#include "fibfub/dobinski.hpp"
#include "fibfub/egf.hpp"
#include "fibfub/enumerate.hpp"
#include "fibfub/io.hpp"
#include "fibfub/qsqrt5.hpp"
#include "fibfub/sequences.hpp"
#include "fibfub/triangle.hpp"
#include "fibfub/verify.hpp"

namespace fibfub::cli {

namespace {

using comb::BigInt;
using comb::SequenceTable;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_series_order() {
  if (const char* env = std::getenv("FIBFUB_SERIES_ORDER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0 || v > 256) {
      throw UsageError("FIBFUB_SERIES_ORDER must be an integer in [0,256]");
    }
    return static_cast<int>(v);
  }
  return 20;
}

SequenceTable sequence_by_sum(const std::string& name, int n_max) {
  SequenceTable t;
  t.name = name;
  t.offset = 0;
  t.values.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (name == "fubini") {
      t.values.push_back(comb::fubini(n));
    } else if (name == "fib-fubini") {
      t.values.push_back(comb::fib_fubini(n));
    } else if (name == "lucas-fubini") {
      t.values.push_back(comb::lucas_fubini(n));
    } else if (name == "fibonacci") {
      t.values.push_back(comb::fibonacci(n));
    } else if (name == "lucas") {
      t.values.push_back(comb::lucas(n));
    } else {
      throw UsageError("unknown sequence name: " + name);
    }
  }
  return t;
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

void print_table(std::ostream& out, const SequenceTable& t, const std::string& format,
                 const std::string& header_note) {
  if (format == "plain") {
    out << "# " << t.name << ", n = " << t.offset << ".."
        << t.offset + static_cast<long>(t.values.size()) - 1 << '\n';
    for (size_t i = 0; i < t.values.size(); ++i) {
      out << t.offset + static_cast<long>(i) << ' ' << t.values[i] << '\n';
    }
    if (!header_note.empty()) out << "# " << header_note << '\n';
  } else if (format == "bfile") {
    write_bfile(out, t);
  } else if (format == "csv") {
    write_csv(out, t);
  } else if (format == "json") {
    write_json(out, t);
  } else {
    throw UsageError("unknown format: " + format);
  }
}

int cmd_seq(std::ostream& out, const std::string& name, int n_max, const std::string& route,
            std::optional<double> tol, const std::string& format) {
  const SequenceTable by_sum = sequence_by_sum(name, n_max);
  if (route == "sum") {
    print_table(out, by_sum, format, "");
    return kExitOk;
  }

  if (route == "explicit") {
    SequenceTable t;
    t.name = name;
    for (int n = 0; n <= n_max; ++n) {
      if (name == "fib-fubini") {
        t.values.push_back(comb::fib_fubini_explicit(n));
      } else if (name == "lucas-fubini") {
        t.values.push_back(comb::lucas_fubini_explicit(n));
      } else if (name == "fibonacci") {
        t.values.push_back(exact::binet_fibonacci(n).to_integer());
      } else if (name == "lucas") {
        t.values.push_back(exact::binet_lucas(n).to_integer());
      } else {
        throw UsageError("route explicit is not available for " + name);
      }
    }
    const bool agree = t.values == by_sum.values;
    print_table(out, t, format,
                std::string("explicit route: ") + (agree ? "agree" : "DISAGREE") +
                    " with sum route");
    return agree ? kExitOk : kExitVerifyFailure;
  }

  if (route == "egf") {
    if (name != "fib-fubini" && name != "lucas-fubini") {
      throw UsageError("route egf is not available for " + name);
    }
    const auto series =
        name == "fib-fubini" ? comb::egf_fib_fubini(n_max) : comb::egf_lucas_fubini(n_max);
    SequenceTable t;
    t.name = name;
    for (int n = 0; n <= n_max; ++n) t.values.push_back(series.egf_coefficient(n).to_integer());
    const bool agree = t.values == by_sum.values;
    print_table(out, t, format,
                std::string("egf route: ") + (agree ? "agree" : "DISAGREE") +
                    " with sum route");
    return agree ? kExitOk : kExitVerifyFailure;
  }

  if (route == "dobinski") {
    if (name != "fib-fubini" && name != "lucas-fubini") {
      throw UsageError("route dobinski is not available for " + name);
    }
    if (!tol) throw UsageError("route dobinski requires --tol");
    if (format != "plain") throw UsageError("route dobinski only supports plain output");
    out << "# " << name << " (dobinski), n = 0.." << n_max << ", rel_tol = "
        << format_double(*tol) << '\n';
    bool all_within_bound = true;
    double max_rel = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      const auto result = name == "fib-fubini" ? comb::fib_fubini_dobinski(n, *tol)
                                               : comb::lucas_fubini_dobinski(n, *tol);
      const double exact_d = by_sum.values[n].convert_to<double>();
      const double rel = std::abs(result.approximation - exact_d) / exact_d;
      max_rel = std::max(max_rel, rel);
      if (!(rel <= result.tail_bound)) all_within_bound = false;
      out << n << ' ' << format_double(result.approximation) << " terms="
          << result.terms_used << " tail_bound=" << format_double(result.tail_bound) << '\n';
    }
    out << "# dobinski route: " << (all_within_bound ? "agree" : "DISAGREE")
        << " with sum route, max relative error = " << format_double(max_rel) << '\n';
    return all_within_bound ? kExitOk : kExitVerifyFailure;
  }

  throw UsageError("unknown route: " + route);
}

int cmd_triangle(std::ostream& out, int max_row, const std::string& format) {
  const tri::Triangle t(max_row);
  if (format == "plain") {
    for (int n = 1; n <= max_row; ++n) {
      out << n << ':';
      for (int k = 1; k <= n; ++k) out << ' ' << t.at(n, k);
      out << '\n';
    }
  } else if (format == "csv") {
    out << "n,k,value\n";
    for (int n = 1; n <= max_row; ++n) {
      for (int k = 1; k <= n; ++k) out << n << ',' << k << ',' << t.at(n, k) << '\n';
    }
  } else if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 1; n <= max_row; ++n) {
      nlohmann::json row = nlohmann::json::array();
      for (int k = 1; k <= n; ++k) row.push_back(t.at(n, k).str());
      rows.push_back(row);
    }
    out << rows.dump() << '\n';
  } else {
    throw UsageError("triangle supports formats plain, csv, json");
  }
  return kExitOk;
}

int cmd_diag(std::ostream& out, const std::string& direction, int index, int n_max,
             const std::string& format) {
  const SequenceTable t = direction == "left" ? tri::left_diagonal(index, n_max)
                                              : tri::right_diagonal(index, n_max);
  print_table(out, t, format, "");
  return kExitOk;
}

int cmd_recurrence(std::ostream& out, const std::string& direction, int index) {
  const tri::RecurrenceSpec spec = direction == "left" ? tri::left_diag_recurrence(index)
                                                       : tri::right_diag_recurrence(index);
  out << "direction: " << direction << '\n';
  out << "index: " << index << '\n';
  out << "order: " << spec.order << '\n';
  out << "valid_from: " << spec.valid_from << '\n';
  out << "coefficients:";
  for (const auto& c : spec.coefficients) out << ' ' << c;
  out << '\n';
  return kExitOk;
}

int cmd_poly(std::ostream& out, int r) {
  const auto bp = tri::binet_polynomial(r);
  const auto scaled = tri::binet_polynomial_scaled_coefficients(bp);
  out << "r: " << r << '\n';
  out << "degree: " << bp.p.degree() << '\n';
  out << "scale: 1/sqrt5\n";
  out << "coefficients:";
  for (const auto& q : scaled) out << ' ' << q;
  out << '\n';
  return kExitOk;
}

struct VerifyBounds {
  int n_max = -1;
  int k_max = -1;
  int r_max = -1;
  double tol = 1e-12;
};

void require_ceiling(const std::string& what, int value, int ceiling) {
  if (value > ceiling) {
    throw UsageError(what + " is limited to " + std::to_string(ceiling) + ", got " +
                     std::to_string(value));
  }
}

std::vector<VerifyReport> run_suites(const std::string& suite, const VerifyBounds& bounds,
                                     int series_order) {
  std::vector<VerifyReport> reports;
  auto wants = [&](const std::string& s) { return suite == "all" || suite == s; };

  if (wants("sequences")) {
    const int n = bounds.n_max >= 0 ? bounds.n_max : 30;
    require_ceiling("sequences n", n, 200);
    reports.push_back(verify_sequences(n));
  }
  if (wants("egf")) {
    int order = bounds.n_max >= 0 ? std::min(bounds.n_max, series_order) : series_order;
    if (suite == "egf" && bounds.n_max >= 0) order = bounds.n_max;
    require_ceiling("egf order", order, 64);
    reports.push_back(verify_egf(order));
  }
  if (wants("derivative")) {
    const int order = bounds.n_max >= 0 && suite == "derivative" ? bounds.n_max : 15;
    const int r = bounds.r_max >= 0 ? bounds.r_max : std::min(5, order);
    require_ceiling("derivative order", order, 30);
    require_ceiling("derivative r", r, 8);
    if (r < 1 || r > order) throw UsageError("derivative requires 1 <= r <= order");
    reports.push_back(verify_derivative(r, order));
  }
  if (wants("dobinski")) {
    const int n = bounds.n_max >= 0 ? std::min(bounds.n_max, 15) : 15;
    if (suite == "dobinski" && bounds.n_max >= 0) require_ceiling("dobinski n", bounds.n_max, 15);
    reports.push_back(verify_dobinski(n, bounds.tol));
  }
  if (wants("triangle")) {
    const int n = bounds.n_max >= 0 ? bounds.n_max : 40;
    require_ceiling("triangle rows", n, 200);
    if (n < 2) throw UsageError("triangle suite requires n >= 2");
    reports.push_back(verify_triangle_suite(n));
  }
  if (wants("diagonals")) {
    const int n = bounds.n_max >= 0 ? bounds.n_max : 40;
    require_ceiling("diagonals n", n, 200);
    int k = bounds.k_max >= 0 ? bounds.k_max : 8;
    int r = bounds.r_max >= 0 ? bounds.r_max : 6;
    require_ceiling("diagonals k", k, 12);
    require_ceiling("diagonals r", r, 8);
    if (suite == "all") {
      // Cap so every verification window fits below n.
      k = std::min(k, (n - 1) / 2);
      while (r > 1 && r + 2 * (2 * r - 1) > n) --r;
    }
    if (k < 1 || n < 2 * k + 1) throw UsageError("diagonals requires n >= 2k+1");
    if (r < 1 || n < r + 2 * (2 * r - 1)) {
      throw UsageError("diagonals requires n >= r + 2(2r-1)");
    }
    reports.push_back(verify_diagonals(k, r, n));
  }
  if (wants("binet")) {
    const int n = bounds.n_max >= 0 ? std::min(bounds.n_max, 100) : 30;
    int r = bounds.r_max >= 0 ? bounds.r_max : 5;
    require_ceiling("binet r", r, 8);
    if (suite == "all") r = std::min(r, n);
    if (r < 1 || n < r) throw UsageError("binet requires 1 <= r <= n");
    reports.push_back(verify_binet(r, n));
  }
  if (wants("oracle")) {
    const int n = bounds.n_max >= 0 ? std::min(bounds.n_max, suite == "all" ? 8 : 12) : 8;
    const int k = bounds.k_max >= 0 ? bounds.k_max : 15;
    if (suite == "oracle" && bounds.n_max >= 0) require_ceiling("oracle n", bounds.n_max, 12);
    require_ceiling("oracle k", k, 20);
    reports.push_back(verify_oracle(n, k));
  }
  return reports;
}

int cmd_verify(std::ostream& out, const std::string& suite, const VerifyBounds& bounds,
               const std::string& format) {
  if (suite == "all" && bounds.n_max < 0) {
    throw UsageError("verify --suite all requires an explicit --n-max bound");
  }
  const auto reports = run_suites(suite, bounds, default_series_order());

  long failures = 0;
  if (format == "json") {
    nlohmann::json doc;
    doc["suites"] = nlohmann::json::array();
    for (const auto& report : reports) {
      nlohmann::json s;
      s["name"] = report.suite;
      s["checks"] = report.checks;
      s["notes"] = report.notes;
      s["failures"] = nlohmann::json::array();
      for (const auto& f : report.failures) {
        s["failures"].push_back({{"identity", f.identity},
                                 {"indices", f.indices},
                                 {"expected", f.expected},
                                 {"actual", f.actual}});
      }
      doc["suites"].push_back(s);
      failures += static_cast<long>(report.failures.size());
    }
    doc["ok"] = failures == 0;
    out << doc.dump(2) << '\n';
  } else if (format == "plain") {
    for (const auto& report : reports) {
      for (const auto& f : report.failures) {
        out << "[FAIL] " << f.identity << " (" << f.indices << "): expected " << f.expected
            << ", got " << f.actual << '\n';
      }
      for (const auto& note : report.notes) out << "[NOTE] " << note << '\n';
      out << (report.ok() ? "[PASS] " : "[FAIL] ") << report.suite << ": " << report.checks
          << " checks, " << report.failures.size() << " failures\n";
      failures += static_cast<long>(report.failures.size());
    }
  } else {
    throw UsageError("verify supports formats plain, json");
  }
  return failures == 0 ? kExitOk : kExitVerifyFailure;
}

int cmd_enumerate(std::ostream& out, int n, std::optional<int> k_filter, bool shapes) {
  if (n < 1) throw UsageError("enumerate requires n >= 1");
  if (n > 12) {
    throw UsageError("enumeration output is limited to n <= 12 (" + std::to_string(n) +
                     " requested); larger n would emit billions of lines");
  }
  if (k_filter && (*k_filter < 1 || *k_filter > n)) {
    throw UsageError("enumerate requires 1 <= k <= n");
  }
  for (int k = k_filter.value_or(1); k <= (k_filter ? *k_filter : n); ++k) {
    const auto perms = enumeration::enumerate_fib_permutations(k);
    if (shapes) {
      const auto tilings = enumeration::enumerate_tilings(k);
      // One permutation per shape: group the listing by the shape each
      // permutation slides back to.
      std::map<std::vector<int>, size_t> perm_of_shape;
      for (size_t i = 0; i < perms.size(); ++i) {
        perm_of_shape[enumeration::permutation_to_tiling(perms[i]).pieces] = i;
      }
      for (const auto& tiling : tilings) {
        out << "k=" << k << ' ' << enumeration::render_tiling(tiling) << ':';
        const auto& perm = perms[perm_of_shape.at(tiling.pieces)];
        bool first = true;
        enumeration::for_each_partition(n, k, [&](const enumeration::SetPartition& p) {
          out << (first ? " " : "; ")
              << enumeration::render_bar_notation({p, perm});
          first = false;
        });
        out << '\n';
      }
    } else {
      enumeration::for_each_partition(n, k, [&](const enumeration::SetPartition& p) {
        for (const auto& perm : perms) {
          out << enumeration::render_bar_notation({p, perm}) << '\n';
        }
      });
    }
  }
  return kExitOk;
}

int cmd_export(std::ostream& err, const std::string& name, int n_max,
               const std::string& format, const std::string& path) {
  const SequenceTable t = sequence_by_sum(name, n_max);
  std::ofstream file(path);
  if (!file) {
    err << "I/O error: cannot open " << path << " for writing\n";
    return kExitIo;
  }
  if (format == "bfile") {
    write_bfile(file, t);
  } else if (format == "csv") {
    write_csv(file, t);
  } else if (format == "json") {
    write_json(file, t);
  } else {
    throw UsageError("export supports formats bfile, csv, json");
  }
  file.flush();
  if (!file.good()) {
    err << "I/O error: failed writing " << path << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fibonacci-Fubini and Lucas-Fubini numbers: sequences, triangle, "
               "recurrences, verification and enumeration"};
  app.require_subcommand(1);

  const std::vector<std::string> seq_names{"fubini", "fib-fubini", "lucas-fubini",
                                           "fibonacci", "lucas"};
  const std::vector<std::string> formats{"plain", "csv", "json", "bfile"};

  std::string name, route = "sum", format = "plain", direction, suite, out_path;
  std::string export_format = "bfile";
  int n_max = -1, k = -1, r = -1;
  double tol = 0.0;
  bool tol_given = false, shapes = false;

  auto* seq = app.add_subcommand("seq", "Print a sequence by one of its routes");
  seq->add_option("name", name, "sequence name")
      ->required()
      ->check(CLI::IsMember(seq_names));
  seq->add_option("--n-max", n_max, "largest index")->required()->check(CLI::NonNegativeNumber);
  seq->add_option("--route", route, "sum (default), explicit, egf or dobinski")
      ->check(CLI::IsMember({"sum", "explicit", "egf", "dobinski"}));
  seq->add_option("--tol", tol, "relative tolerance (dobinski route)")
      ->each([&](const std::string&) { tol_given = true; });
  seq->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* triangle = app.add_subcommand("triangle", "Print triangle rows 1..n");
  triangle->add_option("--n-max", n_max, "last row")->required()->check(CLI::PositiveNumber);
  triangle->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* diag = app.add_subcommand("diag", "Print a diagonal of the triangle");
  diag->add_option("direction", direction)->required()->check(CLI::IsMember({"left", "right"}));
  diag->add_option("--k", k, "left diagonal index")->check(CLI::PositiveNumber);
  diag->add_option("--r", r, "right diagonal index")->check(CLI::PositiveNumber);
  diag->add_option("--n-max", n_max, "largest row")->required()->check(CLI::PositiveNumber);
  diag->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* rec = app.add_subcommand("recurrence", "Derive a diagonal's linear recurrence");
  rec->add_option("direction", direction)->required()->check(CLI::IsMember({"left", "right"}));
  rec->add_option("--k", k, "left diagonal index")->check(CLI::PositiveNumber);
  rec->add_option("--r", r, "right diagonal index")->check(CLI::PositiveNumber);

  auto* poly = app.add_subcommand("poly", "Print the decomposition polynomial p_r");
  poly->add_option("--r", r)->required()->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"all", "sequences", "egf", "derivative", "dobinski", "triangle",
                             "diagonals", "binet", "oracle"}));
  verify->add_option("--n-max", n_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--k", k)->check(CLI::PositiveNumber);
  verify->add_option("--r", r)->check(CLI::PositiveNumber);
  verify->add_option("--tol", tol)->each([&](const std::string&) { tol_given = true; });
  verify->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));

  auto* enumerate = app.add_subcommand("enumerate", "List Fibonacci-ordered partitions");
  enumerate->add_option("--n-max", n_max, "ground set size n")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--k", k, "restrict to k blocks")->check(CLI::PositiveNumber);
  enumerate->add_flag("--shapes", shapes, "group by train tiling shape");

  auto* exp = app.add_subcommand("export", "Write a sequence to a file");
  exp->add_option("name", name)->required()->check(CLI::IsMember(seq_names));
  exp->add_option("--n-max", n_max)->required()->check(CLI::NonNegativeNumber);
  exp->add_option("--format", export_format, "bfile (default), csv or json")
      ->check(CLI::IsMember({"bfile", "csv", "json"}));
  exp->add_option("--out", out_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (seq->parsed()) {
      return cmd_seq(out, name, n_max, route,
                     tol_given ? std::optional<double>(tol) : std::nullopt, format);
    }
    if (triangle->parsed()) return cmd_triangle(out, n_max, format);
    if (diag->parsed() || rec->parsed()) {
      const int index = direction == "left" ? k : r;
      if (index < 1) {
        throw UsageError(direction == "left" ? "left diagonals require --k >= 1"
                                             : "right diagonals require --r >= 1");
      }
      if (diag->parsed()) return cmd_diag(out, direction, index, n_max, format);
      return cmd_recurrence(out, direction, index);
    }
    if (poly->parsed()) return cmd_poly(out, r);
    if (verify->parsed()) {
      VerifyBounds bounds;
      bounds.n_max = verify->count("--n-max") ? n_max : -1;
      bounds.k_max = verify->count("--k") ? k : -1;
      bounds.r_max = verify->count("--r") ? r : -1;
      if (tol_given) bounds.tol = tol;
      if (format == "bfile" || format == "csv") {
        throw UsageError("verify supports formats plain, json");
      }
      return cmd_verify(out, suite, bounds, format);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(out, n_max,
                           enumerate->count("--k") ? std::optional<int>(k) : std::nullopt,
                           shapes);
    }
    if (exp->parsed()) return cmd_export(err, name, n_max, export_format, out_path);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailure;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("fibfub");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fibfub::cli
