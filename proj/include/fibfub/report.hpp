#pragma once

#include <string>
#include <vector>

namespace fibfub {

struct VerifyFailure {
  std::string identity;  // stable id of the identity that failed
  std::string indices;   // e.g. "n=12 k=3"
  std::string expected;
  std::string actual;
};

// Outcome of a verification run: number of instances checked, the failing
// instances, and notes (observations that are not failures).
struct VerifyReport {
  std::string suite;
  long checks = 0;
  std::vector<VerifyFailure> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }

  void add_failure(std::string identity, std::string indices, std::string expected,
                   std::string actual) {
    failures.push_back({std::move(identity), std::move(indices), std::move(expected),
                        std::move(actual)});
  }

  void merge(const VerifyReport& other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

}  // namespace fibfub
