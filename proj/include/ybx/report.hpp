#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ybx {

// One violated identity instance: which relation, at which input tuple.
struct Failure {
  std::string relation;
  std::vector<long long> witness;
  std::string note;
};

// Result of checking one family of identities.  `relations_checked` counts
// elementary identity instances evaluated (relation x input tuple).  `info`
// carries informational flags that are not pass/fail verdicts (for example
// cocommutativity of a Hopf algebra).
struct CheckReport {
  std::vector<Failure> failures;
  long long relations_checked = 0;
  std::vector<std::pair<std::string, bool>> info;

  bool passed() const { return failures.empty(); }

  void add_failure(std::string relation, std::vector<long long> witness,
                   std::string note = "") {
    failures.push_back({std::move(relation), std::move(witness), std::move(note)});
  }

  void merge(const CheckReport& other) {
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    relations_checked += other.relations_checked;
    info.insert(info.end(), other.info.begin(), other.info.end());
  }
};

}  // namespace ybx
