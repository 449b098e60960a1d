#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ybx/json_io.hpp"
#include "ybx/report.hpp"
#include "ybx/set_maps.hpp"

namespace ybx {

// Fixed default for --seed; recorded in every report for replayability.
inline constexpr std::uint64_t kDefaultSeed = 271828;

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t value);

// Digest of an ordered list of canonical input serializations.
std::string digest_inputs(const std::vector<std::string>& canonical_inputs);

struct NamedReport {
  std::string name;
  CheckReport report;
};

// One CLI or sweep run: tool identity, input digest, per-check reports and
// wall time.  wall_ms is the only timing field; everything else is a pure
// function of the inputs, so serialized reports are byte-comparable once
// wall_ms is removed.
struct RunReport {
  std::string tool;
  std::string version;
  std::string inputs_digest;
  std::uint64_t seed = kDefaultSeed;
  std::vector<NamedReport> checks;
  long long wall_ms = 0;

  bool all_passed() const;
};

RunReport make_run_report(const std::vector<std::string>& canonical_inputs);
Json run_report_to_json(const RunReport& r);

// Runs fn(i) for i in [0, count) on `jobs` worker threads over contiguous
// index ranges.  fn must only write to per-index state; results are therefore
// independent of jobs.  Worker exceptions are rethrown in range order.
void parallel_for_ordered(long long count, int jobs, const std::function<void(long long)>& fn);

// Exhaustive sweep of all candidate maps on an n-element set, partitioned
// contiguously across jobs and merged in candidate-rank order.  Candidate
// order, and hence the solution list, is flattened-table lexicographic, and
// matches enumerate_solutions entry for entry.
struct CensusResult {
  int size = 0;
  Equation equation = Equation::ybe;
  bool invertible_only = false;
  long long candidates = 0;
  std::vector<FiniteYBMap> solutions;
};

CensusResult census_solutions(int n, Equation equation, bool invertible_only, int jobs);

Json census_to_json(const CensusResult& c);

}  // namespace ybx
