#include "ybx/census.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>
#include <utility>

#include "ybx/error.hpp"
#include "ybx/version.hpp"

namespace ybx {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char byte : data) {
    hash ^= byte;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::string digest_inputs(const std::vector<std::string>& canonical_inputs) {
  std::string all;
  for (const std::string& s : canonical_inputs) {
    all += s;
    all += '\0';
  }
  return hex64(fnv1a64(all));
}

bool RunReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const NamedReport& c) { return c.report.passed(); });
}

RunReport make_run_report(const std::vector<std::string>& canonical_inputs) {
  RunReport r;
  r.tool = kToolName;
  r.version = kVersion;
  r.inputs_digest = digest_inputs(canonical_inputs);
  return r;
}

Json run_report_to_json(const RunReport& r) {
  Json j;
  j["tool"] = r.tool;
  j["version"] = r.version;
  j["inputs_digest"] = r.inputs_digest;
  j["seed"] = r.seed;
  Json checks = Json::array();
  for (const NamedReport& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"report", report_to_json(c.report)}});
  j["checks"] = std::move(checks);
  j["wall_ms"] = r.wall_ms;
  return j;
}

void parallel_for_ordered(long long count, int jobs,
                          const std::function<void(long long)>& fn) {
  if (count <= 0) return;
  long long workers = jobs < 1 ? 1 : jobs;
  workers = std::min<long long>(workers, count);
  if (workers == 1) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (long long w = 0; w < workers; ++w) {
    const long long lo = count * w / workers;
    const long long hi = count * (w + 1) / workers;
    pool.emplace_back([&, w, lo, hi]() {
      try {
        for (long long i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errors[static_cast<size_t>(w)] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

namespace {

// Candidate tables in rank order.  General maps: base-(n*n) digits of the
// rank, most significant digit first, one digit per flattened input.
// Bijections: lexicographic permutation unranking via the factorial number
// system.  Both orders agree with flattened-table lexicographic order.
std::vector<int> unrank_map_table(long long rank, int n2) {
  std::vector<int> flat(n2);
  for (int k = n2 - 1; k >= 0; --k) {
    flat[k] = static_cast<int>(rank % n2);
    rank /= n2;
  }
  return flat;
}

std::vector<int> unrank_permutation(long long rank, int m) {
  std::vector<long long> fact(static_cast<size_t>(m) + 1, 1);
  for (int i = 1; i <= m; ++i) fact[i] = fact[i - 1] * i;
  std::vector<int> pool(m);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out;
  out.reserve(m);
  for (int pos = m; pos >= 1; --pos) {
    const long long f = fact[pos - 1];
    const int idx = static_cast<int>(rank / f);
    rank %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + idx);
  }
  return out;
}

FiniteYBMap map_from_flat(int n, const std::vector<int>& flat) {
  std::vector<std::pair<int, int>> t(flat.size());
  for (size_t i = 0; i < flat.size(); ++i) t[i] = {flat[i] / n, flat[i] % n};
  return make_yb_map(n, std::move(t));
}

bool solves(const FiniteYBMap& m, Equation equation) {
  return equation == Equation::ybe ? check_ybe(m).passed() : check_braid(m).passed();
}

}  // namespace

CensusResult census_solutions(int n, Equation equation, bool invertible_only, int jobs) {
  if (n <= 0) fail(ErrorCode::BadN, "size must be positive");
  if (n > 3)
    fail(ErrorCode::TooLarge, "census capped at size 3, got " + std::to_string(n));
  const int n2 = n * n;
  // All maps for n <= 2 without the invertibility restriction; bijections
  // otherwise (size 3 is always restricted to bijections).
  const bool all_maps = n <= 2 && !invertible_only;
  long long candidates = 1;
  if (all_maps) {
    for (int i = 0; i < n2; ++i) candidates *= n2;
  } else {
    for (int i = 2; i <= n2; ++i) candidates *= i;
  }

  long long workers = jobs < 1 ? 1 : jobs;
  workers = std::min<long long>(workers, candidates);
  std::vector<std::vector<FiniteYBMap>> buckets(static_cast<size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));

  auto scan_range = [&](long long w, long long lo, long long hi) {
    std::vector<FiniteYBMap>& found = buckets[static_cast<size_t>(w)];
    for (long long rank = lo; rank < hi; ++rank) {
      FiniteYBMap m = map_from_flat(
          n, all_maps ? unrank_map_table(rank, n2) : unrank_permutation(rank, n2));
      if (solves(m, equation)) found.push_back(std::move(m));
    }
  };

  if (workers == 1) {
    scan_range(0, 0, candidates);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (long long w = 0; w < workers; ++w) {
      const long long lo = candidates * w / workers;
      const long long hi = candidates * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi]() {
        try {
          scan_range(w, lo, hi);
        } catch (...) {
          errors[static_cast<size_t>(w)] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
  }

  CensusResult result;
  result.size = n;
  result.equation = equation;
  result.invertible_only = invertible_only;
  result.candidates = candidates;
  for (std::vector<FiniteYBMap>& bucket : buckets)
    for (FiniteYBMap& m : bucket) result.solutions.push_back(std::move(m));
  return result;
}

Json census_to_json(const CensusResult& c) {
  Json j;
  j["kind"] = "census";
  j["size"] = c.size;
  j["equation"] = c.equation == Equation::ybe ? "ybe" : "braid";
  j["invertible_only"] = c.invertible_only;
  j["candidates"] = c.candidates;
  j["count"] = c.solutions.size();
  Json items = Json::array();
  for (const FiniteYBMap& m : c.solutions) {
    Json item = yb_map_to_json(m);
    item["invertible"] = m.invertible;
    item["passed"] = true;
    items.push_back(std::move(item));
  }
  j["solutions"] = std::move(items);
  return j;
}

}  // namespace ybx
