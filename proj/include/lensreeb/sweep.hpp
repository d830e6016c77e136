#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lensreeb/report.hpp"

namespace lensreeb {

enum class WeightMode { Exhaustive, Random };

/// Parameter grid plus the invariant suites to run over it.
struct SweepConfig {
  std::int64_t p_min = 1;
  std::int64_t p_max = 1;
  std::vector<std::int64_t> n_values{2};
  WeightMode weight_mode = WeightMode::Exhaustive;
  std::optional<std::uint64_t> seed;
  std::int64_t count = 0;  // random tuples
  std::vector<std::string> checks;
  std::string output;
  std::int64_t max_iter = 1000;
  bool fail_fast = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Every suite name `sweep` understands.
const std::vector<std::string>& known_suites();

/// Parses a flat `key = value` file ('#' comments; lists as "2,3" or "[2, 3]").
/// Throws DomainError("InvalidConfig") on unknown keys, bad values, or a random mode without seed.
SweepConfig parse_sweep_config(const std::string& text);

struct SuiteTally {
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::int64_t skipped = 0;
  std::optional<Json> first_counterexample;
};

struct SweepReport {
  std::int64_t points = 0;
  std::map<std::string, SuiteTally> suites;
  std::int64_t failures() const;
  Json to_json(const SweepConfig& config) const;
};

/// One (p, weights) grid point.
struct SweepPoint {
  std::int64_t p;
  std::vector<std::int64_t> weights;
};

/// Grid points in deterministic order (sorted by (n, p, weights) for exhaustive mode,
/// generation order for random mode).
std::vector<SweepPoint> sweep_points(const SweepConfig& config);

/// Runs the configured suites. Worker count is config.threads, capped by LENSREEB_THREADS.
/// With fail_fast the first failure is rethrown as IdentityViolation.
SweepReport run_sweep(const SweepConfig& config);

}  // namespace lensreeb
