#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lensreeb/ellipsoid.hpp"
#include "lensreeb/rational.hpp"

namespace lensreeb {

struct BudgetOrbit {
  std::string label;
  std::int64_t cls;
  Rational mean_index;
};

/// Hypothesized complete list of simple closed orbits in the target class.
struct OrbitBudget {
  std::int64_t p = 1;
  std::int64_t target_class = 0;
  std::vector<BudgetOrbit> orbits;

  /// Throws NonpositiveMeanIndex, DomainError("InvalidClass"), or EmptyBudget.
  void validate() const;
  /// Orbits whose class equals the target class.
  std::vector<BudgetOrbit> in_target_class() const;
};

enum class Verdict { Consistent, Contradiction, Inconclusive, FeasibleAtHorizon, Infeasible };

std::string to_string(Verdict v);

/// Demand of the carrier sequence k0 + 2k: symbolic density 1/2 and its finite truncation.
struct CarrierDensity {
  Rational symbolic;                 // 1/2
  std::optional<Rational> estimate;  // #{i : k0 + 2i <= horizon} / horizon
  bool horizon_warning = false;      // horizon too short for the estimate to mean much
};

inline constexpr std::int64_t kMinReliableHorizon = 100;

CarrierDensity carrier_density();
CarrierDensity carrier_density(const Rational& k0, std::int64_t horizon);

/// 1 / (p Delta). Throws NonpositiveMeanIndex.
Rational orbit_density(std::int64_t p, const Rational& delta);

struct InequalityVerdict {
  Verdict verdict;
  Rational lhs;  // p/2
  Rational rhs;  // sum of 1/Delta over target-class orbits
  bool equality;
};

/// p/2 <= sum_j 1/Delta_j.
InequalityVerdict check_final_inequality(const OrbitBudget& budget);

/// Contradiction iff Delta > 2/p.
Verdict single_orbit_contradiction(std::int64_t p, const Rational& delta_simple);

/// Delta(gamma) = Delta(gamma^p) / p.
Rational iterate_mean_relation(const Rational& delta_pth, std::int64_t p);

struct MatchingVerdict {
  Verdict verdict;
  std::int64_t carriers;       // K + 1
  std::int64_t matched;
  std::int64_t candidates;     // distinct orbit iterates adjacent to some carrier
  Rational k0;
  std::int64_t window;         // 3n
  std::optional<Rational> first_unmatched;  // a carrier degree left uncovered
};

/// Maximum bipartite matching between carrier degrees {k0 + 2k : 0 <= k <= K} and
/// iterates gamma_j^N (N = 1 mod p) of target-class orbits with |N Delta_j - degree| <= 3n.
MatchingVerdict matching_feasibility(const OrbitBudget& budget, std::int64_t horizon, std::int64_t n, const Rational& k0);

/// Budget formed by the simple-in-class axis orbits: one per axis, mean index N_j Delta_j / p.
OrbitBudget budget_from_ellipsoid(const EllipsoidModel& model, std::int64_t cls);

}  // namespace lensreeb
