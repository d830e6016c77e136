#pragma once

#include <cstdint>
#include <vector>

#include "lensreeb/lens.hpp"
#include "lensreeb/rational.hpp"

namespace lensreeb {

/// Z_p-invariant ellipsoid with axis parameters a_0, ..., a_n (the action of the
/// closed orbit on the j-th coordinate circle upstairs). Rational axes stand in for
/// irrational ones; resonances are detected per evaluation.
class EllipsoidModel {
 public:
  /// Throws DomainError if the axis count differs from n+1 or an axis is not positive.
  EllipsoidModel(LensSpace space, std::vector<Rational> axes);

  const LensSpace& space() const { return space_; }
  const std::vector<Rational>& axes() const { return axes_; }
  std::int64_t n() const { return space_.n(); }

 private:
  LensSpace space_;
  std::vector<Rational> axes_;
};

/// Class g_j of the primitive quotient orbit on axis j: g_j l_j = 1 mod p.
HomotopyClass orbit_class(const EllipsoidModel& model, std::size_t j);

/// mu(gamma_j^N) = n + 2 sum_i floor(N a_j / a_i) for the upstairs axis orbit.
/// Throws ResonantAxes when N a_j / a_i is an integer for some i != j.
std::int64_t ellipsoid_cz(const EllipsoidModel& model, std::size_t j, std::int64_t iterate);

/// Lower semicontinuous extension: floors of integer ratios drop by one.
/// Agrees with ellipsoid_cz off resonance.
std::int64_t ellipsoid_cz_lower(const EllipsoidModel& model, std::size_t j, std::int64_t iterate);

/// Delta_j = 2 a_j sum_i 1/a_i.
Rational ellipsoid_mean_index(const EllipsoidModel& model, std::size_t j);

struct SpectrumEntry {
  std::size_t axis;
  std::int64_t iterate;     // downstairs iterate N of the primitive quotient orbit
  Rational action;          // N a_j / p
  Rational mean_index;      // N Delta_j / p, downstairs
  std::int64_t mu_lift;     // index of the upstairs orbit gamma_j^N covering the p-th power
  bool simple_in_class;     // minimal N on this axis within the class
};

/// Downstairs iterates of the n+1 axis orbits lying in class `cls` with action <= cap,
/// ordered by (action, axis). Throws ResonantAxes if a listed iterate is degenerate.
std::vector<SpectrumEntry> symmetric_spectrum(const EllipsoidModel& model, std::int64_t cls, const Rational& action_cap);

struct ConvexityVerdict {
  bool pass;
  std::int64_t min_index;
  std::size_t min_axis;
  std::int64_t min_iterate;
  std::int64_t resonant_iterates;  // evaluated through the lower semicontinuous index
};

/// mu(gamma_j^N) >= n+2 for all j and N <= max_iter. Resonant iterates use the lower
/// semicontinuous index. Throws ResonantAxes when two axes coincide: the axis circles
/// are then not isolated orbits.
ConvexityVerdict check_dynamical_convexity(const EllipsoidModel& model, std::int64_t max_iter);

}  // namespace lensreeb
