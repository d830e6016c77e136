#include "lensreeb/ellipsoid.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "lensreeb/arith.hpp"
#include "lensreeb/errors.hpp"

namespace lensreeb {

EllipsoidModel::EllipsoidModel(LensSpace space, std::vector<Rational> axes)
    : space_(std::move(space)), axes_(std::move(axes)) {
  if (axes_.size() != space_.weights().size()) {
    throw DomainError("AxisCount", "expected " + std::to_string(space_.weights().size()) + " axes, got " +
                                       std::to_string(axes_.size()));
  }
  for (const auto& a : axes_) {
    if (a.sign() <= 0) throw DomainError("NonpositiveAxis", "ellipsoid axes must be positive, got " + a.str());
  }
}

HomotopyClass orbit_class(const EllipsoidModel& model, std::size_t j) {
  const std::int64_t p = model.space().p();
  if (p == 1) return {0};
  return {static_cast<std::int64_t>(mod_inverse(model.space().weights().at(j), p))};
}

namespace {

void check_axis(const EllipsoidModel& model, std::size_t j) {
  if (j >= model.axes().size()) throw DomainError("InvalidAxis", "axis index " + std::to_string(j) + " out of range");
}

// Sum over i != j of the floor of N a_j / a_i; `lower` drops exact integers by one.
Integer cross_floors(const EllipsoidModel& model, std::size_t j, std::int64_t iterate, bool lower, bool strict) {
  Integer total = 0;
  const auto& a = model.axes();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == j) continue;
    Rational ratio = Rational(iterate) * a[j] / a[i];
    Integer f = rat_floor(ratio);
    if (ratio.is_integer()) {
      if (strict) throw ResonantAxes(i, j, iterate);
      if (lower) f -= 1;
    }
    total += f;
  }
  return total;
}

}  // namespace

std::int64_t ellipsoid_cz(const EllipsoidModel& model, std::size_t j, std::int64_t iterate) {
  check_axis(model, j);
  if (iterate < 1) throw DomainError("InvalidIterate", "iterate must be >= 1");
  Integer floors = cross_floors(model, j, iterate, false, true) + iterate;
  return model.n() + 2 * static_cast<std::int64_t>(floors);
}

std::int64_t ellipsoid_cz_lower(const EllipsoidModel& model, std::size_t j, std::int64_t iterate) {
  check_axis(model, j);
  if (iterate < 1) throw DomainError("InvalidIterate", "iterate must be >= 1");
  Integer floors = cross_floors(model, j, iterate, true, false) + iterate;
  return model.n() + 2 * static_cast<std::int64_t>(floors);
}

Rational ellipsoid_mean_index(const EllipsoidModel& model, std::size_t j) {
  check_axis(model, j);
  Rational inverse_sum(0);
  for (const auto& a : model.axes()) inverse_sum += Rational(a.den(), a.num());
  return 2 * model.axes()[j] * inverse_sum;
}

std::vector<SpectrumEntry> symmetric_spectrum(const EllipsoidModel& model, std::int64_t cls, const Rational& action_cap) {
  const std::int64_t p = model.space().p();
  if (cls < 0 || cls >= p || (p > 1 && std::gcd(cls, p) != 1)) {
    throw DomainError("InvalidClass", "class " + std::to_string(cls) + " is not a generator of Z_" + std::to_string(p));
  }
  std::vector<SpectrumEntry> out;
  for (std::size_t j = 0; j < model.axes().size(); ++j) {
    // N g_j = cls mod p  <=>  N = cls l_j mod p
    std::int64_t first = residue(cls * residue(model.space().weights()[j], p), p);
    if (first == 0) first = p;
    const Rational delta = ellipsoid_mean_index(model, j);
    for (std::int64_t big_n = first;; big_n += p) {
      Rational action = Rational(big_n) * model.axes()[j] / Rational(p);
      if (action > action_cap) break;
      out.push_back({j, big_n, action, Rational(big_n) * delta / Rational(p), ellipsoid_cz(model, j, big_n),
                     big_n == first});
    }
  }
  std::sort(out.begin(), out.end(), [](const SpectrumEntry& x, const SpectrumEntry& y) {
    if (x.action != y.action) return x.action < y.action;
    if (x.axis != y.axis) return x.axis < y.axis;
    return x.iterate < y.iterate;
  });
  return out;
}

ConvexityVerdict check_dynamical_convexity(const EllipsoidModel& model, std::int64_t max_iter) {
  const auto& a = model.axes();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] == a[j]) throw ResonantAxes(i, j, 1);
    }
  }
  ConvexityVerdict verdict{true, std::numeric_limits<std::int64_t>::max(), 0, 0, 0};
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::int64_t big_n = 1; big_n <= max_iter; ++big_n) {
      std::int64_t mu = 0;
      try {
        mu = ellipsoid_cz(model, j, big_n);
      } catch (const ResonantAxes&) {
        ++verdict.resonant_iterates;
        mu = ellipsoid_cz_lower(model, j, big_n);
      }
      if (mu < verdict.min_index) {
        verdict.min_index = mu;
        verdict.min_axis = j;
        verdict.min_iterate = big_n;
      }
    }
  }
  verdict.pass = verdict.min_index >= model.n() + 2;
  return verdict;
}

}  // namespace lensreeb
