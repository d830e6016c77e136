#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "lensreeb/ellipsoid.hpp"
#include "lensreeb/errors.hpp"
#include "oracles.hpp"

using namespace lensreeb;

namespace {

Rational q(std::int64_t a, std::int64_t b) { return Rational(Integer(a), Integer(b)); }

EllipsoidModel ellipsoid(std::int64_t p, std::vector<std::int64_t> w, std::vector<Rational> axes) {
  return EllipsoidModel(LensSpace::make(p, std::move(w)), std::move(axes));
}

const std::vector<Rational> kGolden{Rational(1), q(13, 8), q(29, 11)};

}  // namespace

TEST_CASE("orbit classes match the path-lifting oracle") {
  CHECK(orbit_class(ellipsoid(1, {1, 1, 1}, kGolden), 2).a == 0);
  for (std::size_t j = 0; j < 3; ++j) CHECK(orbit_class(ellipsoid(5, {1, 1, 1}, kGolden), j).a == 1);
  auto e = ellipsoid(5, {2, 3, 1}, kGolden);
  CHECK(orbit_class(e, 0).a == 3);
  CHECK(orbit_class(e, 1).a == 2);
  CHECK(orbit_class(e, 2).a == 1);

  for (std::int64_t p = 2; p <= 20; ++p) {
    for (std::int64_t a = 1; a < p; ++a) {
      if (std::gcd(a, p) != 1) continue;
      std::vector<std::int64_t> w{a, 1, p - 1};
      auto model = ellipsoid(p, w, kGolden);
      for (std::size_t j = 0; j < 3; ++j) {
        auto g = orbit_class(model, j).a;
        CHECK(g == oracle::lift_class(p, w, j));
        std::set<std::int64_t> hit;
        for (std::int64_t n = 1; n <= p; ++n) hit.insert(residue(n * g, p));
        CHECK(static_cast<std::int64_t>(hit.size()) == p);
      }
    }
  }
}

TEST_CASE("ellipsoid indices") {
  CHECK(ellipsoid_cz(ellipsoid(1, {1, 1, 1}, kGolden), 0, 1) == 4);
  auto squashed = ellipsoid(1, {1, 1}, {Rational(1), Rational(100)});
  for (std::int64_t n = 1; n <= 99; ++n) CHECK(ellipsoid_cz(squashed, 0, n) == 1 + 2 * n);
  CHECK_THROWS_AS(ellipsoid_cz(squashed, 0, 100), ResonantAxes);
  CHECK(ellipsoid_cz_lower(squashed, 0, 100) == 1 + 2 * 100);
  CHECK(ellipsoid_cz(ellipsoid(1, {1, 1}, {Rational(1), q(15, 7)}), 1, 1) == 7);

  auto round = ellipsoid(1, {1, 1, 1}, {1, 1, 1});
  for (std::size_t j = 0; j < 3; ++j) CHECK(ellipsoid_mean_index(round, j) == Rational(6));
  auto two = ellipsoid(1, {1, 1}, {1, 2});
  CHECK(ellipsoid_mean_index(two, 0) == Rational(3));
  CHECK(ellipsoid_mean_index(two, 1) == Rational(6));

  CHECK_THROWS_AS(ellipsoid(1, {1, 1}, {1}), DomainError);
  CHECK_THROWS_AS(ellipsoid(1, {1, 1}, {1, -2}), DomainError);
}

TEST_CASE("sharpness identity and linear growth") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    std::size_t count = 2 + rng() % 4;
    std::vector<Rational> axes;
    for (std::size_t i = 0; i < count; ++i) {
      axes.push_back(q(static_cast<std::int64_t>(rng() % 500) + 1, static_cast<std::int64_t>(rng() % 97) + 1));
    }
    auto e = ellipsoid(1, std::vector<std::int64_t>(count, 1), axes);
    Rational sum(0);
    for (std::size_t j = 0; j < count; ++j) sum += Rational(1) / ellipsoid_mean_index(e, j);
    CHECK(sum == q(1, 2));
    for (std::size_t j = 0; j < count; ++j) {
      Rational delta = ellipsoid_mean_index(e, j);
      for (std::int64_t n = 1; n <= 60; ++n) {
        Rational dev = Rational(ellipsoid_cz_lower(e, j, n)) - Rational(n) * delta;
        CHECK(dev <= Rational(2 * e.n() + 2));
        CHECK(-dev <= Rational(2 * e.n() + 2));
      }
    }
  }
}

TEST_CASE("symmetric spectrum") {
  auto sphere = symmetric_spectrum(ellipsoid(1, {1, 1, 1}, kGolden), 0, q(29, 11));
  std::size_t simple = 0;
  for (const auto& s : sphere) {
    if (s.simple_in_class) {
      ++simple;
      CHECK(s.iterate == 1);
    }
  }
  CHECK(simple == 3);
  CHECK(sphere.front().axis == 0);
  CHECK(sphere.front().mu_lift == 4);

  auto l5 = symmetric_spectrum(ellipsoid(5, {1, 1, 1}, kGolden), 1, Rational(1));
  std::vector<std::int64_t> first(3, 0);
  for (const auto& s : l5) {
    if (s.simple_in_class) first[s.axis] = s.iterate;
  }
  CHECK(first == std::vector<std::int64_t>{1, 1, 1});

  auto mixed = symmetric_spectrum(ellipsoid(5, {2, 3, 1}, kGolden), 1, Rational(1));
  for (const auto& s : mixed) {
    if (s.simple_in_class) first[s.axis] = s.iterate;
    CHECK(s.action == Rational(s.iterate) * kGolden[s.axis] / Rational(5));
  }
  CHECK(first == std::vector<std::int64_t>{2, 3, 1});
  for (std::size_t i = 1; i < mixed.size(); ++i) CHECK(mixed[i - 1].action <= mixed[i].action);

  CHECK_THROWS_AS(symmetric_spectrum(ellipsoid(6, {1, 1, 1}, kGolden), 2, Rational(1)), DomainError);

  for (std::int64_t p = 2; p <= 15; ++p) {
    // large coprime denominators keep every listed iterate off resonance
    auto model = ellipsoid(p, {1, p - 1, 1}, {Rational(1), q(1013, 997), q(1019, 991)});
    for (std::int64_t a = 1; a < p; ++a) {
      if (std::gcd(a, p) != 1) continue;
      std::size_t count = 0;
      for (const auto& s : symmetric_spectrum(model, a, q(1019, 991))) count += s.simple_in_class ? 1 : 0;
      CHECK(count == 3);
    }
  }
}

TEST_CASE("dynamical convexity") {
  auto v = check_dynamical_convexity(ellipsoid(1, {1, 1, 1}, kGolden), 1000);
  CHECK(v.pass);
  CHECK(v.min_index == 4);
  CHECK(v.resonant_iterates > 0);
  v = check_dynamical_convexity(ellipsoid(1, {1, 1}, {1, 100}), 1000);
  CHECK(v.pass);
  CHECK(v.min_index == 3);
  CHECK_THROWS_AS(check_dynamical_convexity(ellipsoid(1, {1, 1, 1}, {1, 1, 1}), 10), ResonantAxes);
}
