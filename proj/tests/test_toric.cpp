#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "lensreeb/errors.hpp"
#include "lensreeb/toric.hpp"
#include "oracles.hpp"

using namespace lensreeb;

namespace {

Rational q(std::int64_t a, std::int64_t b) { return Rational(Integer(a), Integer(b)); }

ToricModel model(std::int64_t p, std::vector<std::int64_t> w) { return build_toric_model(LensSpace::make(p, std::move(w))); }

std::vector<std::vector<std::int64_t>> to_i64(const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& row : m) {
    std::vector<std::int64_t> r;
    for (const auto& x : row) r.push_back(static_cast<std::int64_t>(x));
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST_CASE("worked toric models") {
  auto t = model(3, {1, 1, 1});
  CHECK(t.m == 1);
  CHECK(t.k == 0);
  CHECK(t.q == -3);
  CHECK(t.c == -1);
  CHECK(t.d == 0);
  CHECK(t.a0 == 2);
  CHECK(t.normals == std::vector<IntVector>{{0, 0, 1}, {1, 0, 1}, {-1, -3, 1}});
  CHECK(verify_determinant(t) == -3);

  t = model(5, {1, 1, 1});
  CHECK(t.m == 5);
  CHECK(t.k == 2);
  CHECK(t.q == 3);
  CHECK(t.c == 1);
  CHECK(t.d == 3);
  CHECK(t.a0 == -1);
  CHECK(t.eta == IntVector{0, 1, 3});
  CHECK(t.normals == std::vector<IntVector>{{0, 2, 5}, {1, 0, 5}, {-1, 3, 5}});
  CHECK(verify_determinant(t) == -5);
  CHECK(oracle::leibniz_det(to_i64(t.beta())) == -5);

  t = model(1, {1, 1, 1});
  CHECK(t.m == 1);
  CHECK(t.k == 0);
  CHECK(t.q == -1);
  CHECK(t.c == -1);
  CHECK(t.d == 0);
  CHECK(t.a0 == 2);
  CHECK(abs(verify_determinant(t)) == 1);

  t = model(7, {3, 2, 1});
  CHECK(t.m == 7);
  CHECK(t.k == 6);
  CHECK(t.q == 17);
  CHECK(t.c == 5);
  CHECK(t.d == 6);
  CHECK(t.a0 == -3);

  t = model(12, {1, 1, 5, 1});
  CHECK(t.m == 3);
  CHECK(t.k == 2);
  CHECK(t.q == 10);
  CHECK(t.c == 1);
  CHECK(t.d == 2);
  CHECK(t.a0 == -1);

  CHECK_THROWS_AS(build_toric_model(LensSpace::make(5, {1, 1, 2})), NotNormalized);
}

TEST_CASE("kernel generator verdicts") {
  auto v = verify_kernel_generator(model(5, {1, 1, 1}));
  CHECK(v.vector == std::vector<Rational>{q(-3, 5), q(2, 5), q(2, 5)});
  CHECK(v.order == 5);
  CHECK(v.status == KernelStatus::Generator);

  v = verify_kernel_generator(model(3, {1, 1, 1}));
  CHECK(v.vector == std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
  CHECK(v.order == 1);
  CHECK(v.status == KernelStatus::DegenerateK0);

  CHECK(verify_kernel_generator(model(1, {1, 1, 1})).order == 1);

  v = verify_kernel_generator(model(45, {1, 16, 1}));
  CHECK(v.order == 15);
  CHECK(v.status == KernelStatus::Deficient);
  CHECK(verify_kernel_generator(model(12, {1, 1, 5, 1})).order == 6);
}

TEST_CASE("structural identities against search-based oracle") {
  for (std::int64_t p = 1; p <= 24; ++p) {
    for (std::int64_t a = 1; a <= std::max<std::int64_t>(p - 1, 1); ++a) {
      for (std::int64_t b = 1; b <= std::max<std::int64_t>(p - 1, 1); ++b) {
        if (std::gcd(a, p) != 1 || std::gcd(b, p) != 1) continue;
        auto t = model(p, {a, b, 1});
        auto o = oracle::toric_by_search(p, {a, b, 1});
        CHECK(t.m == o.m);
        CHECK(t.k == o.k);
        CHECK(t.q == o.q);
        CHECK(t.d == o.d);
        CHECK(t.c == o.c);
        CHECK(t.a0 == o.a0);
        CHECK(t.k * t.d - t.m * t.c == 1);
        CHECK(std::gcd(static_cast<std::int64_t>(t.k), static_cast<std::int64_t>(t.m)) == 1);
        CHECK(abs(Integer(oracle::leibniz_det(to_i64(t.beta())))) == p);
        CHECK_NOTHROW(verify_basis_identity(t));
        CHECK(mean_index(t) == q(2, p));
      }
    }
  }
}

TEST_CASE("cz index values") {
  auto t = model(3, {1, 1, 1});
  std::vector<Rational> l3{0, 2, 4, 2, 4, 6, 4};
  for (std::size_t i = 0; i < l3.size(); ++i) CHECK(cz_index(t, static_cast<std::int64_t>(i + 1)) == l3[i]);

  t = model(5, {1, 1, 1});
  std::vector<Rational> l5{q(-4, 5), q(2, 5), q(8, 5), q(14, 5), Rational(4), q(6, 5), q(12, 5), q(18, 5), q(24, 5), Rational(6), q(16, 5)};
  for (std::size_t i = 0; i < l5.size(); ++i) CHECK(cz_index(t, static_cast<std::int64_t>(i + 1)) == l5[i]);
  CHECK(mean_index(t) == q(2, 5));
  CHECK(mean_index(model(3, {1, 1, 1})) == q(2, 3));

  t = model(7, {3, 2, 1});
  std::vector<Rational> l7{q(-2, 7), q(10, 7), q(8, 7), q(6, 7), q(4, 7), q(16, 7), Rational(4)};
  for (std::size_t i = 0; i < l7.size(); ++i) CHECK(cz_index(t, static_cast<std::int64_t>(i + 1)) == l7[i]);

  for (std::int64_t w0 : {1, 4, 9}) {
    auto s = model(1, {w0, 3, 1});
    CHECK(mean_index(s) == Rational(2));
    for (std::int64_t n = 1; n <= 200; ++n) CHECK(cz_index(s, n) == Rational(2 + 2 * n));
  }
  auto s4 = model(1, {1, 1, 1, 1, 1});
  for (std::int64_t n = 1; n <= 50; ++n) CHECK(cz_index(s4, n) == Rational(4 + 2 * n));
}

TEST_CASE("cz index against integer-only oracle") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 60; ++rep) {
    std::int64_t p = static_cast<std::int64_t>(rng() % 40) + 1;
    std::size_t n = 2 + rng() % 3;
    std::vector<std::int64_t> w;
    while (w.size() < n) {
      std::int64_t x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(std::max<std::int64_t>(p, 2))) + 1;
      if (std::gcd(x, p) == 1) w.push_back(x);
    }
    w.push_back(1);
    auto t = model(p, w);
    auto reduced = t.space.weights();
    for (std::int64_t big_n = 1; big_n <= 3 * p + 5; ++big_n) {
      CHECK(cz_index(t, big_n) * Rational(t.m) == Rational(oracle::scaled_cz(p, reduced, big_n)));
    }
  }
}

TEST_CASE("hc tables and k0") {
  auto t = model(3, {1, 1, 1});
  CHECK(hc_table(t, 1, 10).k_a == Rational(0));
  CHECK(hc_table(t, 2, 10).k_a == Rational(2));
  auto h0 = hc_table(t, 0, 10);
  CHECK(h0.k_a == Rational(4));
  CHECK(h0.realized_at == 3);
  CHECK(h0.table.degrees(0) == std::vector<Rational>{4, 6, 8, 10});
  CHECK(k0_threshold(t, 1) == Rational(6));

  auto sphere = model(1, {1, 1});
  CHECK(hc_table(sphere, 0, 9).k_a == Rational(3));
  CHECK(k0_threshold(sphere, 0) == Rational(3));

  auto t5 = model(5, {1, 1, 1});
  std::vector<Rational> ka{4, q(-4, 5), q(2, 5), q(8, 5), q(14, 5)};
  for (std::int64_t a = 0; a < 5; ++a) CHECK(hc_table(t5, a, 10).k_a == ka[static_cast<std::size_t>(a)]);
  CHECK(k0_threshold(t5, 1) == q(26, 5));
  CHECK(hc_table(t5, 1, 10).k_a + 2 == cz_index(t5, 6));

  auto t7 = model(7, {3, 2, 1});
  std::vector<Rational> ka7{4, q(-2, 7), q(10, 7), q(8, 7), q(6, 7), q(4, 7), q(16, 7)};
  for (std::int64_t a = 0; a < 7; ++a) CHECK(hc_table(t7, a, 10).k_a == ka7[static_cast<std::size_t>(a)]);
}

TEST_CASE("hc tables partition the index spectrum") {
  for (auto w : std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>{{3, {1, 1, 1}}, {5, {1, 1, 1}}, {7, {3, 2, 1}}, {12, {1, 1, 5, 1}}}) {
    auto t = model(w.first, w.second);
    const Rational cap(100);
    std::multiset<Rational> union_degrees;
    for (std::int64_t a = 0; a < t.p(); ++a) {
      auto h = hc_table(t, a, cap);
      auto degs = h.table.degrees(a);
      for (std::size_t i = 1; i < degs.size(); ++i) CHECK(degs[i] - degs[i - 1] == Rational(2));
      union_degrees.insert(degs.begin(), degs.end());
    }
    std::multiset<Rational> spectrum;
    for (std::int64_t n = 1; n <= 100 * t.p(); ++n) {
      Rational mu = cz_index(t, n);
      if (mu <= cap) spectrum.insert(mu);
    }
    CHECK(union_degrees == spectrum);
  }
}

TEST_CASE("periodicity, sandwich and Bezout invariance") {
  for (auto w : std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>{{3, {1, 1, 1}}, {5, {1, 1, 1}}, {1, {1, 1}}, {45, {1, 16, 1}}}) {
    auto t = model(w.first, w.second);
    CHECK_NOTHROW(verify_periodicity(t, 10000));
    Rational delta = mean_index(t);
    for (std::int64_t n = 1; n <= 2000; ++n) {
      Rational dev = cz_index(t, n) - Rational(n) * delta;
      CHECK(dev <= Rational(t.n()));
      CHECK(-dev <= Rational(t.n()));
    }
    auto pairs = bezout_pairs(t, 6);
    CHECK(pairs.size() == 6);
    for (const auto& [c, d] : pairs) {
      auto alt = with_bezout_pair(t, c, d);
      CHECK(alt.k * alt.d - alt.m * alt.c == 1);
      CHECK_NOTHROW(verify_basis_identity(alt));
      for (std::int64_t n = 1; n <= 300; ++n) CHECK(cz_index(alt, n) == cz_index(t, n));
    }
  }
  auto t3 = model(3, {1, 1, 1});
  CHECK(cz_index(t3, 3) - 3 * mean_index(t3) == Rational(2));
  CHECK_THROWS_AS(with_bezout_pair(model(5, {1, 1, 1}), 0, 0), IdentityViolation);
}
