#include "lensreeb/arith.hpp"

#include <stdexcept>
#include <utility>

#include "lensreeb/errors.hpp"

namespace lensreeb {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a.sign() < 0) != (b.sign() < 0))) --q;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r.sign() < 0) r += m;
  return r;
}

Integer rat_floor(const Rational& q) { return floor_div(q.num(), q.den()); }

Rational frac_part(const Rational& q) { return Rational(mod_floor(q.num(), q.den()), q.den()); }

BezoutResult ext_gcd(const Integer& x, const Integer& y) {
  if (x == 0 && y == 0) throw BothZero();
  Integer r0 = abs(x), r1 = abs(y);
  Integer s0 = 1, s1 = 0;
  Integer t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (x.sign() < 0) s0 = -s0;
  if (y.sign() < 0) t0 = -t0;
  return {r0, s0, t0};
}

Integer mod_inverse(const Integer& x, const Integer& p) {
  if (p < 2) throw DomainError("InvalidModulus", "mod_inverse: modulus must be >= 2");
  Integer r = mod_floor(x, p);
  if (r == 0) throw NotCoprime(x.str(), p.str());
  auto [g, u, v] = ext_gcd(r, p);
  if (g != 1) throw NotCoprime(x.str(), p.str());
  return mod_floor(u, p);
}

namespace {

Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Integer det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    IntMatrix minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      IntVector row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Integer term = m[0][col] * cofactor_det(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

Integer bareiss_det(IntMatrix a) {
  const std::size_t n = a.size();
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // exact division: Sylvester's identity
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

Integer det_int(const IntMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw NonSquare(m.size(), row.size());
  }
  if (m.size() <= 4) return cofactor_det(m);
  return bareiss_det(m);
}

IntVector mat_vec(const IntMatrix& m, const IntVector& v) {
  IntVector out(m.size(), Integer(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

}  // namespace lensreeb
