#pragma once

#include <vector>

#include "lensreeb/rational.hpp"

namespace lensreeb {

using IntVector = std::vector<Integer>;
/// Row-major square or rectangular integer matrix.
using IntMatrix = std::vector<IntVector>;

/// Greatest integer <= q.
Integer rat_floor(const Rational& q);
/// q - floor(q), always in [0, 1).
Rational frac_part(const Rational& q);

/// floor(a / b) for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
/// Least non-negative residue of a modulo m > 0.
Integer mod_floor(const Integer& a, const Integer& m);

struct BezoutResult {
  Integer g;  // gcd, always > 0
  Integer u;
  Integer v;  // u*x + v*y == g
};

/// Extended Euclid. Throws BothZero when x == y == 0.
BezoutResult ext_gcd(const Integer& x, const Integer& y);

/// Inverse of x modulo p in [1, p-1]. Requires p >= 2; throws NotCoprime if gcd(x, p) != 1.
Integer mod_inverse(const Integer& x, const Integer& p);

/// Exact determinant. Cofactor expansion up to 4x4, Bareiss elimination above.
Integer det_int(const IntMatrix& m);

IntVector mat_vec(const IntMatrix& m, const IntVector& v);

}  // namespace lensreeb
