#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lensreeb/arith.hpp"
#include "lensreeb/chen_ruan.hpp"
#include "lensreeb/lens.hpp"
#include "lensreeb/rational.hpp"

namespace lensreeb {

/// Toric presentation of a normalized lens space L_p(l_0, ..., l_{n-1}, 1).
///
/// The moment cone in R^{n+1} has facet normals
///   nu_0 = (0, ..., 0, k, m)
///   nu_j = (e_j, 0, m)                       j = 1, ..., n-1
///   nu_n = (-l_1, ..., -l_{n-1}, q, m)
/// and eta = (0, ..., 0, c, d) completes {nu_0, ..., nu_{n-1}} to a Z-basis.
struct ToricModel {
  LensSpace space;
  Integer m;  // minimal positive m with m * c_1 = 0 in Z_p; divides p
  Integer k;  // minimal k >= 0 with k * (l_0 + ... + l_n) = p/m mod p
  Integer q;  // k (l_1 + ... + l_n) - p/m
  std::vector<IntVector> normals;
  Integer c;
  Integer d;  // k d - m c = 1
  IntVector eta;
  Integer a0;  // l_1 + ... + l_n - d p/m

  std::int64_t p() const { return space.p(); }
  std::int64_t n() const { return space.n(); }
  /// beta = [nu_0 | ... | nu_n], normals as columns.
  IntMatrix beta() const;
};

/// Builds the model with the canonical Bezout pair (least non-negative d).
/// Every structural identity is checked before returning; a failure throws IdentityViolation.
ToricModel build_toric_model(const LensSpace& space);

/// Same model with a different solution (c, d) of k d - m c = 1; a0 and eta follow.
ToricModel with_bezout_pair(const ToricModel& model, const Integer& c, const Integer& d);

/// `count` distinct Bezout pairs (c + t k, d + t m), t = 0, 1, -1, 2, -2, ...
std::vector<std::pair<Integer, Integer>> bezout_pairs(const ToricModel& model, std::size_t count);

/// det(beta); throws IdentityViolation unless |det| = p.
Integer verify_determinant(const ToricModel& model);

/// nu_n = a0 nu_0 - sum_j l_j nu_j + p eta; throws IdentityViolation otherwise.
void verify_basis_identity(const ToricModel& model);

enum class KernelStatus {
  Generator,    // the displayed vector has order p
  DegenerateK0, // k = 0: the vector is integral; lens space still certified by det = +-p
  Deficient,    // k != 0 but order < p: the vector does not generate the order-p kernel
};

std::string to_string(KernelStatus status);

struct KernelVerdict {
  std::vector<Rational> vector;  // (-q/p, k l_1/p, ..., k l_{n-1}/p, k/p)
  IntVector image;               // beta * vector, integral
  Integer order;                 // least t > 0 with t * vector integral
  KernelStatus status;
};

/// Throws IdentityViolation when beta * v is not integral. Order deficiency is
/// reported in the verdict status, not thrown.
KernelVerdict verify_kernel_generator(const ToricModel& model);

/// Conley-Zehnder index of the N-th iterate of the distinguished orbit:
/// 2 (floor(N a0 / p) + sum_{j=1}^{n-1} floor(-N l_j / p) + N d / m) + n.
Rational cz_index(const ToricModel& model, std::int64_t iterate);

/// Closed form of lim mu(gamma^N) / N.
Rational mean_index(const ToricModel& model);

struct HcTable {
  std::int64_t cls;
  Rational k_a;  // lowest nonzero degree in the class
  std::int64_t realized_at;  // iterate N attaining k_a
  GradedTable table;
};

/// Degrees k_a, k_a + 2, ... up to `degree_cap` in class a.
HcTable hc_table(const ToricModel& model, std::int64_t cls, const Rational& degree_cap);

/// Least k_a + 2k >= 2n + 1.
Rational k0_threshold(const ToricModel& model, std::int64_t cls);

/// Checks mu(N + p) - mu(N) = 2 for 1 <= N <= max_iter. Throws IdentityViolation
/// naming the first offending N.
void verify_periodicity(const ToricModel& model, std::int64_t max_iter);

}  // namespace lensreeb
