#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lensreeb {

/// Residue class a in Z_p, i.e. a free homotopy class of loops in the lens space.
struct HomotopyClass {
  std::int64_t a = 0;
  friend auto operator<=>(const HomotopyClass&, const HomotopyClass&) = default;
};

/// L_p(l_0, ..., l_n): quotient of S^{2n+1} by z_i -> exp(2 pi i l_i / p) z_i.
///
/// Raw weights are kept as given. `weights()` returns the reduced
/// representatives in {1, ..., p-1} (all ones when p = 1).
class LensSpace {
 public:
  /// Validates the action. Throws TooFewWeights, NonCoprimeWeight(i), or
  /// DomainError("InvalidOrder") when p < 1.
  static LensSpace make(std::int64_t p, std::vector<std::int64_t> weights);

  std::int64_t p() const { return p_; }
  /// Dimension parameter: the manifold has dimension 2n+1.
  std::int64_t n() const { return static_cast<std::int64_t>(reduced_.size()) - 1; }
  const std::vector<std::int64_t>& raw_weights() const { return raw_; }
  const std::vector<std::int64_t>& weights() const { return reduced_; }

  bool is_normalized() const { return reduced_.back() == 1; }
  bool is_sphere() const { return p_ == 1; }

  /// "L_5(1,1,1)"
  std::string label() const;

  friend bool operator==(const LensSpace& a, const LensSpace& b) { return a.p_ == b.p_ && a.reduced_ == b.reduced_; }

 private:
  LensSpace(std::int64_t p, std::vector<std::int64_t> raw, std::vector<std::int64_t> reduced)
      : p_(p), raw_(std::move(raw)), reduced_(std::move(reduced)) {}

  std::int64_t p_;
  std::vector<std::int64_t> raw_;
  std::vector<std::int64_t> reduced_;
};

struct NormalizedSpace {
  LensSpace space;
  /// c = l_n^{-1} mod p; weights were multiplied by c. Relabels class k as c*k mod p.
  std::int64_t relabel;
};

/// Rescales the weights so that the last one is 1.
NormalizedSpace normalize(const LensSpace& space);

/// (l_0 + ... + l_n) mod p.
std::int64_t first_chern_mod_p(const LensSpace& space);

/// Units of Z_p; {0} for the sphere.
std::vector<HomotopyClass> generator_classes(const LensSpace& space);

/// Least non-negative residue of a mod m, m >= 1.
std::int64_t residue(std::int64_t a, std::int64_t m);

/// Parses "1,1,1" into integers. Throws std::invalid_argument on bad input.
std::vector<std::int64_t> parse_weight_list(const std::string& text);

}  // namespace lensreeb
