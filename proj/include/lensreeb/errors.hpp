#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lensreeb {

/// Invalid input to a domain operation (bad weights, non-coprime arguments, ...).
/// The CLI maps these to exit code 1.
class DomainError : public std::invalid_argument {
 public:
  DomainError(std::string kind, const std::string& what) : std::invalid_argument(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class BothZero : public DomainError {
 public:
  BothZero() : DomainError("BothZero", "ext_gcd: both arguments are zero") {}
};

class NotCoprime : public DomainError {
 public:
  NotCoprime(const std::string& x, const std::string& p)
      : DomainError("NotCoprime", "mod_inverse: " + x + " is not invertible modulo " + p) {}
};

class NonSquare : public DomainError {
 public:
  NonSquare(std::size_t rows, std::size_t cols)
      : DomainError("NonSquare", "det_int: matrix is " + std::to_string(rows) + "x" + std::to_string(cols)) {}
};

class NonCoprimeWeight : public DomainError {
 public:
  explicit NonCoprimeWeight(std::size_t index)
      : DomainError("NonCoprimeWeight", "weight " + std::to_string(index) + " is not coprime to p"), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class TooFewWeights : public DomainError {
 public:
  TooFewWeights() : DomainError("TooFewWeights", "a lens space needs at least two weights") {}
};

class NotNormalized : public DomainError {
 public:
  NotNormalized() : DomainError("NotNormalized", "toric model requires the last weight to be 1 mod p") {}
};

class ResonantAxes : public DomainError {
 public:
  ResonantAxes(std::size_t i, std::size_t j, std::int64_t iterate)
      : DomainError("ResonantAxes", "axes " + std::to_string(i) + " and " + std::to_string(j) +
                                        " resonate at iterate " + std::to_string(iterate)),
        i_(i), j_(j), iterate_(iterate) {}
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  std::int64_t iterate() const { return iterate_; }

 private:
  std::size_t i_, j_;
  std::int64_t iterate_;
};

class NonpositiveMeanIndex : public DomainError {
 public:
  explicit NonpositiveMeanIndex(const std::string& value)
      : DomainError("NonpositiveMeanIndex", "mean index must be positive, got " + value) {}
};

class EmptyBudget : public DomainError {
 public:
  EmptyBudget() : DomainError("EmptyBudget", "budget has no orbit in the target class") {}
};

/// A proven algebraic identity failed to hold. Always an implementation bug or a
/// formula defect, never bad input. The CLI maps these to exit code 2.
class IdentityViolation : public std::logic_error {
 public:
  IdentityViolation(std::string identity, std::string lhs, std::string rhs)
      : std::logic_error(identity + ": " + lhs + " != " + rhs),
        identity_(std::move(identity)), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}
  const std::string& identity() const { return identity_; }
  const std::string& lhs() const { return lhs_; }
  const std::string& rhs() const { return rhs_; }

 private:
  std::string identity_, lhs_, rhs_;
};

/// kd - mc = 1 had no solution.
class BezoutFailure : public IdentityViolation {
 public:
  BezoutFailure(const std::string& k, const std::string& m) : IdentityViolation("gcd(k, m) = 1", "gcd(" + k + ", " + m + ")", "1") {}
};

}  // namespace lensreeb
