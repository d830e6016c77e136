#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lensreeb/lens.hpp"
#include "lensreeb/rational.hpp"

namespace lensreeb {

/// Per homotopy class, a map from rational degree to dimension. Absent entries are zero.
class GradedTable {
 public:
  struct Row {
    std::int64_t cls;
    Rational degree;
    std::int64_t dim;
  };

  void add(std::int64_t cls, const Rational& degree, std::int64_t dim = 1);
  std::int64_t dim(std::int64_t cls, const Rational& degree) const;
  /// Degrees present for one class, ascending.
  std::vector<Rational> degrees(std::int64_t cls) const;
  /// All rows ordered by (class, degree).
  std::vector<Row> rows() const;
  std::size_t num_classes() const { return entries_.size(); }

  friend bool operator==(const GradedTable&, const GradedTable&) = default;

 private:
  std::map<std::int64_t, std::map<Rational, std::int64_t>> entries_;
};

/// Twisted (k != 0) or untwisted (k = 0) sector of C^{n+1}/Z_p.
struct Sector {
  std::int64_t k;
  std::vector<Rational> rotations;  // {k l_i / p}
  Rational age;
};

Sector sector(const LensSpace& space, std::int64_t k);

/// Sum over i = 0..n of {k l_i / p}.
Rational age(const LensSpace& space, std::int64_t k);

/// One copy of Q per class k, in degree 2 age(k).
GradedTable cr_table(const LensSpace& space);

Rational cr_max_degree(const LensSpace& space);

struct ExistenceVerdict {
  std::int64_t cls;
  Rational witness_degree;
  /// Lower bound on closed Reeb orbits in this class for every invariant contact form.
  std::int64_t min_orbits;
  std::string conclusion;
};

struct ExistenceReport {
  std::vector<ExistenceVerdict> verdicts;
  Rational max_degree;
  /// Positive CR cohomology vanishes in every degree >= this bound.
  std::int64_t vanishing_from;
  std::string assumptions;
};

ExistenceReport existence_report(const LensSpace& space);

}  // namespace lensreeb
