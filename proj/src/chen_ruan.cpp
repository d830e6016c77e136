#include "lensreeb/chen_ruan.hpp"

#include <stdexcept>

#include "lensreeb/arith.hpp"
#include "lensreeb/errors.hpp"

namespace lensreeb {

void GradedTable::add(std::int64_t cls, const Rational& degree, std::int64_t dim) {
  if (dim <= 0) throw std::invalid_argument("graded table dimensions must be positive");
  entries_[cls][degree] += dim;
}

std::int64_t GradedTable::dim(std::int64_t cls, const Rational& degree) const {
  auto it = entries_.find(cls);
  if (it == entries_.end()) return 0;
  auto jt = it->second.find(degree);
  return jt == it->second.end() ? 0 : jt->second;
}

std::vector<Rational> GradedTable::degrees(std::int64_t cls) const {
  std::vector<Rational> out;
  auto it = entries_.find(cls);
  if (it == entries_.end()) return out;
  for (const auto& [deg, dim] : it->second) out.push_back(deg);
  return out;
}

std::vector<GradedTable::Row> GradedTable::rows() const {
  std::vector<Row> out;
  for (const auto& [cls, by_degree] : entries_) {
    for (const auto& [deg, dim] : by_degree) out.push_back({cls, deg, dim});
  }
  return out;
}

Sector sector(const LensSpace& space, std::int64_t k) {
  if (k < 0 || k >= space.p()) {
    throw DomainError("InvalidClass", "group element " + std::to_string(k) + " outside Z_" + std::to_string(space.p()));
  }
  Sector s{k, {}, Rational(0)};
  s.rotations.reserve(space.weights().size());
  for (std::int64_t w : space.weights()) {
    Rational rot = frac_part(Rational(Integer(k) * w, Integer(space.p())));
    s.age += rot;
    s.rotations.push_back(std::move(rot));
  }
  return s;
}

Rational age(const LensSpace& space, std::int64_t k) { return sector(space, k).age; }

GradedTable cr_table(const LensSpace& space) {
  GradedTable table;
  for (std::int64_t k = 0; k < space.p(); ++k) table.add(k, 2 * age(space, k));
  return table;
}

Rational cr_max_degree(const LensSpace& space) {
  Rational best(0);
  for (std::int64_t k = 1; k < space.p(); ++k) {
    Rational d = 2 * age(space, k);
    if (d > best) best = d;
  }
  return best;
}

ExistenceReport existence_report(const LensSpace& space) {
  ExistenceReport report;
  report.vanishing_from = 2 * space.n() + 2;
  report.assumptions =
      "SH(W) = 0 over Q for W = C^{n+1}/Z_p, hence H_CR(W) = SH_+(W) class by class; "
      "a nonzero class-k group forces a closed Reeb orbit in class k";
  for (const auto& row : cr_table(space).rows()) {
    if (row.degree >= Rational(report.vanishing_from)) {
      throw IdentityViolation("CR degree < 2n+2", row.degree.str(), std::to_string(report.vanishing_from));
    }
    report.verdicts.push_back({row.cls, row.degree, 1,
                               ">= 1 closed Reeb orbit in class " + std::to_string(row.cls) +
                                   " for every invariant contact form"});
    if (row.degree > report.max_degree) report.max_degree = row.degree;
  }
  return report;
}

}  // namespace lensreeb
