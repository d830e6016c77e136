#include "lensreeb/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "lensreeb/errors.hpp"

namespace lensreeb {

Json to_json(const Rational& q) { return q.str(); }

Json int_json(const Integer& x) {
  if (x >= INT64_MIN && x <= INT64_MAX) return static_cast<std::int64_t>(x);
  return x.str();
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(int_json(x));
  return out;
}

namespace {

}  // namespace

Json to_json(const LensSpace& space) {
  return {{"p", space.p()}, {"weights", space.weights()}, {"n", space.n()}};
}

Json to_json(const GradedTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows()) rows.push_back({{"class", row.cls}, {"degree", to_json(row.degree)}, {"dim", row.dim}});
  return rows;
}

Json to_json(const ExistenceReport& report) {
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) {
    verdicts.push_back({{"class", v.cls}, {"witness_degree", to_json(v.witness_degree)}, {"min_orbits", v.min_orbits},
                        {"conclusion", v.conclusion}});
  }
  return {{"verdicts", verdicts},
          {"max_degree", to_json(report.max_degree)},
          {"vanishing_from", report.vanishing_from},
          {"assumptions", report.assumptions}};
}

Json to_json(const ToricModel& model) {
  Json normals = Json::array();
  for (const auto& nu : model.normals) normals.push_back(to_json(nu));
  return {{"space", to_json(model.space)}, {"m", int_json(model.m)}, {"k", int_json(model.k)},
          {"q", int_json(model.q)},        {"c", int_json(model.c)}, {"d", int_json(model.d)},
          {"a0", int_json(model.a0)},      {"normals", normals},     {"eta", to_json(model.eta)}};
}

Json to_json(const KernelVerdict& verdict) {
  Json vec = Json::array();
  for (const auto& x : verdict.vector) vec.push_back(to_json(x));
  return {{"vector", vec}, {"image", to_json(verdict.image)}, {"order", int_json(verdict.order)},
          {"status", to_string(verdict.status)}};
}

Json to_json(const HcTable& table) {
  Json degrees = Json::array();
  for (const auto& d : table.table.degrees(table.cls)) degrees.push_back(to_json(d));
  return {{"class", table.cls}, {"k_a", to_json(table.k_a)}, {"realized_at", table.realized_at}, {"degrees", degrees}};
}

Json to_json(const SpectrumEntry& entry) {
  return {{"axis", entry.axis},
          {"iterate", entry.iterate},
          {"action", to_json(entry.action)},
          {"mean_index", to_json(entry.mean_index)},
          {"mu_lift", entry.mu_lift},
          {"simple_in_class", entry.simple_in_class}};
}

Json to_json(const ConvexityVerdict& verdict) {
  return {{"pass", verdict.pass},
          {"min_index", verdict.min_index},
          {"min_axis", verdict.min_axis},
          {"min_iterate", verdict.min_iterate},
          {"resonant_iterates", verdict.resonant_iterates}};
}

Json to_json(const OrbitBudget& budget) {
  Json orbits = Json::array();
  for (const auto& o : budget.orbits) {
    orbits.push_back({{"label", o.label}, {"class", o.cls}, {"mean_index", to_json(o.mean_index)}});
  }
  return {{"p", budget.p}, {"class", budget.target_class}, {"orbits", orbits}};
}

Json to_json(const InequalityVerdict& verdict) {
  return {{"verdict", to_string(verdict.verdict)},
          {"lhs", to_json(verdict.lhs)},
          {"rhs", to_json(verdict.rhs)},
          {"equality", verdict.equality}};
}

Json to_json(const MatchingVerdict& verdict) {
  Json out = {{"verdict", to_string(verdict.verdict)}, {"carriers", verdict.carriers}, {"matched", verdict.matched},
              {"candidates", verdict.candidates},     {"k0", to_json(verdict.k0)},      {"window", verdict.window}};
  out["first_unmatched"] = verdict.first_unmatched ? to_json(*verdict.first_unmatched) : Json(nullptr);
  return out;
}

Json to_json(const CarrierDensity& density) {
  Json out = {{"symbolic", to_json(density.symbolic)}};
  out["estimate"] = density.estimate ? to_json(*density.estimate) : Json(nullptr);
  out["horizon_warning"] = density.horizon_warning;
  return out;
}

OrbitBudget budget_from_json(const Json& j) {
  try {
    OrbitBudget budget;
    budget.p = j.at("p").get<std::int64_t>();
    budget.target_class = j.at("class").get<std::int64_t>();
    for (const auto& o : j.at("orbits")) {
      BudgetOrbit orbit;
      orbit.label = o.value("label", "");
      orbit.cls = o.at("class").get<std::int64_t>();
      const auto& mi = o.at("mean_index");
      orbit.mean_index = mi.is_string() ? Rational::parse(mi.get<std::string>()) : Rational(mi.get<std::int64_t>());
      budget.orbits.push_back(std::move(orbit));
    }
    return budget;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("InvalidBudget", std::string("malformed budget JSON: ") + e.what());
  }
}

std::string format_table(const std::vector<std::string>& headers, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < width.size(); ++c) {
      std::string cell = c < cells.size() ? cells[c] : "";
      os << cell;
      if (c + 1 < width.size()) os << std::string(width[c] - cell.size() + 2, ' ');
    }
    os << '\n';
  };
  emit(headers);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  emit(rule);
  for (const auto& row : rows) emit(row);
  return os.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lensreeb
