#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lensreeb/certify.hpp"
#include "lensreeb/chen_ruan.hpp"
#include "lensreeb/ellipsoid.hpp"
#include "lensreeb/lens.hpp"
#include "lensreeb/toric.hpp"

namespace lensreeb {

using Json = nlohmann::ordered_json;

/// Native JSON integer when it fits in 64 bits, decimal string otherwise.
Json int_json(const Integer& x);
/// "num/den"
Json to_json(const Rational& q);
Json to_json(const IntVector& v);
Json to_json(const LensSpace& space);
Json to_json(const GradedTable& table);
Json to_json(const ExistenceReport& report);
Json to_json(const ToricModel& model);
Json to_json(const KernelVerdict& verdict);
Json to_json(const HcTable& table);
Json to_json(const SpectrumEntry& entry);
Json to_json(const ConvexityVerdict& verdict);
Json to_json(const OrbitBudget& budget);
Json to_json(const InequalityVerdict& verdict);
Json to_json(const MatchingVerdict& verdict);
Json to_json(const CarrierDensity& density);

/// {"p": int, "class": int, "orbits": [{"label", "class", "mean_index": "num/den"}]}
OrbitBudget budget_from_json(const Json& j);

/// Column-aligned plain-text table.
std::string format_table(const std::vector<std::string>& headers, const std::vector<std::vector<std::string>>& rows);

/// FNV-1a 64-bit digest as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace lensreeb
