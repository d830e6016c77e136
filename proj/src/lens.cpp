#include "lensreeb/lens.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lensreeb/arith.hpp"
#include "lensreeb/errors.hpp"

namespace lensreeb {

std::int64_t residue(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

LensSpace LensSpace::make(std::int64_t p, std::vector<std::int64_t> weights) {
  if (p < 1) throw DomainError("InvalidOrder", "group order p must be >= 1, got " + std::to_string(p));
  if (weights.size() < 2) throw TooFewWeights();
  std::vector<std::int64_t> reduced(weights.size(), 1);
  if (p >= 2) {
    for (std::size_t i = 0; i < weights.size(); ++i) {
      std::int64_t r = residue(weights[i], p);
      if (std::gcd(r, p) != 1) throw NonCoprimeWeight(i);
      reduced[i] = r;
    }
  }
  return LensSpace(p, std::move(weights), std::move(reduced));
}

std::string LensSpace::label() const {
  std::ostringstream os;
  os << "L_" << p_ << "(";
  for (std::size_t i = 0; i < reduced_.size(); ++i) os << (i ? "," : "") << reduced_[i];
  os << ")";
  return os.str();
}

NormalizedSpace normalize(const LensSpace& space) {
  const std::int64_t p = space.p();
  if (p == 1) return {LensSpace::make(1, std::vector<std::int64_t>(space.weights().size(), 1)), 1};
  const auto c = static_cast<std::int64_t>(mod_inverse(space.weights().back(), p));
  std::vector<std::int64_t> scaled;
  scaled.reserve(space.weights().size());
  for (std::int64_t w : space.weights()) scaled.push_back(residue((c % p) * w, p));
  return {LensSpace::make(p, std::move(scaled)), c};
}

std::int64_t first_chern_mod_p(const LensSpace& space) {
  std::int64_t sum = 0;
  for (std::int64_t w : space.weights()) sum = residue(sum + w, space.p());
  return sum;
}

std::vector<HomotopyClass> generator_classes(const LensSpace& space) {
  if (space.p() == 1) return {HomotopyClass{0}};
  std::vector<HomotopyClass> out;
  for (std::int64_t a = 1; a < space.p(); ++a) {
    if (std::gcd(a, space.p()) == 1) out.push_back({a});
  }
  return out;
}

std::vector<std::int64_t> parse_weight_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    const auto first = item.find_first_not_of(" \t");
    item = first == std::string::npos ? std::string{} : item.substr(first, item.find_last_not_of(" \t") - first + 1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("bad integer list entry '" + item + "' in '" + text + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace lensreeb
