#include "lensreeb/certify.hpp"

#include <limits>
#include <map>
#include <numeric>
#include <queue>

#include "lensreeb/arith.hpp"
#include "lensreeb/errors.hpp"

namespace lensreeb {

void OrbitBudget::validate() const {
  if (p < 1) throw DomainError("InvalidOrder", "budget p must be >= 1");
  if (target_class < 0 || target_class >= p) {
    throw DomainError("InvalidClass", "target class " + std::to_string(target_class) + " outside Z_" + std::to_string(p));
  }
  for (const auto& orbit : orbits) {
    if (orbit.mean_index.sign() <= 0) throw NonpositiveMeanIndex(orbit.mean_index.str());
    if (orbit.cls < 0 || orbit.cls >= p) {
      throw DomainError("InvalidClass", "orbit '" + orbit.label + "' has class outside Z_" + std::to_string(p));
    }
  }
  if (in_target_class().empty()) throw EmptyBudget();
}

std::vector<BudgetOrbit> OrbitBudget::in_target_class() const {
  std::vector<BudgetOrbit> out;
  for (const auto& orbit : orbits) {
    if (orbit.cls == target_class) out.push_back(orbit);
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "CONSISTENT";
    case Verdict::Contradiction: return "CONTRADICTION";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    case Verdict::FeasibleAtHorizon: return "FEASIBLE-AT-HORIZON";
    case Verdict::Infeasible: return "INFEASIBLE";
  }
  return "UNKNOWN";
}

CarrierDensity carrier_density() { return {Rational(1, 2), std::nullopt, false}; }

CarrierDensity carrier_density(const Rational& k0, std::int64_t horizon) {
  if (horizon < 1) throw DomainError("InvalidHorizon", "density horizon must be >= 1");
  CarrierDensity out = carrier_density();
  // #{i >= 0 : k0 + 2i <= horizon}
  Rational room = Rational(horizon) - k0;
  Integer count = room.sign() < 0 ? Integer(0) : rat_floor(room / 2) + 1;
  out.estimate = Rational(count, Integer(horizon));
  out.horizon_warning = horizon < kMinReliableHorizon;
  return out;
}

Rational orbit_density(std::int64_t p, const Rational& delta) {
  if (delta.sign() <= 0) throw NonpositiveMeanIndex(delta.str());
  if (p < 1) throw DomainError("InvalidOrder", "p must be >= 1");
  return Rational(1) / (Rational(p) * delta);
}

InequalityVerdict check_final_inequality(const OrbitBudget& budget) {
  budget.validate();
  InequalityVerdict out{Verdict::Consistent, Rational(budget.p, 2), Rational(0), false};
  for (const auto& orbit : budget.in_target_class()) out.rhs += Rational(1) / orbit.mean_index;
  out.verdict = out.lhs <= out.rhs ? Verdict::Consistent : Verdict::Contradiction;
  out.equality = out.lhs == out.rhs;
  return out;
}

Verdict single_orbit_contradiction(std::int64_t p, const Rational& delta_simple) {
  if (delta_simple.sign() <= 0) throw NonpositiveMeanIndex(delta_simple.str());
  if (p < 1) throw DomainError("InvalidOrder", "p must be >= 1");
  return delta_simple > Rational(2, p) ? Verdict::Contradiction : Verdict::Inconclusive;
}

Rational iterate_mean_relation(const Rational& delta_pth, std::int64_t p) {
  if (p < 1) throw DomainError("InvalidOrder", "p must be >= 1");
  return delta_pth / Rational(p);
}

namespace {

Integer ceil_rat(const Rational& q) { return -rat_floor(-q); }

// Hopcroft-Karp on a left-indexed adjacency list.
class BipartiteMatcher {
 public:
  BipartiteMatcher(const std::vector<std::vector<int>>& adj, int right_size)
      : adj_(adj), match_left_(adj.size(), -1), match_right_(static_cast<std::size_t>(right_size), -1),
        dist_(adj.size()) {}

  int solve() {
    int matched = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (match_left_[u] == -1 && dfs(static_cast<int>(u))) ++matched;
      }
    }
    return matched;
  }

  const std::vector<int>& match_left() const { return match_left_; }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> queue;
    bool found = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == -1) {
        dist_[u] = 0;
        queue.push(static_cast<int>(u));
      } else {
        dist_[u] = kInf;
      }
    }
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int v : adj_[static_cast<std::size_t>(u)]) {
        int w = match_right_[static_cast<std::size_t>(v)];
        if (w == -1) {
          found = true;
        } else if (dist_[static_cast<std::size_t>(w)] == kInf) {
          dist_[static_cast<std::size_t>(w)] = dist_[static_cast<std::size_t>(u)] + 1;
          queue.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : adj_[static_cast<std::size_t>(u)]) {
      int w = match_right_[static_cast<std::size_t>(v)];
      if (w == -1 || (dist_[static_cast<std::size_t>(w)] == dist_[static_cast<std::size_t>(u)] + 1 && dfs(w))) {
        match_left_[static_cast<std::size_t>(u)] = v;
        match_right_[static_cast<std::size_t>(v)] = u;
        return true;
      }
    }
    dist_[static_cast<std::size_t>(u)] = kInf;
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> dist_;
};

}  // namespace

MatchingVerdict matching_feasibility(const OrbitBudget& budget, std::int64_t horizon, std::int64_t n,
                                     const Rational& k0) {
  if (horizon < 1) throw DomainError("InvalidHorizon", "matching horizon K must be >= 1");
  if (n < 1) throw DomainError("InvalidDimension", "n must be >= 1");
  budget.validate();
  const auto orbits = budget.in_target_class();
  const std::int64_t window = 3 * n;
  const Integer p(budget.p);

  std::map<std::pair<std::size_t, Integer>, int> right_ids;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(horizon) + 1);
  for (std::int64_t k = 0; k <= horizon; ++k) {
    const Rational degree = k0 + Rational(2 * k);
    for (std::size_t j = 0; j < orbits.size(); ++j) {
      const Rational& delta = orbits[j].mean_index;
      // iterates N = 1 + i p with |N delta - degree| <= window
      Rational lo = ((degree - Rational(window)) / delta - 1) / Rational(p);
      Rational hi = ((degree + Rational(window)) / delta - 1) / Rational(p);
      Integer i_lo = ceil_rat(lo);
      if (i_lo < 0) i_lo = 0;
      for (Integer i = i_lo; Rational(i) <= hi; ++i) {
        auto [it, inserted] = right_ids.try_emplace({j, i}, static_cast<int>(right_ids.size()));
        adj[static_cast<std::size_t>(k)].push_back(it->second);
      }
    }
  }

  BipartiteMatcher matcher(adj, static_cast<int>(right_ids.size()));
  const int matched = matcher.solve();
  MatchingVerdict out{Verdict::FeasibleAtHorizon, horizon + 1, matched, static_cast<std::int64_t>(right_ids.size()),
                      k0, window, std::nullopt};
  if (matched < horizon + 1) {
    out.verdict = Verdict::Infeasible;
    for (std::size_t k = 0; k < adj.size(); ++k) {
      if (matcher.match_left()[k] == -1) {
        out.first_unmatched = k0 + Rational(2 * static_cast<std::int64_t>(k));
        break;
      }
    }
  }
  return out;
}

OrbitBudget budget_from_ellipsoid(const EllipsoidModel& model, std::int64_t cls) {
  const std::int64_t p = model.space().p();
  if (cls < 0 || cls >= p || (p > 1 && std::gcd(cls, p) != 1)) {
    throw DomainError("InvalidClass", "class " + std::to_string(cls) + " is not a generator of Z_" + std::to_string(p));
  }
  OrbitBudget budget;
  budget.p = p;
  budget.target_class = cls;
  for (std::size_t j = 0; j < model.axes().size(); ++j) {
    std::int64_t first = residue(cls * model.space().weights()[j], p);
    if (first == 0) first = p;
    budget.orbits.push_back(
        {"axis " + std::to_string(j), cls, Rational(first) * ellipsoid_mean_index(model, j) / Rational(p)});
  }
  return budget;
}

}  // namespace lensreeb
