#include "lensreeb/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "lensreeb/errors.hpp"

namespace lensreeb {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string unquote(std::string s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) return s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string> split_list(std::string value) {
  value = trim(value);
  if (!value.empty() && value.front() == '[') {
    if (value.back() != ']') throw DomainError("InvalidConfig", "unterminated list '" + value + "'");
    value = value.substr(1, value.size() - 2);
  }
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = unquote(trim(item));
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::int64_t to_int(const std::string& key, const std::string& value) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
    throw DomainError("InvalidConfig", "key '" + key + "' expects an integer, got '" + value + "'");
  }
  return out;
}

Json point_json(const SweepPoint& point) { return {{"p", point.p}, {"weights", point.weights}}; }

enum class Status { Pass, Fail, Skip };
struct Outcome {
  Status status = Status::Pass;
  std::string detail;
};

Outcome fail(std::string detail) { return {Status::Fail, std::move(detail)}; }
Outcome skip() { return {Status::Skip, {}}; }

struct ModelChecks {
  std::optional<ToricModel> model;
  std::string build_error;
};

Outcome with_model(const ModelChecks& mc, const std::function<Outcome(const ToricModel&)>& body) {
  if (!mc.model) return fail("model construction: " + mc.build_error);
  try {
    return body(*mc.model);
  } catch (const IdentityViolation& e) {
    return fail(e.what());
  }
}

Outcome suite_determinant(const ToricModel& model) {
  verify_determinant(model);
  return {};
}

Outcome suite_basis(const ToricModel& model) {
  verify_basis_identity(model);
  return {};
}

Outcome suite_kernel(const ToricModel& model) {
  KernelVerdict v = verify_kernel_generator(model);
  if (v.status == KernelStatus::Deficient) {
    return fail("kernel vector order " + v.order.str() + " != p = " + std::to_string(model.p()) + " (k = " +
                model.k.str() + ", m = " + model.m.str() + ")");
  }
  return {};
}

Outcome suite_bezout(const ToricModel& model) {
  if (model.k * model.d - model.m * model.c != 1) return fail("k d - m c != 1");
  if (boost::multiprecision::gcd(model.k, model.m) != 1) return fail("gcd(k, m) != 1");
  if (Integer(model.p()) % model.m != 0) return fail("m does not divide p");
  return {};
}

Outcome suite_bezout_invariance(const ToricModel& model, std::int64_t max_iter) {
  std::vector<ToricModel> variants;
  for (const auto& [c, d] : bezout_pairs(model, 5)) variants.push_back(with_bezout_pair(model, c, d));
  for (std::int64_t big_n = 1; big_n <= max_iter; ++big_n) {
    Rational ref = cz_index(model, big_n);
    for (const auto& v : variants) {
      if (cz_index(v, big_n) != ref) return fail("index differs for (c, d) = (" + v.c.str() + ", " + v.d.str() + ") at N = " + std::to_string(big_n));
    }
  }
  return {};
}

Outcome suite_periodicity(const ToricModel& model, std::int64_t max_iter) {
  verify_periodicity(model, max_iter);
  return {};
}

Outcome suite_mean_sandwich(const ToricModel& model, std::int64_t max_iter) {
  const Rational delta = mean_index(model);
  const Rational bound(model.n());
  for (std::int64_t big_n = 1; big_n <= max_iter; ++big_n) {
    Rational gap = cz_index(model, big_n) - Rational(big_n) * delta;
    if (gap > bound || -gap > bound) return fail("|mu - N Delta| = " + gap.str() + " at N = " + std::to_string(big_n));
  }
  return {};
}

Outcome suite_sphere(const ToricModel& model, std::int64_t max_iter) {
  if (model.p() != 1) return skip();
  for (std::int64_t big_n = 1; big_n <= max_iter; ++big_n) {
    if (cz_index(model, big_n) != Rational(model.n() + 2 * big_n)) return fail("mu != n + 2N at N = " + std::to_string(big_n));
  }
  return {};
}

Outcome suite_cr_bounds(const LensSpace& space) {
  const Rational upper(2 * space.n() + 2);
  const GradedTable table = cr_table(space);
  for (const auto& row : table.rows()) {
    if (row.cls == 0 && row.degree != Rational(0)) return fail("d_0 != 0");
    if (row.cls != 0 && (row.degree <= Rational(0) || row.degree >= upper)) {
      return fail("d_" + std::to_string(row.cls) + " = " + row.degree.str() + " outside (0, 2n+2)");
    }
  }
  // rescaling covariance through the normalization: d_k(c l) = d_{c k}(l)
  const NormalizedSpace ns = normalize(space);
  for (std::int64_t k = 0; k < space.p(); ++k) {
    if (age(ns.space, k) != age(space, residue(ns.relabel * k, space.p()))) {
      return fail("rescaling covariance fails at k = " + std::to_string(k));
    }
  }
  return {};
}

// Normalizing with different coordinates last presents the same lens space; after
// mapping classes back, the per-class lowest degree k_a must not depend on the choice.
Outcome suite_relabel_consistency(const LensSpace& space) {
  const std::int64_t p = space.p();
  std::optional<std::vector<Rational>> reference;
  for (std::size_t last = 0; last < space.weights().size(); ++last) {
    std::vector<std::int64_t> permuted = space.weights();
    std::swap(permuted[last], permuted.back());
    const NormalizedSpace ns = normalize(LensSpace::make(p, permuted));
    const ToricModel model = build_toric_model(ns.space);
    std::vector<Rational> k_by_class;
    for (std::int64_t a = 0; a < p; ++a) {
      // original class a is normalized class l_last * a
      std::int64_t normalized = residue(residue(permuted.back(), p) * a, p);
      k_by_class.push_back(hc_table(model, normalized, Rational(0)).k_a);
    }
    if (!reference) {
      reference = std::move(k_by_class);
    } else if (*reference != k_by_class) {
      return fail("k_a depends on which weight is normalized (coordinate " + std::to_string(last) + ")");
    }
  }
  return {};
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t range) { return rng() % range; }

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names{"determinant", "basis",        "kernel",    "bezout",
                                              "bezout_invariance", "periodicity", "mean_sandwich", "sphere",
                                              "cr_bounds", "relabel_consistency"};
  return names;
}

SweepConfig parse_sweep_config(const std::string& text) {
  SweepConfig config;
  config.checks = known_suites();
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw DomainError("InvalidConfig", "line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = unquote(trim(line.substr(eq + 1)));
    if (key == "p_min") {
      config.p_min = to_int(key, value);
    } else if (key == "p_max") {
      config.p_max = to_int(key, value);
    } else if (key == "n_values") {
      config.n_values.clear();
      for (const auto& item : split_list(value)) config.n_values.push_back(to_int(key, item));
    } else if (key == "weight_mode") {
      if (value == "exhaustive") {
        config.weight_mode = WeightMode::Exhaustive;
      } else if (value == "random") {
        config.weight_mode = WeightMode::Random;
      } else {
        throw DomainError("InvalidConfig", "weight_mode must be exhaustive or random, got '" + value + "'");
      }
    } else if (key == "seed") {
      config.seed = static_cast<std::uint64_t>(to_int(key, value));
    } else if (key == "count") {
      config.count = to_int(key, value);
    } else if (key == "checks") {
      config.checks = split_list(value);
    } else if (key == "output") {
      config.output = value;
    } else if (key == "max_iter") {
      config.max_iter = to_int(key, value);
    } else if (key == "fail_fast") {
      config.fail_fast = value == "true";
    } else if (key == "threads") {
      config.threads = static_cast<unsigned>(to_int(key, value));
    } else {
      throw DomainError("InvalidConfig", "unknown key '" + key + "'");
    }
  }
  if (config.p_min < 1 || config.p_max < config.p_min) throw DomainError("InvalidConfig", "need 1 <= p_min <= p_max");
  if (config.n_values.empty()) throw DomainError("InvalidConfig", "n_values is empty");
  for (auto n : config.n_values) {
    if (n < 1) throw DomainError("InvalidConfig", "n values must be >= 1");
  }
  if (config.weight_mode == WeightMode::Random) {
    if (!config.seed) throw DomainError("InvalidConfig", "weight_mode = random requires a seed");
    if (config.count < 1) throw DomainError("InvalidConfig", "weight_mode = random requires count >= 1");
  }
  for (const auto& name : config.checks) {
    if (std::find(known_suites().begin(), known_suites().end(), name) == known_suites().end()) {
      throw DomainError("InvalidConfig", "unknown check suite '" + name + "'");
    }
  }
  if (config.max_iter < 1) throw DomainError("InvalidConfig", "max_iter must be >= 1");
  return config;
}

std::int64_t SweepReport::failures() const {
  std::int64_t total = 0;
  for (const auto& [name, tally] : suites) total += tally.failed;
  return total;
}

Json SweepReport::to_json(const SweepConfig& config) const {
  Json cfg = {{"p_min", config.p_min},
              {"p_max", config.p_max},
              {"n_values", config.n_values},
              {"weight_mode", config.weight_mode == WeightMode::Exhaustive ? "exhaustive" : "random"}};
  cfg["seed"] = config.seed ? Json(*config.seed) : Json(nullptr);
  cfg["count"] = config.count;
  cfg["max_iter"] = config.max_iter;
  Json suites_json = Json::object();
  for (const auto& [name, tally] : suites) {
    Json t = {{"passed", tally.passed}, {"failed", tally.failed}, {"skipped", tally.skipped}};
    t["first_counterexample"] = tally.first_counterexample ? *tally.first_counterexample : Json(nullptr);
    suites_json[name] = t;
  }
  Json out = {{"config", cfg}, {"points", points}, {"suites", suites_json}, {"failures", failures()}};
  out["digest"] = fnv1a_hex(out.dump());
  return out;
}

std::vector<SweepPoint> sweep_points(const SweepConfig& config) {
  std::vector<SweepPoint> points;
  if (config.weight_mode == WeightMode::Exhaustive) {
    std::vector<std::int64_t> ns = config.n_values;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    for (std::int64_t n : ns) {
      for (std::int64_t p = config.p_min; p <= config.p_max; ++p) {
        std::vector<std::int64_t> units;
        if (p == 1) {
          units.push_back(1);
        } else {
          for (std::int64_t u = 1; u < p; ++u) {
            if (std::gcd(u, p) == 1) units.push_back(u);
          }
        }
        std::vector<std::size_t> idx(static_cast<std::size_t>(n) + 1, 0);
        while (true) {
          SweepPoint pt{p, {}};
          for (auto i : idx) pt.weights.push_back(units[i]);
          points.push_back(std::move(pt));
          bool done = true;
          for (std::size_t pos = idx.size(); pos-- > 0;) {
            if (++idx[pos] < units.size()) {
              done = false;
              break;
            }
            idx[pos] = 0;
          }
          if (done) break;
        }
      }
    }
  } else {
    std::mt19937_64 rng(*config.seed);
    const auto p_range = static_cast<std::uint64_t>(config.p_max - config.p_min + 1);
    for (std::int64_t i = 0; i < config.count; ++i) {
      SweepPoint pt{config.p_min + static_cast<std::int64_t>(draw(rng, p_range)), {}};
      std::int64_t n = config.n_values[draw(rng, config.n_values.size())];
      for (std::int64_t w = 0; w <= n; ++w) {
        if (pt.p == 1) {
          pt.weights.push_back(1 + static_cast<std::int64_t>(draw(rng, 50)));
          continue;
        }
        std::int64_t u = 0;
        do {
          u = 1 + static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(pt.p - 1)));
        } while (std::gcd(u, pt.p) != 1);
        pt.weights.push_back(u);
      }
      points.push_back(std::move(pt));
    }
  }
  return points;
}

namespace {

struct ChunkResult {
  std::map<std::string, SuiteTally> suites;
};

ChunkResult run_chunk(const SweepConfig& config, const std::vector<SweepPoint>& points, std::size_t begin, std::size_t end) {
  ChunkResult result;
  for (const auto& name : config.checks) result.suites[name];
  // model-level outcomes depend only on the normalized weights
  std::map<std::pair<std::int64_t, std::vector<std::int64_t>>, std::map<std::string, Outcome>> cache;

  auto record = [&](const std::string& name, const Outcome& outcome, const SweepPoint& pt) {
    SuiteTally& tally = result.suites[name];
    switch (outcome.status) {
      case Status::Pass: ++tally.passed; break;
      case Status::Skip: ++tally.skipped; break;
      case Status::Fail:
        ++tally.failed;
        if (!tally.first_counterexample) {
          Json ce = point_json(pt);
          ce["detail"] = outcome.detail;
          tally.first_counterexample = ce;
        }
        if (config.fail_fast) throw IdentityViolation(name, outcome.detail, "pass");
        break;
    }
  };

  for (std::size_t i = begin; i < end; ++i) {
    const SweepPoint& pt = points[i];
    const LensSpace space = LensSpace::make(pt.p, pt.weights);
    const NormalizedSpace ns = normalize(space);
    auto key = std::make_pair(pt.p, ns.space.weights());
    auto it = cache.find(key);
    if (it == cache.end()) {
      ModelChecks mc;
      try {
        mc.model = build_toric_model(ns.space);
      } catch (const IdentityViolation& e) {
        mc.build_error = e.what();
      }
      std::map<std::string, Outcome> outcomes;
      for (const auto& name : config.checks) {
        if (name == "determinant") outcomes[name] = with_model(mc, suite_determinant);
        if (name == "basis") outcomes[name] = with_model(mc, suite_basis);
        if (name == "kernel") outcomes[name] = with_model(mc, suite_kernel);
        if (name == "bezout") outcomes[name] = with_model(mc, suite_bezout);
        if (name == "bezout_invariance") {
          outcomes[name] = with_model(mc, [&](const ToricModel& m) { return suite_bezout_invariance(m, config.max_iter); });
        }
        if (name == "periodicity") {
          outcomes[name] = with_model(mc, [&](const ToricModel& m) { return suite_periodicity(m, config.max_iter); });
        }
        if (name == "mean_sandwich") {
          outcomes[name] = with_model(mc, [&](const ToricModel& m) { return suite_mean_sandwich(m, config.max_iter); });
        }
        if (name == "sphere") {
          outcomes[name] = with_model(mc, [&](const ToricModel& m) { return suite_sphere(m, config.max_iter); });
        }
      }
      it = cache.emplace(std::move(key), std::move(outcomes)).first;
    }
    for (const auto& name : config.checks) {
      if (name == "cr_bounds") {
        record(name, suite_cr_bounds(space), pt);
      } else if (name == "relabel_consistency") {
        Outcome o;
        try {
          o = suite_relabel_consistency(space);
        } catch (const IdentityViolation& e) {
          o = fail(e.what());
        }
        record(name, o, pt);
      } else {
        record(name, it->second.at(name), pt);
      }
    }
  }
  return result;
}

}  // namespace

SweepReport run_sweep(const SweepConfig& config) {
  const std::vector<SweepPoint> points = sweep_points(config);
  unsigned workers = config.threads > 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LENSREEB_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) workers = std::min(workers, static_cast<unsigned>(cap));
  }
  if (config.fail_fast) workers = 1;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, points.size())));

  std::vector<ChunkResult> chunks(workers);
  const std::size_t per = (points.size() + workers - 1) / workers;
  if (workers == 1) {
    chunks[0] = run_chunk(config, points, 0, points.size());
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          std::size_t begin = std::min(points.size(), w * per);
          std::size_t end = std::min(points.size(), begin + per);
          chunks[w] = run_chunk(config, points, begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  SweepReport report;
  report.points = static_cast<std::int64_t>(points.size());
  for (const auto& name : config.checks) report.suites[name];
  // chunks are contiguous and merged in order, so the first counterexample is the global first
  for (const auto& chunk : chunks) {
    for (const auto& [name, tally] : chunk.suites) {
      SuiteTally& total = report.suites[name];
      total.passed += tally.passed;
      total.failed += tally.failed;
      total.skipped += tally.skipped;
      if (!total.first_counterexample && tally.first_counterexample) total.first_counterexample = tally.first_counterexample;
    }
  }
  return report;
}

}  // namespace lensreeb
