#include "lensreeb/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lensreeb/errors.hpp"
#include "lensreeb/report.hpp"
#include "lensreeb/sweep.hpp"

namespace lensreeb::cli {

namespace {

struct Result {
  Json payload;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
  int exit_code = kExitOk;
};

struct SpaceArgs {
  std::int64_t p = 1;
  std::string weights;
};

struct Options {
  std::string format = "json";
  std::string output;
};

void add_space_options(CLI::App* cmd, SpaceArgs& args) {
  cmd->add_option("--p", args.p, "group order p >= 1")->required();
  cmd->add_option("--weights", args.weights, "comma separated weights l_0,...,l_n")->required();
}

LensSpace make_space(const SpaceArgs& args) { return LensSpace::make(args.p, parse_weight_list(args.weights)); }

// Original class a is class l_n * a of the normalized space.
std::int64_t to_normalized_class(const LensSpace& space, std::int64_t cls) {
  if (cls < 0 || cls >= space.p()) {
    throw DomainError("InvalidClass", "class " + std::to_string(cls) + " outside Z_" + std::to_string(space.p()));
  }
  return residue(space.weights().back() * cls, space.p());
}

Result cmd_cr(const SpaceArgs& args) {
  const LensSpace space = make_space(args);
  Result r;
  const GradedTable table = cr_table(space);
  const ExistenceReport report = existence_report(space);
  r.payload = {{"command", "cr"}, {"space", to_json(space)}, {"rows", to_json(table)}};
  r.payload["max_degree"] = to_json(report.max_degree);
  r.payload["vanishing_from"] = report.vanishing_from;
  r.payload["existence"] = to_json(report)["verdicts"];
  r.payload["assumptions"] = report.assumptions;
  r.headers = {"class", "degree", "dim", "verdict"};
  for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
    const auto& v = report.verdicts[i];
    r.rows.push_back({std::to_string(v.cls), v.witness_degree.str(), "1", ">= 1 orbit"});
  }
  return r;
}

Result cmd_toric(const SpaceArgs& args) {
  const LensSpace space = make_space(args);
  const NormalizedSpace ns = normalize(space);
  Result r;
  const ToricModel model = build_toric_model(ns.space);
  const Integer det = verify_determinant(model);
  verify_basis_identity(model);
  const KernelVerdict kernel = verify_kernel_generator(model);
  const bool kernel_ok = kernel.status != KernelStatus::Deficient;

  r.payload = {{"command", "toric"}, {"input", to_json(space)}, {"relabel", ns.relabel}, {"model", to_json(model)}};
  r.payload["verdicts"] = {{"determinant", int_json(det)},
                           {"determinant_ok", true},
                           {"basis_identity_ok", true},
                           {"bezout_ok", model.k * model.d - model.m * model.c == 1},
                           {"kernel", to_json(kernel)},
                           {"kernel_ok", kernel_ok},
                           {"mean_index", to_json(mean_index(model))}};
  r.headers = {"field", "value"};
  r.rows = {{"space", ns.space.label()},
            {"relabel", std::to_string(ns.relabel)},
            {"m", model.m.str()},
            {"k", model.k.str()},
            {"q", model.q.str()},
            {"c", model.c.str()},
            {"d", model.d.str()},
            {"a0", model.a0.str()},
            {"det", det.str()},
            {"kernel", to_string(kernel.status) + " (order " + kernel.order.str() + ")"},
            {"mean_index", mean_index(model).str()}};
  for (std::size_t j = 0; j < model.normals.size(); ++j) {
    std::string v;
    for (std::size_t i = 0; i < model.normals[j].size(); ++i) v += (i ? "," : "") + model.normals[j][i].str();
    r.rows.push_back({"nu_" + std::to_string(j), "(" + v + ")"});
  }
  if (!kernel_ok) r.exit_code = kExitNegative;
  return r;
}

Result cmd_cz(const SpaceArgs& args, std::int64_t cls, std::int64_t max_iter) {
  const LensSpace space = make_space(args);
  const NormalizedSpace ns = normalize(space);
  const ToricModel model = build_toric_model(ns.space);
  const std::int64_t target = to_normalized_class(space, cls);
  if (max_iter < 1) throw DomainError("InvalidIterate", "--max-iter must be >= 1");
  Result r;
  Json rows = Json::array();
  r.headers = {"N", "mu"};
  for (std::int64_t big_n = 1; big_n <= max_iter; ++big_n) {
    if (residue(big_n, space.p()) != target) continue;
    Rational mu = cz_index(model, big_n);
    rows.push_back({{"N", big_n}, {"mu", to_json(mu)}});
    r.rows.push_back({std::to_string(big_n), mu.str()});
  }
  r.payload = {{"command", "cz"},          {"space", to_json(ns.space)},
               {"class", cls},             {"normalized_class", target},
               {"mean_index", to_json(mean_index(model))}, {"rows", rows}};
  return r;
}

Result cmd_hc(const SpaceArgs& args, std::int64_t cls, const std::string& cap_text) {
  const LensSpace space = make_space(args);
  const NormalizedSpace ns = normalize(space);
  const ToricModel model = build_toric_model(ns.space);
  const std::int64_t target = to_normalized_class(space, cls);
  const HcTable table = hc_table(model, target, Rational::parse(cap_text));
  Result r;
  r.payload = {{"command", "hc"}, {"space", to_json(ns.space)}, {"class", cls}, {"normalized_class", target}};
  r.payload["k_a"] = to_json(table.k_a);
  r.payload["realized_at"] = table.realized_at;
  r.payload["k0"] = to_json(k0_threshold(model, target));
  r.payload["rows"] = to_json(table.table);
  r.headers = {"class", "degree", "dim"};
  for (const auto& row : table.table.rows()) r.rows.push_back({std::to_string(cls), row.degree.str(), std::to_string(row.dim)});
  return r;
}

std::vector<Rational> parse_axes(const std::string& text) {
  std::vector<Rational> axes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) axes.push_back(Rational::parse(item));
  return axes;
}

Result cmd_ellipsoid(const SpaceArgs& args, const std::string& axes_text, std::int64_t cls, const std::string& cap_text,
                     std::int64_t max_iter) {
  const EllipsoidModel model(make_space(args), parse_axes(axes_text));
  Result r;
  Json axes = Json::array();
  Rational inverse_sum(0);
  for (std::size_t j = 0; j < model.axes().size(); ++j) {
    Rational delta = ellipsoid_mean_index(model, j);
    inverse_sum += Rational(1) / delta;
    axes.push_back({{"axis", j},
                    {"a", to_json(model.axes()[j])},
                    {"class", orbit_class(model, j).a},
                    {"mean_index", to_json(delta)}});
  }
  const auto spectrum = symmetric_spectrum(model, cls, Rational::parse(cap_text));
  Json rows = Json::array();
  r.headers = {"axis", "N", "action", "mean_index", "mu_lift", "simple"};
  for (const auto& e : spectrum) {
    rows.push_back(to_json(e));
    r.rows.push_back({std::to_string(e.axis), std::to_string(e.iterate), e.action.str(), e.mean_index.str(),
                      std::to_string(e.mu_lift), e.simple_in_class ? "yes" : "no"});
  }
  const ConvexityVerdict convexity = check_dynamical_convexity(model, max_iter);
  r.payload = {{"command", "ellipsoid"}, {"space", to_json(model.space())}, {"class", cls}, {"axes", axes}};
  r.payload["inverse_mean_index_sum"] = to_json(inverse_sum);
  r.payload["rows"] = rows;
  r.payload["dynamical_convexity"] = to_json(convexity);
  return r;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("InvalidBudget", "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("InvalidBudget", "'" + path + "' is not valid JSON: " + e.what());
  }
}

struct CertifyArgs {
  std::string budget;
  std::int64_t p = 0;
  std::string delta;
  std::int64_t horizon = 200;
  std::int64_t n = 0;
  std::string k0;
  std::string weights;
};

Result cmd_certify_ineq(const CertifyArgs& args) {
  const OrbitBudget budget = budget_from_json(read_json_file(args.budget));
  const InequalityVerdict v = check_final_inequality(budget);
  Result r;
  r.payload = {{"command", "certify ineq"}, {"budget", to_json(budget)}};
  r.payload.update(to_json(v));
  Json densities = Json::array();
  for (const auto& o : budget.in_target_class()) densities.push_back({{"label", o.label}, {"density", to_json(orbit_density(budget.p, o.mean_index))}});
  r.payload["orbit_densities"] = densities;
  r.payload["carrier_density"] = to_json(carrier_density().symbolic);
  r.headers = {"verdict", "p/2", "sum 1/Delta", "equality"};
  r.rows = {{to_string(v.verdict), v.lhs.str(), v.rhs.str(), v.equality ? "yes" : "no"}};
  if (v.verdict == Verdict::Contradiction) r.exit_code = kExitNegative;
  return r;
}

Result cmd_certify_single(const CertifyArgs& args) {
  std::int64_t p = args.p;
  Rational delta;
  if (!args.budget.empty()) {
    const OrbitBudget budget = budget_from_json(read_json_file(args.budget));
    budget.validate();
    const auto orbits = budget.in_target_class();
    if (orbits.size() != 1) {
      throw DomainError("InvalidBudget", "single-orbit certificate needs exactly one orbit in the target class");
    }
    p = budget.p;
    delta = orbits.front().mean_index;
  } else {
    if (args.delta.empty() || p < 1) throw DomainError("Usage", "certify single needs --budget or both --p and --delta");
    delta = Rational::parse(args.delta);
  }
  const Verdict v = single_orbit_contradiction(p, delta);
  Result r;
  r.payload = {{"command", "certify single"}, {"p", p}, {"mean_index", to_json(delta)},
               {"threshold", to_json(Rational(2, p))}, {"verdict", to_string(v)}};
  r.headers = {"verdict", "Delta", "2/p"};
  r.rows = {{to_string(v), delta.str(), Rational(2, p).str()}};
  if (v == Verdict::Contradiction) r.exit_code = kExitNegative;
  return r;
}

Result cmd_certify_matching(const CertifyArgs& args) {
  const Json raw = read_json_file(args.budget);
  const OrbitBudget budget = budget_from_json(raw);
  std::int64_t n = args.n > 0 ? args.n : raw.value("n", std::int64_t{0});
  std::string weights = !args.weights.empty() ? args.weights : "";
  if (weights.empty() && raw.contains("weights")) {
    for (const auto& w : raw.at("weights")) weights += (weights.empty() ? "" : ",") + std::to_string(w.get<std::int64_t>());
  }
  Rational k0;
  std::string k0_source;
  if (!args.k0.empty()) {
    k0 = Rational::parse(args.k0);
    k0_source = "supplied";
  } else if (!weights.empty()) {
    const LensSpace space = LensSpace::make(budget.p, parse_weight_list(weights));
    const ToricModel model = build_toric_model(normalize(space).space);
    if (n < 1) n = space.n();
    k0 = k0_threshold(model, to_normalized_class(space, budget.target_class));
    k0_source = "k0_threshold";
  } else {
    if (n < 1) throw DomainError("Usage", "certify matching needs --n (or n in the budget)");
    k0 = Rational(2 * n + 1);
    k0_source = "2n+1";
  }
  if (n < 1) throw DomainError("Usage", "certify matching needs --n (or n in the budget)");
  const MatchingVerdict v = matching_feasibility(budget, args.horizon, n, k0);
  Result r;
  r.payload = {{"command", "certify matching"}, {"budget", to_json(budget)}, {"horizon", args.horizon}, {"n", n},
               {"k0_source", k0_source}};
  r.payload.update(to_json(v));
  r.headers = {"verdict", "carriers", "matched", "k0", "window"};
  r.rows = {{to_string(v.verdict), std::to_string(v.carriers), std::to_string(v.matched), v.k0.str(), std::to_string(v.window)}};
  if (v.verdict == Verdict::Infeasible) r.exit_code = kExitNegative;
  return r;
}

Result cmd_sweep(const std::string& config_path, bool fail_fast) {
  std::ifstream in(config_path);
  if (!in) throw DomainError("InvalidConfig", "cannot open '" + config_path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  SweepConfig config = parse_sweep_config(buffer.str());
  if (fail_fast) config.fail_fast = true;
  const SweepReport report = run_sweep(config);
  Result r;
  r.payload = report.to_json(config);
  r.headers = {"suite", "passed", "failed", "skipped"};
  for (const auto& [name, tally] : report.suites) {
    r.rows.push_back({name, std::to_string(tally.passed), std::to_string(tally.failed), std::to_string(tally.skipped)});
  }
  if (report.failures() > 0) r.exit_code = kExitNegative;
  if (!config.output.empty()) r.payload["output"] = config.output;
  return r;
}

void emit(const Result& r, const Options& opts, std::ostream& out) {
  std::string text = opts.format == "table" ? format_table(r.headers, r.rows) : r.payload.dump(2) + "\n";
  if (opts.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.output);
  if (!file) throw DomainError("Output", "cannot write '" + opts.output + "'");
  file << text;
}

void emit_error(std::ostream& out, std::ostream& err, const std::string& kind, const std::string& message) {
  Json j = {{"error", kind}, {"message", message}};
  out << j.dump(2) << "\n";
  err << "lensreeb: " << message << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of lens spaces: Chen-Ruan degrees, toric Conley-Zehnder spectra, certificates",
               "lensreeb"};
  app.require_subcommand(1);
  Options opts;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opts.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--output", opts.output, "write to this file instead of stdout");
  };

  SpaceArgs space_args;
  std::int64_t cls = 0;
  std::int64_t max_iter = 0;
  std::string cap = "0";
  std::string axes;

  auto* cr = app.add_subcommand("cr", "Chen-Ruan degree table of C^{n+1}/Z_p and per-class existence report");
  add_space_options(cr, space_args);
  add_common(cr);

  auto* toric = app.add_subcommand("toric", "toric model of the normalized lens space with identity verdicts");
  add_space_options(toric, space_args);
  add_common(toric);

  auto* cz = app.add_subcommand("cz", "Conley-Zehnder indices of the iterates in one class");
  add_space_options(cz, space_args);
  cz->add_option("--class", cls, "homotopy class a")->required();
  cz->add_option("--max-iter", max_iter, "largest iterate N")->required();
  add_common(cz);

  auto* hc = app.add_subcommand("hc", "per-class equivariant cohomology degrees k_a + 2k");
  add_space_options(hc, space_args);
  hc->add_option("--class", cls, "homotopy class a")->required();
  hc->add_option("--cap", cap, "largest degree listed (rational)")->required();
  add_common(hc);

  std::int64_t convexity_iter = 1000;
  auto* ell = app.add_subcommand("ellipsoid", "symmetric orbits of a Z_p-invariant ellipsoid");
  add_space_options(ell, space_args);
  ell->add_option("--axes", axes, "axes a_0,...,a_n as rationals")->required();
  ell->add_option("--class", cls, "generator class a")->required();
  ell->add_option("--cap", cap, "largest downstairs action listed (rational)")->required();
  ell->add_option("--max-iter", convexity_iter, "iterates checked for dynamical convexity");
  add_common(ell);

  CertifyArgs cert;
  auto* certify = app.add_subcommand("certify", "density certificates for a hypothesized orbit budget");
  certify->require_subcommand(1);
  auto* ineq = certify->add_subcommand("ineq", "p/2 <= sum 1/Delta");
  ineq->add_option("--budget", cert.budget, "budget JSON file")->required();
  add_common(ineq);
  auto* single = certify->add_subcommand("single", "single-orbit contradiction Delta > 2/p");
  single->add_option("--budget", cert.budget, "budget JSON file");
  single->add_option("--p", cert.p, "group order");
  single->add_option("--delta", cert.delta, "mean index of the simple orbit");
  add_common(single);
  auto* matching = certify->add_subcommand("matching", "finite-horizon carrier matching");
  matching->add_option("--budget", cert.budget, "budget JSON file")->required();
  matching->add_option("--horizon", cert.horizon, "carrier count K (degrees k0 .. k0 + 2K)");
  matching->add_option("--n", cert.n, "dimension parameter n");
  matching->add_option("--k0", cert.k0, "first carrier degree (rational)");
  matching->add_option("--weights", cert.weights, "weights; k0 is then taken from the toric k_a");
  add_common(matching);

  std::string config_path;
  bool fail_fast = false;
  auto* sweep = app.add_subcommand("sweep", "run invariant suites over a parameter grid");
  sweep->add_option("--config", config_path, "flat key = value config file")->required();
  sweep->add_flag("--fail-fast", fail_fast, "stop at the first failure");
  add_common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(out, err, "Usage", e.what());
    return kExitUsage;
  }

  try {
    Result r;
    if (cr->parsed()) {
      r = cmd_cr(space_args);
    } else if (toric->parsed()) {
      r = cmd_toric(space_args);
    } else if (cz->parsed()) {
      r = cmd_cz(space_args, cls, max_iter);
    } else if (hc->parsed()) {
      r = cmd_hc(space_args, cls, cap);
    } else if (ell->parsed()) {
      r = cmd_ellipsoid(space_args, axes, cls, cap, convexity_iter);
    } else if (ineq->parsed()) {
      r = cmd_certify_ineq(cert);
    } else if (single->parsed()) {
      r = cmd_certify_single(cert);
    } else if (matching->parsed()) {
      r = cmd_certify_matching(cert);
    } else if (sweep->parsed()) {
      r = cmd_sweep(config_path, fail_fast);
      if (opts.output.empty() && r.payload.contains("output")) opts.output = r.payload["output"].get<std::string>();
    }
    emit(r, opts, out);
    return r.exit_code;
  } catch (const DomainError& e) {
    emit_error(out, err, e.kind(), e.what());
    return kExitUsage;
  } catch (const IdentityViolation& e) {
    Json j = {{"error", "IdentityViolation"}, {"identity", e.identity()}, {"lhs", e.lhs()}, {"rhs", e.rhs()}};
    out << j.dump(2) << "\n";
    err << "lensreeb: " << e.what() << "\n";
    return kExitNegative;
  } catch (const std::invalid_argument& e) {
    emit_error(out, err, "InvalidArgument", e.what());
    return kExitUsage;
  } catch (const std::domain_error& e) {
    emit_error(out, err, "InvalidArgument", e.what());
    return kExitUsage;
  }
}

}  // namespace lensreeb::cli
