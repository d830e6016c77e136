#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lensreeb/cli.hpp"
#include "lensreeb/errors.hpp"
#include "lensreeb/sweep.hpp"

using namespace lensreeb;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lensreeb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("lensreeb_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("config parsing") {
  auto c = parse_sweep_config("# grid\np_min = 2\np_max = 9\nn_values = [2, 3]\nweight_mode = random\nseed = 42\ncount = 10\n"
                              "checks = determinant, basis\nfail_fast = true\n");
  CHECK(c.p_min == 2);
  CHECK(c.p_max == 9);
  CHECK(c.n_values == std::vector<std::int64_t>{2, 3});
  CHECK(c.weight_mode == WeightMode::Random);
  CHECK(c.seed == 42u);
  CHECK(c.count == 10);
  CHECK(c.checks == std::vector<std::string>{"determinant", "basis"});
  CHECK(c.fail_fast);

  CHECK_THROWS_AS(parse_sweep_config("weight_mode = random\ncount = 3\n"), DomainError);
  CHECK_THROWS_AS(parse_sweep_config("colour = blue\n"), DomainError);
  CHECK_THROWS_AS(parse_sweep_config("checks = nonsense\n"), DomainError);
  CHECK_THROWS_AS(parse_sweep_config("p_min = x\n"), DomainError);
}

TEST_CASE("sweep points") {
  SweepConfig c;
  c.p_min = 1;
  c.p_max = 5;
  c.n_values = {1};
  auto points = sweep_points(c);
  // p=1: 1, p=2: 1, p=3: 4, p=4: 4, p=5: 16
  CHECK(points.size() == 26);
  CHECK(points.front().p == 1);

  c.weight_mode = WeightMode::Random;
  c.seed = 9;
  c.count = 40;
  c.n_values = {3};
  auto a = sweep_points(c);
  auto b = sweep_points(c);
  CHECK(a.size() == 40);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].p == b[i].p);
    CHECK(a[i].weights == b[i].weights);
    CHECK(a[i].weights.size() == 4);
  }
}

TEST_CASE("sweep suites and determinism") {
  SweepConfig c;
  c.p_min = 1;
  c.p_max = 10;
  c.n_values = {2};
  c.checks = {"determinant", "basis", "bezout", "bezout_invariance", "periodicity", "mean_sandwich", "sphere", "cr_bounds",
              "relabel_consistency"};
  c.max_iter = 60;
  auto report = run_sweep(c);
  CHECK(report.failures() == 0);
  CHECK(report.suites.at("sphere").passed == 1);
  c.threads = 1;
  auto single = run_sweep(c);
  CHECK(single.to_json(c).dump() == report.to_json(c).dump());

  c.checks = {"kernel"};
  c.p_max = 12;
  auto kernel = run_sweep(c);
  CHECK(kernel.suites.at("kernel").failed > 0);
  c.fail_fast = true;
  CHECK_THROWS_AS(run_sweep(c), IdentityViolation);
}

TEST_CASE("cli subcommands") {
  auto r = run({"cz", "--p", "3", "--weights", "1,1,1", "--class", "1", "--max-iter", "5"});
  CHECK(r.code == cli::kExitOk);
  auto j = Json::parse(r.out);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["N"] == 1);
  CHECK(j["rows"][0]["mu"] == "0/1");
  CHECK(j["rows"][1]["N"] == 4);
  CHECK(j["rows"][1]["mu"] == "2/1");

  r = run({"cr", "--p", "5", "--weights", "1,1,1"});
  CHECK(r.code == cli::kExitOk);
  j = Json::parse(r.out);
  std::vector<std::string> degrees;
  for (const auto& row : j["rows"]) degrees.push_back(row["degree"]);
  CHECK(degrees == std::vector<std::string>{"0/1", "6/5", "12/5", "18/5", "24/5"});

  r = run({"toric", "--p", "5", "--weights", "1,1,1"});
  CHECK(r.code == cli::kExitOk);
  j = Json::parse(r.out);
  CHECK(j["model"]["m"] == 5);
  CHECK(j["verdicts"]["determinant"] == -5);

  r = run({"toric", "--p", "45", "--weights", "1,16,1"});
  CHECK(r.code == cli::kExitNegative);

  r = run({"hc", "--p", "3", "--weights", "1,1,1", "--class", "0", "--cap", "10"});
  CHECK(r.code == cli::kExitOk);
  CHECK(Json::parse(r.out)["k_a"] == "4/1");

  r = run({"ellipsoid", "--p", "5", "--weights", "2,3,1", "--axes", "1,13/8,29/11", "--class", "1", "--cap", "1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(Json::parse(r.out).is_object());

  r = run({"toric", "--p", "5", "--weights", "1,1,1", "--format", "table"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("nu_2") != std::string::npos);
}

TEST_CASE("cli errors and exit codes") {
  auto r = run({"toric", "--p", "4", "--weights", "2,1,1"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(Json::parse(r.out)["error"] == "NonCoprimeWeight");

  r = run({"frobnicate"});
  CHECK(r.code == cli::kExitUsage);

  r = run({"cz", "--p", "3"});
  CHECK(r.code == cli::kExitUsage);

  auto bad = temp_file("bad.toml", "weight_mode = random\ncount = 5\n");
  r = run({"sweep", "--config", bad});
  CHECK(r.code == cli::kExitUsage);

  r = run({"certify", "single", "--p", "2", "--delta", "3/2"});
  CHECK(r.code == cli::kExitNegative);
  CHECK(Json::parse(r.out)["verdict"] == "CONTRADICTION");
  r = run({"certify", "single", "--p", "5", "--delta", "2/5"});
  CHECK(r.code == cli::kExitOk);

  auto budget = temp_file("budget.json", R"({"p": 5, "class": 1, "orbits": [{"label": "g", "class": 1, "mean_index": "1/1"}]})");
  r = run({"certify", "matching", "--budget", budget, "--n", "2", "--k0", "5"});
  CHECK(r.code == cli::kExitNegative);
  CHECK(Json::parse(r.out)["verdict"] == "INFEASIBLE");
  r = run({"certify", "ineq", "--budget", budget});
  CHECK(r.code == cli::kExitNegative);

  auto boundary = temp_file("boundary.json", R"({"p": 5, "class": 1, "orbits": [{"label": "g", "class": 1, "mean_index": "2/5"}]})");
  r = run({"certify", "ineq", "--budget", boundary});
  CHECK(r.code == cli::kExitOk);
  CHECK(Json::parse(r.out)["verdict"] == "CONSISTENT");

  auto broken = temp_file("broken.json", R"({"p": 5, "orbits": 3})");
  r = run({"certify", "ineq", "--budget", broken});
  CHECK(r.code == cli::kExitUsage);
}

TEST_CASE("cli output is byte-identical across runs") {
  auto cfg = temp_file("det.toml", "p_min = 1\np_max = 30\nn_values = 2\nweight_mode = random\nseed = 42\ncount = 100\n"
                                   "checks = determinant, periodicity, cr_bounds\nmax_iter = 40\n");
  auto a = run({"sweep", "--config", cfg});
  auto b = run({"sweep", "--config", cfg});
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["digest"].is_string());

  auto out = (std::filesystem::temp_directory_path() / "lensreeb_test_out.json").string();
  auto c = run({"cr", "--p", "2", "--weights", "1,1", "--output", out});
  CHECK(c.code == cli::kExitOk);
  std::ifstream in(out);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(Json::parse(body.str())["rows"].size() == 2);
}
