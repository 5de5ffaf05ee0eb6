#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>

#include "gdnlslab/harness/csv.hpp"
#include "gdnlslab/harness/experiments.hpp"
#include "gdnlslab/harness/sweep.hpp"

using namespace gdnls;
using namespace gdnls::harness;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir(const std::string& tag) {
  fs::path p = fs::temp_directory_path() / ("gdnls_test_" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("config parsing: full example") {
  RunConfig cfg = parse_config_text(R"(
# a comment
[experiment]
name = picard_study

[grid]
L = 30
N = 2048

[time]
T = 0.05
dt = 2e-4

[stepper]
kind = strang

[equation]
mu = -1
alpha = 0.5
form = divergence
epsilon = 1e-6
dealias = true

[class]
M = 2
lambda = 0.25

[data]
kind = decay
c0 = 0.5
m = 5
periodized = true

[run]
seed = 7
out = /tmp/somewhere
workers = 3
)");
  CHECK(cfg.experiment == "picard_study");
  CHECK(cfg.L == 30.0);
  CHECK(cfg.N == 2048);
  CHECK(cfg.T == 0.05);
  CHECK(cfg.dt == 2e-4);
  CHECK(cfg.stepper == Stepper::strang);
  CHECK(cfg.mu_auto == false);
  CHECK(cfg.eq.mu == cplx(-1.0, 0.0));
  CHECK(cfg.eq.alpha == 0.5);
  CHECK(cfg.eq.form == NonlinearForm::divergence);
  CHECK(cfg.eq.epsilon == 1e-6);
  CHECK(cfg.eq.dealias == true);
  CHECK(cfg.cls.M == 2);
  CHECK(cfg.cls.lambda == 0.25);
  CHECK(cfg.lambda_override == true);
  // alpha = 0.5: m = floor(2/alpha + 1) = 5, k = m + M + 1 = 8, s = 8.5
  CHECK(cfg.cls.m == 5);
  CHECK(cfg.cls.k == 8);
  CHECK(cfg.cls.s == 8.5);
  CHECK(cfg.data == DataKind::decay);
  CHECK(cfg.c0 == cplx(0.5, 0.0));
  CHECK(cfg.decay_m == 5);
  CHECK(cfg.decay_periodized == true);
  CHECK(cfg.seed == 7);
  CHECK(cfg.out_dir == "/tmp/somewhere");
  CHECK(cfg.workers == 3);
  CHECK(cfg.raw.at("grid.N") == "2048");
}

TEST_CASE("config parsing: defaults and sweep axes") {
  RunConfig cfg = parse_config_text("");
  CHECK(cfg.L == 40.0);
  CHECK(cfg.N == 4096);
  CHECK(cfg.mu_auto == true);
  CHECK(cfg.cls.m == 3);
  CHECK(cfg.cls.k == 6);
  CHECK(cfg.cls.s == 6.5);
  CHECK(cfg.sweep_omega.empty());

  RunConfig sw = parse_config_text("[sweep]\nomega = 1, 2, 4\nN = 512,1024\n");
  CHECK(sw.sweep_omega == std::vector<double>{1.0, 2.0, 4.0});
  CHECK(sw.sweep_N == std::vector<int>{512, 1024});
}

TEST_CASE("config parsing: rejects malformed input") {
  CHECK_THROWS_AS(parse_config_text("[grid]\nQ = 3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[grid]\nN = twelve\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[grid]\nN = 512.5\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[stepper]\nkind = euler\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[equation]\nmu = 2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[equation]\ndealias = maybe\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[data]\nkind = noise\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("no equals sign here\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_file("/nonexistent/path.ini"), ConfigError);
}

TEST_CASE("initial datum construction") {
  auto g = Grid::make(40.0, 512);

  RunConfig cfg = parse_config_text("[data]\nkind = solitary\nomega = 1\nc = 0\n");
  Field sol = make_data(cfg, g);
  Field expected = solitary_wave(WaveParams{1.0, 0.0, 1.0, Branch::generic}, g, 0.0);
  CHECK(linf_norm(sol - expected) == 0.0);

  cfg = parse_config_text("[data]\nkind = decay\nc0 = 0.5\nm = 3\n");
  Field dec = make_data(cfg, g);
  CHECK(linf_norm(dec - decay_profile(cplx(0.5, 0.0), 3, g)) == 0.0);

  // round trip through a whitespace-separated sample file
  fs::path dir = temp_dir("data");
  fs::path sample = dir / "field.txt";
  {
    std::ofstream out(sample);
    for (int i = 0; i < g->n_points; ++i) out << dec.v[size_t(i)].real() << " 0.25\n";
  }
  cfg = parse_config_text("[data]\nkind = file\npath = " + sample.string() + "\n");
  Field file = make_data(cfg, g);
  CHECK(file.v[0].imag() == 0.25);
  CHECK(file.v[size_t(g->n_points / 2)].real() == doctest::Approx(0.5));

  cfg.data_path = "/nonexistent/field.txt";
  CHECK_THROWS_AS(make_data(cfg, g), ConfigError);
}

TEST_CASE("csv output is deterministic and fixed-format") {
  fs::path dir = temp_dir("csv");
  auto write = [&](const fs::path& p) {
    CsvWriter csv(p.string(), {"t", "value", "label"});
    csv.row({0.1, 1.0 / 3.0, std::string("a")});
    csv.row({(long long)42, -2.5e-11, std::string("b")});
  };
  write(dir / "a.csv");
  write(dir / "b.csv");
  const std::string a = slurp(dir / "a.csv");
  CHECK(a == slurp(dir / "b.csv"));
  CHECK(a.find("t,value,label\n") == 0);
  CHECK(a.find("3.3333333333333331e-01") != std::string::npos);
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", -2.5e-11);
  CHECK(a.find(buf) != std::string::npos);
  CHECK(a.find("42") != std::string::npos);
}

TEST_CASE("manifest round trip") {
  fs::path dir = temp_dir("manifest");
  RunManifest m;
  m.experiment = "picard_study";
  m.config_echo = {{"grid.N", "512"}};
  m.mu_star_known = true;
  m.mu_star = cplx(-1.0, 0.0);
  m.derived["lambda"] = 0.25;
  m.checks.push_back({"ratio", true, 0.5, 0.9});
  m.checks.push_back({"bound", false, 0.1, 0.2});
  CHECK(m.all_pass() == false);
  m.status = "complete";
  m.write((dir / "manifest.json").string());

  std::ifstream in(dir / "manifest.json");
  nlohmann::json j;
  in >> j;
  CHECK(j["experiment"] == "picard_study");
  CHECK(j["status"] == "complete");
  CHECK(j["config"]["grid.N"] == "512");
  CHECK(j["mu_star"]["re"] == -1.0);
  CHECK(j["derived"]["lambda"] == 0.25);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["checks"][1]["pass"] == false);

  m.checks.pop_back();
  CHECK(m.all_pass() == true);
}

TEST_CASE("experiment registry and dispatch") {
  std::vector<std::string> names = registered_experiments();
  for (const char* n : {"soliton_propagation", "picard_study", "smoothing_probe",
                        "inequality_sweep", "small_time_probe", "convergence_study",
                        "dependence_study", "determine_mu"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());

  RunConfig cfg = parse_config_text("[experiment]\nname = frobnicate\n");
  cfg.out_dir = temp_dir("unknown").string();
  CHECK(run_experiment(cfg) == kExitUsage);
}

TEST_CASE("drift-sign experiment end to end") {
  fs::path dir = temp_dir("mu");
  RunConfig cfg = parse_config_text(
      "[experiment]\nname = determine_mu\n[grid]\nL = 40\nN = 1024\n");
  cfg.out_dir = dir.string();
  CHECK(run_experiment(cfg) == kExitOk);

  REQUIRE(fs::exists(dir / "manifest.json"));
  REQUIRE(fs::exists(dir / "series.csv"));
  REQUIRE(fs::exists(dir / "mu_star.json"));
  std::ifstream in(dir / "manifest.json");
  nlohmann::json j;
  in >> j;
  CHECK(j["status"] == "complete");
  CHECK(j["mu_star"]["re"] == -1.0);
  CHECK(j["mu_star"]["im"] == 0.0);
  bool all = true;
  for (const auto& c : j["checks"]) all = all && c["pass"].get<bool>();
  CHECK(all);

  // the probe result is cached for later runs in the same output directory
  RunManifest m;
  CHECK(resolve_mu(cfg, m) == cplx(-1.0, 0.0));
}
