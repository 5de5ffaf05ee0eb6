#include "gdnlslab/harness/experiments.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>

#include "gdnlslab/diagnostics.hpp"
#include "gdnlslab/harness/csv.hpp"
#include "gdnlslab/picard.hpp"
#include "gdnlslab/random_fields.hpp"

namespace fs = std::filesystem;

namespace gdnls::harness {

namespace {

cplx mu_probe_cached(const std::string& out_dir) {
  const fs::path cache = fs::path(out_dir) / "mu_star.json";
  if (fs::exists(cache)) {
    std::ifstream in(cache);
    nlohmann::json j;
    in >> j;
    return {j["mu_star"]["re"].get<double>(), j["mu_star"]["im"].get<double>()};
  }
  MuProbe probe = determine_mu_star(Grid::make(40.0, 4096));
  nlohmann::ordered_json j;
  j["mu_star"] = {{"re", probe.mu_star.real()}, {"im", probe.mu_star.imag()}};
  auto& res = j["residuals"];
  res = nlohmann::ordered_json::array();
  for (const auto& [mu, r] : probe.residuals)
    res.push_back({{"re", mu.real()}, {"im", mu.imag()}, {"residual", r}});
  std::ofstream out(cache);
  out << j.dump(2) << "\n";
  return probe.mu_star;
}

struct Context {
  RunConfig cfg;
  GridPtr grid;
  Field u0;
  RunManifest manifest;
  fs::path out;
};

Context make_context(const RunConfig& cfg_in) {
  Context ctx;
  ctx.cfg = cfg_in;
  ctx.out = cfg_in.out_dir;
  fs::create_directories(ctx.out);
  ctx.manifest.experiment = cfg_in.experiment;
  ctx.manifest.config_echo = cfg_in.raw;

  if (ctx.cfg.mu_auto) {
    ctx.cfg.eq.mu = mu_probe_cached(ctx.cfg.out_dir);
    ctx.manifest.mu_star_known = true;
    ctx.manifest.mu_star = ctx.cfg.eq.mu;
  }
  ctx.cfg.eq.validate();

  ctx.grid = Grid::make(ctx.cfg.L, ctx.cfg.N);
  ctx.u0 = make_data(ctx.cfg, ctx.grid);

  ClassParams& cls = ctx.cfg.cls;
  if (!ctx.cfg.lambda_override) cls.lambda = weighted_inf(ctx.u0, cls.m);
  cls.nu = class_nu(ctx.u0, cls);
  ctx.manifest.derived = {{"m", double(cls.m)},     {"M", double(cls.M)}, {"k", double(cls.k)},
                          {"s", cls.s},             {"lambda", cls.lambda},
                          {"nu", cls.nu},           {"boundary_amplitude", boundary_amplitude(ctx.u0)}};
  return ctx;
}

void add_check(RunManifest& m, const std::string& name, double value, double threshold,
               bool below = true) {
  m.checks.push_back({name, below ? value <= threshold : value >= threshold, value, threshold});
}

// --- experiments ---------------------------------------------------------

void exp_soliton_propagation(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  WaveParams p{cfg.omega, cfg.c, cfg.eq.alpha, Branch::generic};
  if (cfg.omega == 0.25 * cfg.c * cfg.c) p.branch = Branch::degenerate;

  EvolveResult res = evolve(ctx.u0, cfg.T, cfg.dt, cfg.stepper, cfg.eq);
  if (res.failure)
    throw NumericalError("soliton_propagation: step " + std::to_string(res.failure->step) + ": " +
                         res.failure->what);

  const int nt = res.traj.n_steps();
  const int every = std::max(1, nt / 200);
  CsvWriter csv((ctx.out / "series.csv").string(), {"t", "l2_error", "mass", "boundary_guard"});
  double final_err = 0.0;
  for (int n = 0; n <= nt; n += (n + every <= nt ? every : std::max(1, nt - n))) {
    const double t = n * cfg.dt;
    const Field& u = res.traj.steps[size_t(n)];
    Field exact = solitary_wave(p, ctx.grid, t);
    const double err = l2_norm(u - exact) / l2_norm(exact);
    csv.row({t, err, mass(u), res.traj.boundary_guard[size_t(n)]});
    if (n == nt) { final_err = err; break; }
  }
  add_check(ctx.manifest, "final_rel_l2_error", final_err, 1e-3);
}

void exp_picard_study(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  XTNormParams p{cfg.cls, cfg.T, cfg.dt};
  PicardResult res = picard_solve(ctx.u0, cfg.eq, p, 1e-10, 25);

  CsvWriter csv((ctx.out / "series.csv").string(),
                {"iter", "distance", "min_weighted_inf", "sobolev_sup", "weighted_linf_sup",
                 "weighted_deriv_sum", "smoothing", "time_deriv_sum", "proximity"});
  double worst_ratio = 0.0;
  for (size_t i = 0; i < res.history.size(); ++i) {
    const PicardIterate& h = res.history[i];
    csv.row({(long long)i, h.distance, h.min_weighted_inf, h.norms.sobolev_sup,
             h.norms.weighted_linf_sup, h.norms.weighted_deriv_sum, h.norms.smoothing,
             h.norms.time_deriv_sum, h.norms.proximity});
    if (i >= 2 && res.history[i - 1].distance > 0.0)
      worst_ratio = std::max(worst_ratio, h.distance / res.history[i - 1].distance);
  }

  ctx.manifest.status = (res.status == PicardStatus::diverged) ? "diverged" : "complete";
  if (res.status != PicardStatus::diverged) {
    add_check(ctx.manifest, "geometric_ratio", worst_ratio, 0.9);
    double min_inf = std::numeric_limits<double>::infinity();
    for (const auto& h : res.history) min_inf = std::min(min_inf, h.min_weighted_inf);
    add_check(ctx.manifest, "lower_bound_persistence", min_inf, 0.5 * cfg.cls.lambda, false);

    EvolveResult direct = evolve(ctx.u0, cfg.T, cfg.dt, Stepper::ifrk4, cfg.eq);
    if (direct.failure) throw NumericalError("picard_study: direct solve failed");
    add_check(ctx.manifest, "vs_direct_solver", sup_l2_distance(res.solution, direct.traj), 1e-4);
  }
}

void exp_smoothing_probe(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  EvolveResult res = evolve(ctx.u0, cfg.T, cfg.dt, cfg.stepper, cfg.eq);
  if (res.failure) throw NumericalError("smoothing_probe: evolution failed");
  SmoothingReport rep = local_smoothing(res.traj, cfg.cls.k);
  CsvWriter csv((ctx.out / "series.csv").string(), {"interval", "value"});
  for (size_t i = 0; i < rep.interval_value.size(); ++i)
    csv.row({(long long)rep.interval_index[i], rep.interval_value[i]});
  ctx.manifest.derived["smoothing_sup"] = rep.sup;
  ctx.manifest.derived["smoothing_l1"] = rep.l1;
  add_check(ctx.manifest, "sup_le_l1", rep.sup, rep.l1);
}

void exp_inequality_sweep(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  CsvWriter csv((ctx.out / "series.csv").string(),
                {"field", "ine1_v1", "ine1_v2", "ine2_v1", "ine2_v2", "ine2_v3"});
  double m1 = 0, m2 = 0, m3 = 0, m4 = 0, m5 = 0;
  for (int i = 0; i < 100; ++i) {
    Field f = random_smooth_decaying(ctx.grid, cfg.seed + (std::uint64_t)i);
    const double a = interp_check_1(f, 2.0, 2.0, 0.5, 1);
    const double b = interp_check_1(f, 2.0, 2.0, 0.5, 2);
    const double c1 = interp_check_2(f, 1, 1, 1);
    const double c2 = interp_check_2(f, 1, 1, 2);
    const double c3 = interp_check_2(f, 1, 1, 3);
    csv.row({(long long)i, a, b, c1, c2, c3});
    m1 = std::max(m1, a); m2 = std::max(m2, b);
    m3 = std::max(m3, c1); m4 = std::max(m4, c2); m5 = std::max(m5, c3);
  }
  ctx.manifest.derived["max_ine1_v1"] = m1;
  ctx.manifest.derived["max_ine1_v2"] = m2;
  ctx.manifest.derived["max_ine2_v1"] = m3;
  ctx.manifest.derived["max_ine2_v2"] = m4;
  ctx.manifest.derived["max_ine2_v3"] = m5;
  const double worst = std::max({m1, m2, m3, m4, m5});
  ctx.manifest.checks.push_back({"ratios_finite", std::isfinite(worst), worst, 0.0});
}

void exp_small_time_probe(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  FrozenCoefficient fc = FrozenCoefficient::from_data(ctx.u0, cfg.eq, cfg.cls.M);
  SmallTimeReport rep =
      small_time_continuity(ctx.u0, fc, cfg.cls.m, {1e-3, 2e-3, 4e-3, 8e-3});
  CsvWriter csv((ctx.out / "series.csv").string(), {"t", "diff_linf", "diff_weighted_linf"});
  for (size_t i = 0; i < rep.t.size(); ++i)
    csv.row({rep.t[i], rep.diff_linf[i], rep.diff_weighted_linf[i]});
  add_check(ctx.manifest, "slope_linf_error", std::abs(rep.slope_linf - 1.0), 0.1);
  add_check(ctx.manifest, "slope_weighted_error", std::abs(rep.slope_weighted - 1.0), 0.1);
  ctx.manifest.derived["slope_linf"] = rep.slope_linf;
  ctx.manifest.derived["slope_weighted"] = rep.slope_weighted;
}

void exp_convergence_study(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  CsvWriter csv((ctx.out / "series.csv").string(), {"stepper", "dt", "error", "order", "note"});
  for (Stepper st : {Stepper::strang, Stepper::ifrk4}) {
    const std::string name = (st == Stepper::strang) ? "strang" : "ifrk4";
    std::vector<double> dts, errs;
    std::vector<Field> finals;
    double dt = cfg.dt;
    for (int r = 0; r < 4; ++r, dt *= 0.5) {
      EvolveResult res = evolve(ctx.u0, cfg.T, dt, st, cfg.eq);
      if (res.failure) throw NumericalError("convergence_study: run failed at dt " + std::to_string(dt));
      dts.push_back(dt);
      finals.push_back(res.traj.steps.back());
    }
    const double scale = l2_norm(finals.back());
    for (size_t r = 0; r + 1 < finals.size(); ++r)
      errs.push_back(l2_norm(finals[r] - finals[r + 1]));
    double fitted = 0.0;
    int n_orders = 0;
    for (size_t r = 0; r < errs.size(); ++r) {
      std::string note = "ok";
      double order = std::numeric_limits<double>::quiet_NaN();
      if (errs[r] < 1e-12 * scale) {
        note = "saturated";
      } else if (r + 1 < errs.size()) {
        if (errs[r + 1] >= errs[r]) note = "non-monotone";
        else if (errs[r + 1] >= 1e-12 * scale) {
          order = std::log2(errs[r] / errs[r + 1]);
          fitted += order;
          ++n_orders;
        }
      }
      csv.row({name, dts[r], errs[r], order, note});
    }
    if (n_orders > 0) {
      fitted /= n_orders;
      const double target = (st == Stepper::strang) ? 2.0 : 4.0;
      const double tol = (st == Stepper::strang) ? 0.2 : 0.4;
      add_check(ctx.manifest, name + "_order_error", std::abs(fitted - target), tol);
      ctx.manifest.derived[name + "_order"] = fitted;
    } else {
      ctx.manifest.derived[name + "_order"] = std::numeric_limits<double>::quiet_NaN();
    }
  }
}

void exp_dependence_study(Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  XTNormParams p{cfg.cls, cfg.T, cfg.dt};
  CsvWriter csv((ctx.out / "series.csv").string(), {"perturbation", "lhs", "rhs", "ratio"});
  double prev_ratio = 0.0;
  for (double eps : {1e-3, 1e-4}) {
    Field v0 = cplx(1.0 + eps) * ctx.u0;
    DependenceReport rep = dependence_probe(ctx.u0, v0, cfg.eq, p);
    csv.row({eps, rep.lhs, rep.rhs, rep.ratio});
    if (prev_ratio > 0.0) {
      const double drift = std::max(rep.ratio / prev_ratio, prev_ratio / rep.ratio);
      add_check(ctx.manifest, "ratio_stability", drift, 2.0);
    }
    prev_ratio = rep.ratio;
  }
}

void exp_determine_mu(Context& ctx) {
  MuProbe probe = determine_mu_star(ctx.grid);
  CsvWriter csv((ctx.out / "series.csv").string(), {"mu_re", "mu_im", "residual"});
  for (const auto& [mu, r] : probe.residuals) csv.row({mu.real(), mu.imag(), r});
  ctx.manifest.mu_star_known = true;
  ctx.manifest.mu_star = probe.mu_star;
  double best = std::numeric_limits<double>::infinity(), others = std::numeric_limits<double>::infinity();
  for (const auto& [mu, r] : probe.residuals) {
    if (mu == probe.mu_star) best = r;
    else others = std::min(others, r);
  }
  add_check(ctx.manifest, "mu_star_residual", best, 1e-6);
  add_check(ctx.manifest, "other_mu_residuals", others, 1e-2, false);
}

using ExperimentFn = void (*)(Context&);

const std::vector<std::pair<std::string, ExperimentFn>>& registry() {
  static const std::vector<std::pair<std::string, ExperimentFn>> reg = {
      {"soliton_propagation", exp_soliton_propagation},
      {"picard_study", exp_picard_study},
      {"smoothing_probe", exp_smoothing_probe},
      {"inequality_sweep", exp_inequality_sweep},
      {"small_time_probe", exp_small_time_probe},
      {"convergence_study", exp_convergence_study},
      {"dependence_study", exp_dependence_study},
      {"determine_mu", exp_determine_mu},
  };
  return reg;
}

}  // namespace

std::vector<std::string> registered_experiments() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

cplx resolve_mu(const RunConfig& cfg, RunManifest& manifest) {
  if (!cfg.mu_auto) return cfg.eq.mu;
  const cplx mu = mu_probe_cached(cfg.out_dir);
  manifest.mu_star_known = true;
  manifest.mu_star = mu;
  return mu;
}

int run_experiment(const RunConfig& cfg) {
  ExperimentFn fn = nullptr;
  for (const auto& [name, f] : registry())
    if (name == cfg.experiment) fn = f;
  if (!fn) {
    std::fprintf(stderr, "unknown experiment '%s'\n", cfg.experiment.c_str());
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Context ctx;
  try {
    ctx = make_context(cfg);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitUsage;
  } catch (const ParamError& e) {
    std::fprintf(stderr, "parameter error: %s\n", e.what());
    return kExitUsage;
  }

  const fs::path manifest_path = ctx.out / "manifest.json";
  ctx.manifest.write(manifest_path.string());  // preliminary

  int code = kExitOk;
  try {
    fn(ctx);
    if (ctx.manifest.status == "incomplete") ctx.manifest.status = "complete";
  } catch (const NumericalError& e) {
    ctx.manifest.status = std::string("numerical_failure: ") + e.what();
    code = kExitNumerical;
  } catch (const TruncationError& e) {
    ctx.manifest.status = std::string("truncation_failure: ") + e.what();
    code = kExitNumerical;
  }
  ctx.manifest.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ctx.manifest.write(manifest_path.string());
  return code;
}

}  // namespace gdnls::harness
