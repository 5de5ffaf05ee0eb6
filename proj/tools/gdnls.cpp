#include <CLI11.hpp>

#include <cstdio>

#include "gdnlslab/harness/experiments.hpp"
#include "gdnlslab/harness/sweep.hpp"

using namespace gdnls;
using namespace gdnls::harness;

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  int workers = 0;
  long long seed = -1;
};

void add_common(CLI::App* sub, CommonOpts& opts, bool config_required) {
  auto* c = sub->add_option("--config", opts.config_path, "configuration file");
  if (config_required) c->required();
  sub->add_option("--out", opts.out_dir, "output directory (overrides the config)");
  sub->add_option("--workers", opts.workers, "worker threads (sweep only)");
  sub->add_option("--seed", opts.seed, "random seed (overrides the config)");
}

RunConfig load(const CommonOpts& opts, const std::string& default_experiment) {
  RunConfig cfg;
  if (!opts.config_path.empty()) cfg = parse_config_file(opts.config_path);
  if (cfg.experiment.empty()) cfg.experiment = default_experiment;
  if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;
  if (opts.workers > 0) cfg.workers = opts.workers;
  if (opts.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opts.seed);
  return cfg;
}

int dispatch(const CommonOpts& opts, const std::string& default_experiment, bool sweep) {
  try {
    RunConfig cfg = load(opts, default_experiment);
    return sweep ? run_sweep(cfg) : run_experiment(cfg);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitUsage;
  } catch (const ParamError& e) {
    std::fprintf(stderr, "parameter error: %s\n", e.what());
    return kExitUsage;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return kExitNumerical;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gdnls: pseudospectral laboratory for the generalized derivative NLS equation"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    const char* experiment;
    bool config_required;
    bool sweep;
  };
  const Sub subs[] = {
      {"simulate", "evolve an initial datum and track the exact-solution error",
       "soliton_propagation", true, false},
      {"picard", "run the contraction-map iteration study", "picard_study", true, false},
      {"probe-smoothing", "measure the local smoothing gain along a run", "smoothing_probe",
       true, false},
      {"check-inequalities", "evaluate the interpolation-inequality ratios on random fields",
       "inequality_sweep", true, false},
      {"probe-continuity", "small-time continuity slopes of the linear propagator",
       "small_time_probe", true, false},
      {"converge", "time-step refinement ladder for both steppers", "convergence_study", true,
       false},
      {"sweep", "cross product of parameter axes, one cell per directory", "soliton_propagation",
       true, true},
      {"determine-mu", "pick the drift sign by the solitary-wave residual", "determine_mu",
       false, false},
  };

  std::vector<CommonOpts> opts(std::size(subs));
  for (size_t i = 0; i < std::size(subs); ++i) {
    CLI::App* sub = app.add_subcommand(subs[i].name, subs[i].help);
    add_common(sub, opts[i], subs[i].config_required);
    sub->callback([&, i] { std::exit(dispatch(opts[i], subs[i].experiment, subs[i].sweep)); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  return kExitOk;
}
