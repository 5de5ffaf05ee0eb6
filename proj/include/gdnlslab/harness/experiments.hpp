#pragma once

#include "gdnlslab/harness/config.hpp"
#include "gdnlslab/harness/manifest.hpp"

namespace gdnls::harness {

// Stable CLI/exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

// Resolves mu: explicit from the config, or the cached mu* probe
// (determined once, stored in <out>/mu_star.json).
cplx resolve_mu(const RunConfig& cfg, RunManifest& manifest);

// Dispatches to the registered experiment named in the config and writes
// <out>/manifest.json plus the experiment's CSV files.  Returns an exit
// code per the contract above.
int run_experiment(const RunConfig& cfg);

std::vector<std::string> registered_experiments();

}  // namespace gdnls::harness
