#pragma once

#include "gdnlslab/harness/config.hpp"

namespace gdnls::harness {

// Runs the cross product of the config's sweep axes, each cell in
// <out>/cell_###/ with its own manifest, and writes <out>/index.csv
// after all cells finish.  Cell failures are recorded in the index and
// do not abort the sweep.  Returns 0 if every cell succeeded, else 3.
int run_sweep(const RunConfig& cfg);

}  // namespace gdnls::harness
