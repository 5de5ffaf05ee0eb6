#pragma once

#include <cstdint>

#include "gdnlslab/field.hpp"

namespace gdnls {

// Seeded random smooth decaying fields, defined in the continuum (sums
// of modulated Gaussian bumps) so the same seed yields the same function
// on any grid.  Bump widths and modulation frequencies are bounded, so
// the samples are band-limited in practice and negligible at the box
// boundary for L >= ~20.
Field random_smooth_decaying(GridPtr grid, std::uint64_t seed);

// Same generator, rescaled to ||D^{1/2} f||_2 = 1 on the given grid.
Field random_unit_hhalf(GridPtr grid, std::uint64_t seed);

}  // namespace gdnls
