#pragma once

#include <functional>

#include "gdnlslab/fft.hpp"
#include "gdnlslab/field.hpp"

namespace gdnls {

// Fourier multiplier m(xi), applied coefficient-wise.
struct MultiplierSymbol {
  std::function<cplx(double)> m;
};

inline constexpr int kMaxDerivOrder = 8;

Field make_grid_field(GridPtr grid, const std::function<cplx(double)>& f);

// Inverse transform of m(xi) * hat(f).  Exact for band-limited inputs.
Field apply_multiplier(const Field& f, const MultiplierSymbol& sym);

// (i xi)^j, j <= max_order (default 8; high orders amplify round-off
// by xi^j on noisy data).
Field deriv(const Field& f, int j, int max_order = kMaxDerivOrder);

// Bessel potential J^s = (1 - d_x^2)^{s/2}, multiplier (1 + xi^2)^{s/2}.
Field bessel(const Field& f, double s);

// Riesz potential D^s = (-d_x^2)^{s/2}, multiplier |xi|^s.  The xi = 0
// mode is mapped to 0 when s > 0; for s < 0 the field must have zero
// mean or a singular-mode error is raised.
Field riesz(const Field& f, double s);

// ||J^s f||_2 with the weight fixed so s = 0 reproduces the grid L^2
// norm: ||f||_{s,2}^2 = 2L * sum_k (1 + xi^2)^s |hat(f)_k|^2.
double sobolev_norm(const Field& f, double s);

// 2/3-rule spectral truncation (zeroes |xi| above two thirds of Nyquist).
Field dealias_23(const Field& f);

}  // namespace gdnls
