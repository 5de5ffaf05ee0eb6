#pragma once

#include <cmath>

#include "gdnlslab/spectral.hpp"

namespace gdnls {

// <x>^m = (1 + x^2)^{m/2} at the nodes.
inline Field weight_field(GridPtr grid, int m) {
  return make_grid_field(std::move(grid),
                         [m](double x) { return cplx(std::pow(1.0 + x * x, 0.5 * m), 0.0); });
}

// max over nodes of <x>^m |f|.
inline double weighted_linf(const Field& f, int m) {
  double best = 0.0;
  for (int i = 0; i < f.size(); ++i) {
    const double x = f.grid->node[i];
    best = std::max(best, std::pow(1.0 + x * x, 0.5 * m) * std::abs(f.v[i]));
  }
  return best;
}

// quadrature norm of <x>^m d_x^j f.
inline double weighted_l2(const Field& f, int m, int j, int max_order = kMaxDerivOrder) {
  Field g = (j == 0) ? f : deriv(f, j, max_order);
  double s = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    const double x = g.grid->node[i];
    s += std::pow(1.0 + x * x, m) * std::norm(g.v[i]);
  }
  return std::sqrt(s * f.grid->dx);
}

}  // namespace gdnls
