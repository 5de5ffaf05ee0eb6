#include "gdnlslab/spectral.hpp"

#include <cmath>
#include <string>

namespace gdnls {

Field make_grid_field(GridPtr grid, const std::function<cplx(double)>& f) {
  Field r(std::move(grid));
  for (int i = 0; i < r.size(); ++i) r.v[i] = f(r.grid->node[i]);
  return r;
}

Field apply_multiplier(const Field& f, const MultiplierSymbol& sym) {
  auto hat = fft_forward(f);
  const auto& xi = f.grid->xi;
  for (size_t k = 0; k < hat.size(); ++k) hat[k] *= sym.m(xi[k]);
  Field out = fft_inverse(f.grid, hat);
  if (!out.finite()) throw NumericalError("apply_multiplier produced a non-finite field");
  return out;
}

Field deriv(const Field& f, int j, int max_order) {
  if (j < 0 || j > max_order)
    throw ConfigError("deriv: order " + std::to_string(j) + " above configured max " +
                      std::to_string(max_order));
  return apply_multiplier(f, {[j](double xi) { return std::pow(cplx(0.0, xi), j); }});
}

Field bessel(const Field& f, double s) {
  return apply_multiplier(f, {[s](double xi) { return cplx(std::pow(1.0 + xi * xi, 0.5 * s), 0.0); }});
}

Field riesz(const Field& f, double s) {
  if (s < 0.0) {
    auto hat = fft_forward(f);
    double peak = 0.0;
    for (const cplx& z : hat) peak = std::max(peak, std::abs(z));
    if (std::abs(hat[0]) > 1e-13 * std::max(peak, 1e-300))
      throw NumericalError("riesz: negative order on a field with nonzero mean (singular xi = 0 mode)");
  }
  return apply_multiplier(f, {[s](double xi) {
    if (xi == 0.0) return cplx(0.0, 0.0);
    return cplx(std::pow(std::abs(xi), s), 0.0);
  }});
}

double sobolev_norm(const Field& f, double s) {
  const auto hat = fft_forward(f);
  const auto& xi = f.grid->xi;
  double sum = 0.0;
  for (size_t k = 0; k < hat.size(); ++k)
    sum += std::pow(1.0 + xi[k] * xi[k], s) * std::norm(hat[k]);
  return std::sqrt(2.0 * f.grid->half_length * sum);
}

Field dealias_23(const Field& f) {
  const double cutoff = (2.0 / 3.0) * (M_PI / f.grid->half_length) * (f.grid->n_points / 2);
  auto hat = fft_forward(f);
  const auto& xi = f.grid->xi;
  for (size_t k = 0; k < hat.size(); ++k)
    if (std::abs(xi[k]) > cutoff) hat[k] = cplx{};
  return fft_inverse(f.grid, hat);
}

}  // namespace gdnls
