#include "gdnlslab/random_fields.hpp"

#include <cmath>
#include <random>

#include "gdnlslab/spectral.hpp"

namespace gdnls {

Field random_smooth_decaying(GridPtr grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss;

  struct Bump {
    double amp_re, amp_im, center, width, freq;
  };
  std::vector<Bump> bumps(6);
  for (Bump& b : bumps) {
    b.amp_re = gauss(rng);
    b.amp_im = gauss(rng);
    b.center = -6.0 + 12.0 * unit(rng);
    b.width = 0.8 + 2.2 * unit(rng);
    b.freq = -4.0 + 8.0 * unit(rng);
  }
  return make_grid_field(std::move(grid), [bumps](double x) {
    cplx s{};
    for (const Bump& b : bumps) {
      const double z = (x - b.center) / b.width;
      s += cplx(b.amp_re, b.amp_im) * std::exp(-0.5 * z * z) *
           std::exp(cplx(0.0, b.freq * x));
    }
    return s;
  });
}

Field random_unit_hhalf(GridPtr grid, std::uint64_t seed) {
  Field f = random_smooth_decaying(std::move(grid), seed);
  const double n = l2_norm(riesz(f, 0.5));
  return cplx(1.0 / n) * f;
}

}  // namespace gdnls
