#include "gdnlslab/profiles.hpp"

#include <cmath>
#include <string>

#include "gdnlslab/weights.hpp"

namespace gdnls {

void WaveParams::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw ParamError("WaveParams: alpha must lie in (0, 1], got " + std::to_string(alpha));
  if (branch == Branch::generic) {
    if (!(omega > 0.25 * c * c))
      throw ParamError("WaveParams: generic branch requires omega > c^2/4");
  } else {
    if (!(omega == 0.25 * c * c && c > 0.0))
      throw ParamError("WaveParams: degenerate branch requires omega = c^2/4 and c > 0");
  }
}

int ClassParams::default_m(double alpha) {
  return static_cast<int>(std::floor(2.0 / alpha + 1.0));
}

ClassParams ClassParams::defaults(double alpha) {
  ClassParams p;
  p.alpha = alpha;
  p.m = default_m(alpha);
  p.M = 2;
  p.k = p.m + p.M + 1;
  p.s = p.k + 0.5;
  return p;
}

void ClassParams::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ParamError("ClassParams: alpha must lie in (0, 1]");
  if (!(m > 1.0 / alpha))
    throw ParamError("ClassParams: m must exceed 1/alpha, got m = " + std::to_string(m));
  if (k < m + M + 1) throw ParamError("ClassParams: k must be >= m + M + 1");
  if (lambda > 0.0 && nu > 0.0 && !(lambda < nu))
    throw ParamError("ClassParams: lambda must be < nu");
}

namespace {

// phi^alpha has a closed form without the 1/alpha root.
double phi_pow_alpha(const WaveParams& p, double x) {
  if (p.branch == Branch::generic) {
    const double delta = 4.0 * p.omega - p.c * p.c;
    const double ch = std::cosh(0.5 * p.alpha * std::sqrt(delta) * x);
    return (2.0 + p.alpha) * delta / (4.0 * std::sqrt(p.omega) * ch - 2.0 * p.c);
  }
  const double q = 0.5 * p.alpha * p.c * x;
  return (p.alpha + 2.0) * p.c / (q * q + 1.0);
}

// integral of phi^alpha over (-inf, y0]
double tail_integral(const WaveParams& p, double y0) {
  if (p.branch == Branch::generic) {
    // phi^alpha ~ C e^{kappa y} as y -> -inf with kappa = (alpha/2) sqrt(delta);
    // fitting C at y0 gives integral phi^alpha(y0)/kappa
    const double delta = 4.0 * p.omega - p.c * p.c;
    const double kappa = 0.5 * p.alpha * std::sqrt(delta);
    return phi_pow_alpha(p, y0) / kappa;
  }
  // exact: (alpha+2) c / (1 + (alpha c y/2)^2) integrates to arctan
  const double a = 0.5 * p.alpha * p.c;
  return ((p.alpha + 2.0) * p.c / a) * (0.5 * M_PI + std::atan(a * y0));
}

// cumulative integral of phi^alpha from -inf to y0 + j*dx, j = 0..n-1,
// composite Simpson with `refine` (even) subintervals per grid cell
std::vector<double> cumulative_phase(const WaveParams& p, double y0, int n, double dx, int refine) {
  if (refine < 2 || refine % 2 != 0) throw ConfigError("phase_integral: refine must be even >= 2");
  std::vector<double> out(static_cast<size_t>(n));
  out[0] = tail_integral(p, y0);
  const double h = dx / refine;
  for (int j = 1; j < n; ++j) {
    const double left = y0 + (j - 1) * dx;
    double cell = 0.0;
    for (int q = 0; q < refine; q += 2) {
      const double a = left + q * h;
      cell += phi_pow_alpha(p, a) + 4.0 * phi_pow_alpha(p, a + h) + phi_pow_alpha(p, a + 2 * h);
    }
    out[j] = out[j - 1] + cell * h / 3.0;
  }
  return out;
}

}  // namespace

double phi(const WaveParams& p, double x) {
  p.validate();
  return std::pow(phi_pow_alpha(p, x), 1.0 / p.alpha);
}

std::vector<double> phase_integral(const WaveParams& p, const Grid& grid, int refine) {
  p.validate();
  return cumulative_phase(p, -grid.half_length, grid.n_points, grid.dx, refine);
}

Field solitary_wave(const WaveParams& p, GridPtr grid, double t, double boundary_guard) {
  p.validate();
  const int n = grid->n_points;
  const double y0 = -grid->half_length - p.c * t;
  const auto theta = cumulative_phase(p, y0, n, grid->dx, 4);
  Field psi(grid);
  double peak = 0.0;
  for (int j = 0; j < n; ++j) {
    const double y = grid->node[j] - p.c * t;
    const double amp = phi(p, y);
    const double phase =
        p.omega * t + 0.5 * p.c * y - theta[static_cast<size_t>(j)] / (p.alpha + 2.0);
    psi.v[j] = amp * std::exp(cplx(0.0, phase));
    peak = std::max(peak, amp);
  }
  if (boundary_amplitude(psi) > boundary_guard * peak)
    throw TruncationError("solitary_wave: boundary amplitude " +
                          std::to_string(boundary_amplitude(psi)) + " exceeds guard " +
                          std::to_string(boundary_guard) + " * max|psi|; enlarge L");
  return psi;
}

Field decay_profile(cplx c0, int m, GridPtr grid) {
  if (c0 == cplx{}) throw ParamError("decay_profile: c0 must be nonzero");
  if (m < 1) throw ParamError("decay_profile: m must be >= 1");
  return make_grid_field(std::move(grid),
                         [c0, m](double x) { return c0 * std::pow(1.0 + x * x, -0.5 * m); });
}

Field decay_profile_periodized(cplx c0, int m, GridPtr grid) {
  if (c0 == cplx{}) throw ParamError("decay_profile_periodized: c0 must be nonzero");
  if (m < 2) throw ParamError("decay_profile_periodized: m must be >= 2");
  // continuum transform of <x>^{-m}: (2 sqrt(pi)/Gamma(m/2)) (|xi|/2)^nu K_nu(|xi|),
  // nu = (m-1)/2; Poisson summation divides by the period 2L
  const double nu = 0.5 * (m - 1);
  const double front = 2.0 * std::sqrt(M_PI) / std::tgamma(0.5 * m);
  const double zero_mode = std::sqrt(M_PI) * std::tgamma(nu) / std::tgamma(0.5 * m);
  const double inv_period = 1.0 / (2.0 * grid->half_length);
  std::vector<cplx> hat(static_cast<size_t>(grid->n_points));
  for (int k = 0; k < grid->n_points; ++k) {
    const double axi = std::abs(grid->xi[k]);
    double F;
    if (axi == 0.0) {
      F = zero_mode;
    } else if (axi > 690.0) {
      F = 0.0;  // K_nu underflows
    } else {
      F = front * std::pow(0.5 * axi, nu) * std::cyl_bessel_k(nu, axi);
    }
    hat[static_cast<size_t>(k)] = c0 * F * inv_period;
  }
  return fft_inverse(std::move(grid), hat);
}

double weighted_inf(const Field& f, int m) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < f.size(); ++i) {
    const double x = f.grid->node[i];
    best = std::min(best, std::pow(1.0 + x * x, 0.5 * m) * std::abs(f.v[i]));
  }
  return best;
}

double class_nu(const Field& f, const ClassParams& p) {
  double total = sobolev_norm(f, p.s) + weighted_linf(f, p.m);
  for (int j = 0; j <= p.M; ++j) total += weighted_l2(f, p.m, j + 1);
  if (!std::isfinite(total)) throw NumericalError("class_nu: non-finite value");
  return total;
}

}  // namespace gdnls
