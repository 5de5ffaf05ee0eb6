#include "gdnlslab/diagnostics.hpp"

#include <cmath>

namespace gdnls {

SmoothingReport local_smoothing(const Trajectory& traj, int k, int max_order) {
  if (k + 1 > max_order)
    throw ConfigError("local_smoothing: k+1 exceeds the maximum derivative order");
  const Grid& g = *traj.grid;
  const int j_lo = static_cast<int>(std::floor(-g.half_length));
  const int j_hi = static_cast<int>(std::ceil(g.half_length));
  const size_t n_int = static_cast<size_t>(j_hi - j_lo);
  std::vector<double> acc(n_int, 0.0);

  // trapezoid in t over the snapshots, quadrature in x inside each I_j
  const int nt = traj.n_steps();
  for (int n = 0; n <= nt; ++n) {
    const Field d = deriv(traj.steps[static_cast<size_t>(n)], k + 1, max_order);
    const double wt = (n == 0 || n == nt) ? 0.5 * traj.dt : traj.dt;
    for (int i = 0; i < d.size(); ++i) {
      const int j = static_cast<int>(std::floor(g.node[i]));
      acc[static_cast<size_t>(j - j_lo)] += wt * std::norm(d.v[i]) * g.dx;
    }
  }

  SmoothingReport rep;
  for (size_t q = 0; q < n_int; ++q) {
    rep.interval_index.push_back(j_lo + static_cast<int>(q));
    const double val = std::sqrt(acc[q]);
    rep.interval_value.push_back(val);
    rep.sup = std::max(rep.sup, val);
    rep.l1 += val;
  }
  return rep;
}

KatoSmoothingReport kato_smoothing_ratio(const Field& v0, const FrozenCoefficient& fc, double T,
                                         double dt) {
  const double den = sobolev_norm(riesz(v0, 0.5), 0.0);
  if (!(den > 0.0)) throw ParamError("kato_smoothing_ratio: ||D^{1/2} v0||_2 must be positive");
  Trajectory traj = propagator_trajectory(fc, v0, T, dt);

  double sup_dhalf = 0.0;
  for (const Field& u : traj.steps) sup_dhalf = std::max(sup_dhalf, sobolev_norm(riesz(u, 0.5), 0.0));

  SmoothingReport sm = local_smoothing(traj, 0);  // d_x^1
  KatoSmoothingReport rep;
  rep.sup_dhalf = sup_dhalf / den;
  rep.smoothing = sm.sup / den;
  return rep;
}

double interp_check_1(const Field& f, double a, double b, double gamma, int variant) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw ParamError("interp_check_1: gamma must lie in (0, 1]");
  if (!(a > 0.0 && b > 0.0)) throw ParamError("interp_check_1: a, b must be positive");
  double num, den;
  if (variant == 1) {
    // <x>^{(1-gamma) b} f, with a real (possibly non-integer) exponent
    Field g(f.grid);
    const double e = (1.0 - gamma) * b;
    for (int i = 0; i < f.size(); ++i) {
      const double x = f.grid->node[i];
      g.v[i] = std::pow(1.0 + x * x, 0.5 * e) * f.v[i];
    }
    num = sobolev_norm(g, gamma * a);
    Field wb(f.grid);
    for (int i = 0; i < f.size(); ++i) {
      const double x = f.grid->node[i];
      wb.v[i] = std::pow(1.0 + x * x, 0.5 * b) * f.v[i];
    }
    den = std::pow(l2_norm(wb), 1.0 - gamma) * std::pow(sobolev_norm(f, a), gamma);
  } else {
    Field g = bessel(f, (1.0 - gamma) * b);
    double s = 0.0;
    const double e = gamma * a;
    for (int i = 0; i < g.size(); ++i) {
      const double x = g.grid->node[i];
      s += std::pow(1.0 + x * x, e) * std::norm(g.v[i]);
    }
    num = std::sqrt(s * f.grid->dx);
    Field wa(f.grid);
    for (int i = 0; i < f.size(); ++i) {
      const double x = f.grid->node[i];
      wa.v[i] = std::pow(1.0 + x * x, 0.5 * a) * f.v[i];
    }
    den = std::pow(sobolev_norm(f, b), 1.0 - gamma) * std::pow(l2_norm(wa), gamma);
  }
  if (!(den > 0.0)) throw ParamError("interp_check_1: degenerate input (zero denominator)");
  return num / den;
}

double interp_check_2(const Field& f, int k, int j, int variant) {
  if (k < 1 || j < 1) throw ParamError("interp_check_2: k, j must be >= 1");
  int ka, kb;
  switch (variant) {
    case 1: ka = k; kb = k; break;
    case 2: ka = k - 1; kb = k + 1; break;
    case 3: ka = k + 1; kb = k - 1; break;
    default: throw ParamError("interp_check_2: variant must be 1, 2 or 3");
  }
  const double lhs = weighted_l2(f, k, j);
  const double rhs = weighted_l2(f, ka, j + 1) * weighted_l2(f, kb, j - 1) +
                     weighted_l2(f, k - 1, j - 1) * weighted_l2(f, k - 1, j - 1);
  if (!(rhs > 0.0)) throw ParamError("interp_check_2: degenerate input (zero denominator)");
  return lhs * lhs / rhs;
}

namespace {

double loglog_slope(const std::vector<double>& t, const std::vector<double>& y) {
  const size_t n = t.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    const double lx = std::log(t[i]);
    const double ly = std::log(y[i]);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

SmallTimeReport small_time_continuity(const Field& u0, const FrozenCoefficient& fc, int m,
                                      const std::vector<double>& t_list) {
  SmallTimeReport rep;
  for (double t : t_list) {
    Field w = propagator_W(fc, u0, t, t / 32.0);
    Field d = w - u0;
    rep.t.push_back(t);
    rep.diff_linf.push_back(linf_norm(d));
    rep.diff_weighted_linf.push_back(weighted_linf(d, m));
  }
  rep.slope_linf = loglog_slope(rep.t, rep.diff_linf);
  rep.slope_weighted = loglog_slope(rep.t, rep.diff_weighted_linf);
  return rep;
}

double mass(const Field& f) {
  const double n = l2_norm(f);
  return n * n;
}

double residual(const Trajectory& traj, const EquationSpec& spec) {
  if (traj.n_steps() < 2) throw ConfigError("residual: trajectory needs >= 3 snapshots");
  double worst = 0.0;
  for (int n = 1; n < traj.n_steps(); ++n) {
    Field dudt = cplx(1.0 / (2.0 * traj.dt)) *
                 (traj.steps[static_cast<size_t>(n + 1)] - traj.steps[static_cast<size_t>(n - 1)]);
    worst = std::max(worst, l2_norm(dudt - rhs(traj.steps[static_cast<size_t>(n)], spec)));
  }
  return worst;
}

}  // namespace gdnls
