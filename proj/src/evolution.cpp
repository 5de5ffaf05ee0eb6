#include "gdnlslab/evolution.hpp"

#include <cmath>
#include <string>

#include "gdnlslab/profiles.hpp"

namespace gdnls {

void EquationSpec::validate() const {
  if (std::abs(std::abs(mu) - 1.0) > 1e-12)
    throw ParamError("EquationSpec: mu must have unit modulus");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw ParamError("EquationSpec: alpha must lie in (0, 1]");
  if (!(epsilon >= 0.0)) throw ParamError("EquationSpec: epsilon must be >= 0");
}

Field regularized_modulus_pow(const Field& f, double alpha, double eps) {
  Field r(f.grid);
  const double e2 = eps * eps;
  for (int i = 0; i < f.size(); ++i)
    r.v[i] = cplx(std::pow(std::norm(f.v[i]) + e2, 0.5 * alpha), 0.0);
  return r;
}

FrozenCoefficient FrozenCoefficient::from_data(const Field& u0, const EquationSpec& spec, int M) {
  spec.validate();
  FrozenCoefficient fc;
  fc.b = spec.mu * regularized_modulus_pow(u0, spec.alpha, spec.epsilon);
  for (int k = 0; k <= M; ++k) fc.A1 += linf_norm(k == 0 ? fc.b : deriv(fc.b, k));

  const double L = u0.grid->half_length;
  const int j_lo = static_cast<int>(std::floor(-L));
  const int j_hi = static_cast<int>(std::ceil(L));
  for (int j = j_lo; j < j_hi; ++j) {
    double sup = 0.0;
    for (int i = 0; i < fc.b.size(); ++i) {
      const double x = fc.b.grid->node[i];
      if (x >= j && x < j + 1) sup = std::max(sup, std::abs(fc.b.v[i]));
    }
    fc.A2 += sup;
  }
  return fc;
}

Field Trajectory::at_time(double t) const {
  const int nt = n_steps();
  const double s = (t - t0) / dt;
  int n1 = static_cast<int>(std::floor(s));
  // 4-point stencil n1-1..n1+2, clamped to the stored range
  int base = std::clamp(n1 - 1, 0, nt - 3);
  if (nt < 3) base = 0;
  const int count = std::min(4, nt + 1);
  Field out(grid);
  for (int a = 0; a < count; ++a) {
    double w = 1.0;
    for (int b = 0; b < count; ++b)
      if (b != a) w *= (s - (base + b)) / static_cast<double>(a - b);
    for (int i = 0; i < out.size(); ++i) out.v[i] += w * steps[static_cast<size_t>(base + a)].v[i];
  }
  return out;
}

namespace {

Field nonlinear_term(const Field& u, const EquationSpec& spec) {
  Field nl;
  if (spec.form == NonlinearForm::gdnls)
    nl = spec.mu * (regularized_modulus_pow(u, spec.alpha, spec.epsilon) * deriv(u, 1));
  else
    nl = spec.mu * deriv(regularized_modulus_pow(u, spec.alpha, spec.epsilon) * u, 1);
  return spec.dealias ? dealias_23(nl) : nl;
}

// e^{tau L} with L = i d_x^2, i.e. multiplier exp(-i xi^2 tau)
Field linear_flow(const Field& f, double tau) {
  return apply_multiplier(f, {[tau](double xi) {
    return std::exp(cplx(0.0, -xi * xi * tau));
  }});
}

}  // namespace

Field rhs_gdnls(const Field& u, const EquationSpec& spec) {
  EquationSpec s = spec;
  s.form = NonlinearForm::gdnls;
  return cplx(0, 1) * deriv(u, 2) + nonlinear_term(u, s);
}

Field rhs_divergence(const Field& u, const EquationSpec& spec) {
  EquationSpec s = spec;
  s.form = NonlinearForm::divergence;
  return cplx(0, 1) * deriv(u, 2) + nonlinear_term(u, s);
}

Field rhs(const Field& u, const EquationSpec& spec) {
  return spec.form == NonlinearForm::gdnls ? rhs_gdnls(u, spec) : rhs_divergence(u, spec);
}

Field rhs_frozen(const Field& w, const FrozenCoefficient& fc, const Field* forcing) {
  require_same_grid(w, fc.b);
  Field r = cplx(0, 1) * deriv(w, 2) + fc.b * deriv(w, 1);
  if (forcing) r = r + *forcing;
  return r;
}

Field step_strang(const Field& u, double dt, const EquationSpec& spec) {
  Field w = linear_flow(u, 0.5 * dt);
  // RK4 on d_t u = nonlinear term (no closed-form flow for general alpha)
  Field k1 = nonlinear_term(w, spec);
  Field k2 = nonlinear_term(w + cplx(0.5 * dt) * k1, spec);
  Field k3 = nonlinear_term(w + cplx(0.5 * dt) * k2, spec);
  Field k4 = nonlinear_term(w + cplx(dt) * k3, spec);
  w = w + cplx(dt / 6.0) * (k1 + cplx(2) * k2 + cplx(2) * k3 + k4);
  w = linear_flow(w, 0.5 * dt);
  if (!w.finite()) throw NumericalError("step_strang: non-finite field");
  return w;
}

Field step_ifrk4(const Field& u, double t, double dt, const NonstiffOp& nonstiff) {
  const double h = 0.5 * dt;
  Field k1 = nonstiff(u, t);
  Field eu = linear_flow(u, h);
  Field k2 = nonstiff(linear_flow(u + cplx(h) * k1, h), t + h);
  Field k3 = nonstiff(eu + cplx(h) * k2, t + h);
  Field k4 = nonstiff(linear_flow(eu + cplx(dt) * k3, h), t + dt);
  Field out = linear_flow(eu + cplx(dt / 6.0) * (linear_flow(k1, h) + cplx(2) * k2 + cplx(2) * k3),
                          h) +
              cplx(dt / 6.0) * k4;
  if (!out.finite()) throw NumericalError("step_ifrk4: non-finite field");
  return out;
}

namespace {

int step_count(double T, double dt) {
  const double ratio = T / dt;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio))
    throw ConfigError("evolve: dt must divide T (T/dt = " + std::to_string(ratio) + ")");
  return static_cast<int>(rounded);
}

void record_step(Trajectory& traj, const Field& u) {
  const double amp = linf_norm(u);
  traj.steps.push_back(u);
  traj.max_amp.push_back(amp);
  traj.boundary_guard.push_back(amp > 0.0 ? boundary_amplitude(u) / amp : 0.0);
}

}  // namespace

EvolveResult evolve(const Field& u0, double T, double dt, Stepper stepper,
                    const EquationSpec& spec) {
  spec.validate();
  if (!(T > 0.0 && dt > 0.0)) throw ConfigError("evolve: T and dt must be > 0");
  const int nt = step_count(T, dt);

  EvolveResult res;
  res.traj.grid = u0.grid;
  res.traj.t0 = 0.0;
  res.traj.dt = dt;
  record_step(res.traj, u0);

  NonstiffOp nonstiff = [&spec](const Field& u, double) { return nonlinear_term(u, spec); };
  Field u = u0;
  for (int n = 0; n < nt; ++n) {
    try {
      u = (stepper == Stepper::strang) ? step_strang(u, dt, spec)
                                       : step_ifrk4(u, n * dt, dt, nonstiff);
    } catch (const NumericalError& e) {
      res.failure = EvolveFailure{n + 1, e.what()};
      return res;
    }
    record_step(res.traj, u);
  }
  return res;
}

Trajectory evolve_frozen(const FrozenCoefficient& fc, const Field& w0, const Trajectory* forcing,
                         double T, double dt) {
  const int nt = step_count(T, dt);
  Trajectory traj;
  traj.grid = w0.grid;
  traj.t0 = 0.0;
  traj.dt = dt;
  record_step(traj, w0);

  NonstiffOp nonstiff = [&](const Field& w, double t) {
    Field r = fc.b * deriv(w, 1);
    if (forcing) r = r + forcing->at_time(t);
    return r;
  };
  Field w = w0;
  for (int n = 0; n < nt; ++n) {
    w = step_ifrk4(w, n * dt, dt, nonstiff);
    record_step(traj, w);
  }
  return traj;
}

Field propagator_W(const FrozenCoefficient& fc, const Field& v0, double t, double dt) {
  if (t == 0.0) return v0;
  NonstiffOp nonstiff = [&](const Field& w, double) { return fc.b * deriv(w, 1); };
  const double h = (t > 0.0) ? dt : -dt;
  const int nt = static_cast<int>(std::ceil(std::abs(t / dt) - 1e-12));
  Field w = v0;
  double tau = 0.0;
  for (int n = 0; n < nt; ++n) {
    const double step = (n == nt - 1) ? t - tau : h;
    w = step_ifrk4(w, tau, step, nonstiff);
    tau += step;
  }
  return w;
}

Trajectory propagator_trajectory(const FrozenCoefficient& fc, const Field& v0, double T,
                                 double dt) {
  return evolve_frozen(fc, v0, nullptr, T, dt);
}

Trajectory duhamel(const FrozenCoefficient& fc, const Trajectory& forcing, double dt) {
  Field zero(forcing.grid);
  return evolve_frozen(fc, zero, &forcing, forcing.duration(), dt);
}

AdmissibilityReport coefficient_admissibility(const FrozenCoefficient& fc, int M) {
  AdmissibilityReport rep;
  // cumulative integral of Im b across the box; the (MC2) proxy is the
  // largest difference of the cumulative sum over any anchor/offset pair
  double cum = 0.0, lo = 0.0, hi = 0.0;
  for (int i = 0; i < fc.b.size(); ++i) {
    cum += fc.b.v[i].imag() * fc.b.grid->dx;
    lo = std::min(lo, cum);
    hi = std::max(hi, cum);
  }
  rep.imag_line_integral_sup = hi - lo;

  for (int k = 0; k <= M; ++k) rep.A1 += linf_norm(k == 0 ? fc.b : deriv(fc.b, k));

  const double L = fc.b.grid->half_length;
  for (int j = static_cast<int>(std::floor(-L)); j < static_cast<int>(std::ceil(L)); ++j) {
    double sup = 0.0;
    for (int i = 0; i < fc.b.size(); ++i) {
      const double x = fc.b.grid->node[i];
      if (x >= j && x < j + 1) sup = std::max(sup, std::abs(fc.b.v[i]));
    }
    rep.A2 += sup;
  }
  return rep;
}

namespace {

// d/dy of phi^alpha, closed form per branch
double phi_pow_alpha_deriv(const WaveParams& p, double y) {
  if (p.branch == Branch::generic) {
    const double delta = 4.0 * p.omega - p.c * p.c;
    const double kappa = 0.5 * p.alpha * std::sqrt(delta);
    const double den = 4.0 * std::sqrt(p.omega) * std::cosh(kappa * y) - 2.0 * p.c;
    return -(2.0 + p.alpha) * delta * 4.0 * std::sqrt(p.omega) * kappa * std::sinh(kappa * y) /
           (den * den);
  }
  const double a = 0.5 * p.alpha * p.c;
  const double q = a * y;
  return -(p.alpha + 2.0) * p.c * 2.0 * q * a / ((1.0 + q * q) * (1.0 + q * q));
}

}  // namespace

double solitary_residual(double omega, double c, double alpha, cplx mu, GridPtr grid) {
  WaveParams p{omega, c, alpha, Branch::generic};
  if (omega == 0.25 * c * c) p.branch = Branch::degenerate;
  Field psi = solitary_wave(p, grid, 0.0);

  // analytic time derivative at t = 0:
  // d_t psi = e^{i theta} (-c phi' + i phi (omega - c^2/2 + c phi^alpha/(alpha+2)))
  Field dpsi_dt(grid);
  for (int j = 0; j < psi.size(); ++j) {
    const double y = grid->node[j];
    const double amp = phi(p, y);
    const double pa = std::pow(amp, alpha);
    const double dphi = (amp > 0.0 && alpha != 0.0)
                            ? (1.0 / alpha) * std::pow(pa, 1.0 / alpha - 1.0) *
                                  phi_pow_alpha_deriv(p, y)
                            : 0.0;
    const cplx unit_phase = psi.v[j] / amp;
    dpsi_dt.v[j] =
        unit_phase * (cplx(-c * dphi, 0.0) +
                      cplx(0.0, amp * (omega - 0.5 * c * c + c * pa / (alpha + 2.0))));
  }

  EquationSpec spec;
  spec.mu = mu;
  spec.alpha = alpha;
  Field residual = dpsi_dt - rhs_gdnls(psi, spec);
  return linf_norm(residual);
}

MuProbe determine_mu_star(GridPtr grid) {
  MuProbe probe;
  double best = std::numeric_limits<double>::infinity();
  for (cplx mu : {cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)}) {
    const double r = solitary_residual(1.0, 0.0, 1.0, mu, grid);
    probe.residuals.emplace_back(mu, r);
    if (r < best) {
      best = r;
      probe.mu_star = mu;
    }
  }
  return probe;
}

}  // namespace gdnls
