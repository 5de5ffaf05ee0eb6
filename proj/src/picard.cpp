#include "gdnlslab/picard.hpp"

#include <cmath>

#include "gdnlslab/diagnostics.hpp"

namespace gdnls {

void XTNormParams::validate() const {
  if (!(T > 0.0 && dt > 0.0 && dt <= T)) throw ConfigError("XTNormParams: need 0 < dt <= T");
  cls.validate();
}

XTNormBreakdown xt_norm(const Trajectory& v, const Field& u0, const EquationSpec& spec,
                        const XTNormParams& p) {
  const ClassParams& c = p.cls;
  XTNormBreakdown out;
  for (const Field& f : v.steps) {
    out.sobolev_sup = std::max(out.sobolev_sup, sobolev_norm(f, c.s));
    out.weighted_linf_sup = std::max(out.weighted_linf_sup, weighted_linf(f, c.m));

    double dsum = 0.0;
    for (int j = 0; j <= c.M; ++j) dsum += weighted_l2(f, c.m, j + 1);
    out.weighted_deriv_sum = std::max(out.weighted_deriv_sum, dsum);

    // d_t v by substituting the equation's right-hand side
    Field dtv = rhs(f, spec);
    const double tsum = weighted_l2(dtv, c.m, 0) + weighted_l2(dtv, c.m, 1);
    out.time_deriv_sum = std::max(out.time_deriv_sum, tsum);

    out.proximity = std::max(out.proximity, weighted_linf(f - u0, c.m));
  }
  out.smoothing = local_smoothing(v, c.k).sup;
  if (!std::isfinite(out.total()))
    throw NumericalError("xt_norm: non-finite component in the X_T breakdown");
  return out;
}

Trajectory phi_map(const Trajectory& v, const Field& u0, const EquationSpec& spec,
                   const FrozenCoefficient& fc, const XTNormParams& p) {
  spec.validate();
  if (weighted_inf(u0, p.cls.m) <= 0.0)
    throw ParamError("phi_map: data violates the weighted lower bound (lambda must be > 0)");

  // forcing F(t) = mu (|v|^alpha - |u0|^alpha) d_x v
  const Field b0 = regularized_modulus_pow(u0, spec.alpha, spec.epsilon);
  Trajectory forcing;
  forcing.grid = v.grid;
  forcing.t0 = v.t0;
  forcing.dt = v.dt;
  for (const Field& f : v.steps) {
    Field diff = regularized_modulus_pow(f, spec.alpha, spec.epsilon) - b0;
    forcing.steps.push_back(spec.mu * (diff * deriv(f, 1)));
  }
  return evolve_frozen(fc, u0, &forcing, p.T, p.dt);
}

double sup_l2_distance(const Trajectory& a, const Trajectory& b) {
  const size_t n = std::min(a.steps.size(), b.steps.size());
  double d = 0.0;
  for (size_t i = 0; i < n; ++i) d = std::max(d, l2_norm(a.steps[i] - b.steps[i]));
  return d;
}

namespace {

double traj_min_weighted_inf(const Trajectory& v, int m) {
  double best = std::numeric_limits<double>::infinity();
  for (const Field& f : v.steps) best = std::min(best, weighted_inf(f, m));
  return best;
}

}  // namespace

PicardResult picard_solve(const Field& u0, const EquationSpec& spec, const XTNormParams& p,
                          double tol, int max_iter) {
  p.validate();
  spec.validate();
  if (weighted_inf(u0, p.cls.m) <= 0.0)
    throw ParamError("picard_solve: weighted_inf(u0) must be positive");

  const FrozenCoefficient fc = FrozenCoefficient::from_data(u0, spec, p.cls.M);
  Trajectory v = propagator_trajectory(fc, u0, p.T, p.dt);

  PicardResult res;
  int rising = 0;
  double prev_distance = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_iter; ++it) {
    Trajectory w = phi_map(v, u0, spec, fc, p);
    PicardIterate rec;
    rec.distance = sup_l2_distance(w, v);
    rec.min_weighted_inf = traj_min_weighted_inf(w, p.cls.m);
    rec.norms = xt_norm(w, u0, spec, p);
    res.history.push_back(rec);
    v = std::move(w);

    if (rec.distance <= tol) {
      res.status = PicardStatus::converged;
      res.solution = std::move(v);
      return res;
    }
    rising = (rec.distance > prev_distance) ? rising + 1 : 0;
    prev_distance = rec.distance;
    if (rising >= 3) {
      res.status = PicardStatus::diverged;
      res.message = "iterate distances increased three times in a row; try a smaller T";
      res.solution = std::move(v);
      return res;
    }
  }
  res.status = PicardStatus::max_iterations;
  res.message = "tolerance not reached within the iteration budget";
  res.solution = std::move(v);
  return res;
}

double contraction_factor(const Field& u0, const EquationSpec& spec, const XTNormParams& p,
                          const Field& delta) {
  if (linf_norm(delta) == 0.0)
    throw ParamError("contraction_factor: degenerate (zero) perturbation");
  const FrozenCoefficient fc = FrozenCoefficient::from_data(u0, spec, p.cls.M);
  Trajectory v1 = propagator_trajectory(fc, u0, p.T, p.dt);
  Trajectory v2 = propagator_trajectory(fc, u0 + delta, p.T, p.dt);
  const double den = sup_l2_distance(v1, v2);
  if (!(den > 0.0)) throw ParamError("contraction_factor: degenerate perturbation");
  Trajectory p1 = phi_map(v1, u0, spec, fc, p);
  Trajectory p2 = phi_map(v2, u0, spec, fc, p);
  return sup_l2_distance(p1, p2) / den;
}

double triple_norm(const Field& f, const ClassParams& cls) {
  double total = 0.0;
  for (int j = 1; j <= cls.M + 1; ++j) total += weighted_l2(f, cls.m, j);
  for (int j = 0; j <= cls.k; ++j) total += weighted_l2(f, 0, j);
  return total;
}

DependenceReport dependence_probe(const Field& u0, const Field& v0, const EquationSpec& spec,
                                  const XTNormParams& p) {
  p.validate();
  if (weighted_inf(u0, p.cls.m) <= 0.0 || weighted_inf(v0, p.cls.m) <= 0.0)
    throw ParamError("dependence_probe: both data must satisfy the weighted lower bound");

  EvolveResult ru = evolve(u0, p.T, p.dt, Stepper::ifrk4, spec);
  EvolveResult rv = evolve(v0, p.T, p.dt, Stepper::ifrk4, spec);
  if (ru.failure || rv.failure) throw NumericalError("dependence_probe: evolution failed mid-run");

  Trajectory w;
  w.grid = ru.traj.grid;
  w.t0 = 0.0;
  w.dt = p.dt;
  for (size_t i = 0; i < ru.traj.steps.size(); ++i)
    w.steps.push_back(ru.traj.steps[i] - rv.traj.steps[i]);

  DependenceReport rep;
  double sup_part = 0.0;
  for (size_t i = 0; i < w.steps.size(); ++i) {
    const Field& wf = w.steps[i];
    double val = triple_norm(wf, p.cls) + l2_norm(riesz(wf, p.cls.k + 0.5)) +
                 weighted_linf(wf, p.cls.m);
    Field dtw = rhs(ru.traj.steps[i], spec) - rhs(rv.traj.steps[i], spec);
    val += weighted_l2(dtw, p.cls.m, 0) + weighted_l2(dtw, p.cls.m, 1);
    sup_part = std::max(sup_part, val);
  }
  rep.lhs = sup_part + local_smoothing(w, p.cls.k).sup;
  Field d0 = u0 - v0;
  rep.rhs = triple_norm(d0, p.cls) + sobolev_norm(d0, p.cls.s);
  rep.ratio = rep.lhs / rep.rhs;
  return rep;
}

}  // namespace gdnls
