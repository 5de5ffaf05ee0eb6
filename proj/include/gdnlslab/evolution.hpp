#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gdnlslab/spectral.hpp"

namespace gdnls {

enum class NonlinearForm { gdnls, divergence };
enum class Stepper { strang, ifrk4 };

// Nonlinearity parameters of d_t u = i d_x^2 u + mu |u|^alpha d_x u
// (or the divergence form d_x(|u|^alpha u)).
struct EquationSpec {
  cplx mu{-1.0, 0.0};
  double alpha = 1.0;
  NonlinearForm form = NonlinearForm::gdnls;
  double epsilon = 0.0;  // modulus regularization, 0 = exact |u|^alpha
  bool dealias = false;

  void validate() const;
};

// b(x) = mu |u0|^alpha of the frozen-coefficient linear equation,
// with the sup-norm proxies entering c(A1; A2; T).
struct FrozenCoefficient {
  Field b;
  double A1 = 0.0;  // sum_{k<=M} ||b^(k)||_inf
  double A2 = 0.0;  // unit-interval sup-sum proxy of the partition coefficients

  static FrozenCoefficient from_data(const Field& u0, const EquationSpec& spec, int M = 2);
};

// u(x, t0 + n dt), n = 0..N_t, all on one grid.
struct Trajectory {
  GridPtr grid;
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<Field> steps;
  std::vector<double> max_amp;         // per-step max |u|
  std::vector<double> boundary_guard;  // per-step boundary amplitude / max |u|

  int n_steps() const { return static_cast<int>(steps.size()) - 1; }
  double duration() const { return dt * n_steps(); }
  // cubic (4-point Lagrange) interpolation in t, clamped at the ends
  Field at_time(double t) const;
};

// pointwise (|f|^2 + eps^2)^{alpha/2}
Field regularized_modulus_pow(const Field& f, double alpha, double eps);

Field rhs_gdnls(const Field& u, const EquationSpec& spec);
Field rhs_divergence(const Field& u, const EquationSpec& spec);
Field rhs(const Field& u, const EquationSpec& spec);  // dispatch on spec.form

// i d_x^2 w + b d_x w + forcing
Field rhs_frozen(const Field& w, const FrozenCoefficient& fc, const Field* forcing = nullptr);

// The non-stiff part of the RHS (everything except i d_x^2), as a
// function of the field and absolute time.
using NonstiffOp = std::function<Field(const Field&, double)>;

// Strang splitting: exact half-step linear flow, RK4 on the
// nonlinear flow d_t u = mu |u|^alpha d_x u, half-step linear.
Field step_strang(const Field& u, double dt, const EquationSpec& spec);

// Integrating-factor RK4: exact on the linear part, order 4 overall.
Field step_ifrk4(const Field& u, double t, double dt, const NonstiffOp& nonstiff);

struct EvolveFailure {
  int step = -1;
  std::string what;
};

struct EvolveResult {
  Trajectory traj;
  std::optional<EvolveFailure> failure;  // set when the run died mid-way
};

EvolveResult evolve(const Field& u0, double T, double dt, Stepper stepper,
                    const EquationSpec& spec);

// W_b(t) v0: frozen linear flow from 0 to t (IFRK4 substeps of size dt).
Field propagator_W(const FrozenCoefficient& fc, const Field& v0, double t, double dt);

// Full trajectory of W_b(t) v0 on the uniform time grid.
Trajectory propagator_trajectory(const FrozenCoefficient& fc, const Field& v0, double T, double dt);

// z(t) = int_0^t W_b(t - t') f(t') dt', by co-evolving
// d_t z = i d_x^2 z + b d_x z + f with z(0) = 0.
Trajectory duhamel(const FrozenCoefficient& fc, const Trajectory& forcing, double dt);

// Co-evolution of the inhomogeneous frozen equation from arbitrary data;
// shared by duhamel and the contraction map.
Trajectory evolve_frozen(const FrozenCoefficient& fc, const Field& w0, const Trajectory* forcing,
                         double T, double dt);

struct AdmissibilityReport {
  double imag_line_integral_sup = 0.0;  // sup over anchors of |int_0^l Im b|, l in [0, 2L]
  double A1 = 0.0;
  double A2 = 0.0;
};

AdmissibilityReport coefficient_admissibility(const FrozenCoefficient& fc, int M);

// Residual of the solitary wave under a candidate mu: analytic d_t psi
// against the spectrally evaluated right-hand side, in sup norm.
double solitary_residual(double omega, double c, double alpha, cplx mu, GridPtr grid);

// Picks the unit mu in {+1, -1, +i, -i} minimizing the solitary-wave
// residual at (omega=1, c=0, alpha=1).
struct MuProbe {
  cplx mu_star;
  std::vector<std::pair<cplx, double>> residuals;
};
MuProbe determine_mu_star(GridPtr grid);

}  // namespace gdnls
