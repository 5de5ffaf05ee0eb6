#pragma once

#include "gdnlslab/evolution.hpp"
#include "gdnlslab/profiles.hpp"

namespace gdnls {

struct XTNormParams {
  ClassParams cls;
  double T = 0.0;
  double dt = 0.0;

  void validate() const;
};

// The components of the X_T norm, reported separately.
struct XTNormBreakdown {
  double sobolev_sup = 0.0;        // sup_t ||v||_{s,2}
  double weighted_linf_sup = 0.0;  // sup_t ||<x>^m v||_inf
  double weighted_deriv_sum = 0.0; // sup_t sum_{j<=M} ||<x>^m d_x^{j+1} v||_2
  double smoothing = 0.0;          // l^inf_j of ||d_x^{k+1} v||_{L^2(I_j x [0,T])}
  double time_deriv_sum = 0.0;     // sup_t sum_{j<=1} ||<x>^m d_t d_x^j v||_2
  double proximity = 0.0;          // sup_t ||<x>^m (v - u0)||_inf

  double total() const {
    return sobolev_sup + weighted_linf_sup + weighted_deriv_sum + smoothing + time_deriv_sum +
           proximity;
  }
};

// All six components; d_t v is obtained by substituting the equation's
// right-hand side, never by finite differencing in t.
XTNormBreakdown xt_norm(const Trajectory& v, const Field& u0, const EquationSpec& spec,
                        const XTNormParams& p);

// Phi(v)(t) = W(t) u0 + int_0^t W(t-t') mu (|v|^alpha - |u0|^alpha) d_x v dt',
// realized as one co-evolved inhomogeneous frozen linear solve.
Trajectory phi_map(const Trajectory& v, const Field& u0, const EquationSpec& spec,
                   const FrozenCoefficient& fc, const XTNormParams& p);

// sup over snapshots of the L^2 distance at matching times
double sup_l2_distance(const Trajectory& a, const Trajectory& b);

struct PicardIterate {
  double distance = 0.0;       // sup-t L^2 distance to the previous iterate
  double min_weighted_inf = 0.0;  // inf over (x, t) of <x>^m |v|
  XTNormBreakdown norms;
};

enum class PicardStatus { converged, max_iterations, diverged };

struct PicardResult {
  Trajectory solution;
  std::vector<PicardIterate> history;
  PicardStatus status = PicardStatus::converged;
  std::string message;
};

// v^0 = W(t) u0, v^{n+1} = Phi(v^n); stops when the successive sup-t L^2
// distance falls below tol.  Three consecutive increasing distances are
// reported as divergence (smaller T suggested).
PicardResult picard_solve(const Field& u0, const EquationSpec& spec, const XTNormParams& p,
                          double tol, int max_iter);

// ||Phi(v1) - Phi(v2)|| / ||v1 - v2|| in sup-t L^2, where v1 is the
// linear trajectory of u0 and v2 the one seeded from u0 + delta.
double contraction_factor(const Field& u0, const EquationSpec& spec, const XTNormParams& p,
                          const Field& delta);

struct DependenceReport {
  double lhs = 0.0;    // difference norms of w = u - v over [0, T]
  double rhs = 0.0;    // data norms |||u0 - v0||| + ||u0 - v0||_{s,2}
  double ratio = 0.0;
};

// Solves both IVPs and reports the ratio of solution-difference norms to
// data-difference norms (empirical Lipschitz constant of the flow map).
DependenceReport dependence_probe(const Field& u0, const Field& v0, const EquationSpec& spec,
                                  const XTNormParams& p);

// |||f||| = sum_{j=1..M+1} ||<x>^m d_x^j f||_2 + sum_{j=0..k} ||d_x^j f||_2
double triple_norm(const Field& f, const ClassParams& cls);

}  // namespace gdnls
