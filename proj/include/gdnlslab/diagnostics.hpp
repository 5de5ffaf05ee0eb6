#pragma once

#include "gdnlslab/evolution.hpp"
#include "gdnlslab/weights.hpp"

namespace gdnls {

// Per-unit-interval values of ||d_x^{k+1} u||_{L^2(I_j x [0,T])}.
struct SmoothingReport {
  std::vector<int> interval_index;   // left endpoint j of I_j = [j, j+1)
  std::vector<double> interval_value;
  double sup = 0.0;
  double l1 = 0.0;
};

SmoothingReport local_smoothing(const Trajectory& traj, int k, int max_order = kMaxDerivOrder);

struct KatoSmoothingReport {
  double sup_dhalf = 0.0;    // sup_t ||D^{1/2} u(t)||_2 / ||D^{1/2} v0||_2
  double smoothing = 0.0;    // l^inf_j ||d_x u||_{L^2(I_j^T)} / ||D^{1/2} v0||_2
  double ratio() const { return sup_dhalf + smoothing; }
};

// Homogeneous Kato smoothing probe: evolves the frozen linear equation
// with zero forcing and reports the half-derivative gain ratios.
KatoSmoothingReport kato_smoothing_ratio(const Field& v0, const FrozenCoefficient& fc, double T,
                                         double dt);

// ||J^{ga}(<x>^{(1-g)b} f)|| / (||<x>^b f||^{1-g} ||J^a f||^g), variant 1;
// variant 2 swaps the roles of the weight and the Bessel potential.
double interp_check_1(const Field& f, double a, double b, double gamma, int variant = 1);

// LHS^2 / RHS for the selected integration-by-parts line, with c = 1.
double interp_check_2(const Field& f, int k, int j, int variant);

struct SmallTimeReport {
  std::vector<double> t;
  std::vector<double> diff_linf;           // ||W(t)u0 - u0||_inf
  std::vector<double> diff_weighted_linf;  // ||<x>^m (W(t)u0 - u0)||_inf
  double slope_linf = 0.0;                 // log-log regression slopes
  double slope_weighted = 0.0;
};

SmallTimeReport small_time_continuity(const Field& u0, const FrozenCoefficient& fc, int m,
                                      const std::vector<double>& t_list);

// ||f||_2^2
double mass(const Field& f);

// max over interior snapshots of ||(u(t+dt) - u(t-dt))/(2dt) - RHS(u(t))||_2
double residual(const Trajectory& traj, const EquationSpec& spec);

}  // namespace gdnls
