#include <doctest.h>

#include <cmath>

#include "gdnlslab/picard.hpp"
#include "gdnlslab/weights.hpp"

using namespace gdnls;

namespace {

EquationSpec default_spec() {
  EquationSpec s;
  s.mu = cplx(-1.0, 0.0);
  s.alpha = 1.0;
  return s;
}

XTNormParams small_params() {
  XTNormParams p;
  p.cls = ClassParams::defaults(1.0);
  p.T = 0.01;
  p.dt = 1e-3;
  return p;
}

Field decay_datum(GridPtr g) { return decay_profile(cplx(0.5, 0.0), 3, g); }

Trajectory constant_trajectory(const Field& f, double T, double dt) {
  Trajectory traj;
  traj.grid = f.grid;
  traj.dt = dt;
  const int nt = int(std::lround(T / dt));
  for (int n = 0; n <= nt; ++n) {
    traj.steps.push_back(f);
    traj.max_amp.push_back(linf_norm(f));
    traj.boundary_guard.push_back(0.0);
  }
  return traj;
}

}  // namespace

TEST_CASE("norm parameter validation") {
  CHECK_NOTHROW(small_params().validate());
  XTNormParams p = small_params();
  p.T = 0.0;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p = small_params();
  p.dt = 0.02;  // dt > T
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p = small_params();
  p.cls.m = 1;
  CHECK_THROWS_AS(p.validate(), ParamError);
}

TEST_CASE("solution-space norm breakdown") {
  auto g = Grid::make(30.0, 256);
  Field u0 = decay_datum(g);
  XTNormParams p = small_params();

  // a time-constant trajectory at the datum: zero proximity, matching sups
  Trajectory traj = constant_trajectory(u0, p.T, p.dt);
  XTNormBreakdown n = xt_norm(traj, u0, default_spec(), p);
  CHECK(n.proximity == 0.0);
  CHECK(n.sobolev_sup == doctest::Approx(sobolev_norm(u0, p.cls.s)).epsilon(1e-12));
  CHECK(n.weighted_linf_sup == doctest::Approx(weighted_linf(u0, p.cls.m)).epsilon(1e-12));
  CHECK(n.total() > 0.0);
  CHECK(std::isfinite(n.total()));

  // all-zero trajectory measured against itself
  Field z(g);
  XTNormBreakdown nz = xt_norm(constant_trajectory(z, p.T, p.dt), z, default_spec(), p);
  CHECK(nz.total() == 0.0);
}

TEST_CASE("contraction map fixes the zero-forcing trajectory") {
  auto g = Grid::make(30.0, 256);
  Field u0 = decay_datum(g);
  XTNormParams p = small_params();
  EquationSpec s = default_spec();
  FrozenCoefficient fc = FrozenCoefficient::from_data(u0, s, p.cls.M);

  // a trajectory frozen at u0 produces zero forcing, so Phi returns W(t) u0
  Trajectory v = constant_trajectory(u0, p.T, p.dt);
  Trajectory w = phi_map(v, u0, s, fc, p);
  Trajectory lin = propagator_trajectory(fc, u0, p.T, p.dt);
  CHECK(sup_l2_distance(w, lin) < 1e-13);
}

TEST_CASE("contraction map rejects data without the lower bound") {
  auto g = Grid::make(30.0, 256);
  XTNormParams p = small_params();
  EquationSpec s = default_spec();
  Field z(g);
  FrozenCoefficient fc = FrozenCoefficient::from_data(z, s, p.cls.M);
  Trajectory v = constant_trajectory(z, p.T, p.dt);
  CHECK_THROWS_AS(phi_map(v, z, s, fc, p), ParamError);
  CHECK_THROWS_AS(picard_solve(z, s, p, 1e-8, 10), ParamError);
}

TEST_CASE("fixed-point iteration converges and stays in the class") {
  auto g = Grid::make(30.0, 512);
  Field u0 = decay_datum(g);
  XTNormParams p = small_params();
  p.cls.lambda = weighted_inf(u0, p.cls.m);
  EquationSpec s = default_spec();

  PicardResult res = picard_solve(u0, s, p, 1e-8, 20);
  REQUIRE(res.status == PicardStatus::converged);
  REQUIRE(!res.history.empty());
  CHECK(res.history.back().distance <= 1e-8);

  // successive distances contract geometrically
  for (size_t i = 2; i < res.history.size(); ++i)
    if (res.history[i - 1].distance > 1e-14)
      CHECK(res.history[i].distance < 0.9 * res.history[i - 1].distance);

  // the weighted lower bound never drops below half its initial value
  for (const auto& it : res.history) CHECK(it.min_weighted_inf >= 0.5 * p.cls.lambda);

  // the fixed point solves the equation: compare with the direct solver
  EvolveResult direct = evolve(u0, p.T, p.dt, Stepper::ifrk4, s);
  REQUIRE(!direct.failure);
  CHECK(sup_l2_distance(res.solution, direct.traj) < 1e-6);
}

TEST_CASE("contraction factor") {
  auto g = Grid::make(30.0, 256);
  Field u0 = decay_datum(g);
  XTNormParams p = small_params();
  EquationSpec s = default_spec();

  Field z(g);
  CHECK_THROWS_AS(contraction_factor(u0, s, p, z), ParamError);

  Field delta = decay_profile(cplx(1e-3, 0.0), 4, g);
  const double q = contraction_factor(u0, s, p, delta);
  CHECK(q > 0.0);
  CHECK(q < 0.9);
}

TEST_CASE("triple norm is positively homogeneous and zero at zero") {
  auto g = Grid::make(30.0, 256);
  ClassParams cls = ClassParams::defaults(1.0);
  Field f = decay_datum(g);
  const double n1 = triple_norm(f, cls);
  CHECK(n1 > 0.0);
  CHECK(triple_norm(cplx(3.0, 0.0) * f, cls) == doctest::Approx(3.0 * n1).epsilon(1e-12));
  CHECK(triple_norm(Field(g), cls) == 0.0);
}

TEST_CASE("continuous dependence on the data") {
  auto g = Grid::make(30.0, 512);
  Field u0 = decay_datum(g);
  XTNormParams p = small_params();
  EquationSpec s = default_spec();

  // identical data: both sides vanish identically
  DependenceReport same = dependence_probe(u0, u0, s, p);
  CHECK(same.lhs == 0.0);
  CHECK(same.rhs == 0.0);

  // data violating the weighted lower bound are rejected
  CHECK_THROWS_AS(dependence_probe(u0, Field(g), s, p), ParamError);

  // small relative perturbations give a bounded transfer ratio
  Field v0 = cplx(1.001, 0.0) * u0;
  DependenceReport rep = dependence_probe(u0, v0, s, p);
  CHECK(rep.lhs > 0.0);
  CHECK(rep.rhs > 0.0);
  CHECK(std::isfinite(rep.ratio));
  CHECK(rep.ratio < 100.0);
}
