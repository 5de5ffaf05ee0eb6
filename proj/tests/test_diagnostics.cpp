#include <doctest.h>

#include <cmath>

#include "gdnlslab/diagnostics.hpp"
#include "gdnlslab/profiles.hpp"

using namespace gdnls;

namespace {

EquationSpec default_spec() {
  EquationSpec s;
  s.mu = cplx(-1.0, 0.0);
  s.alpha = 1.0;
  return s;
}

FrozenCoefficient free_coefficient(GridPtr g) {
  FrozenCoefficient fc;
  fc.b = Field(g);
  return fc;
}

Field plane_wave(GridPtr g, int k0) {
  return make_grid_field(g, [k0](double x) { return std::exp(cplx(0, k0 * x)); });
}

}  // namespace

TEST_CASE("local smoothing on a free plane wave") {
  auto g = Grid::make(M_PI, 64);
  const int k0 = 2, k = 1;
  const double T = 0.1, dt = 1e-3;
  Trajectory traj = propagator_trajectory(free_coefficient(g), plane_wave(g, k0), T, dt);

  // |d_x^{k+1} u| = k0^{k+1} uniformly in x and t, so each interval
  // carries k0^{k+1} sqrt(T * covered length); edge intervals are partial
  SmoothingReport rep = local_smoothing(traj, k);
  REQUIRE(rep.interval_value.size() == 8);
  double expected_sup = 0.0;
  for (size_t q = 0; q < rep.interval_value.size(); ++q) {
    const int j = rep.interval_index[q];
    int nodes = 0;
    for (double x : g->node)
      if (x >= j && x < j + 1) ++nodes;
    const double expected = std::pow(double(k0), k + 1) * std::sqrt(T * nodes * g->dx);
    expected_sup = std::max(expected_sup, expected);
    CHECK(rep.interval_value[q] == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK(rep.sup == doctest::Approx(expected_sup).epsilon(1e-12));
  CHECK(rep.sup <= rep.l1);

  CHECK_THROWS_AS(local_smoothing(traj, 8), ConfigError);
}

TEST_CASE("local smoothing sup never exceeds the interval sum") {
  auto g = Grid::make(30.0, 256);
  Field u0 = decay_profile(cplx(0.5, 0.0), 3, g);
  EvolveResult r = evolve(u0, 0.01, 1e-3, Stepper::ifrk4, default_spec());
  REQUIRE(!r.failure);
  SmoothingReport rep = local_smoothing(r.traj, 2);
  CHECK(rep.sup > 0.0);
  CHECK(rep.sup <= rep.l1 * (1.0 + 1e-14));
}

TEST_CASE("homogeneous smoothing gain of the free flow") {
  auto g = Grid::make(M_PI, 64);
  const int k0 = 2;
  const double T = 0.1;
  KatoSmoothingReport rep = kato_smoothing_ratio(plane_wave(g, k0), free_coefficient(g), T, 1e-3);

  // the free flow is unitary mode by mode
  CHECK(rep.sup_dhalf == doctest::Approx(1.0).epsilon(1e-12));
  // |d_x u| = k0; the busiest interval covers n_max dx of the axis and the
  // denominator is sqrt(k0) ||u||_2 = sqrt(k0 * 2L)
  int n_max = 0;
  for (int j = -4; j < 4; ++j) {
    int nodes = 0;
    for (double x : g->node)
      if (x >= j && x < j + 1) ++nodes;
    n_max = std::max(n_max, nodes);
  }
  const double expected = k0 * std::sqrt(T * n_max * g->dx) / std::sqrt(k0 * 2.0 * M_PI);
  CHECK(rep.smoothing == doctest::Approx(expected).epsilon(1e-12));
  CHECK(rep.ratio() == doctest::Approx(rep.sup_dhalf + rep.smoothing));

  CHECK_THROWS_AS(kato_smoothing_ratio(Field(g), free_coefficient(g), T, 1e-3), ParamError);
}

TEST_CASE("weighted-interpolation ratio: endpoint and invariance") {
  auto g = Grid::make(30.0, 512);
  Field f = decay_profile_periodized(cplx(0.5, 0.0), 3, g);

  // gamma = 1 collapses both sides to the same norm
  CHECK(interp_check_1(f, 2.0, 2.0, 1.0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(interp_check_1(f, 2.0, 2.0, 1.0, 2) == doctest::Approx(1.0).epsilon(1e-12));

  // scale invariance of the ratio
  const double r = interp_check_1(f, 2.0, 2.0, 0.5, 1);
  CHECK(interp_check_1(cplx(2.0, 0.0) * f, 2.0, 2.0, 0.5, 1) == doctest::Approx(r).epsilon(1e-12));
  CHECK(r > 0.0);

  CHECK_THROWS_AS(interp_check_1(f, 2.0, 2.0, 0.0, 1), ParamError);
  CHECK_THROWS_AS(interp_check_1(f, -1.0, 2.0, 0.5, 1), ParamError);
  CHECK_THROWS_AS(interp_check_1(Field(g), 2.0, 2.0, 0.5, 1), ParamError);
}

TEST_CASE("integration-by-parts ratio") {
  auto g = Grid::make(30.0, 512);
  Field f = decay_profile_periodized(cplx(0.5, 0.0), 3, g);

  for (int variant : {1, 2, 3}) {
    const double r = interp_check_2(f, 2, 2, variant);
    CHECK(r > 0.0);
    CHECK(std::isfinite(r));
    // quadratic in f top and bottom
    CHECK(interp_check_2(cplx(3.0, 0.0) * f, 2, 2, variant) == doctest::Approx(r).epsilon(1e-12));
  }

  CHECK_THROWS_AS(interp_check_2(f, 0, 1, 1), ParamError);
  CHECK_THROWS_AS(interp_check_2(f, 2, 2, 4), ParamError);
  CHECK_THROWS_AS(interp_check_2(Field(g), 2, 2, 1), ParamError);
}

TEST_CASE("weighted quadrature against a closed-form integral") {
  auto g = Grid::make(40.0, 1024);
  Field f = decay_profile(cplx(1.0, 0.0), 3, g);
  // ||<x>^2 <x>^{-3}||_2^2 = int <x>^{-2} = 2 atan(L) on the box
  const double expected = std::sqrt(2.0 * std::atan(40.0));
  CHECK(weighted_l2(f, 2, 0) == doctest::Approx(expected).epsilon(1e-3));
}

TEST_CASE("small-time continuity of the frozen flow") {
  auto g = Grid::make(30.0, 512);
  Field u0 = decay_profile_periodized(cplx(0.5, 0.0), 3, g);
  FrozenCoefficient fc = FrozenCoefficient::from_data(u0, default_spec());
  SmallTimeReport rep = small_time_continuity(u0, fc, 3, {1e-3, 2e-3, 4e-3, 8e-3});

  REQUIRE(rep.t.size() == 4);
  for (size_t i = 1; i < rep.t.size(); ++i) CHECK(rep.diff_linf[i] > rep.diff_linf[i - 1]);
  // W(t) u0 - u0 = t (i d_x^2 + b d_x) u0 + O(t^2): slope one in t
  CHECK(rep.slope_linf == doctest::Approx(1.0).epsilon(0.05));
  CHECK(rep.slope_weighted == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("mass") {
  auto g = Grid::make(10.0, 64);
  Field f = make_grid_field(g, [](double) { return cplx(0.0, 1.5); });
  CHECK(mass(f) == doctest::Approx(1.5 * 1.5 * 20.0).epsilon(1e-13));
}

TEST_CASE("trajectory residual shrinks at second order in dt") {
  auto g = Grid::make(40.0, 512);
  Field u0 = solitary_wave(WaveParams{1.0, 0.0, 1.0, Branch::generic}, g, 0.0);
  EquationSpec s = default_spec();

  EvolveResult r1 = evolve(u0, 0.02, 1e-3, Stepper::ifrk4, s);
  EvolveResult r2 = evolve(u0, 0.02, 5e-4, Stepper::ifrk4, s);
  REQUIRE(!r1.failure);
  REQUIRE(!r2.failure);
  const double res1 = residual(r1.traj, s);
  const double res2 = residual(r2.traj, s);
  // the residual is dominated by the O(dt^2) central-difference error
  CHECK(res1 / res2 == doctest::Approx(4.0).epsilon(0.1));

  Trajectory stub;
  stub.grid = g;
  stub.dt = 1e-3;
  stub.steps = {u0, u0};
  CHECK_THROWS_AS(residual(stub, s), ConfigError);
}
