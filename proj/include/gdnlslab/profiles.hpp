#pragma once

#include "gdnlslab/field.hpp"

namespace gdnls {

enum class Branch { generic, degenerate };

// Solitary-wave parameters.  The generic branch needs omega > c^2/4,
// the degenerate one omega = c^2/4 with c > 0.
struct WaveParams {
  double omega = 1.0;
  double c = 0.0;
  double alpha = 1.0;
  Branch branch = Branch::generic;

  void validate() const;
};

// Exponents and bounds of the decaying data class.
struct ClassParams {
  int m = 3;          // floor(2/alpha + 1) by default; must satisfy m > 1/alpha
  int M = 2;
  int k = 6;          // k >= m + M + 1
  double s = 6.5;     // k + 1/2
  double lambda = 0.0;
  double nu = 0.0;
  double alpha = 1.0;

  static int default_m(double alpha);
  static ClassParams defaults(double alpha);
  void validate() const;
};

// Amplitude profile phi_{omega,c}(x) > 0, even in x.
double phi(const WaveParams& p, double x);

// Integral of phi^alpha from -infinity to each grid node, by composite
// Simpson on a refined grid plus the closed-form tail below -L.
std::vector<double> phase_integral(const WaveParams& p, const Grid& grid, int refine = 4);

// psi_{omega,c}(x, t) sampled at the nodes.  Throws TruncationError when
// the boundary amplitude exceeds guard * max|psi|.
Field solitary_wave(const WaveParams& p, GridPtr grid, double t, double boundary_guard = 1e-8);

// c0 * (1 + x^2)^{-m/2} sampled pointwise.
Field decay_profile(cplx c0, int m, GridPtr grid);

// Smooth-periodic variant: c0 * sum_n <x + 2Ln>^{-m}, built from the
// continuum Fourier transform (Bessel K) via Poisson summation.  Use it
// where spectral derivatives of order >> 1 matter: the raw pointwise
// sample has derivative jumps at the box seam that pollute high modes.
Field decay_profile_periodized(cplx c0, int m, GridPtr grid);

// min over nodes of <x>^m |f(x)|.
double weighted_inf(const Field& f, int m);

// ||f||_{s,2} + ||<x>^m f||_inf + sum_{j=0..M} ||<x>^m d_x^{j+1} f||_2.
double class_nu(const Field& f, const ClassParams& p);

}  // namespace gdnls
