#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "gdnlslab/errors.hpp"
#include "gdnlslab/grid.hpp"

namespace gdnls {

using cplx = std::complex<double>;

// Complex samples of a function at the grid nodes.  Immutable by
// convention: operations return new Fields.
struct Field {
  GridPtr grid;
  std::vector<cplx> v;

  Field() = default;
  explicit Field(GridPtr g) : grid(std::move(g)), v(grid->n_points, cplx{}) {}
  Field(GridPtr g, std::vector<cplx> values) : grid(std::move(g)), v(std::move(values)) {}

  int size() const { return static_cast<int>(v.size()); }

  bool finite() const {
    return std::all_of(v.begin(), v.end(), [](const cplx& z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  }
};

inline void require_same_grid(const Field& a, const Field& b) {
  if (a.grid != b.grid &&
      (a.grid->n_points != b.grid->n_points ||
       a.grid->half_length != b.grid->half_length))
    throw ShapeError("fields live on different grids");
}

inline Field operator+(const Field& a, const Field& b) {
  require_same_grid(a, b);
  Field r(a.grid);
  for (int i = 0; i < a.size(); ++i) r.v[i] = a.v[i] + b.v[i];
  return r;
}

inline Field operator-(const Field& a, const Field& b) {
  require_same_grid(a, b);
  Field r(a.grid);
  for (int i = 0; i < a.size(); ++i) r.v[i] = a.v[i] - b.v[i];
  return r;
}

inline Field operator*(cplx s, const Field& a) {
  Field r(a.grid);
  for (int i = 0; i < a.size(); ++i) r.v[i] = s * a.v[i];
  return r;
}

inline Field operator*(const Field& a, const Field& b) {
  require_same_grid(a, b);
  Field r(a.grid);
  for (int i = 0; i < a.size(); ++i) r.v[i] = a.v[i] * b.v[i];
  return r;
}

// max_j |f(x_j)|
inline double linf_norm(const Field& f) {
  double m = 0.0;
  for (const cplx& z : f.v) m = std::max(m, std::abs(z));
  return m;
}

// (sum_j |f(x_j)|^2 dx)^{1/2}
inline double l2_norm(const Field& f) {
  double s = 0.0;
  for (const cplx& z : f.v) s += std::norm(z);
  return std::sqrt(s * f.grid->dx);
}

// <f, g> = sum_j conj(f) g dx
inline cplx inner(const Field& f, const Field& g) {
  require_same_grid(f, g);
  cplx s{};
  for (int i = 0; i < f.size(); ++i) s += std::conj(f.v[i]) * g.v[i];
  return s * f.grid->dx;
}

// max(|f(-L)|, |f(L-dx)|), the periodic-truncation guard.
inline double boundary_amplitude(const Field& f) {
  return std::max(std::abs(f.v.front()), std::abs(f.v.back()));
}

}  // namespace gdnls
