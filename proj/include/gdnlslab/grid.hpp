#pragma once

#include <memory>
#include <vector>

namespace gdnls {

// Uniform periodic grid on [-L, L).  Wavenumbers are stored in FFT bin
// order: bin k carries xi = (pi/L)*k for k in {0..N/2-1, -N/2..-1}.
struct Grid {
  double half_length = 0.0;  // L
  int n_points = 0;          // N, power of two
  double dx = 0.0;           // 2L/N
  std::vector<double> node;  // x_j = -L + j*dx
  std::vector<double> xi;    // wavenumber of FFT bin j

  static std::shared_ptr<const Grid> make(double L, int N);
};

using GridPtr = std::shared_ptr<const Grid>;

}  // namespace gdnls
