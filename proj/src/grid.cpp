#include "gdnlslab/grid.hpp"

#include <cmath>
#include <string>

#include "gdnlslab/errors.hpp"

namespace gdnls {

namespace {
bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

std::shared_ptr<const Grid> Grid::make(double L, int N) {
  if (!(L > 0.0)) throw ConfigError("Grid: half_length L must be > 0, got " + std::to_string(L));
  if (N < 8 || !is_pow2(N))
    throw ConfigError("Grid: n_points N must be a power of two >= 8, got " + std::to_string(N));

  auto g = std::make_shared<Grid>();
  g->half_length = L;
  g->n_points = N;
  g->dx = 2.0 * L / N;
  g->node.resize(N);
  g->xi.resize(N);
  for (int j = 0; j < N; ++j) g->node[j] = -L + j * g->dx;
  const double dxi = M_PI / L;
  for (int k = 0; k < N; ++k) {
    const int kk = (k < N / 2) ? k : k - N;
    g->xi[k] = dxi * kk;
  }
  return g;
}

}  // namespace gdnls
