#include "gdnlslab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace gdnls {

namespace {

// fftw planning is not thread-safe; execution on distinct buffers is.
std::mutex plan_mutex;

struct Workspace {
  int n = 0;
  fftw_complex* buf = nullptr;
  fftw_plan fwd{};
  fftw_plan bwd{};

  explicit Workspace(int n_) : n(n_) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    buf = fftw_alloc_complex(static_cast<size_t>(n));
    fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~Workspace() {
    std::lock_guard<std::mutex> lock(plan_mutex);
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(buf);
  }
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;
};

Workspace& workspace_for(int n) {
  thread_local std::map<int, std::unique_ptr<Workspace>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Workspace>(n);
  return *slot;
}

}  // namespace

std::vector<cplx> fft_forward(const Field& f) {
  const int n = f.size();
  Workspace& ws = workspace_for(n);
  for (int i = 0; i < n; ++i) {
    ws.buf[i][0] = f.v[i].real();
    ws.buf[i][1] = f.v[i].imag();
  }
  fftw_execute(ws.fwd);
  std::vector<cplx> hat(static_cast<size_t>(n));
  const double inv_n = 1.0 / n;
  for (int k = 0; k < n; ++k) {
    // e^{i xi_k L} = (-1)^k shifts the origin from node 0 to x = 0.
    const double sign = (k & 1) ? -inv_n : inv_n;
    hat[k] = sign * cplx(ws.buf[k][0], ws.buf[k][1]);
  }
  return hat;
}

Field fft_inverse(GridPtr grid, const std::vector<cplx>& hat) {
  const int n = grid->n_points;
  Workspace& ws = workspace_for(n);
  for (int k = 0; k < n; ++k) {
    const double sign = (k & 1) ? -1.0 : 1.0;
    const cplx z = sign * hat[k];
    ws.buf[k][0] = z.real();
    ws.buf[k][1] = z.imag();
  }
  fftw_execute(ws.bwd);
  Field f(std::move(grid));
  for (int i = 0; i < n; ++i) f.v[i] = cplx(ws.buf[i][0], ws.buf[i][1]);
  return f;
}

}  // namespace gdnls
