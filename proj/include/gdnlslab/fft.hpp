#pragma once

#include <vector>

#include "gdnlslab/field.hpp"

namespace gdnls {

// Forward/inverse DFT between node samples and Fourier coefficients.
//
// Normalization: the forward transform carries the 1/N factor and the
// node phase e^{i xi L}, so that hat(e^{i xi_k x})[k] = 1 exactly.
// Coefficients are in FFT bin order matching Grid::xi.
//
// Plans are cached per (thread, N); each thread owns its workspace.
std::vector<cplx> fft_forward(const Field& f);
Field fft_inverse(GridPtr grid, const std::vector<cplx>& hat);

}  // namespace gdnls
