// fft.hpp -- minimal FFTW wrapper with cached plans, safe for concurrent use.
#pragma once

#include <complex>
#include <cstddef>

namespace sarcomm {

// In-place unnormalized DFT of length n. Plan creation is serialized
// internally; execution may run concurrently on distinct buffers.
void fft_inplace(std::complex<double>* data, std::size_t n, bool inverse);

}  // namespace sarcomm
