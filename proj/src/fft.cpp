#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace sarcomm {

namespace {
std::mutex plan_mutex;
std::map<std::pair<std::size_t, bool>, fftw_plan> plan_cache;

fftw_plan plan_for(std::size_t n, bool inverse) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  const auto key = std::make_pair(n, inverse);
  auto it = plan_cache.find(key);
  if (it != plan_cache.end()) return it->second;
  // FFTW_UNALIGNED lets the plan execute on any caller buffer.
  fftw_complex* scratch = fftw_alloc_complex(n);
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), scratch, scratch,
                                    inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(scratch);
  plan_cache.emplace(key, plan);
  return plan;
}
}  // namespace

void fft_inplace(std::complex<double>* data, std::size_t n, bool inverse) {
  fftw_plan plan = plan_for(n, inverse);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(data),
                   reinterpret_cast<fftw_complex*>(data));
}

}  // namespace sarcomm
