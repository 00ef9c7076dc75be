#include "sarcomm/process.hpp"

#include <omp.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "fft.hpp"
#include "sarcomm/geometry.hpp"
#include "sarcomm/units.hpp"

namespace sarcomm {

RangeCompressed range_compress(const RawEchoSet& echo, const RangeCompressOptions& options) {
  if (echo.num_pulses == 0 || echo.samples_per_pulse == 0) {
    throw std::invalid_argument("empty echo set");
  }
  if (echo.sample_rate_hz < echo.radar.chirp_bandwidth_hz) {
    throw std::invalid_argument("aliasing: sample_rate below chirp bandwidth");
  }
  if (options.upsample < 1) throw std::invalid_argument("upsample must be >= 1");

  const double fs = echo.sample_rate_hz;
  const std::size_t n = echo.samples_per_pulse;
  const std::size_t up = static_cast<std::size_t>(options.upsample);
  const std::size_t nu = n * up;
  const std::size_t chirp_len = static_cast<std::size_t>(
      std::ceil(echo.radar.pulse_duration_s * fs - 1e-9));
  if (chirp_len >= n) {
    throw std::invalid_argument("pulse is longer than the range window");
  }

  // Frequency response of the replica: the chirp sampled on the receive grid,
  // zero-padded to the window length.
  std::vector<std::complex<double>> replica_fd(n, {0.0, 0.0});
  const double rate = echo.radar.chirp_bandwidth_hz / echo.radar.pulse_duration_s;
  for (std::size_t j = 0; j < chirp_len; ++j) {
    const double u = j / fs - 0.5 * echo.radar.pulse_duration_s;
    replica_fd[j] = std::polar(1.0, kPi * rate * u * u);
  }
  fft_inplace(replica_fd.data(), n, false);

  RangeCompressed rc;
  rc.num_pulses = echo.num_pulses;
  rc.bin_spacing_m = kSpeedOfLight / (2.0 * fs * up);
  rc.pulse_times_s = echo.pulse_times_s;
  rc.radar = echo.radar;
  rc.geometry = echo.geometry;
  rc.truth = echo.truth;

  // Correlation values are only complete where the full chirp fits in the
  // window; crop requests are clipped against that valid span.
  const std::size_t valid_fine = (n - chirp_len) * up + 1;
  std::size_t keep0 = 0;
  std::size_t keep1 = valid_fine;
  if (options.keep_min_range_m >= 0) {
    const double f = (options.keep_min_range_m - echo.range_window_start_m) / rc.bin_spacing_m;
    keep0 = f <= 0 ? 0 : std::min(valid_fine, static_cast<std::size_t>(f));
  }
  if (options.keep_max_range_m >= 0) {
    const double f = (options.keep_max_range_m - echo.range_window_start_m) / rc.bin_spacing_m;
    keep1 = f <= 0 ? 0 : std::min(valid_fine, static_cast<std::size_t>(std::ceil(f)) + 1);
  }
  if (keep0 >= keep1) throw std::invalid_argument("range crop selects no bins");
  rc.num_bins = keep1 - keep0;
  rc.bin_start_m = echo.range_window_start_m + keep0 * rc.bin_spacing_m;
  rc.samples.assign(rc.num_pulses * rc.num_bins, {0.0, 0.0});

  const double scale = 1.0 / static_cast<double>(n);
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
  {
    std::vector<std::complex<double>> spec(n);
    std::vector<std::complex<double>> padded(nu);
#pragma omp for schedule(static)
    for (long ip = 0; ip < static_cast<long>(rc.num_pulses); ++ip) {
      const std::complex<double>* in = &echo.samples[ip * n];
      std::copy(in, in + n, spec.begin());
      fft_inplace(spec.data(), n, false);
      for (std::size_t f = 0; f < n; ++f) spec[f] *= std::conj(replica_fd[f]);

      if (up == 1) {
        std::copy(spec.begin(), spec.end(), padded.begin());
      } else {
        std::fill(padded.begin(), padded.end(), std::complex<double>{0.0, 0.0});
        const std::size_t half = n / 2;
        for (std::size_t f = 0; f < half; ++f) padded[f] = spec[f];
        for (std::size_t f = half + 1; f < n; ++f) padded[nu - n + f] = spec[f];
        if (n % 2 == 0) {
          // Split the shared Nyquist bin between the two band edges.
          padded[half] = 0.5 * spec[half];
          padded[nu - half] = 0.5 * spec[half];
        } else {
          padded[half] = spec[half];
        }
      }
      fft_inplace(padded.data(), nu, true);
      std::complex<double>* out = &rc.samples[ip * rc.num_bins];
      for (std::size_t b = 0; b < rc.num_bins; ++b) out[b] = padded[keep0 + b] * scale;
    }
  }
  return rc;
}

namespace {

ComplexImage backproject_impl(const RangeCompressed& rc, const GridSpec& grid,
                              PulseInterval pulses, int threads) {
  if (pulses.begin >= pulses.end || pulses.end > rc.num_pulses) {
    throw std::invalid_argument("empty or out-of-range pulse interval");
  }
  if (grid.nx < 1 || grid.ny < 1) throw std::invalid_argument("empty grid");

  const SlantGeometry slant = slant_geometry(rc.geometry);
  const double v = rc.radar.platform_velocity_mps;
  const double four_pi_over_lambda = 4.0 * kPi / rc.radar.wavelength_m;
  const double inv_spacing = 1.0 / rc.bin_spacing_m;

  ComplexImage img;
  img.grid = grid;
  img.pixels.assign(static_cast<std::size_t>(grid.nx) * grid.ny, {0.0, 0.0});

  const long npx = static_cast<long>(grid.nx) * grid.ny;
#pragma omp parallel for schedule(static) num_threads(threads)
  for (long p = 0; p < npx; ++p) {
    const int ix = static_cast<int>(p % grid.nx);
    const int iy = static_cast<int>(p / grid.nx);
    const double x = grid.x_at(ix);
    const double r0 = slant.r0(grid.y_at(iy));
    const double r0sq = r0 * r0;

    std::complex<double> acc{0.0, 0.0};
    for (std::size_t ip = pulses.begin; ip < pulses.end; ++ip) {
      const double dx = v * rc.pulse_times_s[ip] - x;
      const double r = std::sqrt(r0sq + dx * dx);
      const double fine = (r - rc.bin_start_m) * inv_spacing;
      if (fine < 0.0) continue;
      const std::size_t i0 = static_cast<std::size_t>(fine);
      if (i0 + 1 >= rc.num_bins) continue;
      const double alpha = fine - static_cast<double>(i0);
      const std::complex<double>* row = rc.row(ip);
      const std::complex<double> sample = row[i0] * (1.0 - alpha) + row[i0 + 1] * alpha;
      acc += sample * std::polar(1.0, four_pi_over_lambda * r);
    }
    img.pixels[p] = acc;
  }
  return img;
}

}  // namespace

ComplexImage backproject(const RangeCompressed& rc, const GridSpec& grid,
                         PulseInterval pulses, int threads) {
  return backproject_impl(rc, grid, pulses,
                          threads > 0 ? threads : omp_get_max_threads());
}

ComplexImage backproject_reference(const RangeCompressed& rc, const GridSpec& grid,
                                   PulseInterval pulses) {
  return backproject_impl(rc, grid, pulses, 1);
}

SublookStack make_sublooks(const RangeCompressed& rc, int num_sublooks,
                           const GridSpec& grid, int threads) {
  const std::size_t n = rc.num_pulses;
  if (num_sublooks < 1 || static_cast<std::size_t>(num_sublooks) > n / 2) {
    throw std::invalid_argument("num_sublooks must lie in [1, " +
                                std::to_string(n / 2) + "] for " +
                                std::to_string(n) + " pulses");
  }
  const std::size_t per_look = n / num_sublooks;
  const std::size_t dropped = n - per_look * num_sublooks;
  const std::size_t front = dropped / 2;

  SublookStack stack;
  stack.grid = grid;
  stack.num_sublooks = num_sublooks;
  stack.radar = rc.radar;
  stack.geometry = rc.geometry;
  stack.truth = rc.truth;
  stack.looks.reserve(num_sublooks);
  for (int k = 0; k < num_sublooks; ++k) {
    const PulseInterval block{front + k * per_look, front + (k + 1) * per_look};
    stack.looks.push_back(backproject(rc, grid, block, threads));
    double mean_t = 0;
    for (std::size_t ip = block.begin; ip < block.end; ++ip) mean_t += rc.pulse_times_s[ip];
    stack.center_times_s.push_back(mean_t / per_look);
    stack.pulses_per_look.push_back(per_look);
  }
  return stack;
}

}  // namespace sarcomm
