// echo.hpp -- raw complex baseband echo matrix plus acquisition metadata.
#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "sarcomm/link_budget.hpp"
#include "sarcomm/scene.hpp"

namespace sarcomm {

struct RawEchoSet {
  std::size_t num_pulses = 0;
  std::size_t samples_per_pulse = 0;
  // Pulse-major: samples[pulse * samples_per_pulse + k].
  std::vector<std::complex<double>> samples;
  std::vector<double> pulse_times_s;
  double range_window_start_m = 0;  // slant range of fast-time sample 0
  double sample_rate_hz = 0;
  RadarParams radar;
  ImagingGeometry geometry;
  std::optional<SceneSpec> truth;

  std::complex<double>& at(std::size_t pulse, std::size_t sample) {
    return samples[pulse * samples_per_pulse + sample];
  }
  const std::complex<double>& at(std::size_t pulse, std::size_t sample) const {
    return samples[pulse * samples_per_pulse + sample];
  }
};

}  // namespace sarcomm
