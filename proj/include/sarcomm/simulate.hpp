// simulate.hpp -- raw echo synthesis for modulating point targets in clutter.
#pragma once

#include <limits>

#include "sarcomm/echo.hpp"
#include "sarcomm/scene.hpp"

namespace sarcomm {

// Time a ground point stays inside the antenna footprint: R lambda / (L_a V).
double dwell_time(const RadarParams& radar, const ImagingGeometry& geom);

struct SynthesisOptions {
  // 0 selects complex sampling at the chirp bandwidth.
  double sample_rate_hz = 0;
  // 0 sizes the window to the scene extent plus the chirp length.
  std::size_t samples_per_pulse = 0;
  // NaN picks the window start automatically from the scene's near edge.
  double range_window_start_m = std::numeric_limits<double>::quiet_NaN();
  // Scales the receiver-noise standard deviation; 0 disables noise entirely
  // (test hook; the physical level is set by k T_sys B).
  double noise_scale = 1.0;
  // 0 uses the OpenMP default thread count.
  int threads = 0;
};

// Synthesizes one pass of raw echoes under the start-stop approximation.
// Deterministic for a given scene seed, independent of thread count.
RawEchoSet synthesize(const SceneSpec& scene, const RadarParams& radar,
                      const SynthesisOptions& options = {});

}  // namespace sarcomm
