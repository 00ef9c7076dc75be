// scene.hpp -- scene description: modulating point targets, clutter, extents.
#pragma once

#include <cstdint>
#include <vector>

#include "sarcomm/link_budget.hpp"

namespace sarcomm {

// Time-varying reflector state. The schedule is sampled exactly at each pulse
// time; there is no interpolation between states.
struct ModulationSchedule {
  enum class Kind { kStaticOn, kStaticOff, kSquareWave, kBitSequence };

  Kind kind = Kind::kStaticOn;
  // square-wave
  double period_s = 0;
  double phase_s = 0;
  // bit-sequence; the reflector is off outside the sequence span
  std::vector<std::uint8_t> bits;
  double symbol_duration_s = 0;
  double start_offset_s = 0;

  bool on_at(double t) const;
  // Enforces the two-pulses-per-state rule: symbol_duration >= 2/f_p and
  // square-wave period >= 4/f_p.
  void validate(double prf_hz) const;

  static ModulationSchedule static_on() { return {}; }
  static ModulationSchedule static_off();
  static ModulationSchedule square_wave(double period_s, double phase_s);
  static ModulationSchedule bit_sequence(std::vector<std::uint8_t> bits,
                                         double symbol_duration_s, double start_offset_s);
};

// Point scatterer on the ground. x is the along-track (azimuth) offset and y
// the ground-range offset, both from the scene centre.
struct PointTarget {
  double x_m = 0;
  double y_m = 0;
  double rcs_on_m2 = 0;
  double rcs_off_m2 = 0;
  ModulationSchedule schedule;

  double rcs_at(double t) const { return schedule.on_at(t) ? rcs_on_m2 : rcs_off_m2; }
};

// Distributed clutter: one static circular-Gaussian scatterer per cell with
// expected power sigma0 * cell area (fully developed speckle, frozen for the
// whole pass).
struct ClutterSpec {
  double sigma0 = 0;
  double cell_azimuth_m = 15.0;
  double cell_ground_range_m = 6.0;
};

struct SceneSpec {
  ImagingGeometry geometry;
  std::vector<PointTarget> targets;
  ClutterSpec clutter;
  double extent_azimuth_m = 0;
  double extent_ground_range_m = 0;
  std::uint64_t rng_seed = 0;

  // Checks target placement (inside the extent, >= 3 resolution cells from the
  // edges) and every schedule against the radar timing.
  void validate(const RadarParams& radar) const;
};

}  // namespace sarcomm
