// config.hpp -- scenario configuration: one JSON file drives every subcommand.
//
// Unknown keys anywhere in the file are hard errors so that a typo in a
// physics parameter cannot silently fall back to a default.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sarcomm/demod.hpp"
#include "sarcomm/link_budget.hpp"
#include "sarcomm/process.hpp"
#include "sarcomm/scene.hpp"

namespace sarcomm {

struct ProcessingConfig {
  int num_sublooks = 8;
  double sample_rate_hz = 0;          // 0: complex sampling at the chirp bandwidth
  std::size_t samples_per_pulse = 0;  // 0: auto-size to the scene
  int range_upsample = 8;
  GridSpec grid;
  MeasurementWindows windows;
  int looks_per_symbol = 2;
  double flatness_floor_db = 1.0;
  // Optional validity check: per-sublook on-state SNR in dB must stay above
  // this floor or the budget report flags the link. Disabled by default (the
  // radiometric accuracy of real systems is instrument-specific).
  std::optional<double> radiometric_floor_db;
};

struct SweepConfig {
  std::vector<double> ebno_list_db{3, 5, 7, 9, 11};
  std::vector<int> bits_per_pass_list{128};
  long trials = 10000;  // decoded symbols per sweep point
  // Power of the static co-located reference scatterer over the modulating
  // target's on-state RCS. The reference linearizes the power measurement so
  // the closed-form OOK error rate applies; see run_ber_sweep.
  double reference_power_ratio_db = 32.0;
  // Extra power for the reference scatterers filling the clutter window.
  double denominator_boost_db = 18.0;
};

struct ScenarioConfig {
  std::uint64_t seed = 0;
  RadarParams radar;
  ImagingGeometry geometry;
  std::optional<ReflectorGeometry> reflector;
  SceneSpec scene;
  ProcessingConfig processing;
  std::optional<SweepConfig> sweep;
};

// Loads and validates a scenario file. Throws ConfigError with the offending
// key path on any unknown key, missing mandatory field, or inconsistency.
ScenarioConfig load_config(const std::string& path);

// 3x3 windows centred on the pixel nearest (x_m, y_m), with the clutter
// window displaced down-range (falling back to azimuth on narrow grids).
MeasurementWindows default_windows(const GridSpec& grid, double x_m, double y_m);

}  // namespace sarcomm
