// desk.hpp -- shared desk-scale scenarios for the test suites.
//
// Sentinel-flavoured constants scaled so a full pass stays in the hundreds of
// pulses: big enough to exercise the formulas, small enough for CI.
#pragma once

#include "sarcomm/link_budget.hpp"
#include "sarcomm/scene.hpp"
#include "sarcomm/units.hpp"

namespace desk {

// Full desk scale: N_A rounds to 512 pulses.
inline sarcomm::RadarParams radar() {
  sarcomm::RadarParams r;
  r.transmit_power_w = 4000.0;
  r.antenna_gain = 31622.776601683792;  // 45 dBi
  r.wavelength_m = sarcomm::kSpeedOfLight / 5.405e9;
  r.chirp_bandwidth_hz = 56.5e6;
  r.pulse_duration_s = 20e-6;
  r.prf_hz = 1135.0;
  r.antenna_length_m = 12.3;
  r.platform_velocity_mps = 7000.0;
  r.system_noise_temp_k = 500.0;
  return r;
}

inline sarcomm::ImagingGeometry geometry(double slant_range_m = 700e3) {
  sarcomm::ImagingGeometry g;
  g.slant_range_m = slant_range_m;
  g.incidence_angle_rad = 39.0 * sarcomm::kPi / 180.0;
  g.scatter_area_m2 = 1.0;
  return g;
}

// Mini variant: shorter slant range gives N_A ~= 256 pulses.
inline sarcomm::ImagingGeometry mini_geometry() { return geometry(350e3); }

// X-band variant for Monte-Carlo sweeps: the shorter wavelength keeps range
// migration far below a bin so bright-reference sidelobes stay on their nulls.
inline sarcomm::RadarParams sweep_radar() {
  sarcomm::RadarParams r = radar();
  r.wavelength_m = sarcomm::kSpeedOfLight / 9.65e9;
  r.pulse_duration_s = 10e-6;
  r.prf_hz = 2027.0;
  return r;
}

inline sarcomm::SceneSpec scene(const sarcomm::ImagingGeometry& geom, double extent_az = 960.0,
                                double extent_gr = 384.0, std::uint64_t seed = 42) {
  sarcomm::SceneSpec s;
  s.geometry = geom;
  s.extent_azimuth_m = extent_az;
  s.extent_ground_range_m = extent_gr;
  s.rng_seed = seed;
  return s;
}

inline sarcomm::PointTarget target(double x, double y, double rcs_on, double rcs_off = 0) {
  sarcomm::PointTarget t;
  t.x_m = x;
  t.y_m = y;
  t.rcs_on_m2 = rcs_on;
  t.rcs_off_m2 = rcs_off;
  return t;
}

}  // namespace desk
