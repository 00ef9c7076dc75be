#include "sarcomm/scene.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sarcomm/units.hpp"

namespace sarcomm {

ModulationSchedule ModulationSchedule::static_off() {
  ModulationSchedule s;
  s.kind = Kind::kStaticOff;
  return s;
}

ModulationSchedule ModulationSchedule::square_wave(double period_s, double phase_s) {
  ModulationSchedule s;
  s.kind = Kind::kSquareWave;
  s.period_s = period_s;
  s.phase_s = phase_s;
  return s;
}

ModulationSchedule ModulationSchedule::bit_sequence(std::vector<std::uint8_t> bits,
                                                    double symbol_duration_s,
                                                    double start_offset_s) {
  ModulationSchedule s;
  s.kind = Kind::kBitSequence;
  s.bits = std::move(bits);
  s.symbol_duration_s = symbol_duration_s;
  s.start_offset_s = start_offset_s;
  return s;
}

bool ModulationSchedule::on_at(double t) const {
  switch (kind) {
    case Kind::kStaticOn:
      return true;
    case Kind::kStaticOff:
      return false;
    case Kind::kSquareWave: {
      double u = std::fmod(t - phase_s, period_s);
      if (u < 0) u += period_s;
      return u < 0.5 * period_s;  // first half-period is the on state
    }
    case Kind::kBitSequence: {
      const double idx = std::floor((t - start_offset_s) / symbol_duration_s);
      if (idx < 0 || idx >= static_cast<double>(bits.size())) return false;
      return bits[static_cast<std::size_t>(idx)] != 0;
    }
  }
  return false;
}

void ModulationSchedule::validate(double prf_hz) const {
  switch (kind) {
    case Kind::kStaticOn:
    case Kind::kStaticOff:
      return;
    case Kind::kSquareWave:
      if (!(period_s >= 4.0 / prf_hz)) {
        throw std::invalid_argument(
            "square-wave period must be >= 4/f_p (two pulses per state); got " +
            std::to_string(period_s) + " s");
      }
      return;
    case Kind::kBitSequence:
      if (bits.empty()) throw std::invalid_argument("bit-sequence schedule has no bits");
      if (!(symbol_duration_s >= 2.0 / prf_hz)) {
        throw std::invalid_argument(
            "symbol_duration must be >= 2/f_p (two pulses per state); got " +
            std::to_string(symbol_duration_s) + " s");
      }
      return;
  }
}

void SceneSpec::validate(const RadarParams& radar) const {
  radar.validate();
  geometry.validate();
  if (!(extent_azimuth_m > 0.0) || !(extent_ground_range_m > 0.0)) {
    throw std::invalid_argument("scene extent must be positive");
  }
  if (clutter.sigma0 < 0.0) throw std::invalid_argument("clutter sigma0 must be >= 0");
  if (clutter.sigma0 > 0.0 &&
      (!(clutter.cell_azimuth_m > 0.0) || !(clutter.cell_ground_range_m > 0.0))) {
    throw std::invalid_argument("clutter cell size must be positive");
  }

  const double res_az = azimuth_resolution(radar.antenna_length_m);
  const double res_gr =
      ground_range_resolution(radar.chirp_bandwidth_hz, geometry.incidence_angle_rad);
  const double margin_x = 3.0 * res_az;
  const double margin_y = 3.0 * res_gr;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const PointTarget& tgt = targets[i];
    if (tgt.rcs_on_m2 < tgt.rcs_off_m2 || tgt.rcs_off_m2 < 0.0) {
      throw std::invalid_argument("target " + std::to_string(i) +
                                  ": need rcs_on >= rcs_off >= 0");
    }
    if (std::abs(tgt.x_m) > 0.5 * extent_azimuth_m - margin_x ||
        std::abs(tgt.y_m) > 0.5 * extent_ground_range_m - margin_y) {
      throw std::invalid_argument(
          "target " + std::to_string(i) +
          " is closer than 3 resolution cells to the scene edge");
    }
    tgt.schedule.validate(radar.prf_hz);
  }
}

}  // namespace sarcomm
