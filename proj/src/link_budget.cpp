#include "sarcomm/link_budget.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "sarcomm/units.hpp"

namespace sarcomm {

namespace {
void require_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    throw std::invalid_argument(std::string(name) + " must be positive");
  }
}
}  // namespace

void RadarParams::validate() const {
  require_positive(transmit_power_w, "transmit_power_w");
  require_positive(antenna_gain, "antenna_gain");
  require_positive(wavelength_m, "wavelength_m");
  require_positive(chirp_bandwidth_hz, "chirp_bandwidth_hz");
  require_positive(pulse_duration_s, "pulse_duration_s");
  require_positive(prf_hz, "prf_hz");
  require_positive(antenna_length_m, "antenna_length_m");
  require_positive(platform_velocity_mps, "platform_velocity_mps");
  require_positive(system_noise_temp_k, "system_noise_temp_k");
  if (prf_hz * pulse_duration_s >= 1.0) {
    throw std::invalid_argument("duty cycle prf*pulse_duration must be below unity");
  }
}

void ImagingGeometry::validate() const {
  require_positive(slant_range_m, "slant_range_m");
  require_positive(scatter_area_m2, "scatter_area_m2");
  if (!(incidence_angle_rad > 0.0) || !(incidence_angle_rad < kPi / 2.0)) {
    throw std::invalid_argument("incidence_angle_rad must lie in (0, pi/2)");
  }
}

double ReflectorGeometry::on_state_rcs(double wavelength_m) const {
  return rcs_on_m2 ? *rcs_on_m2 : rcs_max(panel_side_m, wavelength_m);
}

void ReflectorGeometry::validate(double wavelength_m) const {
  require_positive(panel_side_m, "panel_side_m");
  if (rcs_off_m2 < 0.0) throw std::invalid_argument("rcs_off_m2 must be >= 0");
  if (!(on_state_rcs(wavelength_m) > rcs_off_m2)) {
    throw std::invalid_argument("reflector on-state RCS must exceed off-state RCS");
  }
}

double rcs_max(double panel_side_m, double wavelength_m) {
  if (!(panel_side_m > 0.0) || !(wavelength_m > 0.0)) {
    throw std::domain_error("rcs_max requires positive side length and wavelength");
  }
  const double d2 = panel_side_m * panel_side_m;
  return 12.0 * kPi * d2 * d2 / (wavelength_m * wavelength_m);
}

double ground_range_resolution(double bandwidth_hz, double incidence_angle_rad) {
  if (!(bandwidth_hz > 0.0)) throw std::domain_error("bandwidth must be positive");
  if (!(incidence_angle_rad > 0.0) || incidence_angle_rad > kPi / 2.0) {
    throw std::domain_error("incidence angle must lie in (0, pi/2]");
  }
  return kSpeedOfLight / (2.0 * bandwidth_hz * std::sin(incidence_angle_rad));
}

double azimuth_resolution(double antenna_length_m, int num_sublooks) {
  if (!(antenna_length_m > 0.0)) throw std::domain_error("antenna length must be positive");
  if (num_sublooks < 1) throw std::domain_error("num_sublooks must be >= 1");
  return num_sublooks * antenna_length_m / 2.0;
}

double single_pulse_snr(const RadarParams& radar, const ImagingGeometry& geom,
                        double sigma0) {
  radar.validate();
  geom.validate();
  if (sigma0 < 0.0) throw std::domain_error("sigma0 must be >= 0");
  const double four_pi_cubed = std::pow(4.0 * kPi, 3);
  const double r2 = geom.slant_range_m * geom.slant_range_m;
  const double numer = radar.transmit_power_w * radar.antenna_gain * radar.antenna_gain *
                       geom.scatter_area_m2 * sigma0 * radar.wavelength_m * radar.wavelength_m;
  const double denom = four_pi_cubed * r2 * r2 * kBoltzmann *
                       radar.system_noise_temp_k * radar.chirp_bandwidth_hz;
  return numer / denom;
}

SampleCounts coherent_sample_counts(const RadarParams& radar, const ImagingGeometry& geom) {
  SampleCounts out;
  out.range_real = radar.chirp_bandwidth_hz * radar.pulse_duration_s;
  out.azimuth_real = radar.prf_hz * geom.slant_range_m * radar.wavelength_m /
                     (radar.antenna_length_m * radar.platform_velocity_mps);
  out.range = static_cast<long>(std::floor(out.range_real));
  out.azimuth = static_cast<long>(std::floor(out.azimuth_real));
  return out;
}

double image_snr(double snr_single, double n_range, double n_azimuth, int num_sublooks) {
  if (num_sublooks < 1) throw std::domain_error("num_sublooks must be >= 1");
  return n_range * n_azimuth * snr_single / num_sublooks;
}

double scr(double sigma0_target, double sigma0_clutter) {
  if (sigma0_target < 0.0 || sigma0_clutter < 0.0) {
    throw std::domain_error("RCS inputs must be >= 0");
  }
  if (sigma0_clutter == 0.0) {
    // Infinite-SCR sentinel: nothing competes with the target.
    return std::numeric_limits<double>::infinity();
  }
  return sigma0_target / sigma0_clutter;
}

SublookPlan sublook_plan(long n_azimuth, int num_sublooks, double prf_hz,
                         double pass_center_time_s) {
  if (n_azimuth < 1) throw std::invalid_argument("n_azimuth must be >= 1");
  if (!(prf_hz > 0.0)) throw std::invalid_argument("prf must be positive");
  if (num_sublooks < 1 || num_sublooks > n_azimuth) {
    throw std::invalid_argument("invalid plan: need 1 <= m <= N_A, got m=" +
                                std::to_string(num_sublooks) + " with N_A=" +
                                std::to_string(n_azimuth));
  }
  SublookPlan plan;
  plan.num_sublooks = num_sublooks;
  plan.pulses_per_sublook = n_azimuth / num_sublooks;
  plan.delta_t_s = static_cast<double>(n_azimuth) / (num_sublooks * prf_hz);
  plan.center_times_s.resize(num_sublooks);
  for (int k = 0; k < num_sublooks; ++k) {
    plan.center_times_s[k] =
        pass_center_time_s + (k - 0.5 * (num_sublooks - 1)) * plan.delta_t_s;
  }
  return plan;
}

double max_bit_rate_bps(double prf_hz) {
  if (!(prf_hz > 0.0)) throw std::domain_error("prf must be positive");
  return prf_hz / 2.0;
}

double max_throughput_bits(double n_azimuth) {
  if (!(n_azimuth > 0.0)) throw std::domain_error("N_A must be positive");
  return n_azimuth / 2.0;
}

double ook_ber(double snr_on, double snr_off, int num_sublooks, bool* indistinguishable) {
  if (num_sublooks < 1) throw std::domain_error("num_sublooks must be >= 1");
  if (snr_off < 0.0 || snr_on < 0.0) throw std::domain_error("SNRs must be >= 0");
  if (indistinguishable) *indistinguishable = !(snr_on > snr_off);
  if (!(snr_on > snr_off)) return 0.5;
  return qfunc(std::sqrt((snr_on - snr_off) / (2.0 * num_sublooks)));
}

double ook_ber_sublook(double snr_on_sublook, double snr_off_sublook,
                       bool* indistinguishable) {
  return ook_ber(snr_on_sublook, snr_off_sublook, 1, indistinguishable);
}

double ebno_db_from_onoff_difference_db(double difference_db) {
  return db_from_linear(linear_from_db(difference_db) / 2.0);
}

}  // namespace sarcomm
