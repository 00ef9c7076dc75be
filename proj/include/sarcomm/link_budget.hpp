// link_budget.hpp -- closed-form radar link and OOK communication formulas.
//
// Everything here is a pure function of its inputs; identical inputs give
// bit-identical outputs, so values can be frozen in golden tests.
#pragma once

#include <optional>
#include <vector>

namespace sarcomm {

// Transmitter / receiver / platform constants.
struct RadarParams {
  double transmit_power_w = 0;     // P_t
  double antenna_gain = 0;         // G, linear
  double wavelength_m = 0;         // lambda
  double chirp_bandwidth_hz = 0;   // B
  double pulse_duration_s = 0;     // tau_p
  double prf_hz = 0;               // f_p
  double antenna_length_m = 0;     // L_a
  double platform_velocity_mps = 0;  // V_st
  double system_noise_temp_k = 0;  // T_sys

  // Throws std::invalid_argument on non-positive fields or duty cycle >= 1.
  void validate() const;
};

struct ImagingGeometry {
  double slant_range_m = 0;       // R
  double incidence_angle_rad = 0; // theta_i, in (0, pi/2)
  double scatter_area_m2 = 0;     // A_scat

  void validate() const;
};

struct ReflectorGeometry {
  double panel_side_m = 0;               // d
  std::optional<double> rcs_on_m2;       // override; defaults to rcs_max(d, lambda)
  double rcs_off_m2 = 0;

  // True when d < 10 * wavelength: too small to be reliably detectable.
  bool undersized(double wavelength_m) const { return panel_side_m < 10.0 * wavelength_m; }
  double on_state_rcs(double wavelength_m) const;
  void validate(double wavelength_m) const;
};

// Subaperture timing plan: m looks with centers spaced delta_t.
struct SublookPlan {
  int num_sublooks = 1;
  long pulses_per_sublook = 0;        // floor(N_A / m)
  double delta_t_s = 0;               // N_A / (m f_p)
  std::vector<double> center_times_s; // uniform, symmetric about the pass center
};

// Real-valued and floored sample counts per pulse / per aperture.
struct SampleCounts {
  double range_real = 0;    // B tau_p
  double azimuth_real = 0;  // f_p R lambda / (L_a V_st)
  long range = 0;
  long azimuth = 0;
};

// Peak RCS of a square trihedral reflector: 12 pi d^4 / lambda^2.
double rcs_max(double panel_side_m, double wavelength_m);

// Ground-range resolution c / (2 B sin(theta_i)).
double ground_range_resolution(double bandwidth_hz, double incidence_angle_rad);

// Azimuth resolution m L_a / 2 (m = 1 is the full-aperture case).
double azimuth_resolution(double antenna_length_m, int num_sublooks = 1);

// Single-pulse SNR: P_t G^2 A_scat sigma0 lambda^2 / ((4 pi)^3 R^4 k T_sys B).
double single_pulse_snr(const RadarParams& radar, const ImagingGeometry& geom,
                        double sigma0);

SampleCounts coherent_sample_counts(const RadarParams& radar, const ImagingGeometry& geom);

// Image SNR after coherent processing: N_R N_A snr_single / m.
double image_snr(double snr_single, double n_range, double n_azimuth, int num_sublooks = 1);

// Signal-to-clutter ratio, linear. Zero clutter with a real target returns
// the +infinity sentinel; negative inputs are domain errors.
double scr(double sigma0_target, double sigma0_clutter);

// Timing plan for m equal sublooks over an N_A-pulse aperture. The remainder
// N_A mod m is dropped evenly from both ends so the looks stay centred.
SublookPlan sublook_plan(long n_azimuth, int num_sublooks, double prf_hz,
                         double pass_center_time_s = 0.0);

// Two radar pulses per reflector state cap the signalling rate at f_p / 2.
double max_bit_rate_bps(double prf_hz);
// At the maximum m = N_A the per-pass throughput is N_A / 2 bits.
double max_throughput_bits(double n_azimuth);

// OOK bit error rate from full-aperture image SNRs split over m sublooks:
// Q(sqrt((snr_on - snr_off) / (2 m))). Returns 0.5 when the states are
// indistinguishable (snr_on <= snr_off); `indistinguishable`, when non-null,
// reports that condition.
double ook_ber(double snr_on, double snr_off, int num_sublooks,
               bool* indistinguishable = nullptr);

// Same expression fed with per-sublook SNRs: Q(sqrt((on - off) / 2)).
double ook_ber_sublook(double snr_on_sublook, double snr_off_sublook,
                       bool* indistinguishable = nullptr);

// Convention for quoting E_b/N_o from an on/off power difference expressed in
// dB: the linear difference halves (-3.01 dB), e.g. 10 dB -> 6.99 dB.
double ebno_db_from_onoff_difference_db(double difference_db);

}  // namespace sarcomm
