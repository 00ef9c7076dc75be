#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "sarcomm/link_budget.hpp"
#include "sarcomm/units.hpp"

using namespace sarcomm;

namespace {

// Independent Q-function oracle: composite Simpson quadrature of the standard
// normal density over [x, x+50] with 40000 intervals.
double qfunc_quadrature(double x) {
  const int n = 40000;
  const double b = x + 50.0;
  const double h = (b - x) / n;
  auto phi = [](double t) { return std::exp(-0.5 * t * t); };
  double acc = phi(x) + phi(b);
  for (int i = 1; i < n; ++i) acc += phi(x + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0 / std::sqrt(2.0 * kPi);
}

}  // namespace

TEST_CASE("qfunc matches quadrature oracle to 1e-10 on [0, 8]") {
  CHECK(qfunc(0.0) == 0.5);
  for (double x = 0.0; x <= 8.0; x += 0.25) {
    CHECK(std::abs(qfunc(x) - qfunc_quadrature(x)) < 1e-10);
  }
  for (double x : {0.3, 1.7, 2.9, 4.4, 6.1}) {
    CHECK(qfunc(x) + qfunc(-x) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("rcs_max reproduces the reference reflector values") {
  const double lambda = 0.05547;
  // 3 ft and 4 ft panels at the quoted wavelength.
  CHECK(db_from_linear(rcs_max(0.9144, lambda)) == doctest::Approx(39.3).epsilon(0.003));
  CHECK(db_from_linear(rcs_max(1.2192, lambda)) == doctest::Approx(44.3).epsilon(0.005));
  // d^4 scaling: doubling the side raises the RCS by exactly 16x.
  CHECK(rcs_max(2 * 0.77, lambda) == 16.0 * rcs_max(0.77, lambda));

  // The 2/3/4 ft triple at 5.4 GHz, within 0.2 dB.
  const double lambda54 = kSpeedOfLight / 5.4e9;
  const double expected[] = {32.4, 39.3, 44.4};
  int i = 0;
  for (double ft : {2.0, 3.0, 4.0}) {
    const double got = db_from_linear(rcs_max(ft * 0.3048, lambda54));
    CHECK(std::abs(got - expected[i++]) < 0.2);
  }

  CHECK_THROWS_AS(rcs_max(0.0, lambda), std::domain_error);
  CHECK_THROWS_AS(rcs_max(1.0, -1.0), std::domain_error);
}

TEST_CASE("ground range resolution") {
  CHECK(ground_range_resolution(1.499e8, kPi / 2) ==
        doctest::Approx(1.0).epsilon(1e-3));
  CHECK(ground_range_resolution(56.5e6, 39.0 * kPi / 180.0) ==
        doctest::Approx(4.2157).epsilon(1e-3));
  // Halving the bandwidth doubles the cell exactly.
  CHECK(ground_range_resolution(0.5 * 80e6, 0.7) == 2.0 * ground_range_resolution(80e6, 0.7));
  CHECK_THROWS_AS(ground_range_resolution(50e6, 0.0), std::domain_error);
}

TEST_CASE("azimuth resolution") {
  CHECK(azimuth_resolution(12.3) == doctest::Approx(6.15));
  CHECK(azimuth_resolution(12.3, 4) == doctest::Approx(24.6));
  CHECK(azimuth_resolution(9.7, 8) == 2.0 * azimuth_resolution(9.7, 4));
  CHECK_THROWS_AS(azimuth_resolution(12.3, 0), std::domain_error);
}

TEST_CASE("single pulse snr") {
  RadarParams r;
  r.transmit_power_w = 1000.0;
  r.antenna_gain = std::pow(10.0, 4.5);
  r.wavelength_m = 0.05547;
  r.chirp_bandwidth_hz = 50e6;
  r.pulse_duration_s = 50e-6;
  r.prf_hz = 1000.0;
  r.antenna_length_m = 10.0;
  r.platform_velocity_mps = 7000.0;
  r.system_noise_temp_k = 500.0;
  ImagingGeometry g;
  g.slant_range_m = 700e3;
  g.incidence_angle_rad = 0.6;
  g.scatter_area_m2 = 100.0;

  // Frozen from an independent high-precision evaluation of the formula.
  CHECK(single_pulse_snr(r, g, 1.0) == doctest::Approx(1.87098923306711e-3).epsilon(1e-10));

  // R^4 law: doubling the range costs exactly 16x.
  ImagingGeometry g2 = g;
  g2.slant_range_m *= 2.0;
  CHECK(single_pulse_snr(r, g, 1.0) / single_pulse_snr(r, g2, 1.0) ==
        doctest::Approx(16.0).epsilon(1e-12));

  CHECK(single_pulse_snr(r, g, 0.0) == 0.0);
}

TEST_CASE("coherent sample counts") {
  RadarParams r;
  r.transmit_power_w = 1;
  r.antenna_gain = 1;
  r.wavelength_m = 0.05;
  r.chirp_bandwidth_hz = 50e6;
  r.pulse_duration_s = 50e-6;
  r.prf_hz = 1000.0;
  r.antenna_length_m = 10.0;
  r.platform_velocity_mps = 7000.0;
  r.system_noise_temp_k = 300;
  ImagingGeometry g;
  g.slant_range_m = 700e3;
  g.incidence_angle_rad = 0.6;
  g.scatter_area_m2 = 1.0;

  const SampleCounts counts = coherent_sample_counts(r, g);
  CHECK(counts.range_real == doctest::Approx(2500.0).epsilon(1e-9));
  CHECK(counts.azimuth_real == doctest::Approx(500.0).epsilon(1e-9));
  CHECK(counts.range == 2500);
  CHECK(counts.azimuth == 500);

  r.pulse_duration_s = 0.0;  // formula-level limit: no pulse, no samples
  CHECK(coherent_sample_counts(r, g).range_real == 0.0);
}

TEST_CASE("image snr") {
  CHECK(image_snr(0.37, 1, 1, 1) == 0.37);
  CHECK(image_snr(0.4, 100, 50, 2) == 0.5 * image_snr(0.4, 100, 50, 1));
  CHECK(image_snr(1e-6, 2500, 500, 4) == doctest::Approx(0.3125).epsilon(1e-12));
  CHECK_THROWS_AS(image_snr(1.0, 1, 1, 0), std::domain_error);
}

TEST_CASE("scr") {
  CHECK(scr(3.7, 3.7) == 1.0);
  CHECK(db_from_linear(scr(100.0, 1.0)) == doctest::Approx(20.0).epsilon(1e-12));
  CHECK(scr(0.0, 2.0) == 0.0);
  CHECK(std::isinf(scr(1.0, 0.0)));  // infinite-SCR sentinel
  CHECK_THROWS_AS(scr(-1.0, 1.0), std::domain_error);
}

TEST_CASE("sublook plan") {
  const SublookPlan plan = sublook_plan(500, 10, 1000.0);
  CHECK(plan.delta_t_s == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(plan.pulses_per_sublook == 50);
  REQUIRE(plan.center_times_s.size() == 10);
  for (std::size_t k = 1; k < plan.center_times_s.size(); ++k) {
    CHECK(plan.center_times_s[k] - plan.center_times_s[k - 1] ==
          doctest::Approx(plan.delta_t_s).epsilon(1e-12));
  }
  // Symmetric about the pass centre.
  CHECK(plan.center_times_s.front() + plan.center_times_s.back() ==
        doctest::Approx(0.0).epsilon(1e-12));

  const SublookPlan one = sublook_plan(500, 1, 1000.0, 3.25);
  CHECK(one.center_times_s.size() == 1);
  CHECK(one.center_times_s[0] == doctest::Approx(3.25));

  CHECK(sublook_plan(500, 500, 1000.0).delta_t_s == doctest::Approx(1e-3).epsilon(1e-12));
  CHECK_THROWS_AS(sublook_plan(500, 501, 1000.0), std::invalid_argument);
}

TEST_CASE("bit rate and throughput bounds") {
  CHECK(max_bit_rate_bps(1000.0) == 500.0);
  CHECK(max_bit_rate_bps(3000.0) == 1500.0);
  CHECK(max_throughput_bits(500) == 250.0);
}

TEST_CASE("ook ber") {
  bool flat = false;
  CHECK(ook_ber(1.0, 1.0, 1, &flat) == 0.5);
  CHECK(flat);

  // E_b/N_o of 7 dB; frozen against the erfc/quadrature oracle.
  const double gamma = std::pow(10.0, 0.7);
  CHECK(ook_ber_sublook(2.0 * gamma, 0.0) == doctest::Approx(0.012587033).epsilon(1e-6));
  CHECK(std::abs(ook_ber_sublook(2.0 * gamma, 0.0) - 0.01256) < 1e-4);
  CHECK(std::abs(ook_ber_sublook(2.0 * gamma, 0.0) -
                 qfunc_quadrature(std::sqrt(gamma))) < 1e-12);

  // A 10 dB on/off power difference corresponds to E_b/N_o = 7 dB.
  CHECK(ebno_db_from_onoff_difference_db(10.0) == doctest::Approx(6.9897).epsilon(1e-4));

  // The m-sublook form equals the per-sublook form fed with pre-divided SNRs.
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> snr(0.0, 400.0);
  std::uniform_int_distribution<int> msel(1, 64);
  for (int i = 0; i < 200; ++i) {
    double on = snr(gen), off = snr(gen);
    if (on < off) std::swap(on, off);
    const int m = msel(gen);
    CHECK(ook_ber(on, off, m) ==
          doctest::Approx(ook_ber_sublook(on / m, off / m)).epsilon(1e-12));
  }

  // Monotone: better separation lowers the BER, more sublooks raise it.
  for (int i = 0; i < 200; ++i) {
    double on = snr(gen) + 1.0, off = snr(gen);
    if (on <= off) std::swap(on, off);
    if (on == off) on += 1.0;
    const int m = msel(gen);
    CHECK(ook_ber(on + 5.0, off, m) < ook_ber(on, off, m));
    CHECK(ook_ber(on, off, m + 1) > ook_ber(on, off, m));
  }
}

TEST_CASE("parameter validation") {
  RadarParams r;
  r.transmit_power_w = 100;
  r.antenna_gain = 1000;
  r.wavelength_m = 0.05;
  r.chirp_bandwidth_hz = 50e6;
  r.pulse_duration_s = 1e-3;
  r.prf_hz = 2000.0;  // duty cycle 2: invalid
  r.antenna_length_m = 10;
  r.platform_velocity_mps = 7000;
  r.system_noise_temp_k = 300;
  CHECK_THROWS_AS(r.validate(), std::invalid_argument);
  r.pulse_duration_s = 20e-6;
  CHECK_NOTHROW(r.validate());

  ImagingGeometry g;
  g.slant_range_m = 700e3;
  g.incidence_angle_rad = 1.6;  // beyond grazing
  g.scatter_area_m2 = 1.0;
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g.incidence_angle_rad = 0.68;
  CHECK_NOTHROW(g.validate());

  ReflectorGeometry refl;
  refl.panel_side_m = 0.3;
  refl.rcs_off_m2 = 0.0;
  CHECK(refl.undersized(0.055));  // 0.3 m is below 10 wavelengths at C-band
  CHECK_FALSE(refl.undersized(0.02));
  CHECK_NOTHROW(refl.validate(0.055));
  refl.rcs_on_m2 = 0.5;
  refl.rcs_off_m2 = 1.0;  // off above on: invalid
  CHECK_THROWS_AS(refl.validate(0.055), std::invalid_argument);
}
