#include "sarcomm/simulate.hpp"

#include <omp.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "sarcomm/geometry.hpp"
#include "sarcomm/rng.hpp"
#include "sarcomm/units.hpp"

namespace sarcomm {

namespace {

constexpr std::uint64_t kClutterStream = 1;
constexpr std::uint64_t kNoiseStreamBase = 16;

struct Scatterer {
  double x_m;
  double y_m;
  double r0_m;                    // slant range at closest approach
  double aperture_m;              // illuminated along-track span r0 * lambda / L_a
  std::complex<double> reflect;   // sqrt(RCS), complex for clutter speckle
  const ModulationSchedule* schedule = nullptr;  // null: static reflectivity
  double rcs_on = 0, rcs_off = 0;
};

// Adds one scatterer's chirp echo to a pulse row. The quadratic chirp phase
// advances by a two-term phasor recurrence instead of per-sample exp calls.
// chirp_samples fixes the support length so every echo spans exactly the
// matched-filter replica length regardless of its fractional delay.
void add_echo(std::complex<double>* row, std::size_t spp, double fs,
              double window_start_delay_s, double chirp_rate, double tau_p,
              long chirp_samples, double delay_s, std::complex<double> amplitude) {
  const double rel = (delay_s - window_start_delay_s) * fs;
  long k0 = static_cast<long>(std::ceil(rel));
  long k1 = k0 + chirp_samples;
  if (k0 < 0) k0 = 0;
  if (k1 > static_cast<long>(spp)) k1 = static_cast<long>(spp);
  if (k0 >= k1) return;

  const double dt = 1.0 / fs;
  const double u0 = k0 * dt - (delay_s - window_start_delay_s) - 0.5 * tau_p;
  const double a = kPi * chirp_rate;
  std::complex<double> w = std::polar(1.0, a * u0 * u0);
  std::complex<double> r = std::polar(1.0, a * (2.0 * u0 * dt + dt * dt));
  const std::complex<double> rho = std::polar(1.0, a * 2.0 * dt * dt);
  for (long k = k0; k < k1; ++k) {
    row[k] += amplitude * w;
    w *= r;
    r *= rho;
  }
}

}  // namespace

double dwell_time(const RadarParams& radar, const ImagingGeometry& geom) {
  radar.validate();
  geom.validate();
  return geom.slant_range_m * radar.wavelength_m /
         (radar.antenna_length_m * radar.platform_velocity_mps);
}

RawEchoSet synthesize(const SceneSpec& scene, const RadarParams& radar,
                      const SynthesisOptions& options) {
  scene.validate(radar);
  if (options.noise_scale < 0.0) throw std::invalid_argument("noise_scale must be >= 0");

  const double fs =
      options.sample_rate_hz > 0 ? options.sample_rate_hz : radar.chirp_bandwidth_hz;
  if (fs < radar.chirp_bandwidth_hz) {
    throw std::invalid_argument("sample_rate below chirp bandwidth would alias");
  }

  const SlantGeometry slant = slant_geometry(scene.geometry);
  const double dwell = dwell_time(radar, scene.geometry);
  const std::size_t num_pulses =
      static_cast<std::size_t>(std::llround(dwell * radar.prf_hz));
  if (num_pulses < 2) throw std::invalid_argument("dwell covers fewer than two pulses");

  RawEchoSet echo;
  echo.radar = radar;
  echo.geometry = scene.geometry;
  echo.truth = scene;
  echo.sample_rate_hz = fs;
  echo.num_pulses = num_pulses;
  echo.pulse_times_s.resize(num_pulses);
  for (std::size_t i = 0; i < num_pulses; ++i) {
    echo.pulse_times_s[i] = (static_cast<double>(i) - 0.5 * (num_pulses - 1)) / radar.prf_hz;
  }

  // Build the scatterer list: point targets, then one frozen speckle
  // scatterer per clutter cell.
  std::vector<Scatterer> scatterers;
  scatterers.reserve(scene.targets.size());
  for (const PointTarget& tgt : scene.targets) {
    Scatterer s;
    s.x_m = tgt.x_m;
    s.y_m = tgt.y_m;
    s.r0_m = slant.r0(tgt.y_m);
    s.aperture_m = s.r0_m * radar.wavelength_m / radar.antenna_length_m;
    s.schedule = &tgt.schedule;
    s.rcs_on = tgt.rcs_on_m2;
    s.rcs_off = tgt.rcs_off_m2;
    scatterers.push_back(s);
  }
  const std::size_t num_targets = scatterers.size();

  if (scene.clutter.sigma0 > 0.0) {
    const long ncx = std::max(1L, std::lround(scene.extent_azimuth_m /
                                              scene.clutter.cell_azimuth_m));
    const long ncy = std::max(1L, std::lround(scene.extent_ground_range_m /
                                              scene.clutter.cell_ground_range_m));
    const double ax = scene.extent_azimuth_m / ncx;
    const double ay = scene.extent_ground_range_m / ncy;
    const double cell_power = scene.clutter.sigma0 * ax * ay;
    const CounterRng clutter_rng(scene.rng_seed, kClutterStream);
    scatterers.reserve(num_targets + static_cast<std::size_t>(ncx * ncy));
    for (long iy = 0; iy < ncy; ++iy) {
      for (long ix = 0; ix < ncx; ++ix) {
        Scatterer s;
        s.x_m = -0.5 * scene.extent_azimuth_m + (ix + 0.5) * ax;
        s.y_m = -0.5 * scene.extent_ground_range_m + (iy + 0.5) * ay;
        s.r0_m = slant.r0(s.y_m);
        s.aperture_m = s.r0_m * radar.wavelength_m / radar.antenna_length_m;
        s.reflect = clutter_rng.complex_normal(static_cast<std::uint64_t>(iy * ncx + ix)) *
                    std::sqrt(cell_power);
        scatterers.push_back(s);
      }
    }
  }

  // Window placement. The near edge sits a small pad before the closest
  // approach of the scene's near side; the far edge must hold the farthest
  // instantaneous range plus a full chirp.
  const double bin_m = kSpeedOfLight / (2.0 * fs);
  const double r0_near = std::min(slant.r0(-0.5 * scene.extent_ground_range_m),
                                  slant.r0(0.5 * scene.extent_ground_range_m));
  const double r0_far = std::max(slant.r0(-0.5 * scene.extent_ground_range_m),
                                 slant.r0(0.5 * scene.extent_ground_range_m));
  const double t_max = 0.5 * (num_pulses - 1) / radar.prf_hz;
  const double dx_max = radar.platform_velocity_mps * t_max + 0.5 * scene.extent_azimuth_m;
  const double r_far = std::sqrt(r0_far * r0_far + dx_max * dx_max);

  echo.range_window_start_m = std::isnan(options.range_window_start_m)
                                  ? std::max(0.0, r0_near - 16.0 * bin_m)
                                  : options.range_window_start_m;
  if (options.samples_per_pulse > 0) {
    echo.samples_per_pulse = options.samples_per_pulse;
  } else {
    const double span_s = 2.0 * (r_far - echo.range_window_start_m) / kSpeedOfLight +
                          radar.pulse_duration_s;
    const std::size_t raw = static_cast<std::size_t>(std::ceil(span_s * fs)) + 16;
    echo.samples_per_pulse = (raw + 255) / 256 * 256;  // FFT-friendly length
  }

  // Every point target must land fully inside the window on every pulse.
  const double window_end_m =
      echo.range_window_start_m +
      (echo.samples_per_pulse / fs - radar.pulse_duration_s) * kSpeedOfLight / 2.0;
  for (std::size_t i = 0; i < num_targets; ++i) {
    const Scatterer& s = scatterers[i];
    const double dx = radar.platform_velocity_mps * t_max + std::abs(s.x_m);
    const double r_worst = std::sqrt(s.r0_m * s.r0_m + dx * dx);
    if (s.r0_m < echo.range_window_start_m || r_worst > window_end_m) {
      throw std::invalid_argument("target " + std::to_string(i) +
                                  " falls outside the range window");
    }
  }

  echo.samples.assign(num_pulses * echo.samples_per_pulse, {0.0, 0.0});

  // Calibration: amplitude = sqrt(P_t G^2 lambda^2 / (4 pi)^3) * sqrt(RCS) / R^2,
  // so that per-sample echo power over the k T_sys B noise floor reproduces the
  // single-pulse radar-equation SNR.
  const double zeta_amp =
      std::sqrt(radar.transmit_power_w * radar.antenna_gain * radar.antenna_gain *
                radar.wavelength_m * radar.wavelength_m / std::pow(4.0 * kPi, 3));
  const double noise_std =
      options.noise_scale *
      std::sqrt(kBoltzmann * radar.system_noise_temp_k * radar.chirp_bandwidth_hz);
  const double window_start_delay = 2.0 * echo.range_window_start_m / kSpeedOfLight;
  const double chirp_rate = radar.chirp_bandwidth_hz / radar.pulse_duration_s;
  const long chirp_samples =
      static_cast<long>(std::ceil(radar.pulse_duration_s * fs - 1e-9));
  const double four_pi_over_lambda = 4.0 * kPi / radar.wavelength_m;

  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
  for (long ip = 0; ip < static_cast<long>(num_pulses); ++ip) {
    std::complex<double>* row = &echo.samples[ip * echo.samples_per_pulse];
    const double t = echo.pulse_times_s[ip];
    const double px = radar.platform_velocity_mps * t;

    for (const Scatterer& s : scatterers) {
      if (std::abs(px - s.x_m) > 0.5 * s.aperture_m) continue;  // outside the beam
      std::complex<double> reflect = s.reflect;
      if (s.schedule) {
        const double rcs = s.schedule->on_at(t) ? s.rcs_on : s.rcs_off;
        if (rcs <= 0.0) continue;
        reflect = std::sqrt(rcs);
      } else if (std::norm(reflect) == 0.0) {
        continue;
      }
      const double dx = px - s.x_m;
      const double r = std::sqrt(s.r0_m * s.r0_m + dx * dx);
      const std::complex<double> amp = zeta_amp * reflect / (r * r) *
                                       std::polar(1.0, -four_pi_over_lambda * r);
      add_echo(row, echo.samples_per_pulse, fs, window_start_delay, chirp_rate,
               radar.pulse_duration_s, chirp_samples, 2.0 * r / kSpeedOfLight, amp);
    }

    if (noise_std > 0.0) {
      const CounterRng noise_rng(scene.rng_seed, kNoiseStreamBase + ip);
      for (std::size_t k = 0; k < echo.samples_per_pulse; ++k) {
        row[k] += noise_rng.complex_normal(k) * noise_std;
      }
    }
  }

  return echo;
}

}  // namespace sarcomm
