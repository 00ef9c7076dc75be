#include "sarcomm/sweep.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "sarcomm/demod.hpp"
#include "sarcomm/errors.hpp"
#include "sarcomm/geometry.hpp"
#include "sarcomm/rng.hpp"
#include "sarcomm/simulate.hpp"
#include "sarcomm/units.hpp"

namespace sarcomm {

namespace {

constexpr std::uint64_t kBitStreamSalt = 0x5157454550ull;

struct PointSetup {
  SceneSpec scene_template;  // targets minus the per-pass bit schedule
  SynthesisOptions synth;
  RangeCompressOptions rc_options;
  GridSpec grid;
  MeasurementWindows windows;
  int m = 0;
  std::size_t per_look = 0;
  std::size_t front = 0;
  std::size_t num_pulses = 0;
  double symbol_duration_s = 0;
  double symbols_start_s = 0;
  double theoretical_ber = 0;
};

// Builds the calibrated desk scene for one (ebno, bits_per_pass) point.
PointSetup make_point(const ScenarioConfig& cfg, double ebno_db, int bits_per_pass) {
  const SweepConfig& sweep = *cfg.sweep;
  const RadarParams& radar = cfg.radar;
  const ImagingGeometry& geom = cfg.geometry;
  const double fs = radar.chirp_bandwidth_hz;

  PointSetup pt;
  pt.m = bits_per_pass;  // one sublook per symbol in the calibrated experiment

  const double dwell = dwell_time(radar, geom);
  pt.num_pulses = static_cast<std::size_t>(std::llround(dwell * radar.prf_hz));
  if (static_cast<std::size_t>(pt.m) > pt.num_pulses / 2) {
    throw ConfigError("sweep: bits_per_pass " + std::to_string(bits_per_pass) +
                      " needs more than " + std::to_string(pt.num_pulses) +
                      " pulses per pass");
  }
  pt.per_look = pt.num_pulses / pt.m;
  pt.front = (pt.num_pulses - pt.per_look * pt.m) / 2;

  // Invert the imaging chain: per-sublook on-state image SNR must be twice the
  // requested E_b/N_o (off state is zero).
  const double gamma = linear_from_db(ebno_db);
  const double chirp_len = std::ceil(radar.pulse_duration_s * fs - 1e-9);
  const double snr_single = 2.0 * gamma / (static_cast<double>(pt.per_look) * chirp_len);
  const double four_pi_cubed = std::pow(4.0 * kPi, 3);
  const double r2 = geom.slant_range_m * geom.slant_range_m;
  const double rcs_signal = snr_single * four_pi_cubed * r2 * r2 * kBoltzmann *
                            radar.system_noise_temp_k * radar.chirp_bandwidth_hz /
                            (radar.transmit_power_w * radar.antenna_gain * radar.antenna_gain *
                             radar.wavelength_m * radar.wavelength_m);
  const double rcs_reference = rcs_signal * linear_from_db(sweep.reference_power_ratio_db);
  const double rcs_filler = rcs_reference * linear_from_db(sweep.denominator_boost_db);

  // Grid spacing on the impulse-response nulls: azimuth null of a per-look
  // Dirichlet sum, slant-range null of the compressed chirp projected to
  // ground. Windows then collect negligible leakage from their neighbours.
  const double block_time = pt.per_look / radar.prf_hz;
  const double dx = radar.wavelength_m * geom.slant_range_m /
                    (2.0 * radar.platform_velocity_mps * block_time);
  const double sin_inc = std::sin(geom.incidence_angle_rad);
  const double dy = kSpeedOfLight / (2.0 * radar.chirp_bandwidth_hz * sin_inc);

  // The clutter window sits 96 range bins down-range of the reflector: the
  // compressed rectangular chirp has its sidelobe nulls stretched off the bin
  // grid (null k lies near k + k^2/N_R bins), so nearby windows would trade
  // static sidelobe power with the bright reference scatterers. At ~100 bins
  // the 1/k envelope makes the residual coupling negligible.
  pt.grid.dx_m = dx;
  pt.grid.dy_m = dy;
  pt.grid.nx = 3;
  pt.grid.ny = 112;
  pt.grid.x0_m = -dx;        // target pixel at ix = 1
  pt.grid.y0_m = -8.0 * dy;  // target pixel at iy = 8; clutter window centred on iy = 104
  pt.windows.reflector = {0, 7, 3, 3};
  pt.windows.clutter = {0, 103, 3, 3};
  const double filler_y = (104 - 8) * dy;  // ground-range of pixel row 104

  SceneSpec scene;
  scene.geometry = geom;
  scene.rng_seed = cfg.seed;
  scene.extent_azimuth_m = 2.0 * (dx + 4.0 * radar.antenna_length_m) + 100.0;
  scene.extent_ground_range_m =
      2.0 * (98.0 * dy + 4.0 * kSpeedOfLight / (2.0 * radar.chirp_bandwidth_hz * sin_inc)) +
      100.0;

  PointTarget modulator;  // bits filled per pass
  modulator.x_m = 0;
  modulator.y_m = 0;
  modulator.rcs_on_m2 = rcs_signal;
  modulator.rcs_off_m2 = 0;
  scene.targets.push_back(modulator);

  PointTarget reference;
  reference.x_m = 0;
  reference.y_m = 0;
  reference.rcs_on_m2 = rcs_reference;
  reference.rcs_off_m2 = rcs_reference;
  reference.schedule = ModulationSchedule::static_on();
  scene.targets.push_back(reference);

  // Clutter-window fillers sit on the always-illuminated centre azimuth
  // column only: a scatterer offset by a whole per-look resolution cell in
  // azimuth would drift in and out of the antenna footprint across looks and
  // make the denominator look-dependent.
  for (int j = -1; j <= 1; ++j) {
    PointTarget filler;
    filler.x_m = 0;
    filler.y_m = filler_y + j * dy;
    filler.rcs_on_m2 = rcs_filler;
    filler.rcs_off_m2 = rcs_filler;
    filler.schedule = ModulationSchedule::static_on();
    scene.targets.push_back(filler);
  }
  pt.scene_template = std::move(scene);

  // Fixed range window: the modulating target lands exactly on a coarse bin.
  const double bin = kSpeedOfLight / (2.0 * fs);
  pt.synth.sample_rate_hz = fs;
  pt.synth.range_window_start_m = geom.slant_range_m - 96.0 * bin;
  pt.synth.samples_per_pulse =
      (static_cast<std::size_t>(chirp_len) + 256 + 255) / 256 * 256;  // FFT-friendly
  pt.synth.threads = 1;

  pt.rc_options.upsample = 8;
  pt.rc_options.threads = 1;
  const SlantGeometry slant = slant_geometry(geom);
  pt.rc_options.keep_min_range_m = slant.r0(-8.5 * dy) - 8.0 * bin;
  pt.rc_options.keep_max_range_m = slant.r0(104.5 * dy) + 8.0 * bin;

  // Symbol boundaries aligned to the sublook pulse blocks.
  pt.symbol_duration_s = pt.per_look / radar.prf_hz;
  const double t_front =
      (static_cast<double>(pt.front) - 0.5 * (pt.num_pulses - 1)) / radar.prf_hz;
  pt.symbols_start_s = t_front - 0.5 / radar.prf_hz;

  pt.theoretical_ber = ook_ber(2.0 * gamma * pt.m, 0.0, pt.m);
  return pt;
}

// One chain pass with the given transmitted bits; returns the SCR series.
ScrSeries run_series(const ScenarioConfig& cfg, const PointSetup& pt,
                     std::uint64_t scene_seed, const std::vector<std::uint8_t>& tx_bits) {
  SceneSpec scene = pt.scene_template;
  scene.rng_seed = scene_seed;
  scene.targets[0].schedule =
      ModulationSchedule::bit_sequence(tx_bits, pt.symbol_duration_s, pt.symbols_start_s);
  const RawEchoSet echo = synthesize(scene, cfg.radar, pt.synth);
  const RangeCompressed rc = range_compress(echo, pt.rc_options);
  const SublookStack stack = make_sublooks(rc, pt.m, pt.grid, 1);
  return measure_scr(stack, pt.windows);
}

std::uint64_t pass_seed(const ScenarioConfig& cfg, std::uint64_t point_salt, long pass) {
  return mix64(cfg.seed + 0x9E37ull * point_salt) + static_cast<std::uint64_t>(pass + 2);
}

// Receiver training: passes with known alternating patterns measure the
// per-look decision level. The per-look midpoints are smoothed across looks
// (the level curve is a slow aperture-position effect: interpolation loss
// follows the range migration), which takes out look-dependent systematics a
// single global threshold would fold into the error rate.
struct Calibration {
  std::vector<double> level_db;  // smoothed per-look midpoint level
  double threshold_db = 0;       // mean level; decisions use flattened series
};

Calibration calibrate(const ScenarioConfig& cfg, const PointSetup& pt,
                      std::uint64_t point_salt) {
  const int cal_passes = 16;
  std::vector<double> on(pt.m, 0.0), off(pt.m, 0.0);
  for (int cal = 0; cal < cal_passes; ++cal) {
    std::vector<std::uint8_t> pattern(pt.m);
    for (int k = 0; k < pt.m; ++k) pattern[k] = (k + cal) % 2;
    const ScrSeries series =
        run_series(cfg, pt, pass_seed(cfg, point_salt, -1 - cal), pattern);
    for (int k = 0; k < pt.m; ++k) {
      (pattern[k] ? on[k] : off[k]) += series.scr_db[k];
    }
  }
  std::vector<double> mid(pt.m);
  for (int k = 0; k < pt.m; ++k) {
    mid[k] = 0.5 * (on[k] + off[k]) / (cal_passes / 2);
  }

  Calibration out;
  out.level_db.resize(pt.m);
  double mean = 0;
  const int half = 3;  // narrow smoothing keeps edge-look features while averaging noise
  for (int k = 0; k < pt.m; ++k) {
    const int lo = std::max(0, k - half);
    const int hi = std::min(pt.m - 1, k + half);
    double acc = 0;
    for (int j = lo; j <= hi; ++j) acc += mid[j];
    out.level_db[k] = acc / (hi - lo + 1);
    mean += out.level_db[k];
  }
  out.threshold_db = mean / pt.m;
  return out;
}

// One data pass: random bits, per-look-flattened series, error count.
long run_pass(const ScenarioConfig& cfg, const PointSetup& pt, const Calibration& cal,
              std::uint64_t point_salt, long pass_index, long* symbols) {
  const CounterRng bit_rng(cfg.seed ^ kBitStreamSalt, point_salt * 1000003ull +
                                                          static_cast<std::uint64_t>(pass_index));
  std::vector<std::uint8_t> tx_bits(pt.m);
  for (int k = 0; k < pt.m; ++k) tx_bits[k] = bit_rng.uniform(k) < 0.5 ? 0 : 1;

  ScrSeries series = run_series(cfg, pt, pass_seed(cfg, point_salt, pass_index), tx_bits);
  for (int k = 0; k < pt.m; ++k) {
    series.scr_db[k] -= cal.level_db[k] - cal.threshold_db;
  }
  const Decision decision = decide_bits_with_threshold(series, cal.threshold_db, SymbolMap{1});

  long errors = 0;
  for (int k = 0; k < pt.m; ++k) {
    if ((decision.bits[k] != 0) != (tx_bits[k] != 0)) ++errors;
  }
  *symbols = pt.m;
  return errors;
}

}  // namespace

std::vector<SweepPoint> run_ber_sweep(const ScenarioConfig& cfg, int threads) {
  if (!cfg.sweep) throw ConfigError("config has no sweep section");
  const SweepConfig& sweep = *cfg.sweep;
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();

  std::vector<SweepPoint> points;
  std::uint64_t point_salt = 0;
  for (double ebno_db : sweep.ebno_list_db) {
    for (int bpp : sweep.bits_per_pass_list) {
      ++point_salt;
      const PointSetup pt = make_point(cfg, ebno_db, bpp);
      const Calibration cal = calibrate(cfg, pt, point_salt);
      const long passes = (sweep.trials + bpp - 1) / bpp;

      long total_errors = 0;
      long total_symbols = 0;
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) \
    reduction(+ : total_errors, total_symbols)
      for (long pass = 0; pass < passes; ++pass) {
        long symbols = 0;
        total_errors += run_pass(cfg, pt, cal, point_salt, pass, &symbols);
        total_symbols += symbols;
      }

      SweepPoint result;
      result.ebno_db = ebno_db;
      result.bits_per_pass = bpp;
      result.num_sublooks = pt.m;
      result.empirical_ber = static_cast<double>(total_errors) / total_symbols;
      result.theoretical_ber = pt.theoretical_ber;
      result.trials = total_symbols;
      points.push_back(result);
    }
  }
  return points;
}

void write_sweep_csv(const std::string& path, const std::vector<SweepPoint>& points) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  out << "ebno_db,bits_per_pass,m,empirical_ber,theoretical_ber,trials\n";
  char row[160];
  for (const SweepPoint& p : points) {
    std::snprintf(row, sizeof(row), "%.6g,%d,%d,%.8g,%.8g,%ld\n", p.ebno_db, p.bits_per_pass,
                  p.num_sublooks, p.empirical_ber, p.theoretical_ber, p.trials);
    out << row;
  }
}

}  // namespace sarcomm
