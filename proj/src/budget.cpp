#include "sarcomm/budget.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "sarcomm/simulate.hpp"
#include "sarcomm/units.hpp"

namespace sarcomm {

namespace {
std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

// Point targets carry an absolute RCS; fold it through the normalized-RCS
// slot so that A_scat * sigma0 equals the target RCS.
double point_snr(const RadarParams& radar, const ImagingGeometry& geom, double rcs_m2) {
  return single_pulse_snr(radar, geom, rcs_m2 / geom.scatter_area_m2);
}
}  // namespace

BudgetReport make_budget_report(const ScenarioConfig& cfg) {
  const RadarParams& radar = cfg.radar;
  const ImagingGeometry& geom = cfg.geometry;
  const SampleCounts counts = coherent_sample_counts(radar, geom);
  const double dwell = dwell_time(radar, geom);

  std::ostringstream out;
  out << "link budget report\n"
      << "==================\n\n"
      << "radar\n"
      << "  transmit power        " << fmt("%.6g W", radar.transmit_power_w) << "\n"
      << "  antenna gain          " << fmt("%.2f dBi", db_from_linear(radar.antenna_gain))
      << "\n"
      << "  wavelength            " << fmt("%.6g m", radar.wavelength_m) << " ("
      << fmt("%.4f GHz", kSpeedOfLight / radar.wavelength_m / 1e9) << ")\n"
      << "  chirp bandwidth       " << fmt("%.6g Hz", radar.chirp_bandwidth_hz) << "\n"
      << "  pulse duration        " << fmt("%.6g s", radar.pulse_duration_s) << "\n"
      << "  prf                   " << fmt("%.6g Hz", radar.prf_hz) << "\n"
      << "  antenna length        " << fmt("%.6g m", radar.antenna_length_m) << "\n"
      << "  platform velocity     " << fmt("%.6g m/s", radar.platform_velocity_mps) << "\n"
      << "  system noise temp     " << fmt("%.6g K", radar.system_noise_temp_k) << "\n\n"
      << "geometry\n"
      << "  slant range           " << fmt("%.6g m", geom.slant_range_m) << "\n"
      << "  incidence angle       " << fmt("%.3f deg", geom.incidence_angle_rad * 180.0 / kPi)
      << "\n\n"
      << "resolution\n"
      << "  ground range          "
      << fmt("%.3f m", ground_range_resolution(radar.chirp_bandwidth_hz,
                                               geom.incidence_angle_rad))
      << "\n"
      << "  azimuth (full)        " << fmt("%.3f m", azimuth_resolution(radar.antenna_length_m))
      << "\n\n"
      << "coherent samples\n"
      << "  per pulse  N_R        " << fmt("%.2f", counts.range_real) << "  (floor "
      << counts.range << ")\n"
      << "  per pass   N_A        " << fmt("%.2f", counts.azimuth_real) << "  (floor "
      << counts.azimuth << ")\n"
      << "  dwell time            " << fmt("%.4f s", dwell) << "\n\n"
      << "throughput\n"
      << "  max bit rate          " << fmt("%.1f bps", max_bit_rate_bps(radar.prf_hz)) << "\n"
      << "  max bits per pass     " << fmt("%.1f", max_throughput_bits(counts.azimuth_real))
      << "\n";

  if (cfg.reflector) {
    const ReflectorGeometry& refl = *cfg.reflector;
    out << "\nreflector\n"
        << "  panel side            " << fmt("%.4g m", refl.panel_side_m) << "\n"
        << "  on-state RCS          "
        << fmt("%.2f dBsm", db_from_linear(refl.on_state_rcs(radar.wavelength_m))) << "\n";
    if (refl.rcs_off_m2 > 0) {
      out << "  off-state RCS         " << fmt("%.2f dBsm", db_from_linear(refl.rcs_off_m2))
          << "\n";
    }
    if (refl.undersized(radar.wavelength_m)) {
      out << "  warning: panel side below 10 wavelengths; reflector may not be detectable\n";
    }
    out << "  peak RCS vs panel side (square trihedral):\n";
    for (double ft : {2.0, 3.0, 4.0}) {
      const double d = ft * 0.3048;
      out << "    " << fmt("%.0f ft", ft) << "  "
          << fmt("%.1f dBsm", db_from_linear(rcs_max(d, radar.wavelength_m))) << "\n";
    }
  }

  const int m_cfg = cfg.processing.num_sublooks;
  bool radiometric_ok = true;
  std::ostringstream csv;
  csv << "m,delta_t_s,sublook_snr_on_db,sublook_snr_off_db,ber\n";

  if (!cfg.scene.targets.empty()) {
    out << "\ntargets\n";
    const double res_gr =
        ground_range_resolution(radar.chirp_bandwidth_hz, geom.incidence_angle_rad);
    for (std::size_t i = 0; i < cfg.scene.targets.size(); ++i) {
      const PointTarget& tgt = cfg.scene.targets[i];
      const double snr_on = point_snr(radar, geom, tgt.rcs_on_m2);
      const double img_on = image_snr(snr_on, counts.range_real, counts.azimuth_real);
      out << "  [" << i << "] at (" << fmt("%.1f", tgt.x_m) << ", " << fmt("%.1f", tgt.y_m)
          << ") m, RCS on " << fmt("%.2f dBsm", db_from_linear(tgt.rcs_on_m2)) << "\n"
          << "      single-pulse SNR  " << fmt("%.2f dB", db_from_linear(snr_on)) << "\n"
          << "      image SNR (m=1)   " << fmt("%.2f dB", db_from_linear(img_on)) << "\n";
      if (tgt.rcs_off_m2 > 0) {
        const double img_off =
            image_snr(point_snr(radar, geom, tgt.rcs_off_m2), counts.range_real,
                      counts.azimuth_real);
        out << "      image SNR off     " << fmt("%.2f dB", db_from_linear(img_off)) << "\n"
            << "      E_b/N_o at m=" << m_cfg << "     "
            << fmt("%.2f dB", db_from_linear((img_on - img_off) / (2.0 * m_cfg))) << "\n";
      }
      if (cfg.scene.clutter.sigma0 > 0) {
        // Clutter competing inside one m-sublook resolution cell.
        const double cell = res_gr * azimuth_resolution(radar.antenna_length_m, m_cfg);
        const double ratio = scr(tgt.rcs_on_m2, cfg.scene.clutter.sigma0 * cell);
        out << "      SCR (m=" << m_cfg << " cell)   " << fmt("%.2f dB", db_from_linear(ratio))
            << "\n";
      }
    }

    // Sublook trade-off table for the first target.
    const PointTarget& tgt = cfg.scene.targets.front();
    const double img_on = image_snr(point_snr(radar, geom, tgt.rcs_on_m2), counts.range_real,
                                    counts.azimuth_real);
    const double img_off =
        tgt.rcs_off_m2 > 0 ? image_snr(point_snr(radar, geom, tgt.rcs_off_m2),
                                       counts.range_real, counts.azimuth_real)
                           : 0.0;
    for (int m = 1; m <= counts.azimuth; m *= 2) {
      const SublookPlan plan = sublook_plan(counts.azimuth, m, radar.prf_hz);
      const double on_l = img_on / m;
      const double off_l = img_off / m;
      const double ber = ook_ber(img_on, img_off, m);
      char row[160];
      std::snprintf(row, sizeof(row), "%d,%.8g,%.4f,%.4f,%.8g\n", m, plan.delta_t_s,
                    db_from_linear(on_l), off_l > 0 ? db_from_linear(off_l) : -400.0, ber);
      csv << row;
      if (cfg.processing.radiometric_floor_db && m == m_cfg &&
          db_from_linear(on_l) < *cfg.processing.radiometric_floor_db) {
        radiometric_ok = false;
      }
    }
    if (!radiometric_ok) {
      out << "\nradiometric check: FAIL (sublook on-state SNR below the configured floor)\n";
    } else if (cfg.processing.radiometric_floor_db) {
      out << "\nradiometric check: ok\n";
    }
  }

  BudgetReport report;
  report.text = out.str();
  report.sublook_csv = csv.str();
  report.radiometric_ok = radiometric_ok;
  return report;
}

}  // namespace sarcomm
