#include "sarcomm/config.hpp"

#include <cmath>
#include <fstream>

#include "json_convert.hpp"
#include "sarcomm/errors.hpp"
#include "sarcomm/units.hpp"

namespace sarcomm {

using nlohmann::json;

namespace {

double require_number(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) throw ConfigError(path + ": missing key '" + key + "'");
  if (!j.at(key).is_number()) throw ConfigError(path + "." + key + ": expected a number");
  return j.at(key).get<double>();
}

RadarParams parse_radar(const json& j) {
  reject_unknown_keys(j,
                      {"transmit_power_w", "antenna_gain", "antenna_gain_db", "wavelength_m",
                       "carrier_frequency_hz", "chirp_bandwidth_hz", "pulse_duration_s",
                       "prf_hz", "antenna_length_m", "platform_velocity_mps",
                       "system_noise_temp_k"},
                      "radar");
  RadarParams r;
  r.transmit_power_w = require_number(j, "transmit_power_w", "radar");

  const bool has_gain = j.contains("antenna_gain");
  const bool has_gain_db = j.contains("antenna_gain_db");
  if (has_gain == has_gain_db) {
    throw ConfigError("radar: give exactly one of antenna_gain / antenna_gain_db");
  }
  r.antenna_gain = has_gain ? j.at("antenna_gain").get<double>()
                            : linear_from_db(j.at("antenna_gain_db").get<double>());

  const bool has_lambda = j.contains("wavelength_m");
  const bool has_carrier = j.contains("carrier_frequency_hz");
  if (has_lambda == has_carrier) {
    throw ConfigError("radar: give exactly one of wavelength_m / carrier_frequency_hz");
  }
  r.wavelength_m = has_lambda ? j.at("wavelength_m").get<double>()
                              : kSpeedOfLight / j.at("carrier_frequency_hz").get<double>();

  r.chirp_bandwidth_hz = require_number(j, "chirp_bandwidth_hz", "radar");
  r.pulse_duration_s = require_number(j, "pulse_duration_s", "radar");
  r.prf_hz = require_number(j, "prf_hz", "radar");
  r.antenna_length_m = require_number(j, "antenna_length_m", "radar");
  r.platform_velocity_mps = require_number(j, "platform_velocity_mps", "radar");
  r.system_noise_temp_k = require_number(j, "system_noise_temp_k", "radar");
  return r;
}

ImagingGeometry parse_geometry(const json& j) {
  reject_unknown_keys(
      j, {"slant_range_m", "incidence_angle_deg", "incidence_angle_rad", "scatter_area_m2"},
      "geometry");
  ImagingGeometry g;
  g.slant_range_m = require_number(j, "slant_range_m", "geometry");
  const bool has_deg = j.contains("incidence_angle_deg");
  const bool has_rad = j.contains("incidence_angle_rad");
  if (has_deg == has_rad) {
    throw ConfigError("geometry: give exactly one of incidence_angle_deg / incidence_angle_rad");
  }
  g.incidence_angle_rad = has_rad ? j.at("incidence_angle_rad").get<double>()
                                  : j.at("incidence_angle_deg").get<double>() * kPi / 180.0;
  g.scatter_area_m2 = require_number(j, "scatter_area_m2", "geometry");
  return g;
}

SceneSpec parse_scene(const json& j, const ImagingGeometry& geom, std::uint64_t seed) {
  reject_unknown_keys(j, {"extent_azimuth_m", "extent_ground_range_m", "targets", "clutter"},
                      "scene");
  SceneSpec s;
  s.geometry = geom;
  s.rng_seed = seed;
  s.extent_azimuth_m = require_number(j, "extent_azimuth_m", "scene");
  s.extent_ground_range_m = require_number(j, "extent_ground_range_m", "scene");
  if (j.contains("targets")) {
    if (!j.at("targets").is_array()) throw ConfigError("scene.targets: expected an array");
    int idx = 0;
    for (const json& tj : j.at("targets")) {
      const std::string path = "scene.targets[" + std::to_string(idx++) + "]";
      reject_unknown_keys(tj, {"x_m", "y_m", "rcs_on_m2", "rcs_off_m2", "schedule"}, path);
      PointTarget t;
      t.x_m = require_number(tj, "x_m", path);
      t.y_m = require_number(tj, "y_m", path);
      t.rcs_on_m2 = require_number(tj, "rcs_on_m2", path);
      t.rcs_off_m2 = require_number(tj, "rcs_off_m2", path);
      if (tj.contains("schedule")) {
        try {
          t.schedule = schedule_from_json(tj.at("schedule"));
        } catch (const json::exception& e) {
          throw ConfigError(path + ".schedule: " + e.what());
        }
      }
      s.targets.push_back(std::move(t));
    }
  }
  if (j.contains("clutter")) {
    const json& cj = j.at("clutter");
    reject_unknown_keys(cj, {"sigma0", "cell_azimuth_m", "cell_ground_range_m"}, "scene.clutter");
    s.clutter.sigma0 = require_number(cj, "sigma0", "scene.clutter");
    if (cj.contains("cell_azimuth_m")) s.clutter.cell_azimuth_m = cj.at("cell_azimuth_m");
    if (cj.contains("cell_ground_range_m")) {
      s.clutter.cell_ground_range_m = cj.at("cell_ground_range_m");
    }
  }
  return s;
}

GridSpec parse_grid(const json& j) {
  reject_unknown_keys(j, {"x0_m", "y0_m", "dx_m", "dy_m", "nx", "ny"}, "processing.grid");
  GridSpec g;
  g.x0_m = require_number(j, "x0_m", "processing.grid");
  g.y0_m = require_number(j, "y0_m", "processing.grid");
  g.dx_m = require_number(j, "dx_m", "processing.grid");
  g.dy_m = require_number(j, "dy_m", "processing.grid");
  g.nx = j.at("nx").get<int>();
  g.ny = j.at("ny").get<int>();
  if (g.nx < 1 || g.ny < 1 || !(g.dx_m > 0) || !(g.dy_m > 0)) {
    throw ConfigError("processing.grid: nx/ny must be >= 1 and spacings positive");
  }
  return g;
}

PixelRect parse_rect(const json& j, const std::string& path) {
  reject_unknown_keys(j, {"x0_px", "y0_px", "width_px", "height_px"}, path);
  PixelRect r;
  r.x0 = j.at("x0_px").get<int>();
  r.y0 = j.at("y0_px").get<int>();
  r.width = j.at("width_px").get<int>();
  r.height = j.at("height_px").get<int>();
  return r;
}

ProcessingConfig parse_processing(const json& j, const SceneSpec& scene) {
  reject_unknown_keys(j,
                      {"num_sublooks", "sample_rate_hz", "samples_per_pulse", "range_upsample",
                       "grid", "windows", "looks_per_symbol", "flatness_floor_db",
                       "radiometric_floor_db"},
                      "processing");
  ProcessingConfig p;
  if (!j.contains("grid")) throw ConfigError("processing: missing key 'grid'");
  p.grid = parse_grid(j.at("grid"));
  p.num_sublooks = j.value("num_sublooks", 8);
  p.sample_rate_hz = j.value("sample_rate_hz", 0.0);
  p.samples_per_pulse = j.value("samples_per_pulse", std::size_t{0});
  p.range_upsample = j.value("range_upsample", 8);
  p.looks_per_symbol = j.value("looks_per_symbol", 2);
  p.flatness_floor_db = j.value("flatness_floor_db", 1.0);
  if (j.contains("radiometric_floor_db")) {
    p.radiometric_floor_db = j.at("radiometric_floor_db").get<double>();
  }
  if (p.num_sublooks < 1) throw ConfigError("processing.num_sublooks must be >= 1");
  if (p.range_upsample < 1) throw ConfigError("processing.range_upsample must be >= 1");
  if (p.looks_per_symbol < 1) throw ConfigError("processing.looks_per_symbol must be >= 1");

  if (j.contains("windows")) {
    const json& wj = j.at("windows");
    reject_unknown_keys(wj, {"reflector", "clutter"}, "processing.windows");
    p.windows.reflector = parse_rect(wj.at("reflector"), "processing.windows.reflector");
    p.windows.clutter = parse_rect(wj.at("clutter"), "processing.windows.clutter");
  } else {
    const double tx = scene.targets.empty() ? 0.0 : scene.targets.front().x_m;
    const double ty = scene.targets.empty() ? 0.0 : scene.targets.front().y_m;
    p.windows = default_windows(p.grid, tx, ty);
  }
  try {
    p.windows.validate(p.grid);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("processing.windows: ") + e.what());
  }
  return p;
}

SweepConfig parse_sweep(const json& j) {
  reject_unknown_keys(j,
                      {"ebno_list_db", "bits_per_pass_list", "trials",
                       "reference_power_ratio_db", "denominator_boost_db"},
                      "sweep");
  SweepConfig s;
  if (j.contains("ebno_list_db")) s.ebno_list_db = j.at("ebno_list_db").get<std::vector<double>>();
  if (j.contains("bits_per_pass_list")) {
    s.bits_per_pass_list = j.at("bits_per_pass_list").get<std::vector<int>>();
  }
  s.trials = j.value("trials", 10000L);
  s.reference_power_ratio_db = j.value("reference_power_ratio_db", 32.0);
  s.denominator_boost_db = j.value("denominator_boost_db", 12.0);
  if (s.ebno_list_db.empty() || s.bits_per_pass_list.empty()) {
    throw ConfigError("sweep: ebno_list_db and bits_per_pass_list must be non-empty");
  }
  if (s.trials < 1000) throw ConfigError("sweep.trials must be >= 1000");
  for (int b : s.bits_per_pass_list) {
    if (b < 2) throw ConfigError("sweep.bits_per_pass_list entries must be >= 2");
  }
  return s;
}

}  // namespace

MeasurementWindows default_windows(const GridSpec& grid, double x_m, double y_m) {
  const auto clamp = [](int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); };
  const int cx = clamp(static_cast<int>(std::lround((x_m - grid.x0_m) / grid.dx_m)), 1,
                       grid.nx - 2);
  const int cy = clamp(static_cast<int>(std::lround((y_m - grid.y0_m) / grid.dy_m)), 1,
                       grid.ny - 2);
  MeasurementWindows w;
  w.reflector = {cx - 1, cy - 1, 3, 3};
  if (grid.ny >= 16) {
    const int oy = cy + 8 <= grid.ny - 2 ? cy + 8 : cy - 8;
    w.clutter = {cx - 1, clamp(oy, 1, grid.ny - 2) - 1, 3, 3};
  } else {
    const int ox = cx + 8 <= grid.nx - 2 ? cx + 8 : cx - 8;
    w.clutter = {clamp(ox, 1, grid.nx - 2) - 1, cy - 1, 3, 3};
  }
  return w;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::exception& e) {
    throw ConfigError("config parse error: " + std::string(e.what()));
  }

  reject_unknown_keys(
      j, {"seed", "radar", "geometry", "reflector", "scene", "processing", "sweep"}, "config");
  for (const char* key : {"seed", "radar", "geometry", "scene", "processing"}) {
    if (!j.contains(key)) throw ConfigError(std::string("config: missing key '") + key + "'");
  }

  ScenarioConfig cfg;
  if (!j.at("seed").is_number_unsigned()) {
    throw ConfigError("config.seed must be an unsigned integer (seed is mandatory)");
  }
  cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.radar = parse_radar(j.at("radar"));
  cfg.geometry = parse_geometry(j.at("geometry"));
  if (j.contains("reflector")) {
    const json& rj = j.at("reflector");
    reject_unknown_keys(rj, {"panel_side_m", "rcs_on_m2", "rcs_off_m2"}, "reflector");
    ReflectorGeometry refl;
    refl.panel_side_m = require_number(rj, "panel_side_m", "reflector");
    if (rj.contains("rcs_on_m2")) refl.rcs_on_m2 = rj.at("rcs_on_m2").get<double>();
    refl.rcs_off_m2 = rj.value("rcs_off_m2", 0.0);
    cfg.reflector = refl;
  }
  cfg.scene = parse_scene(j.at("scene"), cfg.geometry, cfg.seed);
  cfg.processing = parse_processing(j.at("processing"), cfg.scene);
  if (j.contains("sweep")) cfg.sweep = parse_sweep(j.at("sweep"));

  try {
    cfg.radar.validate();
    cfg.geometry.validate();
    if (cfg.reflector) cfg.reflector->validate(cfg.radar.wavelength_m);
    cfg.scene.validate(cfg.radar);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

}  // namespace sarcomm
