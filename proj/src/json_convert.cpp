#include "json_convert.hpp"

#include <algorithm>

#include "sarcomm/errors.hpp"

namespace sarcomm {

using nlohmann::json;

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& path) {
  if (!j.is_object()) throw ConfigError(path + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return it.key() == k; });
    if (!known) throw ConfigError(path + ": unknown key '" + it.key() + "'");
  }
}

json to_json(const RadarParams& r) {
  return json{{"transmit_power_w", r.transmit_power_w},
              {"antenna_gain", r.antenna_gain},
              {"wavelength_m", r.wavelength_m},
              {"chirp_bandwidth_hz", r.chirp_bandwidth_hz},
              {"pulse_duration_s", r.pulse_duration_s},
              {"prf_hz", r.prf_hz},
              {"antenna_length_m", r.antenna_length_m},
              {"platform_velocity_mps", r.platform_velocity_mps},
              {"system_noise_temp_k", r.system_noise_temp_k}};
}

RadarParams radar_from_json(const json& j) {
  RadarParams r;
  r.transmit_power_w = j.at("transmit_power_w").get<double>();
  r.antenna_gain = j.at("antenna_gain").get<double>();
  r.wavelength_m = j.at("wavelength_m").get<double>();
  r.chirp_bandwidth_hz = j.at("chirp_bandwidth_hz").get<double>();
  r.pulse_duration_s = j.at("pulse_duration_s").get<double>();
  r.prf_hz = j.at("prf_hz").get<double>();
  r.antenna_length_m = j.at("antenna_length_m").get<double>();
  r.platform_velocity_mps = j.at("platform_velocity_mps").get<double>();
  r.system_noise_temp_k = j.at("system_noise_temp_k").get<double>();
  return r;
}

json to_json(const ImagingGeometry& g) {
  return json{{"slant_range_m", g.slant_range_m},
              {"incidence_angle_rad", g.incidence_angle_rad},
              {"scatter_area_m2", g.scatter_area_m2}};
}

ImagingGeometry geometry_from_json(const json& j) {
  ImagingGeometry g;
  g.slant_range_m = j.at("slant_range_m").get<double>();
  g.incidence_angle_rad = j.at("incidence_angle_rad").get<double>();
  g.scatter_area_m2 = j.at("scatter_area_m2").get<double>();
  return g;
}

json to_json(const ModulationSchedule& s) {
  switch (s.kind) {
    case ModulationSchedule::Kind::kStaticOn:
      return json{{"kind", "static-on"}};
    case ModulationSchedule::Kind::kStaticOff:
      return json{{"kind", "static-off"}};
    case ModulationSchedule::Kind::kSquareWave:
      return json{{"kind", "square-wave"}, {"period_s", s.period_s}, {"phase_s", s.phase_s}};
    case ModulationSchedule::Kind::kBitSequence:
      return json{{"kind", "bit-sequence"},
                  {"bits", s.bits},
                  {"symbol_duration_s", s.symbol_duration_s},
                  {"start_offset_s", s.start_offset_s}};
  }
  return json{};
}

ModulationSchedule schedule_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "static-on") {
    reject_unknown_keys(j, {"kind"}, "schedule");
    return ModulationSchedule::static_on();
  }
  if (kind == "static-off") {
    reject_unknown_keys(j, {"kind"}, "schedule");
    return ModulationSchedule::static_off();
  }
  if (kind == "square-wave") {
    reject_unknown_keys(j, {"kind", "period_s", "phase_s"}, "schedule");
    return ModulationSchedule::square_wave(j.at("period_s").get<double>(),
                                           j.value("phase_s", 0.0));
  }
  if (kind == "bit-sequence") {
    reject_unknown_keys(j, {"kind", "bits", "symbol_duration_s", "start_offset_s"}, "schedule");
    return ModulationSchedule::bit_sequence(j.at("bits").get<std::vector<std::uint8_t>>(),
                                            j.at("symbol_duration_s").get<double>(),
                                            j.value("start_offset_s", 0.0));
  }
  throw ConfigError("schedule: unknown kind '" + kind + "'");
}

json to_json(const SceneSpec& s) {
  json targets = json::array();
  for (const PointTarget& t : s.targets) {
    targets.push_back(json{{"x_m", t.x_m},
                           {"y_m", t.y_m},
                           {"rcs_on_m2", t.rcs_on_m2},
                           {"rcs_off_m2", t.rcs_off_m2},
                           {"schedule", to_json(t.schedule)}});
  }
  return json{{"geometry", to_json(s.geometry)},
              {"targets", targets},
              {"clutter",
               json{{"sigma0", s.clutter.sigma0},
                    {"cell_azimuth_m", s.clutter.cell_azimuth_m},
                    {"cell_ground_range_m", s.clutter.cell_ground_range_m}}},
              {"extent_azimuth_m", s.extent_azimuth_m},
              {"extent_ground_range_m", s.extent_ground_range_m},
              {"rng_seed", s.rng_seed}};
}

SceneSpec scene_from_json(const json& j) {
  SceneSpec s;
  s.geometry = geometry_from_json(j.at("geometry"));
  for (const json& tj : j.at("targets")) {
    PointTarget t;
    t.x_m = tj.at("x_m").get<double>();
    t.y_m = tj.at("y_m").get<double>();
    t.rcs_on_m2 = tj.at("rcs_on_m2").get<double>();
    t.rcs_off_m2 = tj.at("rcs_off_m2").get<double>();
    t.schedule = schedule_from_json(tj.at("schedule"));
    s.targets.push_back(std::move(t));
  }
  const json& cj = j.at("clutter");
  s.clutter.sigma0 = cj.at("sigma0").get<double>();
  s.clutter.cell_azimuth_m = cj.value("cell_azimuth_m", 15.0);
  s.clutter.cell_ground_range_m = cj.value("cell_ground_range_m", 6.0);
  s.extent_azimuth_m = j.at("extent_azimuth_m").get<double>();
  s.extent_ground_range_m = j.at("extent_ground_range_m").get<double>();
  s.rng_seed = j.at("rng_seed").get<std::uint64_t>();
  return s;
}

}  // namespace sarcomm
