// json_convert.hpp -- JSON (de)serialization of the domain types, used by the
// file-format metadata blocks and the scenario config loader.
#pragma once

#include <json.hpp>

#include "sarcomm/link_budget.hpp"
#include "sarcomm/scene.hpp"

namespace sarcomm {

nlohmann::json to_json(const RadarParams& radar);
RadarParams radar_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ImagingGeometry& geom);
ImagingGeometry geometry_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ModulationSchedule& sched);
ModulationSchedule schedule_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SceneSpec& scene);
SceneSpec scene_from_json(const nlohmann::json& j);

// Throws ConfigError naming the offending key when `j` contains keys outside
// `allowed`; `path` prefixes the message.
void reject_unknown_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                         const std::string& path);

}  // namespace sarcomm
