#pragma once

#include <string>

#include "rds/scenario.hpp"

namespace rds {

// Loads a scenario from a JSON configuration file. Every model constant has
// a default (the Tehran preset when no city is named); any section may be
// omitted. Throws ConfigError on unreadable files, unknown keys or invalid
// values.
Scenario load_scenario_file(const std::string& path);
Scenario load_scenario_json(const std::string& json_text);

}  // namespace rds
