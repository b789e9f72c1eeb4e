#pragma once

#include "mobifem/scenario.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace mobifem {

/// Thrown on malformed config files, unknown keys, or bad trace rows. The
/// message names the offending key or 1-based line number.
class ParseError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Loads a scenario config from JSON. Keys mirror the ScenarioConfig field
/// names (see config_keys()); unknown keys are rejected.
ScenarioConfig load_config(const std::filesystem::path& path);

/// JSON text for a config, stable key order.
std::string config_to_json(const ScenarioConfig& config);

void save_config(const ScenarioConfig& config, const std::filesystem::path& path);

/// Applies one "key=value" override in place. Throws ParseError on an
/// unknown key or an unparsable value.
void apply_override(ScenarioConfig& config, const std::string& key_equals_value);

/// All keys accepted by apply_override / the config file.
std::vector<std::string> config_keys();

/// Parses a mobility trace CSV with header
///   time_s,distance_m,speed_kmh,macro_available,satellite_available,at_port
/// (booleans as 0/1). Enforces strictly increasing time and positive
/// distances; errors name the offending line.
MobilityTrace load_trace(const std::filesystem::path& path);

/// Writes text to path atomically: temporary file in the same directory,
/// renamed into place on success.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace mobifem
