#pragma once

#include "halfspin/suites.hpp"

#include <string>
#include <vector>

namespace halfspin {

/// Parses a scenario config from JSON text. Throws ConfigError with the
/// offending field named.
ScenarioConfig config_from_json(const std::string& text);

/// Reads and parses a config file; unreadable files raise ConfigError("config").
ScenarioConfig config_from_file(const std::string& path);

std::string config_to_json(const ScenarioConfig& cfg);

// Compact single-line JSON with alphabetically ordered keys. The elapsed
// field is pinned to 0 so that identical config+seed produce byte-identical
// reports; measured timing is available in the text rendering.
std::string report_to_json(const SuiteReport& rep);

SuiteReport report_from_json(const std::string& text);

/// One human-readable line per report, with measured elapsed time.
std::string report_to_text(const SuiteReport& rep);

}  // namespace halfspin
