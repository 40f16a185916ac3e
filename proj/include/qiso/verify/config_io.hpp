#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qiso/podles/truncation.hpp"

namespace qiso::verify {

using ConfigError = podles::ConfigError;

/// Parses the flat TOML subset used for run and grid files:
///   key = value         strings, integers, floats, booleans, single-line arrays
///   [table]             following keys nest under "table"
///   # comment
/// Anything else (multi-line arrays, inline tables, dates, dotted keys) is
/// rejected with ConfigError naming the line.
nlohmann::json parse_toml(std::string_view text);

/// Loads a .json file as JSON and anything else as the TOML subset.
nlohmann::json load_config_file(const std::filesystem::path& path);

}  // namespace qiso::verify
