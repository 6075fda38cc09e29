#pragma once

#include <json.hpp>
#include <string>

namespace smod::cli {

enum class Format { Text, Tsv, Json };

Format parse_format(const std::string& name);

// Renders a command's data; the JSON form is what round-trips byte for byte.
std::string render(const nlohmann::json& data, Format fmt);

}  // namespace smod::cli
