#pragma once

#include <json.hpp>

#include <string>

namespace snakeword::detail {

/// Pretty-prints with two-space indentation, keeping arrays of scalars on
/// one line so edge and index lists stay readable in golden files.
std::string dump_json(const nlohmann::ordered_json& j);

}  // namespace snakeword::detail
