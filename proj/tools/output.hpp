#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace scarf::cli {

using Json = nlohmann::ordered_json;

// Pretty JSON with insertion-ordered keys and every float printed with 17
// significant digits, so identical inputs give identical bytes.
std::string dump_json(const Json& value);

// Shortest representation that round-trips.
std::string format_shortest(double v);

// Comma-separated, LF-terminated rows; the first row is the header.
std::string to_csv(const std::vector<std::vector<std::string>>& rows);

}  // namespace scarf::cli
