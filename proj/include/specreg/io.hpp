#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace specreg::io {

/// Shortest-exact style: 17 significant digits, round-trips every finite double.
std::string format_double(double v);

/// Writes `content` to a temp file next to `path`, then renames it over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view content);

/// Splits a CSV line on commas (no quoting; every field emitted here is a bare token).
std::vector<std::string> split_csv(std::string_view line);

/// Strict parse of a full token as double; throws InvalidArgument otherwise.
double parse_double(std::string_view token);

}  // namespace specreg::io
