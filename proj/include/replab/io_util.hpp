#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace replab {

// Writes content to path via a temporary file in the same directory followed
// by a rename, so readers never observe a truncated file.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

} // namespace replab
