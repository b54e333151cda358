#pragma once

#include <string>
#include <vector>

namespace dp1 {
namespace csv {

// Writes content to a temporary file in the target directory and renames it
// into place, so readers never observe a partially written artifact.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

std::vector<std::string> split(const std::string& line, char sep);

} // namespace csv
} // namespace dp1
