#pragma once

#include <string>
#include <vector>

namespace polyfeat {

/// Minimal RFC-4180 reader/writer. Fields containing commas, quotes or
/// newlines are quoted; quotes are doubled.
namespace csv {

std::string escape_field(const std::string& field);
std::string format_row(const std::vector<std::string>& fields);

/// Parses a whole document; handles quoted fields with embedded newlines.
/// Empty trailing line is ignored.
std::vector<std::vector<std::string>> parse(const std::string& text);

}  // namespace csv

/// Reads a whole file, throwing InputError when it cannot be opened.
std::string read_file(const std::string& path);

/// Writes atomically: to path + ".tmp", then renames over path.
void write_file(const std::string& path, const std::string& content);

}  // namespace polyfeat
