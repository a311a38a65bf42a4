#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace agnosto {

/// Shortest decimal form that parses back to the same double bits.
std::string format_double(double value);

/// Parse a full token as a double; throws FormatError (mentioning `context`)
/// on trailing junk or empty input.
double parse_double_strict(const std::string& token, const std::string& context);

/// Parse a full token as a signed integer; throws FormatError on junk.
long long parse_int_strict(const std::string& token, const std::string& context);

/// Parse a full token as an unsigned integer; throws FormatError on junk.
std::uint64_t parse_uint_strict(const std::string& token, const std::string& context);

std::vector<std::string> split(const std::string& line, char delim);

std::string trim(const std::string& s);

/// Whole-file read; throws std::runtime_error when the file cannot be opened.
std::string read_file(const std::string& path);

/// Atomic-enough whole-file write; throws std::runtime_error on failure.
void write_file(const std::string& path, const std::string& contents);

}  // namespace agnosto
