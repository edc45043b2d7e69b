#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace seqforage::csv {

/// Shortest decimal text that parses back to the same double ("nan" for NaN).
std::string format(double value);

double parse_double(std::string_view text, std::string_view field);
long long parse_int(std::string_view text, std::string_view field);

std::vector<std::string_view> split(std::string_view line, char sep = ',');
std::string_view trim(std::string_view text);

/// Writes `fields` joined by commas and a newline.
void write_row(std::ostream& os, const std::vector<std::string>& fields);

}  // namespace seqforage::csv
