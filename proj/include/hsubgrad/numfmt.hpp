#pragma once

#include <string>
#include <string_view>

namespace hsubgrad {

// Shortest decimal text that parses back to the identical double.
std::string format_double(double v);

// Strict full-string parse; returns false on any trailing garbage.
bool parse_double(std::string_view text, double& out);
bool parse_size(std::string_view text, std::size_t& out);

}  // namespace hsubgrad
