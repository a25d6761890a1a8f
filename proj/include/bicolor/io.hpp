#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bicolor/graph.hpp"

namespace bicolor {

// Text format "bcg", UTF-8 with LF line endings:
//   bcg 1
//   n <count>
//   e <u> <v> <R|B>     (0-based, u < v)
//   # comment
std::string to_bcg(const BicoloredGraph& g);

BicoloredGraph parse_bcg(std::string_view text, std::string_view source = "<bcg>");

BicoloredGraph load_bcg(const std::filesystem::path& path);
void save_bcg(const BicoloredGraph& g, const std::filesystem::path& path);

} // namespace bicolor
