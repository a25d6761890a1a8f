#pragma once

#include <cstdint>

namespace bicolor {

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

constexpr Color swapped(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

constexpr char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

} // namespace bicolor
