#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace trinet {

// Edge colors of a Tait-colored cubic graph. The order red < blue < green is
// fixed and used for every deterministic tie-break in the library.
enum class Color : std::uint8_t { Red = 0, Blue = 1, Green = 2 };

inline constexpr std::array<Color, 3> kColors{Color::Red, Color::Blue, Color::Green};

constexpr int color_index(Color c) { return static_cast<int>(c); }

constexpr char color_char(Color c) {
  switch (c) {
    case Color::Red: return 'r';
    case Color::Blue: return 'b';
    case Color::Green: return 'g';
  }
  return '?';
}

// Returns true and sets `out` for one of 'r', 'b', 'g'.
constexpr bool color_from_char(char ch, Color& out) {
  switch (ch) {
    case 'r': out = Color::Red; return true;
    case 'b': out = Color::Blue; return true;
    case 'g': out = Color::Green; return true;
    default: return false;
  }
}

inline const char* color_name(Color c) {
  switch (c) {
    case Color::Red: return "red";
    case Color::Blue: return "blue";
    case Color::Green: return "green";
  }
  return "?";
}

// A finite word over the color alphabet; drives writer movement.
using MoveWord = std::vector<Color>;

inline std::string format_word(const MoveWord& w) {
  std::string s;
  s.reserve(w.size());
  for (Color c : w) s.push_back(color_char(c));
  return s;
}

// Writer surroundings: None when the writer's neighbors are pairwise
// non-adjacent, otherwise the color of the single edge interlinking a pair.
enum class Surroundings : std::uint8_t { None = 0, Red = 1, Blue = 2, Green = 3 };

inline constexpr std::array<Surroundings, 4> kSurroundings{
    Surroundings::None, Surroundings::Red, Surroundings::Blue, Surroundings::Green};

constexpr int surroundings_index(Surroundings s) { return static_cast<int>(s); }

constexpr Surroundings surroundings_of(Color c) {
  return static_cast<Surroundings>(static_cast<int>(c) + 1);
}

constexpr char surroundings_char(Surroundings s) {
  switch (s) {
    case Surroundings::None: return '0';
    case Surroundings::Red: return 'r';
    case Surroundings::Blue: return 'b';
    case Surroundings::Green: return 'g';
  }
  return '?';
}

constexpr bool surroundings_from_char(char ch, Surroundings& out) {
  if (ch == '0') {
    out = Surroundings::None;
    return true;
  }
  Color c;
  if (!color_from_char(ch, c)) return false;
  out = surroundings_of(c);
  return true;
}

}  // namespace trinet
