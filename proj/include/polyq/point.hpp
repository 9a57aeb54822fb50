#pragma once

#include <map>
#include <string>

#include "polyq/rational.hpp"

namespace polyq {

using Coord = unsigned;

// A finite-support sequence of rationals: a member of the weak space over the
// all-zero base point.  Coordinates that are not stored are 0, and no stored
// entry is 0.
struct Point {
  std::map<Coord, Rat> entries;

  friend bool operator==(const Point&, const Point&) = default;
};

Point make_point(std::map<Coord, Rat> entries);  // drops zero entries

inline Rat point_at(const Point& p, Coord i) {
  auto it = p.entries.find(i);
  return it == p.entries.end() ? Rat{0, 1} : it->second;
}

// "{0:2, 7:3}"; "{}" for the zero point.
std::string render_point(const Point& p);
Point parse_point(const std::string& text);

}  // namespace polyq
