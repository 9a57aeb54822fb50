#include "polyq/point.hpp"

#include <cctype>

namespace polyq {

Point make_point(std::map<Coord, Rat> entries) {
  for (auto it = entries.begin(); it != entries.end();) {
    if (is_zero(it->second))
      it = entries.erase(it);
    else
      ++it;
  }
  return Point{std::move(entries)};
}

std::string render_point(const Point& p) {
  std::string s = "{";
  bool first = true;
  for (const auto& [i, v] : p.entries) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(i);
    s += ':';
    s += render_rat(v);
  }
  s += '}';
  return s;
}

namespace {
void skip_ws(const std::string& t, size_t& p) {
  while (p < t.size() && std::isspace(static_cast<unsigned char>(t[p]))) ++p;
}
}  // namespace

Point parse_point(const std::string& text) {
  size_t p = 0;
  skip_ws(text, p);
  if (p >= text.size() || text[p] != '{') throw std::invalid_argument("point must start with '{'");
  ++p;
  std::map<Coord, Rat> entries;
  skip_ws(text, p);
  if (p < text.size() && text[p] == '}') {
    ++p;
  } else {
    while (true) {
      skip_ws(text, p);
      size_t start = p;
      unsigned long coord = 0;
      while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
        coord = coord * 10 + (text[p] - '0');
        ++p;
      }
      if (p == start) throw std::invalid_argument("expected coordinate in point");
      skip_ws(text, p);
      if (p >= text.size() || text[p] != ':') throw std::invalid_argument("expected ':' in point");
      ++p;
      skip_ws(text, p);
      Rat v = parse_rat(text, p);
      entries[static_cast<Coord>(coord)] = v;
      skip_ws(text, p);
      if (p < text.size() && text[p] == ',') {
        ++p;
        continue;
      }
      if (p < text.size() && text[p] == '}') {
        ++p;
        break;
      }
      throw std::invalid_argument("expected ',' or '}' in point");
    }
  }
  skip_ws(text, p);
  if (p != text.size()) throw std::invalid_argument("trailing characters after point");
  return make_point(std::move(entries));
}

}  // namespace polyq
