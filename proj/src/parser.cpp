#include "polyq/parser.hpp"

#include <cctype>

#include "polyq/families.hpp"

namespace polyq {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool try_eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void eat(char c) {
    if (!try_eat(c)) throw ParseError(pos, std::string("'") + c + "'");
  }
  Rat rational() {
    skip_ws();
    try {
      return parse_rat(text, pos);
    } catch (const std::invalid_argument&) {
      throw ParseError(pos, "rational");
    }
  }
  Coord natural() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError(pos, "coordinate");
    unsigned long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    return static_cast<Coord>(v);
  }
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

Term parse_or(Cursor& cur);

std::set<Coord> parse_coord_set(Cursor& cur) {
  std::set<Coord> coords;
  cur.eat('{');
  if (!cur.try_eat('}')) {
    while (true) {
      coords.insert(cur.natural());
      if (cur.try_eat(',')) continue;
      cur.eat('}');
      break;
    }
  }
  return coords;
}

Term parse_atom_expr(Cursor& cur) {
  cur.skip_ws();
  size_t start = cur.pos;
  char c = cur.peek();
  if (c == '(') {
    cur.eat('(');
    Term t = parse_or(cur);
    cur.eat(')');
    return t;
  }
  if (c == '0' || c == '1') {
    // A constant unless it begins a longer identifier-like token.
    if (cur.pos + 1 >= cur.text.size() || !ident_char(cur.text[cur.pos + 1])) {
      ++cur.pos;
      return t_const(c == '0' ? element_empty() : element_full());
    }
    throw ParseError(cur.pos, "expression");
  }
  // Keyword forms: decide by the character after the keyword letter.
  char next = cur.pos + 1 < cur.text.size() ? cur.text[cur.pos + 1] : '\0';
  if (c == 'a' && next == '(') {
    cur.pos += 2;
    Rat q = cur.rational();
    cur.eat(')');
    return t_const(pof_generator(q));
  }
  if (c == 'd' && next == '(') {
    cur.pos += 2;
    Coord i = cur.natural();
    cur.eat(',');
    Coord j = cur.natural();
    cur.eat(')');
    return t_const(diagonal(i, j));
  }
  if (cur.text.compare(cur.pos, 5, "fuse(") == 0) {
    // Sugar: fuse(x, y, k, l) = x*d(k,l) + y*~d(k,l).
    cur.pos += 5;
    Term x = parse_or(cur);
    cur.eat(',');
    Term y = parse_or(cur);
    cur.eat(',');
    Coord k = cur.natural();
    cur.eat(',');
    Coord l = cur.natural();
    cur.eat(')');
    Term mask = t_const(diagonal(k, l));
    return t_or(t_and(std::move(x), mask), t_and(std::move(y), t_not(mask)));
  }
  if (c == 'H' && next == '(') {
    cur.pos += 2;
    Rat rhs = cur.rational();
    cur.eat(';');
    CoeffSeq coeffs;
    while (true) {
      cur.skip_ws();
      if (cur.try_eat('|')) break;
      if (cur.try_eat(',')) continue;
      Coord i = cur.natural();
      cur.eat(':');
      coeffs.entries[i] = cur.rational();
    }
    coeffs.tail = cur.rational();
    cur.eat(')');
    return t_const(element_of_atom(make_atom(std::move(coeffs), rhs)));
  }
  if ((c == 'c' || c == 'C') && next == '{') {
    ++cur.pos;
    std::set<Coord> coords = parse_coord_set(cur);
    cur.eat('(');
    Term arg = parse_or(cur);
    cur.eat(')');
    GammaSpec g = c == 'c' ? gamma_finite(std::move(coords)) : gamma_cofinite(std::move(coords));
    return t_cyl(std::move(g), std::move(arg));
  }
  if (c == 's' && next == '[') {
    cur.pos += 2;
    Coord i = cur.natural();
    cur.eat(',');
    Coord j = cur.natural();
    cur.eat(']');
    cur.eat('(');
    Term arg = parse_or(cur);
    cur.eat(')');
    return t_sub(make_transposition(i, j), std::move(arg));
  }
  if (c == 's' && next == '{') {
    cur.pos += 2;
    std::map<Coord, Coord> moved;
    cur.skip_ws();
    if (!cur.try_eat('}')) {
      while (true) {
        Coord from = cur.natural();
        cur.eat('-');
        cur.eat('>');
        Coord to = cur.natural();
        moved[from] = to;
        if (cur.try_eat(',')) continue;
        cur.eat('}');
        break;
      }
    }
    cur.eat('(');
    Term arg = parse_or(cur);
    cur.eat(')');
    return t_sub(make_transform(std::move(moved)), std::move(arg));
  }
  if (c == '[') {
    // Bare canonical atom text is accepted as a constant.
    try {
      Atom a = parse_atom(cur.text, cur.pos);
      return t_const(element_of_atom(a));
    } catch (const std::invalid_argument&) {
      throw ParseError(cur.pos, "atom");
    }
  }
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    size_t p = cur.pos;
    while (p < cur.text.size() && ident_char(cur.text[p])) ++p;
    std::string name = cur.text.substr(cur.pos, p - cur.pos);
    cur.pos = p;
    return t_var(std::move(name));
  }
  throw ParseError(start, "expression");
}

Term parse_factor(Cursor& cur) {
  if (cur.try_eat('~')) return t_not(parse_factor(cur));
  return parse_atom_expr(cur);
}

Term parse_and(Cursor& cur) {
  Term t = parse_factor(cur);
  while (true) {
    char c = cur.peek();
    if (c == '*' || c == '&') {
      ++cur.pos;
      t = t_and(std::move(t), parse_factor(cur));
    } else {
      return t;
    }
  }
}

Term parse_or(Cursor& cur) {
  Term t = parse_and(cur);
  while (true) {
    char c = cur.peek();
    if (c == '+' || c == '|') {
      ++cur.pos;
      t = t_or(std::move(t), parse_and(cur));
    } else {
      return t;
    }
  }
}

}  // namespace

Term parse_expr(const std::string& text) {
  Cursor cur{text};
  Term t = parse_or(cur);
  if (!cur.at_end()) throw ParseError(cur.pos, "end of input");
  return t;
}

Element deserialize(const std::string& text) {
  Cursor cur{text};
  cur.skip_ws();
  if (cur.peek() == '0' || cur.peek() == '1') {
    char c = cur.text[cur.pos++];
    if (!cur.at_end()) throw ParseError(cur.pos, "end of input");
    return c == '0' ? element_empty() : element_full();
  }
  std::vector<Cell> cells;
  while (true) {
    std::vector<Literal> lits;
    while (true) {
      bool positive = !cur.try_eat('~');
      cur.skip_ws();
      Atom a = [&] {
        try {
          return parse_atom(cur.text, cur.pos);
        } catch (const std::invalid_argument&) {
          throw ParseError(cur.pos, "atom");
        }
      }();
      lits.push_back(Literal{std::move(a), positive});
      if (cur.try_eat('&')) continue;
      break;
    }
    auto c = make_cell(std::move(lits));
    if (c) cells.push_back(std::move(*c));
    if (cur.try_eat('|')) continue;
    break;
  }
  if (!cur.at_end()) throw ParseError(cur.pos, "end of input");
  return make_element(std::move(cells));
}

}  // namespace polyq
