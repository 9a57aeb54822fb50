#include "polyq/atom.hpp"

#include <cctype>

namespace polyq {

namespace {

std::string render(const CoeffSeq& c, const Rat& rhs) {
  std::string s = "[";
  s += render_rat(rhs);
  s += " ;";
  for (const auto& [i, v] : c.entries) {
    s += ' ';
    s += std::to_string(i);
    s += ':';
    s += render_rat(v);
  }
  s += " | ";
  s += render_rat(c.tail);
  s += ']';
  return s;
}

}  // namespace

Atom make_atom(CoeffSeq coeffs, Rat rhs) {
  // Prune entries equal to the tail first so the leading-coefficient scan
  // sees the canonical sparse form.
  for (auto it = coeffs.entries.begin(); it != coeffs.entries.end();) {
    if (it->second == coeffs.tail)
      it = coeffs.entries.erase(it);
    else
      ++it;
  }
  // Leading coefficient: smallest-index explicit nonzero, else the tail.
  Rat lead{0, 1};
  for (const auto& [i, v] : coeffs.entries) {
    (void)i;
    if (!is_zero(v)) {
      lead = v;
      break;
    }
  }
  if (is_zero(lead)) lead = coeffs.tail;

  Atom a;
  if (is_zero(lead)) {
    // All coefficients vanish: the constraint is 0 = rhs.
    a.cls_ = is_zero(rhs) ? AtomClass::full : AtomClass::empty;
    a.coeffs_ = CoeffSeq{};
    a.rhs_ = a.cls_ == AtomClass::full ? Rat{0, 1} : Rat{1, 1};
  } else {
    Rat inv = rat_inverse(lead);
    CoeffSeq scaled;
    scaled.tail = coeffs.tail * inv;
    for (const auto& [i, v] : coeffs.entries) scaled.entries.emplace(i, v * inv);
    // Scaling preserves entry==tail equalities, so pruning stays valid.
    a.cls_ = AtomClass::proper;
    a.coeffs_ = std::move(scaled);
    a.rhs_ = rhs * inv;
  }
  a.text_ = render(a.coeffs_, a.rhs_);
  return a;
}

Atom mk_hyperplane(const Rat& rhs, CoeffSeq coeffs) { return make_atom(std::move(coeffs), rhs); }

Atom mk_diagonal(Coord i, Coord j) {
  CoeffSeq c;
  if (i != j) {
    c.entries.emplace(i, Rat{1, 1});
    c.entries.emplace(j, Rat{-1, 1});
  }
  return make_atom(std::move(c), Rat{0, 1});
}

Atom full_atom() { return make_atom(CoeffSeq{}, Rat{0, 1}); }
Atom empty_atom() { return make_atom(CoeffSeq{}, Rat{1, 1}); }

bool atom_eval(const Atom& a, const Point& s) {
  Rat sum{0, 1};
  for (const auto& [i, v] : s.entries) sum += a.coeff(i) * v;
  return sum == a.rhs();
}

std::set<Coord> atom_support(const Atom& a) {
  std::set<Coord> out;
  for (const auto& [i, v] : a.coeffs().entries) {
    (void)v;
    out.insert(i);
  }
  return out;
}

namespace {
void skip_ws(const std::string& t, size_t& p) {
  while (p < t.size() && std::isspace(static_cast<unsigned char>(t[p]))) ++p;
}
}  // namespace

Atom parse_atom(const std::string& text, size_t& pos) {
  size_t p = pos;
  skip_ws(text, p);
  if (p >= text.size() || text[p] != '[') throw std::invalid_argument("atom must start with '['");
  ++p;
  skip_ws(text, p);
  Rat rhs = parse_rat(text, p);
  skip_ws(text, p);
  if (p >= text.size() || text[p] != ';') throw std::invalid_argument("expected ';' in atom");
  ++p;
  CoeffSeq coeffs;
  while (true) {
    skip_ws(text, p);
    if (p < text.size() && text[p] == '|') {
      ++p;
      break;
    }
    size_t start = p;
    unsigned long coord = 0;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
      coord = coord * 10 + (text[p] - '0');
      ++p;
    }
    if (p == start) throw std::invalid_argument("expected coordinate or '|' in atom");
    if (p >= text.size() || text[p] != ':') throw std::invalid_argument("expected ':' in atom entry");
    ++p;
    Rat v = parse_rat(text, p);
    coeffs.entries[static_cast<Coord>(coord)] = v;
  }
  skip_ws(text, p);
  coeffs.tail = parse_rat(text, p);
  skip_ws(text, p);
  if (p >= text.size() || text[p] != ']') throw std::invalid_argument("expected ']' in atom");
  ++p;
  pos = p;
  return make_atom(std::move(coeffs), rhs);
}

}  // namespace polyq
