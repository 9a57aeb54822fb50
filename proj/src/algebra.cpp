#include "polyq/algebra.hpp"

#include <algorithm>

namespace polyq {

std::string render_gamma(const GammaSpec& g) {
  std::string s = g.kind == GammaSpec::Kind::finite ? "c{" : "C{";
  bool first = true;
  for (Coord i : g.coords) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(i);
  }
  s += '}';
  return s;
}

Transform make_transform(std::map<Coord, Coord> moved) {
  for (auto it = moved.begin(); it != moved.end();) {
    if (it->first == it->second)
      it = moved.erase(it);
    else
      ++it;
  }
  return Transform{std::move(moved)};
}

Transform make_transposition(Coord i, Coord j) {
  if (i == j) return Transform{};
  return Transform{{{i, j}, {j, i}}};
}

bool is_transposition(const Transform& t, Coord& i, Coord& j) {
  if (t.moved.size() != 2) return false;
  auto a = t.moved.begin();
  auto b = std::next(a);
  if (a->second == b->first && b->second == a->first) {
    i = a->first;
    j = b->first;
    return true;
  }
  return false;
}

std::string render_transform(const Transform& t) {
  Coord i, j;
  if (is_transposition(t, i, j)) return "s[" + std::to_string(i) + "," + std::to_string(j) + "]";
  std::string s = "s{";
  bool first = true;
  for (const auto& [a, b] : t.moved) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(a);
    s += "->";
    s += std::to_string(b);
  }
  s += '}';
  return s;
}

Point point_compose(const Point& p, const Transform& t) {
  std::map<Coord, Rat> entries;
  for (const auto& [i, v] : p.entries)
    if (!t.moved.count(i)) entries[i] = v;
  for (const auto& [i, target] : t.moved) {
    Rat v = point_at(p, target);
    if (!is_zero(v)) entries[i] = v;
  }
  return make_point(std::move(entries));
}

GammaSpec gamma_map(const GammaSpec& g, const Transform& transposition) {
  std::set<Coord> mapped;
  for (Coord i : g.coords) mapped.insert(transform_apply(transposition, i));
  return GammaSpec{g.kind, std::move(mapped)};
}

Element join(const Element& x, const Element& y) {
  std::vector<Cell> cells = x.cells();
  cells.insert(cells.end(), y.cells().begin(), y.cells().end());
  return make_element(std::move(cells));
}

Element meet(const Element& x, const Element& y) {
  std::vector<Cell> cells;
  for (const auto& cx : x.cells())
    for (const auto& cy : y.cells()) {
      std::vector<Literal> lits = cx.lits();
      lits.insert(lits.end(), cy.lits().begin(), cy.lits().end());
      if (auto c = make_cell(std::move(lits))) cells.push_back(std::move(*c));
    }
  return make_element(std::move(cells));
}

Element complement(const Element& x) {
  // De Morgan fold, one cell at a time, pruning as we go.
  std::vector<Cell> frontier{*make_cell({})};
  for (const auto& cx : x.cells()) {
    std::vector<Cell> next;
    std::set<std::string> seen;
    for (const auto& f : frontier) {
      for (const auto& l : cx.lits()) {
        std::vector<Literal> lits = f.lits();
        lits.push_back(Literal{l.atom, !l.positive});
        auto g = make_cell(std::move(lits));
        if (!g) continue;
        if (!seen.insert(g->text()).second) continue;
        if (cell_sat(*g).sat) next.push_back(std::move(*g));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return make_element(std::move(frontier));
}

Element cylindrify(const Element& x, const GammaSpec& g) {
  std::vector<Cell> cells;
  for (const auto& c : x.cells()) {
    std::optional<Cell> r;
    if (g.kind == GammaSpec::Kind::finite) {
      r = eliminate(c, g.coords, false);
    } else {
      // Project every explicit coordinate outside the retained set, then the
      // tail; the residual constrains only retained coordinates.
      std::set<Coord> gone;
      for (const auto& l : c.lits())
        for (const auto& [i, v] : l.atom.coeffs().entries) {
          (void)v;
          if (!g.coords.count(i)) gone.insert(i);
        }
      r = eliminate(c, gone, true);
    }
    if (r) cells.push_back(std::move(*r));
  }
  return make_element(std::move(cells));
}

Atom substitute_atom(const Atom& a, const Transform& t) {
  if (is_identity(t)) return a;
  std::set<Coord> dom = atom_support(a);
  for (const auto& [i, j] : t.moved) {
    dom.insert(i);
    dom.insert(j);
  }
  // New coefficient at j collects every i in the working domain mapped onto
  // j; coordinates outside it are fixed and keep the tail.
  CoeffSeq out;
  out.tail = a.coeffs().tail;
  for (Coord j : dom) out.entries[j] = Rat{0, 1};
  for (Coord i : dom) {
    Coord j = transform_apply(t, i);
    out.entries[j] += a.coeff(i);
  }
  return make_atom(std::move(out), a.rhs());
}

Element substitute(const Element& x, const Transform& t) {
  if (is_identity(t)) return x;
  std::vector<Cell> cells;
  for (const auto& c : x.cells()) {
    std::vector<Literal> lits;
    for (const auto& l : c.lits()) lits.push_back(Literal{substitute_atom(l.atom, t), l.positive});
    if (auto nc = make_cell(std::move(lits))) cells.push_back(std::move(*nc));
  }
  return make_element(std::move(cells));
}

Element diagonal(Coord i, Coord j) { return element_of_atom(mk_diagonal(i, j)); }

DimSet dim_set(const Element& x) {
  std::set<Coord> window = element_support(x);
  Coord probe = window.empty() ? 0 : *window.rbegin() + 1;
  DimSet d;
  d.tail_member = !equal(cyl(x, probe), x);
  for (Coord i : window) {
    bool in_dim = !equal(cyl(x, i), x);
    if (in_dim != d.tail_member) d.exceptional.insert(i);
  }
  return d;
}

std::string render_dimset(const DimSet& d) {
  std::string coords = "{";
  bool first = true;
  for (Coord i : d.exceptional) {
    if (!first) coords += ',';
    first = false;
    coords += std::to_string(i);
  }
  coords += '}';
  return d.tail_member ? "all-but-" + coords : coords;
}

}  // namespace polyq
