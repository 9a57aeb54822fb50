#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyq/atom.hpp"

namespace polyq {

// Signed atom.  Cells never store constant atoms: a positive full or negative
// empty literal is vacuous, a positive empty or negative full literal kills
// the cell.
struct Literal {
  Atom atom;
  bool positive = true;

  std::string text() const { return positive ? atom.text() : "~" + atom.text(); }

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.positive == b.positive && a.atom == b.atom;
  }
  // Canonical cell order: by atom rendering, positive before negative.
  friend bool operator<(const Literal& a, const Literal& b) {
    if (a.atom.text() != b.atom.text()) return a.atom.text() < b.atom.text();
    return a.positive > b.positive;
  }
};

inline bool literal_eval(const Literal& l, const Point& s) {
  return atom_eval(l.atom, s) == l.positive;
}

// Conjunction of literals; the empty cell is the full set.
class Cell {
 public:
  Cell() = default;  // the full cell

  const std::vector<Literal>& lits() const { return lits_; }
  const std::string& text() const { return text_; }
  bool full() const { return lits_.empty(); }

  friend bool operator==(const Cell& a, const Cell& b) { return a.text_ == b.text_; }
  friend bool operator<(const Cell& a, const Cell& b) { return a.text_ < b.text_; }

 private:
  std::vector<Literal> lits_;
  std::string text_;

  friend std::optional<Cell> make_cell(std::vector<Literal> lits);
};

// Simplifies constant literals, sorts, deduplicates.  Returns nullopt when
// the cell is syntactically unsatisfiable (constant clash or lit & ~lit).
std::optional<Cell> make_cell(std::vector<Literal> lits);

bool cell_eval(const Cell& c, const Point& s);

// Canonical disjunction of cells; a member of the powerset algebra over the
// weak space.  Normal form (maintained by make_element): no unsatisfiable
// cell, no duplicate, no cell whose literal set contains another cell's, a
// full cell absorbs everything, cells sorted by rendering.
class Element {
 public:
  Element() : text_("0") {}  // the empty element

  const std::vector<Cell>& cells() const { return cells_; }
  const std::string& text() const { return text_; }

  bool no_cells() const { return cells_.empty(); }
  bool is_full() const { return cells_.size() == 1 && cells_[0].full(); }

  friend bool operator==(const Element& a, const Element& b) { return a.text_ == b.text_; }
  friend bool operator<(const Element& a, const Element& b) { return a.text_ < b.text_; }

 private:
  std::vector<Cell> cells_;
  std::string text_;

  friend Element make_element(std::vector<Cell> cells);
};

// Normalizing constructor: prunes semantically unsatisfiable cells, sorts,
// deduplicates, drops subsumed cells, absorbs into the full element.
Element make_element(std::vector<Cell> cells);

Element element_empty();
Element element_full();
Element element_of_atom(const Atom& a);
Element element_of_literals(std::vector<Literal> lits);

bool element_contains(const Element& e, const Point& s);

// Union of the explicit supports of all atoms.
std::set<Coord> element_support(const Element& e);

// Canonical text: "0", "1", or cells joined by " | " with literals joined by
// " & ".  This is the serialization format; deserialization lives in the
// parser.
inline const std::string& serialize(const Element& e) { return e.text(); }

}  // namespace polyq
