#pragma once

#include <optional>
#include <set>

#include "polyq/element.hpp"

namespace polyq {

struct SatResult {
  bool sat = false;
  std::optional<Point> witness;  // present iff sat
};

// Decides satisfiability of a cell over the weak space and produces a
// witness.  Every witness is audited atom-by-atom before it is returned.
SatResult cell_sat(const Cell& c);

// Existential projection of the coordinates in gamma out of the cell.
// Returns nullopt only for unsatisfiable input.
std::optional<Cell> eliminate_finite(const Cell& c, const std::set<Coord>& gamma);

// Projects the tail contribution (the shared variable z = sum of the
// coordinates outside the working domain); resulting atoms have tail 0.
std::optional<Cell> eliminate_tail(const Cell& c);

// Shared worker: project the coordinates in gamma, then optionally the tail.
std::optional<Cell> eliminate(const Cell& c, const std::set<Coord>& gamma, bool also_tail);

bool is_empty(const Element& x);

struct LeqResult {
  bool holds = false;
  std::optional<Point> witness;  // a point of lhs outside rhs when !holds
};

LeqResult is_leq(const Element& x, const Element& y);

bool equal(const Element& x, const Element& y);

struct EqResult {
  bool equal = false;
  std::optional<Point> witness;  // separating point when !equal
  bool witness_in_left = false;  // which side contains the witness
};

EqResult equal_witness(const Element& x, const Element& y);

}  // namespace polyq
