#pragma once

#include <vector>

#include "polyq/families.hpp"
#include "polyq/term.hpp"

namespace polyq {

// Small/large classification inside the Boolean algebra generated by Po.
// An element is in Poz (the ideal generated by Po) iff every cell of its
// canonical form carries a positive Po literal: such a cell sits inside that
// hyperplane, while a satisfiable all-negative cell is the complement of
// finitely many hyperplanes and no finite hyperplane family can cover it over
// the infinite field.  Neg is the complementary ultrafilter.
struct PozVerdict {
  bool in_poz = false;
  std::vector<Atom> covering;  // one positive Po atom per cell when in_poz
};

// Precondition: x is built over Po atoms; anything else throws
// std::invalid_argument naming the offending atom.
PozVerdict in_poz(const Element& x);

struct DecomposeResult {
  std::vector<Element> sigmas;  // sigma_0..sigma_{n-1}, then sigma_n
  bool verified = false;        // engine-checked identity, never assumed
  std::vector<PozVerdict> classes;
};

// Coefficient decomposition of a term g over generators y0..y{n-1} bound to
// the pairwise-disjoint antichain ys: sigma_i = g[y_i -> 1, rest -> 0],
// sigma_n = g[all -> 0], and the identity
//     g = sum_i y_i*sigma_i + sigma_n * prod_i -y_i
// is decided semantically.  ys must be nonzero, pairwise disjoint,
// single-atom elements of the all-ones family.
DecomposeResult decompose(const Term& g, const std::vector<Element>& ys);

}  // namespace polyq
