#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "polyq/dedup.hpp"
#include "polyq/families.hpp"
#include "polyq/term.hpp"

namespace polyq {

// Bounds for the sums-of-products shell G(X) = (X^S u Po)^{**}.  The Po side
// is infinite, so a finite pool stands in for it; the transposition window
// bounds the X^S side (empty = derive from the supports of X and the pool).
struct GBounds {
  unsigned product_width = 2;
  unsigned sum_width = 2;
  std::vector<Element> po_pool;
  std::set<Coord> window;
};

struct SignedProduct {
  Element value;
  Term term;
};

// All products of at most product_width signed base elements (the empty
// product included), semantically deduplicated.
std::vector<SignedProduct> g_products(const std::vector<Element>& xs, const GBounds& bounds);

// Streams sums of at most sum_width distinct products; the sink returns
// false to stop.  Emitted elements are deduplicated.
void enumerate_g(const std::vector<Element>& xs, const GBounds& bounds,
                 const std::function<bool(const Element&, const Term&)>& sink);

struct GMemberReport {
  enum class Status { found, unknown_within_bounds };
  Status status = Status::unknown_within_bounds;
  std::optional<Term> witness;  // verified sum-of-products term when found
  size_t products = 0;          // distinct products enumerated
  size_t candidates = 0;        // products below the target
};

// Exact bounded membership: target is in the bounded shell iff at most
// sum_width candidate products (those below the target) cover it.  A failed
// search is only ever reported as unknown within the given bounds.
GMemberReport g_member(const std::vector<Element>& xs, const Element& target,
                       const GBounds& bounds);

// Same decision over an already enumerated product list.
GMemberReport g_member(const std::vector<SignedProduct>& products, const Element& target,
                       unsigned sum_width);

struct SearchBounds {
  unsigned depth = 3;
  Coord window = 4;
  long long coeff_height = 8;  // skip elements with larger numerators/denominators
  size_t max_items = 4000;     // resource cap; hitting it makes the report partial
};

struct SearchOutcome {
  bool found = false;
  Term witness;  // over variables g0, g1, ... naming the candidates
  unsigned depth = 0;
};

struct SearchReport {
  std::vector<SearchOutcome> outcomes;  // one per target
  bool complete = true;                 // false iff the item cap was hit
  size_t explored = 0;
  unsigned levels_done = 0;
};

// Breadth-first closure of the candidates under complement, join, meet,
// difference, single-coordinate cylindrifications and window transpositions,
// with window diagonals available as constants.  Targets are matched
// semantically.
SearchReport generator_search(const std::vector<Element>& targets,
                              const std::vector<Element>& candidates, const SearchBounds& bounds);

}  // namespace polyq
