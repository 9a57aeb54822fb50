#pragma once

#include <vector>

#include "polyq/term.hpp"

namespace polyq {

// Fresh-coordinate bookkeeping for fusing inside the same coordinate space:
// the abstract higher dimension becomes coordinates above the high-water mark
// of every explicit support in play.
struct Dilation {
  std::set<Coord> base_window;
  std::vector<Coord> fresh;
};

// Deterministic allocation: the smallest coordinates above the maximum
// explicit support of the inputs.
Dilation make_dilation(const std::vector<Element>& gens, size_t fresh_count);

// b = x*d_kl + y*(-d_kl).  The masks must use opposite signs: with d_kl on
// both branches b would not determine y.  Requires k != l and k, l outside
// the explicit supports of x and y.  The recovery identities reproduce x and
// y exactly when their dimension sets avoid k and l (finite-dimensional
// inputs); fuse_all and the certificate report verification per generator.
Element fuse_pair(const Element& x, const Element& y, Coord k, Coord l);

enum class Branch { first, second };

// first: c_k(b * d_kl); second: c_k(b * -d_kl).
Element recover(const Element& b, Coord k, Coord l, Branch branch);

struct FusionCertificate {
  Element b;
  Coord k = 0, l = 0;
  Element x_back, y_back;
  bool ok = false;  // both branches reproduced their inputs exactly
};

FusionCertificate fuse_with_certificate(const Element& x, const Element& y, Coord k, Coord l);

struct FuseAllResult {
  Element b;
  std::vector<Term> recovery_terms;  // over the variable "b"
  std::vector<bool> verified;        // engine-checked per generator
};

// Left fold of fuse_pair over the generators, consuming one fresh pair per
// fusion; recovery terms are the composed branch extractions.
FuseAllResult fuse_all(const std::vector<Element>& gens, const Dilation& d);

// Whether x is J-dimensional: cylindrifying over the complement of J fixes x.
bool compress_check(const Element& x, const std::set<Coord>& j);

}  // namespace polyq
