#pragma once

#include <vector>

#include "polyq/algebra.hpp"

namespace polyq {

// The hyperplane families.  Every representable atom lies in Pol (an
// eventually-constant coefficient sequence with nonzero tail rescales to a
// tail-1 representative of the same set), so the tag is the most specific of
// Pof < Po < Pol.  The two constants are Pol only.
enum class AtomFamily { pol, po, pof };

AtomFamily classify(const Atom& a);
const char* family_name(AtomFamily f);

bool is_po_atom(const Atom& a);
bool is_pof_atom(const Atom& a);

// a_t = [t, 1]: the all-ones hyperplane with right-hand side t.
Element pof_generator(const Rat& t);
inline Element pof_generator(long long n) { return pof_generator(Rat{n, 1}); }

// Default finite sample of the (infinite) Po family: all diagonals inside the
// window plus the planes s_i = q for integer |q| <= height.
std::vector<Element> make_po_pool(Coord window, long long height);

// Closure of X under the transpositions of the window, deduplicated
// semantically.  Elements must be supported inside the window.
std::vector<Element> s_closure(const std::vector<Element>& xs, const std::set<Coord>& window);

}  // namespace polyq
