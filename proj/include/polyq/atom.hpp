#pragma once

#include <map>
#include <set>
#include <string>

#include "polyq/point.hpp"
#include "polyq/rational.hpp"

namespace polyq {

// Coefficient sequence over all coordinates: an explicit finite part plus a
// tail value carried by every coordinate not listed.  Canonical form stores no
// explicit entry equal to the tail.
struct CoeffSeq {
  std::map<Coord, Rat> entries;
  Rat tail{0, 1};

  friend bool operator==(const CoeffSeq&, const CoeffSeq&) = default;
};

inline Rat coeff_at(const CoeffSeq& c, Coord i) {
  auto it = c.entries.find(i);
  return it == c.entries.end() ? c.tail : it->second;
}

enum class AtomClass { full, empty, proper };

// One affine constraint  sum_i coeff_i * s_i = rhs  over finite-support
// points (the sum is finite because points are).  Canonical scaling: the
// leading coefficient — smallest-index explicit nonzero, else the tail — is 1,
// and explicit entries equal to the tail are pruned.  Degenerate constraints
// collapse to [0 ; | 0] (full) or [1 ; | 0] (empty).  Two proper atoms denote
// the same subset of the weak space iff their canonical forms coincide, so
// the cached rendering doubles as identity and sort key.
class Atom {
 public:
  const CoeffSeq& coeffs() const { return coeffs_; }
  const Rat& rhs() const { return rhs_; }
  AtomClass cls() const { return cls_; }
  const std::string& text() const { return text_; }

  Rat coeff(Coord i) const { return coeff_at(coeffs_, i); }

  friend bool operator==(const Atom& a, const Atom& b) { return a.text_ == b.text_; }
  friend bool operator<(const Atom& a, const Atom& b) { return a.text_ < b.text_; }

 private:
  Atom() = default;
  CoeffSeq coeffs_;
  Rat rhs_;
  AtomClass cls_ = AtomClass::full;
  std::string text_;

  friend Atom make_atom(CoeffSeq coeffs, Rat rhs);
};

// Canonicalizing constructor; accepts any coefficient data.
Atom make_atom(CoeffSeq coeffs, Rat rhs);

// [t, r] with the contract's argument order.
Atom mk_hyperplane(const Rat& rhs, CoeffSeq coeffs);

// d_ij; d_ii canonicalizes to the full atom.
Atom mk_diagonal(Coord i, Coord j);

inline Atom canonicalize_atom(const Atom& a) { return make_atom(a.coeffs(), a.rhs()); }

Atom full_atom();
Atom empty_atom();

// sum over supp(s) of coeff_i * s_i == rhs.
bool atom_eval(const Atom& a, const Point& s);

// Explicit domain of the stored coefficient map.
std::set<Coord> atom_support(const Atom& a);

// "[rhs ; i1:c1 i2:c2 ... | tail]".
inline const std::string& render_atom(const Atom& a) { return a.text(); }

// Parses the rendering above starting at pos (at the '[').
Atom parse_atom(const std::string& text, size_t& pos);

}  // namespace polyq
