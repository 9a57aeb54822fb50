#pragma once

#include <map>
#include <set>
#include <string>

#include "polyq/element.hpp"
#include "polyq/qe.hpp"

namespace polyq {

// Cylindrification scope: a finite coordinate set, or the complement of one
// (coords then holds the retained set).
struct GammaSpec {
  enum class Kind { finite, cofinite };
  Kind kind = Kind::finite;
  std::set<Coord> coords;

  friend bool operator==(const GammaSpec&, const GammaSpec&) = default;
};

inline GammaSpec gamma_finite(std::set<Coord> coords) {
  return GammaSpec{GammaSpec::Kind::finite, std::move(coords)};
}
inline GammaSpec gamma_cofinite(std::set<Coord> retained) {
  return GammaSpec{GammaSpec::Kind::cofinite, std::move(retained)};
}

std::string render_gamma(const GammaSpec& g);

// Finite transformation of coordinates: identity off the stored map.
struct Transform {
  std::map<Coord, Coord> moved;

  friend bool operator==(const Transform&, const Transform&) = default;
};

Transform make_transform(std::map<Coord, Coord> moved);  // drops identity entries
Transform make_transposition(Coord i, Coord j);
inline Coord transform_apply(const Transform& t, Coord i) {
  auto it = t.moved.find(i);
  return it == t.moved.end() ? i : it->second;
}
inline bool is_identity(const Transform& t) { return t.moved.empty(); }
bool is_transposition(const Transform& t, Coord& i, Coord& j);
std::string render_transform(const Transform& t);

// (p o t)_i = p_{t(i)}.
Point point_compose(const Point& p, const Transform& t);

// Image of a scope under a transposition (for the substitution axioms).
GammaSpec gamma_map(const GammaSpec& g, const Transform& transposition);

// Boolean operations; results are canonical elements.
Element join(const Element& x, const Element& y);
Element meet(const Element& x, const Element& y);
Element complement(const Element& x);

inline Element operator+(const Element& x, const Element& y) { return join(x, y); }
inline Element operator*(const Element& x, const Element& y) { return meet(x, y); }
inline Element operator~(const Element& x) { return complement(x); }
inline Element operator-(const Element& x, const Element& y) { return meet(x, complement(y)); }

// c_(Gamma): existential projection, distributed over cells.  In the
// cofinite case every explicit coordinate outside the retained set is
// projected, then the tail; result atoms live on the retained set with tail 0.
Element cylindrify(const Element& x, const GammaSpec& g);
inline Element cyl(const Element& x, Coord i) { return cylindrify(x, gamma_finite({i})); }

// s_tau as inverse image: pushforward of coefficients atom by atom
// (substitution is a Boolean endomorphism).
Element substitute(const Element& x, const Transform& t);
Atom substitute_atom(const Atom& a, const Transform& t);

Element diagonal(Coord i, Coord j);

// Dimension set: tail_member tells whether coordinates beyond the explicit
// window belong (behavior out there is uniform); exceptional lists the window
// coordinates whose membership differs from tail_member.
struct DimSet {
  std::set<Coord> exceptional;
  bool tail_member = false;

  friend bool operator==(const DimSet&, const DimSet&) = default;
};

DimSet dim_set(const Element& x);
std::string render_dimset(const DimSet& d);

}  // namespace polyq
