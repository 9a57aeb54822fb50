#include "polyq/families.hpp"

#include <stdexcept>

#include "polyq/dedup.hpp"

namespace polyq {

AtomFamily classify(const Atom& a) {
  if (a.cls() != AtomClass::proper) return AtomFamily::pol;
  const CoeffSeq& c = a.coeffs();
  if (c.entries.empty() && c.tail == Rat{1, 1}) return AtomFamily::pof;
  // Po: zero in the coefficient range.  A zero tail puts zero at cofinitely
  // many coordinates; otherwise an explicit zero entry is needed.
  if (is_zero(c.tail)) return AtomFamily::po;
  for (const auto& [i, v] : c.entries) {
    (void)i;
    if (is_zero(v)) return AtomFamily::po;
  }
  return AtomFamily::pol;
}

const char* family_name(AtomFamily f) {
  switch (f) {
    case AtomFamily::pol:
      return "Pol";
    case AtomFamily::po:
      return "Po";
    case AtomFamily::pof:
      return "Pof";
  }
  return "?";
}

bool is_po_atom(const Atom& a) {
  return a.cls() == AtomClass::proper && classify(a) == AtomFamily::po;
}

bool is_pof_atom(const Atom& a) {
  return a.cls() == AtomClass::proper && classify(a) == AtomFamily::pof;
}

Element pof_generator(const Rat& t) {
  CoeffSeq c;
  c.tail = Rat{1, 1};
  return element_of_atom(make_atom(std::move(c), t));
}

std::vector<Element> make_po_pool(Coord window, long long height) {
  std::vector<Element> pool;
  for (Coord i = 0; i < window; ++i)
    for (Coord j = i + 1; j < window; ++j) pool.push_back(diagonal(i, j));
  for (Coord i = 0; i < window; ++i)
    for (long long q = -height; q <= height; ++q) {
      CoeffSeq c;
      c.entries.emplace(i, Rat{1, 1});
      pool.push_back(element_of_atom(make_atom(std::move(c), Rat{q, 1})));
    }
  return pool;
}

std::vector<Element> s_closure(const std::vector<Element>& xs, const std::set<Coord>& window) {
  for (const auto& x : xs)
    for (Coord i : element_support(x))
      if (!window.count(i))
        throw std::invalid_argument("s_closure: support coordinate " + std::to_string(i) +
                                    " outside the window");
  std::vector<Coord> w(window.begin(), window.end());
  ElementIndex index;
  std::vector<size_t> frontier;
  for (const auto& x : xs) {
    auto [idx, fresh] = index.insert(x);
    if (fresh) frontier.push_back(idx);
  }
  while (!frontier.empty()) {
    std::vector<size_t> next;
    for (size_t idx : frontier) {
      Element cur = index.at(idx);
      for (size_t a = 0; a < w.size(); ++a)
        for (size_t b = a + 1; b < w.size(); ++b) {
          Element img = substitute(cur, make_transposition(w[a], w[b]));
          auto [nidx, fresh] = index.insert(img);
          if (fresh) next.push_back(nidx);
        }
    }
    frontier = std::move(next);
  }
  std::vector<Element> out;
  out.reserve(index.size());
  for (size_t i = 0; i < index.size(); ++i) out.push_back(index.at(i));
  return out;
}

}  // namespace polyq
