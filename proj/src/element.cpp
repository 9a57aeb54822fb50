#include "polyq/element.hpp"

#include <algorithm>

#include "polyq/qe.hpp"

namespace polyq {

std::optional<Cell> make_cell(std::vector<Literal> lits) {
  std::vector<Literal> kept;
  kept.reserve(lits.size());
  for (auto& l : lits) {
    switch (l.atom.cls()) {
      case AtomClass::full:
        if (!l.positive) return std::nullopt;
        continue;  // positive full literal is vacuous
      case AtomClass::empty:
        if (l.positive) return std::nullopt;
        continue;  // negative empty literal is vacuous
      case AtomClass::proper:
        kept.push_back(std::move(l));
    }
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  // lit together with ~lit: after sorting the positive one comes first.
  for (size_t i = 0; i + 1 < kept.size(); ++i)
    if (kept[i].atom == kept[i + 1].atom) return std::nullopt;

  Cell c;
  c.lits_ = std::move(kept);
  std::string t;
  for (size_t i = 0; i < c.lits_.size(); ++i) {
    if (i) t += " & ";
    t += c.lits_[i].text();
  }
  c.text_ = std::move(t);
  return c;
}

bool cell_eval(const Cell& c, const Point& s) {
  for (const auto& l : c.lits())
    if (!literal_eval(l, s)) return false;
  return true;
}

namespace {

// lits(a) ⊆ lits(b), both sorted.
bool literals_subset(const Cell& a, const Cell& b) {
  const auto& la = a.lits();
  const auto& lb = b.lits();
  size_t i = 0;
  for (const auto& l : lb) {
    if (i < la.size() && la[i] == l) ++i;
  }
  return i == la.size();
}

}  // namespace

Element make_element(std::vector<Cell> cells) {
  std::vector<Cell> kept;
  kept.reserve(cells.size());
  for (auto& c : cells) {
    if (c.full()) {
      // Full cell absorbs the whole element.
      Element e;
      e.cells_.push_back(std::move(c));
      e.text_ = "1";
      return e;
    }
    if (cell_sat(c).sat) kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  // Drop cells whose literal set strictly contains another kept cell's (the
  // contained cell denotes the larger set, so the superset cell is redundant
  // in a union).  Equal literal sets render equally and were deduplicated.
  // Quadratic, fine at the element sizes this engine handles.
  std::vector<Cell> out;
  for (size_t i = 0; i < kept.size(); ++i) {
    bool subsumed = false;
    for (size_t j = 0; j < kept.size() && !subsumed; ++j)
      if (i != j && literals_subset(kept[j], kept[i])) subsumed = true;
    if (!subsumed) out.push_back(kept[i]);
  }

  Element e;
  e.cells_ = std::move(out);
  if (e.cells_.empty()) {
    e.text_ = "0";
  } else {
    std::string t;
    for (size_t i = 0; i < e.cells_.size(); ++i) {
      if (i) t += " | ";
      t += e.cells_[i].text();
    }
    e.text_ = std::move(t);
  }
  return e;
}

Element element_empty() { return make_element({}); }

Element element_full() {
  auto c = make_cell({});
  return make_element({*c});
}

Element element_of_atom(const Atom& a) { return element_of_literals({Literal{a, true}}); }

Element element_of_literals(std::vector<Literal> lits) {
  auto c = make_cell(std::move(lits));
  if (!c) return element_empty();
  return make_element({*c});
}

bool element_contains(const Element& e, const Point& s) {
  for (const auto& c : e.cells())
    if (cell_eval(c, s)) return true;
  return false;
}

std::set<Coord> element_support(const Element& e) {
  std::set<Coord> out;
  for (const auto& c : e.cells())
    for (const auto& l : c.lits())
      for (const auto& [i, v] : l.atom.coeffs().entries) {
        (void)v;
        out.insert(i);
      }
  return out;
}

}  // namespace polyq
