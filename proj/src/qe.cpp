#include "polyq/qe.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace polyq {

// The decision core works on dense rows over a finite working domain D (the
// union of the explicit supports of the cell's atoms plus any coordinates
// being eliminated) with one extra column for the tail.  An atom contributes
//
//   sum_{i in D} coeff_i * s_i  +  tail * z  =  rhs,     z = sum_{i not in D} s_i,
//
// because outside D every coordinate of the atom carries its tail value.  The
// single shared z is exact: the outside coordinates are unconstrained
// otherwise, one fresh coordinate realizes any rational z, and z = 0 realizes
// the all-inside case.  This is the entire finite-support semantics of the
// weak space and everything downstream leans on it.
//
// Disequation handling is exact only because the field is infinite: with the
// other variables fixed, a disequation excludes at most one value of the
// variable under elimination, and finitely many exclusions never exhaust the
// rationals.  Finite fields are out of scope for exactly this reason.

namespace {

struct Row {
  std::vector<Rat> coeff;  // one slot per domain coordinate, then the tail slot
  Rat rhs{0, 1};
  bool positive = true;
};

struct RowSystem {
  std::vector<Coord> domain;  // sorted working coordinates; column i <-> domain[i]
  std::vector<Row> rows;      // tail column index = domain.size()

  size_t cols() const { return domain.size() + 1; }
  size_t tail_col() const { return domain.size(); }
};

RowSystem build_rows(const Cell& c, const std::set<Coord>& extra) {
  std::set<Coord> dom = extra;
  for (const auto& l : c.lits())
    for (const auto& [i, v] : l.atom.coeffs().entries) {
      (void)v;
      dom.insert(i);
    }
  RowSystem sys;
  sys.domain.assign(dom.begin(), dom.end());
  for (const auto& l : c.lits()) {
    Row r;
    r.coeff.reserve(sys.cols());
    for (Coord i : sys.domain) r.coeff.push_back(l.atom.coeff(i));
    r.coeff.push_back(l.atom.coeffs().tail);
    r.rhs = l.atom.rhs();
    r.positive = l.positive;
    sys.rows.push_back(std::move(r));
  }
  return sys;
}

// r -= (r[col]/p[col]) * p
void combine_out(Row& r, const Row& p, size_t col) {
  if (is_zero(r.coeff[col])) return;
  Rat f = r.coeff[col] / p.coeff[col];
  for (size_t k = 0; k < r.coeff.size(); ++k) r.coeff[k] -= f * p.coeff[k];
  r.rhs -= f * p.rhs;
  r.coeff[col] = Rat{0, 1};  // kill residue exactly
}

Atom row_atom(const RowSystem& sys, const Row& r) {
  CoeffSeq c;
  c.tail = r.coeff[sys.tail_col()];
  for (size_t k = 0; k < sys.domain.size(); ++k) c.entries.emplace(sys.domain[k], r.coeff[k]);
  return make_atom(std::move(c), r.rhs);
}

// Rebuilds a cell from residual rows; nullopt when a constant row is violated.
std::optional<Cell> rows_to_cell(const RowSystem& sys) {
  std::vector<Literal> lits;
  for (const auto& r : sys.rows) {
    Atom a = row_atom(sys, r);
    lits.push_back(Literal{std::move(a), r.positive});
  }
  return make_cell(std::move(lits));
}

bool row_all_zero(const Row& r) {
  for (const auto& v : r.coeff)
    if (!is_zero(v)) return false;
  return true;
}

}  // namespace

SatResult cell_sat(const Cell& c) {
  if (c.full()) return SatResult{true, Point{}};

  RowSystem sys = build_rows(c, {});
  const size_t ncols = sys.cols();

  std::vector<Row> eqs, diseqs;
  for (auto& r : sys.rows) (r.positive ? eqs : diseqs).push_back(std::move(r));

  // Gauss-Jordan on the equations; pivot_of[col] indexes into eqs.
  std::vector<std::optional<size_t>> pivot_of(ncols);
  std::vector<bool> used(eqs.size(), false);
  for (size_t col = 0; col < ncols; ++col) {
    std::optional<size_t> pick;
    for (size_t r = 0; r < eqs.size(); ++r)
      if (!used[r] && !is_zero(eqs[r].coeff[col])) {
        pick = r;
        break;
      }
    if (!pick) continue;
    used[*pick] = true;
    pivot_of[col] = pick;
    for (size_t r = 0; r < eqs.size(); ++r)
      if (r != *pick) combine_out(eqs[r], eqs[*pick], col);
  }
  for (size_t r = 0; r < eqs.size(); ++r)
    if (!used[r]) {
      // Fully reduced leftover: 0 = rhs.
      if (!is_zero(eqs[r].rhs)) return SatResult{};
    }

  // Reduce disequations by the pivots; a disequation forced to 0 != 0 kills
  // the cell, a constant nonzero one is vacuous.
  std::vector<Row> live;
  for (auto& d : diseqs) {
    for (size_t col = 0; col < ncols; ++col)
      if (pivot_of[col]) combine_out(d, eqs[*pivot_of[col]], col);
    if (row_all_zero(d)) {
      if (is_zero(d.rhs)) return SatResult{};
      continue;
    }
    live.push_back(std::move(d));
  }

  // Assign free columns in order, avoiding the finitely many excluded values
  // of each disequation whose last free column this is.
  std::vector<Rat> value(ncols, Rat{0, 1});
  std::vector<bool> assigned(ncols, false);
  for (size_t col = 0; col < ncols; ++col) {
    if (pivot_of[col]) continue;
    std::vector<Rat> avoid;
    for (const auto& d : live) {
      if (is_zero(d.coeff[col])) continue;
      bool last = true;
      for (size_t k = col + 1; k < ncols && last; ++k)
        if (!pivot_of[k] && !is_zero(d.coeff[k])) last = false;
      if (!last) continue;
      // coeff*x + (already assigned part) = rhs is the excluded equation.
      Rat acc{0, 1};
      for (size_t k = 0; k < ncols; ++k)
        if (k != col && !pivot_of[k] && !is_zero(d.coeff[k])) acc += d.coeff[k] * value[k];
      avoid.push_back((d.rhs - acc) / d.coeff[col]);
    }
    Rat v{0, 1};
    for (long long cand = 0;; ++cand) {
      v = Rat{cand, 1};
      if (std::find(avoid.begin(), avoid.end(), v) == avoid.end()) break;
    }
    value[col] = v;
    assigned[col] = true;
  }
  for (size_t col = 0; col < ncols; ++col) {
    if (!pivot_of[col]) continue;
    const Row& p = eqs[*pivot_of[col]];
    Rat acc{0, 1};
    for (size_t k = 0; k < ncols; ++k)
      if (k != col && !is_zero(p.coeff[k])) acc += p.coeff[k] * value[k];
    value[col] = (p.rhs - acc) / p.coeff[col];
    assigned[col] = true;
  }

  std::map<Coord, Rat> entries;
  for (size_t k = 0; k < sys.domain.size(); ++k)
    if (!is_zero(value[k])) entries.emplace(sys.domain[k], value[k]);
  Rat z = value[sys.tail_col()];
  if (!is_zero(z)) {
    Coord fresh = sys.domain.empty() ? 0 : sys.domain.back() + 1;
    entries.emplace(fresh, z);
  }
  Point w = make_point(std::move(entries));

  // Witness audit: re-evaluate every literal through the independent atom
  // semantics.
  for (const auto& l : c.lits())
    if (!literal_eval(l, w))
      throw std::logic_error("cell_sat: witness failed audit on " + l.text());
  return SatResult{true, std::move(w)};
}

std::optional<Cell> eliminate(const Cell& c, const std::set<Coord>& gamma, bool also_tail) {
  if (c.full()) return c;
  RowSystem sys = build_rows(c, gamma);

  std::vector<size_t> targets;
  for (size_t k = 0; k < sys.domain.size(); ++k)
    if (gamma.count(sys.domain[k])) targets.push_back(k);
  if (also_tail) targets.push_back(sys.tail_col());

  for (size_t col : targets) {
    // Pivot choice: among the equations with a nonzero entry in this column,
    // the one whose canonical atom renders smallest — determinism for
    // reproducible canonical forms.
    std::optional<size_t> pivot;
    std::string pivot_text;
    for (size_t r = 0; r < sys.rows.size(); ++r) {
      const Row& row = sys.rows[r];
      if (!row.positive || is_zero(row.coeff[col])) continue;
      std::string t = row_atom(sys, row).text();
      if (!pivot || t < pivot_text) {
        pivot = r;
        pivot_text = std::move(t);
      }
    }
    if (pivot) {
      Row p = std::move(sys.rows[*pivot]);
      sys.rows.erase(sys.rows.begin() + static_cast<long>(*pivot));
      for (auto& r : sys.rows) combine_out(r, p, col);
    } else {
      // No equation constrains the column: each remaining disequation
      // excludes at most one value of it over the infinite field, so they
      // project away entirely.
      sys.rows.erase(std::remove_if(sys.rows.begin(), sys.rows.end(),
                                    [col](const Row& r) { return !is_zero(r.coeff[col]); }),
                     sys.rows.end());
    }
  }
  return rows_to_cell(sys);
}

std::optional<Cell> eliminate_finite(const Cell& c, const std::set<Coord>& gamma) {
  return eliminate(c, gamma, false);
}

std::optional<Cell> eliminate_tail(const Cell& c) { return eliminate(c, {}, true); }

bool is_empty(const Element& x) {
  // Normalization keeps only satisfiable cells.
  return x.no_cells();
}

LeqResult is_leq(const Element& x, const Element& y) {
  if (y.is_full() || x.no_cells()) return LeqResult{true, std::nullopt};
  for (const auto& cx : x.cells()) {
    // Residual of cx after removing y, built cell-by-cell with eager pruning;
    // the frontier stays satisfiable throughout.
    std::vector<Cell> frontier{cx};
    for (const auto& cy : y.cells()) {
      std::vector<Cell> next;
      std::set<std::string> seen;
      for (const auto& f : frontier) {
        for (const auto& l : cy.lits()) {
          std::vector<Literal> lits = f.lits();
          lits.push_back(Literal{l.atom, !l.positive});
          auto g = make_cell(std::move(lits));
          if (!g) continue;
          if (!seen.insert(g->text()).second) continue;
          if (cell_sat(*g).sat) next.push_back(std::move(*g));
        }
      }
      frontier = std::move(next);
      if (frontier.empty()) break;
    }
    if (!frontier.empty()) return LeqResult{false, cell_sat(frontier.front()).witness};
  }
  return LeqResult{true, std::nullopt};
}

bool equal(const Element& x, const Element& y) {
  if (x.text() == y.text()) return true;
  return is_leq(x, y).holds && is_leq(y, x).holds;
}

EqResult equal_witness(const Element& x, const Element& y) {
  if (x.text() == y.text()) return EqResult{true, std::nullopt, false};
  auto xy = is_leq(x, y);
  if (!xy.holds) return EqResult{false, xy.witness, true};
  auto yx = is_leq(y, x);
  if (!yx.holds) return EqResult{false, yx.witness, false};
  return EqResult{true, std::nullopt, false};
}

}  // namespace polyq
