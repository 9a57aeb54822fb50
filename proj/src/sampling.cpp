#include "polyq/sampling.hpp"

namespace polyq {

Rat random_rat(Rng& rng, long long num_bound, long long den_bound, bool allow_zero) {
  while (true) {
    long long num = rng.range(-num_bound, num_bound);
    long long den = rng.range(1, den_bound);
    if (!allow_zero && num == 0) continue;
    return make_rat(num, den);
  }
}

Atom random_atom(Rng& rng, const ElemGenOpts& opts) {
  CoeffSeq c;
  unsigned entries = 1 + static_cast<unsigned>(rng.below(opts.max_entries));
  for (unsigned k = 0; k < entries; ++k) {
    Coord i = static_cast<Coord>(rng.below(opts.window));
    c.entries[i] = random_rat(rng, opts.num_bound, opts.den_bound);
  }
  if (rng.chance(opts.tail_percent)) {
    switch (rng.below(4)) {
      case 0:
        c.tail = Rat{1, 1};
        break;
      case 1:
        c.tail = Rat{-1, 1};
        break;
      case 2:
        c.tail = Rat{1, 2};
        break;
      default:
        c.tail = Rat{2, 1};
    }
  }
  Rat rhs = random_rat(rng, opts.num_bound, opts.den_bound);
  return make_atom(std::move(c), rhs);
}

std::vector<Literal> random_literals(Rng& rng, const ElemGenOpts& opts) {
  std::vector<Literal> lits;
  unsigned n = 1 + static_cast<unsigned>(rng.below(opts.max_lits));
  for (unsigned k = 0; k < n; ++k) lits.push_back(Literal{random_atom(rng, opts), rng.chance(70)});
  return lits;
}

Element random_element(Rng& rng, const ElemGenOpts& opts) {
  unsigned n = static_cast<unsigned>(rng.below(opts.max_cells + 1));
  std::vector<Cell> cells;
  for (unsigned k = 0; k < n; ++k) {
    auto c = make_cell(random_literals(rng, opts));
    if (c) cells.push_back(std::move(*c));
  }
  return make_element(std::move(cells));
}

Element random_nonzero_element(Rng& rng, const ElemGenOpts& opts) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Element e = random_element(rng, opts);
    if (!is_empty(e)) return e;
  }
  return element_of_atom(random_atom(rng, opts));
}

Point random_point(Rng& rng, Coord window, long long bound) {
  std::map<Coord, Rat> entries;
  unsigned n = static_cast<unsigned>(rng.below(4));
  for (unsigned k = 0; k < n; ++k)
    entries[static_cast<Coord>(rng.below(window))] = random_rat(rng, bound, 2);
  return make_point(std::move(entries));
}

namespace {

Term random_term_rec(Rng& rng, const std::vector<Term>& leaves, unsigned depth) {
  if (depth == 0 || rng.chance(25)) return leaves[rng.below(leaves.size())];
  switch (rng.below(3)) {
    case 0:
      return t_not(random_term_rec(rng, leaves, depth - 1));
    case 1:
      return t_and(random_term_rec(rng, leaves, depth - 1), random_term_rec(rng, leaves, depth - 1));
    default:
      return t_or(random_term_rec(rng, leaves, depth - 1), random_term_rec(rng, leaves, depth - 1));
  }
}

}  // namespace

Term random_pool_term(Rng& rng, const std::vector<Element>& pool, unsigned max_atoms,
                      unsigned depth) {
  std::vector<Term> leaves;
  unsigned n = 1 + static_cast<unsigned>(rng.below(max_atoms));
  for (unsigned k = 0; k < n; ++k) leaves.push_back(t_const(pool[rng.below(pool.size())]));
  return random_term_rec(rng, leaves, depth);
}

Term random_generator_term(Rng& rng, size_t n_gens, const std::vector<Element>& pool,
                           unsigned depth) {
  std::vector<Term> leaves;
  for (size_t i = 0; i < n_gens; ++i) leaves.push_back(t_var("y" + std::to_string(i)));
  unsigned extras = 1 + static_cast<unsigned>(rng.below(3));
  for (unsigned k = 0; k < extras; ++k) leaves.push_back(t_const(pool[rng.below(pool.size())]));
  return random_term_rec(rng, leaves, depth);
}

}  // namespace polyq
