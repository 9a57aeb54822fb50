#pragma once

#include <random>

#include "polyq/closure.hpp"
#include "polyq/term.hpp"

namespace polyq {

// Deterministic sampling: same seed, same stream, on every platform (only
// mt19937_64 and explicit modular draws are used).
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(uint64_t seed) : eng(seed) {}

  uint64_t next() { return eng(); }
  // Uniform in [0, n).
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }
  bool chance(unsigned percent) { return below(100) < percent; }
};

struct ElemGenOpts {
  Coord window = 8;
  long long num_bound = 8;
  long long den_bound = 8;
  unsigned max_entries = 3;   // explicit entries per atom
  unsigned max_lits = 3;      // literals per cell
  unsigned max_cells = 3;     // cells per element
  unsigned tail_percent = 25; // chance of a nonzero coefficient tail
};

Rat random_rat(Rng& rng, long long num_bound, long long den_bound, bool allow_zero = true);
Atom random_atom(Rng& rng, const ElemGenOpts& opts);
std::vector<Literal> random_literals(Rng& rng, const ElemGenOpts& opts);
Element random_element(Rng& rng, const ElemGenOpts& opts);
Element random_nonzero_element(Rng& rng, const ElemGenOpts& opts);
Point random_point(Rng& rng, Coord window, long long bound);

// Boolean term over constants drawn from the pool; at most max_atoms distinct
// leaves, operator tree of the given depth.
Term random_pool_term(Rng& rng, const std::vector<Element>& pool, unsigned max_atoms,
                      unsigned depth);

// Boolean term whose leaves are the generator variables y0..y{n-1} or pool
// constants.
Term random_generator_term(Rng& rng, size_t n_gens, const std::vector<Element>& pool,
                           unsigned depth);

}  // namespace polyq
