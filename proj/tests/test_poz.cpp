#include "doctest.h"
#include "polyq/poz.hpp"
#include "polyq/sampling.hpp"

using namespace polyq;

TEST_CASE("small/large verdicts on the basic elements") {
  PozVerdict d = in_poz(diagonal(0, 1));
  CHECK(d.in_poz);
  REQUIRE(d.covering.size() == 1);
  CHECK(d.covering[0] == mk_diagonal(0, 1));

  CHECK_FALSE(in_poz(complement(diagonal(0, 1))).in_poz);
  CHECK(in_poz(element_empty()).in_poz);
  CHECK_FALSE(in_poz(element_full()).in_poz);

  CHECK_THROWS_AS(in_poz(pof_generator(0)), std::invalid_argument);

  // A plane with nonzero tail and no zero coefficient sits outside Po too.
  CoeffSeq c;
  c.entries.emplace(0, Rat{2, 1});
  c.tail = Rat{1, 1};
  CHECK_THROWS_AS(in_poz(element_of_atom(make_atom(std::move(c), Rat{0, 1}))),
                  std::invalid_argument);
}

TEST_CASE("covering certificates actually cover") {
  Rng rng(0x90c0);
  auto pool = make_po_pool(4, 2);
  for (int t = 0; t < 60; ++t) {
    Element x = eval_term(random_pool_term(rng, pool, 4, 3), {});
    PozVerdict v = in_poz(x);
    if (!v.in_poz) continue;
    Element cover = element_empty();
    for (const auto& a : v.covering) cover = join(cover, element_of_atom(a));
    CHECK(is_leq(x, cover).holds);
  }
}

TEST_CASE("exactly one of x and its complement is small; the ideal respects order") {
  Rng rng(0x90c1);
  auto pool = make_po_pool(4, 2);
  for (int t = 0; t < 80; ++t) {
    Element x = eval_term(random_pool_term(rng, pool, 4, 3), {});
    CHECK(in_poz(x).in_poz != in_poz(complement(x)).in_poz);
    // Anything below a small element is small.
    Element below = meet(x, eval_term(random_pool_term(rng, pool, 3, 2), {}));
    if (in_poz(x).in_poz) CHECK(in_poz(below).in_poz);
  }
}

TEST_CASE("multiplying by a nonzero all-ones sum preserves the verdict shape") {
  Rng rng(0x90c2);
  auto pool = make_po_pool(4, 2);
  for (int t = 0; t < 60; ++t) {
    Element g = element_empty();
    size_t n = 1 + rng.below(3);
    for (size_t k = 0; k < n; ++k)
      g = join(g, pof_generator(static_cast<long long>(rng.below(8))));
    Element sigma = eval_term(random_pool_term(rng, pool, 4, 3), {});
    Element prod = meet(g, sigma);
    if (in_poz(sigma).in_poz) {
      // Every cell of g*sigma carries a positive Po literal.
      for (const auto& cell : prod.cells()) {
        bool has_po = false;
        for (const auto& l : cell.lits())
          if (l.positive && is_po_atom(l.atom)) has_po = true;
        CHECK(has_po);
      }
    } else {
      CHECK_FALSE(is_empty(prod));
      // Some cell is negative on the Po side: its positives are all-ones only.
      bool witness_cell = false;
      for (const auto& cell : prod.cells()) {
        bool pure = true;
        for (const auto& l : cell.lits())
          if (l.positive && is_po_atom(l.atom)) pure = false;
        if (pure) witness_cell = true;
      }
      CHECK(witness_cell);
    }
  }
}

TEST_CASE("decomposition examples") {
  // g = y0*(~d01) + (~y0)*d01 with y0 bound to a_0.
  Term g = t_or(t_and(t_var("y0"), t_not(t_const(diagonal(0, 1)))),
                t_and(t_not(t_var("y0")), t_const(diagonal(0, 1))));
  DecomposeResult r = decompose(g, {pof_generator(0)});
  REQUIRE(r.sigmas.size() == 2);
  CHECK(equal(r.sigmas[0], complement(diagonal(0, 1))));
  CHECK(equal(r.sigmas[1], diagonal(0, 1)));
  CHECK(r.verified);
  CHECK_FALSE(r.classes[0].in_poz);  // the on-branch is large
  CHECK(r.classes[1].in_poz);        // the off-branch is small

  // g = y0 alone.
  DecomposeResult r2 = decompose(t_var("y0"), {pof_generator(0)});
  CHECK(equal(r2.sigmas[0], element_full()));
  CHECK(equal(r2.sigmas[1], element_empty()));
  CHECK(r2.verified);

  // g without any generator occurrence.
  DecomposeResult r3 = decompose(t_const(diagonal(0, 1)), {pof_generator(0)});
  CHECK(equal(r3.sigmas[0], diagonal(0, 1)));
  CHECK(equal(r3.sigmas[1], diagonal(0, 1)));
  CHECK(r3.verified);
}

TEST_CASE("decomposition rejects bad generator lists") {
  CHECK_THROWS_AS(decompose(t_var("y0"), {diagonal(0, 1)}), std::invalid_argument);
  CHECK_THROWS_AS(decompose(t_var("y0"), {pof_generator(0), pof_generator(0)}),
                  std::invalid_argument);
}

TEST_CASE("decomposition verifies on random generator terms") {
  Rng rng(0x90c3);
  auto pool = make_po_pool(4, 2);
  for (int t = 0; t < 60; ++t) {
    size_t n = 1 + rng.below(4);
    std::vector<Element> ys;
    for (size_t i = 0; i < n; ++i) ys.push_back(pof_generator(static_cast<long long>(i)));
    Term g = random_generator_term(rng, n, pool, 4);
    DecomposeResult d = decompose(g, ys);
    CHECK(d.verified);
  }
}

TEST_CASE("a cylindrified term fails verification honestly") {
  // c_0(y0) is outside the Boolean fragment the identity covers; the engine
  // must report the mismatch rather than accept it.
  Term g = t_cyl(gamma_finite({0}), t_var("y0"));
  DecomposeResult r = decompose(g, {pof_generator(0)});
  CHECK_FALSE(r.verified);
}
