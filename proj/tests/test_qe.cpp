#include "doctest.h"
#include "polyq/families.hpp"
#include "polyq/qe.hpp"
#include "polyq/sampling.hpp"

using namespace polyq;

namespace {

Atom plane(std::map<Coord, Rat> entries, Rat tail, Rat rhs) {
  CoeffSeq c;
  c.entries = std::move(entries);
  c.tail = tail;
  return make_atom(std::move(c), rhs);
}

Cell cell_of(std::vector<Literal> lits) {
  auto c = make_cell(std::move(lits));
  REQUIRE(c);
  return *c;
}

const Rat kOne{1, 1};
const Rat kZero{0, 1};

}  // namespace

// Oracle for the frozen example {s_0+s_1=3, s_0-s_1=1}: adding the equations
// gives 2*s_0 = 4, so s_0 = 2 and s_1 = 1 — the unique solution.
TEST_CASE("cell_sat solves a pinned system and returns the unique witness") {
  Cell c = cell_of({Literal{plane({{0, kOne}, {1, kOne}}, kZero, Rat{3, 1}), true},
                    Literal{plane({{0, kOne}, {1, Rat{-1, 1}}}, kZero, kOne), true}});
  SatResult r = cell_sat(c);
  REQUIRE(r.sat);
  CHECK(*r.witness == make_point({{0, Rat{2, 1}}, {1, Rat{1, 1}}}));
}

TEST_CASE("cell_sat detects syntactic and semantic contradictions") {
  // d_01 together with its negation never forms a cell at all.
  CHECK_FALSE(make_cell(
      {Literal{mk_diagonal(0, 1), true}, Literal{mk_diagonal(0, 1), false}}));

  // The tail variable in isolation: a_0 and a_1 demand z=0 and z=1.
  Cell c = cell_of({Literal{plane({}, kOne, kZero), true}, Literal{plane({}, kOne, kOne), true}});
  CHECK_FALSE(cell_sat(c).sat);
}

TEST_CASE("the shared tail variable is materialized on one fresh coordinate") {
  // a_5 alone: witness must land z = 5 somewhere outside the (empty) domain.
  Cell c = cell_of({Literal{plane({}, kOne, Rat{5, 1}), true}});
  SatResult r = cell_sat(c);
  REQUIRE(r.sat);
  REQUIRE(r.witness->entries.size() == 1);
  CHECK(r.witness->entries.begin()->second == Rat{5, 1});

  // a_0 is satisfied by the all-zero point.
  Cell c0 = cell_of({Literal{plane({}, kOne, kZero), true}});
  SatResult r0 = cell_sat(c0);
  REQUIRE(r0.sat);
  CHECK(r0.witness->entries.empty());
}

// Substitution oracle for the frozen example: s_0 = 1 + s_1 turns
// s_0 + s_1 = 3 into 2*s_1 = 2, i.e. s_1 = 1.
TEST_CASE("eliminate_finite pivots and substitutes") {
  Cell c = cell_of({Literal{plane({{0, kOne}, {1, kOne}}, kZero, Rat{3, 1}), true},
                    Literal{plane({{0, kOne}, {1, Rat{-1, 1}}}, kZero, kOne), true}});
  auto r = eliminate_finite(c, {0});
  REQUIRE(r);
  Cell expect = cell_of({Literal{plane({{1, kOne}}, kZero, kOne), true}});
  CHECK(*r == expect);
}

TEST_CASE("eliminating a disequation-only coordinate yields full") {
  Cell c = cell_of({Literal{plane({{0, kOne}}, kZero, Rat{5, 1}), false}});
  auto r = eliminate_finite(c, {0});
  REQUIRE(r);
  CHECK(r->full());
}

TEST_CASE("eliminating the only equation of a tail atom yields full") {
  Cell c = cell_of({Literal{plane({}, kOne, kZero), true}});  // a_0
  auto r = eliminate_finite(c, {0});
  REQUIRE(r);
  CHECK(r->full());
}

TEST_CASE("eliminate_tail") {
  // The constraint z = 0 alone projects away.
  Cell c = cell_of({Literal{plane({}, kOne, kZero), true}});
  auto r = eliminate_tail(c);
  REQUIRE(r);
  CHECK(r->full());

  // Tail-free cells are untouched.
  Cell c2 = cell_of({Literal{plane({{0, kOne}}, kZero, kOne), true},
                     Literal{mk_diagonal(0, 1), false}});
  auto r2 = eliminate_tail(c2);
  REQUIRE(r2);
  CHECK(*r2 == c2);

  // {s_0 = 1, a_0}: projecting everything except coordinate 0, then the tail,
  // leaves s_0 = 1 — the remaining coordinates absorb any deficit.
  Cell c3 = cell_of({Literal{plane({{0, kOne}}, kZero, kOne), true},
                     Literal{plane({}, kOne, kZero), true}});
  auto r3 = eliminate_tail(c3);
  REQUIRE(r3);
  Cell expect = cell_of({Literal{plane({{0, kOne}}, kZero, kOne), true}});
  CHECK(*r3 == expect);
}

TEST_CASE("is_empty and equal basics") {
  CHECK(is_empty(element_empty()));
  CHECK_FALSE(is_empty(pof_generator(0)));
  CHECK(is_empty(meet(pof_generator(0), pof_generator(1))));
  CHECK(equal(cyl(pof_generator(0), 0), element_full()));
  CHECK(equal(meet(pof_generator(0), pof_generator(1)), element_empty()));
  for (long long n = 0; n <= 10; ++n)
    CHECK(equal(substitute(pof_generator(n), make_transposition(0, 1)), pof_generator(n)));
}

TEST_CASE("equal produces separating witnesses") {
  EqResult r = equal_witness(pof_generator(0), pof_generator(1));
  REQUIRE_FALSE(r.equal);
  REQUIRE(r.witness);
  Element in = r.witness_in_left ? pof_generator(0) : pof_generator(1);
  Element out = r.witness_in_left ? pof_generator(1) : pof_generator(0);
  CHECK(element_contains(in, *r.witness));
  CHECK_FALSE(element_contains(out, *r.witness));
}

TEST_CASE("projection agrees with a brute-force grid differential") {
  Rng rng(0xd1ff);
  ElemGenOpts opts;
  opts.window = 4;
  opts.num_bound = 4;
  opts.den_bound = 4;
  opts.tail_percent = 10;
  std::vector<Rat> grid;
  for (long long n = -6; n <= 6; ++n) grid.push_back(make_rat(n, 12));
  int done = 0;
  while (done < 120) {
    auto mc = make_cell(random_literals(rng, opts));
    if (!mc) continue;
    ++done;
    Coord v = static_cast<Coord>(rng.below(4));
    auto projected = eliminate_finite(*mc, {v});
    if (!cell_sat(*mc).sat) {
      // Unsatisfiable cells only project to unsatisfiable residue.
      if (projected) CHECK_FALSE(cell_sat(*projected).sat);
      continue;
    }
    REQUIRE(projected);
    CHECK(cell_sat(*projected).sat);
    // Soundness down the grid: any grid point of the cell satisfies the
    // projection (the projected cell ignores coordinate v).
    for (const Rat& v0 : grid)
      for (const Rat& v1 : grid)
        for (const Rat& v2 : grid)
          for (const Rat& v3 : grid) {
            Point p = make_point({{0, v0}, {1, v1}, {2, v2}, {3, v3}});
            if (cell_eval(*mc, p)) CHECK(cell_eval(*projected, p));
          }
  }
}

TEST_CASE("elimination order does not matter") {
  Rng rng(0x0cde);
  ElemGenOpts opts;
  opts.window = 4;
  opts.num_bound = 4;
  opts.den_bound = 4;
  int done = 0;
  while (done < 60) {
    auto mc = make_cell(random_literals(rng, opts));
    if (!mc || !cell_sat(*mc).sat) continue;
    ++done;
    auto both = eliminate_finite(*mc, {0, 2});
    auto first = eliminate_finite(*mc, {0});
    REQUIRE(first);
    auto then = eliminate_finite(*first, {2});
    REQUIRE(both);
    REQUIRE(then);
    CHECK(equal(make_element({*both}), make_element({*then})));
  }
}

TEST_CASE("equal is an equivalence relation on samples") {
  Rng rng(0xe151);
  ElemGenOpts opts;
  opts.window = 5;
  opts.num_bound = 4;
  opts.den_bound = 3;
  std::vector<Element> xs;
  for (int t = 0; t < 1000; ++t) xs.push_back(random_element(rng, opts));
  for (const auto& x : xs) CHECK(equal(x, x));
  for (size_t t = 0; t + 1 < 300; t += 2) CHECK(equal(xs[t], xs[t + 1]) == equal(xs[t + 1], xs[t]));
  int transitive_hits = 0;
  for (size_t t = 0; t + 2 < 200; ++t) {
    if (equal(xs[t], xs[t + 1]) && equal(xs[t + 1], xs[t + 2])) {
      ++transitive_hits;
      CHECK(equal(xs[t], xs[t + 2]));
    }
  }
  // Force a few guaranteed transitive triples through join-idempotence.
  for (size_t t = 0; t < 30; ++t) {
    Element a = xs[t];
    Element b = join(a, a);
    Element c = join(b, element_empty());
    CHECK(equal(a, b));
    CHECK(equal(b, c));
    CHECK(equal(a, c));
  }
}
