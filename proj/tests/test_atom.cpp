#include "doctest.h"
#include "polyq/atom.hpp"
#include "polyq/sampling.hpp"

using namespace polyq;

namespace {

Point pt(std::map<Coord, Rat> m) { return make_point(std::move(m)); }

Atom ones_atom(long long n) {
  CoeffSeq c;
  c.tail = Rat{1, 1};
  return make_atom(std::move(c), Rat{n, 1});
}

}  // namespace

TEST_CASE("hyperplane constructor canonicalizes the constants") {
  CHECK(mk_hyperplane(Rat{0, 1}, CoeffSeq{}).cls() == AtomClass::full);
  CHECK(mk_hyperplane(Rat{1, 1}, CoeffSeq{}).cls() == AtomClass::empty);
  // Any nonzero degenerate right-hand side lands on the one empty atom.
  CHECK(mk_hyperplane(Rat{7, 2}, CoeffSeq{}) == empty_atom());

  CoeffSeq ones;
  ones.tail = Rat{1, 1};
  Atom a5 = mk_hyperplane(Rat{5, 1}, ones);
  CHECK(a5.cls() == AtomClass::proper);
  CHECK(atom_eval(a5, pt({{0, Rat{2, 1}}, {7, Rat{3, 1}}})));
  CHECK_FALSE(atom_eval(a5, pt({{0, Rat{2, 1}}})));
}

TEST_CASE("diagonals") {
  CHECK(mk_diagonal(0, 0) == full_atom());
  Atom d = mk_diagonal(0, 1);
  CHECK(atom_eval(d, pt({{0, Rat{2, 1}}, {1, Rat{2, 1}}})));
  CHECK_FALSE(atom_eval(d, pt({{0, Rat{1, 1}}})));
  CHECK(mk_diagonal(1, 0) == mk_diagonal(0, 1));
  CHECK(d.text() == "[0 ; 0:1 1:-1 | 0]");
}

TEST_CASE("evaluation sums over the point support") {
  CoeffSeq c;
  c.entries = {{0, Rat{1, 1}}, {1, Rat{1, 1}}};
  Atom h = mk_hyperplane(Rat{3, 1}, c);
  CHECK(atom_eval(h, pt({{0, Rat{1, 1}}, {1, Rat{2, 1}}})));
  CHECK(atom_eval(ones_atom(0), pt({})));
  CHECK_FALSE(atom_eval(ones_atom(1), pt({})));
}

TEST_CASE("canonicalization picks the leading-1 representative") {
  CoeffSeq c;
  c.entries = {{0, Rat{2, 1}}, {1, Rat{2, 1}}};
  Atom doubled = mk_hyperplane(Rat{2, 1}, c);
  CoeffSeq u;
  u.entries = {{0, Rat{1, 1}}, {1, Rat{1, 1}}};
  CHECK(doubled == mk_hyperplane(Rat{1, 1}, u));

  // Explicit entries equal to the tail are pruned.
  CoeffSeq z;
  z.entries = {{0, Rat{0, 1}}};
  CHECK(mk_hyperplane(Rat{0, 1}, z) == full_atom());

  // A zero entry against a nonzero tail is information and stays.
  CoeffSeq mixed;
  mixed.entries = {{0, Rat{0, 1}}};
  mixed.tail = Rat{1, 1};
  Atom kept = mk_hyperplane(Rat{0, 1}, mixed);
  CHECK(kept.coeffs().entries.size() == 1);
}

TEST_CASE("canonicalize_atom is idempotent and evaluation-preserving on samples") {
  Rng rng(42);
  ElemGenOpts opts;
  for (int t = 0; t < 1200; ++t) {
    // Raw coefficient data, no sparsity or scaling discipline.
    CoeffSeq raw;
    unsigned entries = static_cast<unsigned>(rng.below(4));
    for (unsigned k = 0; k < entries; ++k)
      raw.entries[static_cast<Coord>(rng.below(6))] = random_rat(rng, 4, 3);
    if (rng.chance(50)) raw.tail = random_rat(rng, 2, 2);
    Rat rhs = random_rat(rng, 4, 3);

    Atom canon = make_atom(raw, rhs);
    CHECK(canonicalize_atom(canon) == canon);
    Point s = random_point(rng, 8, 6);
    // Raw semantics: the finite sum over the point's support.
    Rat sum{0, 1};
    for (const auto& [i, v] : s.entries) sum += coeff_at(raw, i) * v;
    CHECK((sum == rhs) == atom_eval(canon, s));
  }
}

TEST_CASE("proportional proper atoms canonicalize identically and agree pointwise") {
  Rng rng(43);
  ElemGenOpts opts;
  for (int t = 0; t < 300; ++t) {
    Atom a = random_atom(rng, opts);
    if (a.cls() != AtomClass::proper) continue;
    Rat lambda = random_rat(rng, 5, 3, /*allow_zero=*/false);
    CoeffSeq scaled;
    scaled.tail = a.coeffs().tail * lambda;
    for (const auto& [i, v] : a.coeffs().entries) scaled.entries.emplace(i, v * lambda);
    Atom b = make_atom(std::move(scaled), a.rhs() * lambda);
    CHECK(a == b);
    for (int k = 0; k < 5; ++k) {
      Point s = random_point(rng, 10, 6);
      CHECK(atom_eval(a, s) == atom_eval(b, s));
    }
  }
}

TEST_CASE("atom text parses back to the same atom") {
  Rng rng(44);
  ElemGenOpts opts;
  for (int t = 0; t < 200; ++t) {
    Atom a = random_atom(rng, opts);
    size_t pos = 0;
    Atom b = parse_atom(a.text(), pos);
    CHECK(pos == a.text().size());
    CHECK(a == b);
  }
}
