#include "doctest.h"
#include "polyq/fusion.hpp"
#include "polyq/parser.hpp"
#include "polyq/sampling.hpp"

using namespace polyq;

namespace {

Element s_eq(Coord i, long long q) {
  CoeffSeq c;
  c.entries.emplace(i, Rat{1, 1});
  return element_of_atom(make_atom(std::move(c), Rat{q, 1}));
}

}  // namespace

TEST_CASE("fuse_pair is the masked join") {
  Element b = fuse_pair(diagonal(0, 1), element_full(), 2, 3);
  Element direct = join(meet(diagonal(0, 1), diagonal(2, 3)), complement(diagonal(2, 3)));
  CHECK(equal(b, direct));
}

TEST_CASE("fuse_pair preconditions") {
  CHECK_THROWS_AS(fuse_pair(diagonal(0, 1), element_full(), 2, 2), std::invalid_argument);
  CHECK_THROWS_WITH_AS(fuse_pair(diagonal(0, 1), element_full(), 1, 3),
                       doctest::Contains("coordinate 1"), std::invalid_argument);
  CHECK_THROWS_AS(fuse_pair(element_full(), s_eq(3, 1), 2, 3), std::invalid_argument);
}

TEST_CASE("recovery identities hold for finite-dimensional inputs") {
  Element x = diagonal(0, 1);
  SUBCASE("against the full element") {
    Element b = fuse_pair(x, element_full(), 2, 3);
    CHECK(equal(recover(b, 2, 3, Branch::first), x));
    CHECK(equal(recover(b, 2, 3, Branch::second), element_full()));
  }
  SUBCASE("against a plane") {
    Element y = s_eq(0, 1);
    Element b = fuse_pair(x, y, 2, 3);
    CHECK(equal(recover(b, 2, 3, Branch::first), x));
    CHECK(equal(recover(b, 2, 3, Branch::second), y));
  }
  SUBCASE("degenerate pair") {
    Element b = fuse_pair(element_empty(), element_empty(), 2, 3);
    CHECK(is_empty(recover(b, 2, 3, Branch::first)));
    CHECK(is_empty(recover(b, 2, 3, Branch::second)));
  }
  SUBCASE("fusing an element with itself recovers it on both branches") {
    Element b = fuse_pair(x, x, 2, 3);
    CHECK(equal(recover(b, 2, 3, Branch::first), x));
    CHECK(equal(recover(b, 2, 3, Branch::second), x));
  }
}

TEST_CASE("a weak-space-global partner is stored but not extractable") {
  // a_0 depends on every coordinate, so no in-space pair (k,l) is fresh for
  // it: the masked half is preserved exactly, while the branch extraction
  // returns the pivot-eliminated residue instead of a_0 itself.
  Element x = diagonal(0, 1);
  Element y = pof_generator(0);
  Element b = fuse_pair(x, y, 2, 3);

  CHECK(equal(meet(b, diagonal(2, 3)), meet(x, diagonal(2, 3))));
  CHECK(equal(meet(b, complement(diagonal(2, 3))), meet(y, complement(diagonal(2, 3)))));
  CHECK(equal(recover(b, 2, 3, Branch::first), x));  // the finite-dim half is fine

  Element back = recover(b, 2, 3, Branch::second);
  CHECK_FALSE(equal(back, y));
  // Hand elimination of c_2(a_0 & ~d_23): the pivot a_0 turns the
  // disequation into  sum_{i != 2} s_i + s_3 != 0.
  Element expect = complement(deserialize("[0 ; 2:0 3:1 | 1/2]"));
  CHECK(equal(back, expect));

  FusionCertificate cert = fuse_with_certificate(x, y, 2, 3);
  CHECK_FALSE(cert.ok);
  CHECK(equal(cert.x_back, x));

  // Same with the roles swapped: the masked halves are preserved either way.
  Element b2 = fuse_pair(y, x, 2, 3);
  CHECK(equal(meet(b2, diagonal(2, 3)), meet(y, diagonal(2, 3))));
  CHECK(equal(recover(b2, 2, 3, Branch::second), x));
}

TEST_CASE("fuse_all over one, two and three generators") {
  Element g0 = diagonal(0, 1);
  Element g1 = s_eq(0, 1);
  Element g2 = complement(s_eq(1, 2));

  {
    Dilation d = make_dilation({g0}, 0);
    FuseAllResult r = fuse_all({g0}, d);
    CHECK(equal(r.b, g0));
    CHECK(r.verified == std::vector<bool>{true});
  }
  {
    Dilation d = make_dilation({g0, g1}, 2);
    CHECK(d.fresh == std::vector<Coord>{2, 3});
    FuseAllResult r = fuse_all({g0, g1}, d);
    CHECK(equal(r.b, fuse_pair(g0, g1, 2, 3)));
    CHECK(r.verified == std::vector<bool>{true, true});
  }
  {
    Dilation d;
    d.fresh = {4, 5, 6, 7};
    FuseAllResult r = fuse_all({g0, g1, g2}, d);
    REQUIRE(r.verified.size() == 3);
    CHECK(r.verified == std::vector<bool>{true, true, true});
    Env env{{"b", r.b}};
    CHECK(equal(eval_term(r.recovery_terms[0], env), g0));
    CHECK(equal(eval_term(r.recovery_terms[1], env), g1));
    CHECK(equal(eval_term(r.recovery_terms[2], env), g2));
  }
  {
    Dilation d;
    d.fresh = {4, 5};
    CHECK_THROWS_WITH_AS(fuse_all({g0, g1, g2}, d), doctest::Contains("need 4"),
                         std::invalid_argument);
  }
}

TEST_CASE("a tail-sensitive generator in the middle: neighbors recover, it does not") {
  Element g0 = diagonal(0, 1);
  Element g1 = pof_generator(0);
  Element g2 = s_eq(0, 1);
  Dilation d;
  d.fresh = {4, 5, 6, 7};
  FuseAllResult r = fuse_all({g0, g1, g2}, d);
  CHECK(r.verified == std::vector<bool>{true, false, true});
}

TEST_CASE("compression membership") {
  CHECK(compress_check(diagonal(0, 1), {0, 1}));
  CHECK_FALSE(compress_check(pof_generator(0), {0}));
  CHECK(compress_check(element_full(), {}));
  CHECK(compress_check(element_empty(), {}));
  CHECK_FALSE(compress_check(diagonal(0, 1), {0}));
}

TEST_CASE("random round trips, support hygiene, compression facts") {
  Rng rng(0xf00d);
  ElemGenOpts opts;
  opts.window = 6;
  opts.tail_percent = 0;
  for (int t = 0; t < 50; ++t) {
    Element x = random_element(rng, opts);
    Element y = random_element(rng, opts);
    Element b = fuse_pair(x, y, 6, 7);
    CHECK(equal(recover(b, 6, 7, Branch::first), x));
    CHECK(equal(recover(b, 6, 7, Branch::second), y));
    for (Coord c : element_support(b)) CHECK(c <= 7);

    // Compression monotonicity: {0..5}-dimensional implies {0..6}-dimensional.
    CHECK(compress_check(x, {0, 1, 2, 3, 4, 5}));
    CHECK(compress_check(x, {0, 1, 2, 3, 4, 5, 6}));
    // Neat-reduct stability: both recoveries stay inside the original window.
    CHECK(compress_check(recover(b, 6, 7, Branch::first), {0, 1, 2, 3, 4, 5}));
    CHECK(compress_check(recover(b, 6, 7, Branch::second), {0, 1, 2, 3, 4, 5}));

    // x <= c_(G)x for any scope.
    GammaSpec g = rng.chance(50) ? gamma_finite({(Coord)rng.below(8), (Coord)rng.below(8)})
                                 : gamma_cofinite({(Coord)rng.below(8)});
    CHECK(is_leq(x, cylindrify(x, g)).holds);
  }
}
