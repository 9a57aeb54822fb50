#include <sstream>

#include "doctest.h"
#include "polyq/parser.hpp"
#include "polyq/sampling.hpp"
#include "polyq/session.hpp"

using namespace polyq;

TEST_CASE("expression parsing examples") {
  Term t = parse_expr("c{0}(a(0) & d(0,1))");
  const auto* cy = std::get_if<TermNode::Cyl>(&t->node);
  REQUIRE(cy);
  CHECK(cy->gamma == gamma_finite({0}));
  CHECK(std::get_if<TermNode::And>(&cy->arg->node));

  Term neg = parse_expr("~1");
  REQUIRE(std::get_if<TermNode::Not>(&neg->node));
  CHECK(equal(eval_term(neg, {}), element_empty()));

  Term sub = parse_expr("s[0,1](H(3; 0:1 1:2 | 0))");
  const auto* su = std::get_if<TermNode::Sub>(&sub->node);
  REQUIRE(su);
  CHECK(su->tau == make_transposition(0, 1));

  CHECK(equal(eval_term(parse_expr("s{0->1}(d(0,1))"), {}), element_full()));
  CHECK(equal(eval_term(parse_expr("fuse(d(0,1), 1, 2, 3)"), {}),
              join(meet(diagonal(0, 1), diagonal(2, 3)), complement(diagonal(2, 3)))));
}

TEST_CASE("parse errors carry a byte offset") {
  try {
    parse_expr("a(0) &");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.pos >= 6);
  }
  CHECK_THROWS_AS(parse_expr("c{0}(a(0)"), ParseError);
  CHECK_THROWS_AS(parse_expr(""), ParseError);
}

TEST_CASE("evaluation examples") {
  CHECK(is_empty(eval_term(parse_expr("a(0)*a(1)"), {})));
  CHECK(equal(eval_term(parse_expr("c{0}(d(0,1))"), {}), element_full()));
  CHECK(equal(eval_term(parse_expr("C{0}(a(0) & H(1; 0:1 | 0))"), {}),
              eval_term(parse_expr("H(1; 0:1 | 0)"), {})));
  CHECK_THROWS_AS(eval_term(parse_expr("nosuch"), {}), std::invalid_argument);
}

TEST_CASE("serialization format and round trips") {
  CHECK(serialize(pof_generator(0)) == "[0 ; | 1]");
  CHECK(serialize(diagonal(0, 1)) == "[0 ; 0:1 1:-1 | 0]");
  CHECK(serialize(element_empty()) == "0");
  CHECK(serialize(element_full()) == "1");
  CHECK(deserialize("[0 ; | 1]") == pof_generator(0));

  Rng rng(0x5e71);
  ElemGenOpts opts;
  for (int t = 0; t < 100; ++t) {
    Element e = random_element(rng, opts);
    CHECK(deserialize(serialize(e)) == e);
  }
}

TEST_CASE("rendered terms parse back to the same meaning") {
  Rng rng(0x5e72);
  auto pool = make_po_pool(4, 2);
  int corpus = 0;
  for (int t = 0; t < 60; ++t, ++corpus) {
    Term g = random_pool_term(rng, pool, 4, 3);
    std::string text = render_term(g);
    Term back = parse_expr(text);
    CHECK(render_term(back) == text);            // render/parse fixpoint
    CHECK(equal(eval_term(back, {}), eval_term(g, {})));
  }
  // A few handwritten forms with every operator.
  for (const char* text : {"a(0)", "~(a(1/2) + d(0,1))", "c{0,2}(a(0)*~d(1,2))",
                           "C{1}(H(1; 0:1 | 0) + 0)", "s[0,1](1*~0)",
                           "s{0->1,2->0}(d(0,2))", "(a(3) + ~a(3))*d(0,1)"}) {
    ++corpus;
    Term g = parse_expr(text);
    CHECK(equal(eval_term(parse_expr(render_term(g)), {}), eval_term(g, {})));
  }
  CHECK(corpus >= 50);
}

namespace {

struct Cli {
  Session session;
  std::string run(const std::string& line, int expect_rc = 0) {
    std::ostringstream out;
    int rc = run_command(line, session, out);
    CHECK(rc == expect_rc);
    return out.str();
  }
};

}  // namespace

TEST_CASE("commands produce headed reports") {
  Cli cli;
  std::string out = cli.run("eq c{0}(a(0)) 1");
  CHECK(out.find("# options: window=4 coeff_height=3 depth=3") == 0);
  CHECK(out.find("equal\ttrue") != std::string::npos);

  out = cli.run("eq a(0) a(1)");
  CHECK(out.find("equal\tfalse") != std::string::npos);
  CHECK(out.find("witness=") != std::string::npos);

  CHECK(cli.run("empty a(0)*a(1)").find("empty\ttrue") != std::string::npos);
  CHECK(cli.run("member {0:2,7:3} a(5)").find("member\ttrue") != std::string::npos);
  CHECK(cli.run("member {} a(5)").find("member\tfalse") != std::string::npos);
  CHECK(cli.run("witness a(1)").find("witness\t{") != std::string::npos);
  CHECK(cli.run("dims d(0,1)").find("dims\t{0,1}") != std::string::npos);
  CHECK(cli.run("dims a(0)").find("dims\tall-but-{}") != std::string::npos);
  CHECK(cli.run("classify a(2)").find("family\tPof") != std::string::npos);
  CHECK(cli.run("classify d(0,1)").find("family\tPo\t") != std::string::npos);
  CHECK(cli.run("classify 1").find("family\tPol") != std::string::npos);
  CHECK(cli.run("poz d(0,1)").find("poz\ttrue") != std::string::npos);
  CHECK(cli.run("poz ~d(0,1)").find("poz\tfalse") != std::string::npos);
}

TEST_CASE("let, bindings and the search pipeline") {
  Cli cli;
  cli.run("let x = d(0,1)");
  cli.run("let y = H(1; 0:1 | 0)");
  cli.run("let b = fuse(x, y, 2, 3)");
  std::string out = cli.run("search --targets @x,@y --cands @b --depth 2 --window 4");
  CHECK(out.find("found\t[0 ; 0:1 1:-1 | 0]") != std::string::npos);
  CHECK(out.find("unknown-within-bounds") == std::string::npos);

  out = cli.run("recover --b @b --k 2 --l 3 --branch first");
  CHECK(out.find("recovered\t[0 ; 0:1 1:-1 | 0]") != std::string::npos);

  out = cli.run("fuse --gens x,y");
  CHECK(out.find("b\t") != std::string::npos);
  CHECK(out.find("not-recovered") == std::string::npos);

  out = cli.run("decompose --g y0*(~d(0,1)) --ys a(0)");
  CHECK(out.find("verified\ttrue") != std::string::npos);

  out = cli.run("closure --gens a(0) --product-width 2 --sum-width 2 --target a(0)");
  CHECK(out.find("found\t[0 ; | 1]") != std::string::npos);

  out = cli.run("closure --gens a(0) --product-width 1 --sum-width 1 --limit 5");
  CHECK(out.find("enum\t") != std::string::npos);

  cli.run("bogus command", 1);
  cli.run("eq a(0", 1);
}

TEST_CASE("records format emits the options record") {
  Cli cli;
  cli.session.opts.records = true;
  std::string out = cli.run("empty 0");
  CHECK(out.find("options\twindow=4\tcoeff_height=3\tdepth=3") == 0);
}
