#include <doctest.h>

#include "ccsp/correspondence.hpp"
#include "ccsp/syntax.hpp"
#include "support.hpp"

using namespace ccsp;
using namespace ccsp::test;

TEST_CASE("parse examples") {
  CHECK(std::get<StandardTerm>(parse("a ; b")) ==
        StandardTerm::seq(atom("a"), atom("b")));
  CHECK(std::get<StandardTerm>(parse("[[ a % r ; throww ]]")) ==
        StandardTerm::block(CompensableTerm::seq(
            CompensableTerm::pair(atom("a"), atom("r")),
            CompensableTerm::pair(StandardTerm::throw_(),
                                  StandardTerm::skip()))));
  CHECK(std::get<StandardTerm>(parse("a ||{a} skip")) ==
        StandardTerm::par({Event("a")}, atom("a"), StandardTerm::skip()));
  CHECK(std::get<StandardTerm>(parse("a ||{} b")) ==
        StandardTerm::par({}, atom("a"), atom("b")));
}

TEST_CASE("precedence and associativity") {
  // [] is loosest, then ||, />, ;, %.
  CHECK(S("a ; b [] c") == S("(a ; b) [] c"));
  CHECK(S("a /> b ; c") == S("a /> (b ; c)"));
  CHECK(S("a ||{} b /> c") == S("a ||{} (b /> c)"));
  CHECK(S("a ; b ; c") == S("a ; (b ; c)"));
  CHECK(S("a [] b [] c") == S("a [] (b [] c)"));
  CHECK(C("a % b ; c % d") == C("(a % b) ; (c % d)"));
}

TEST_CASE("syntax errors carry a column") {
  try {
    parse("a ; ; b");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse("a ||{a b"), ParseError);
  CHECK_THROWS_AS(parse("(a ; b"), ParseError);
  CHECK_THROWS_AS(parse("a $ b"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("ok ; a"), ParseError);
  CHECK_THROWS_AS(parse("a b"), ParseError);
}

TEST_CASE("sort errors name the operator") {
  try {
    parse("a ; b % c");
    FAIL("expected a sort error");
  } catch (const SortError& e) {
    CHECK(std::string(e.what()).find("';'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("(a % b) % c"), SortError);
  CHECK_THROWS_AS(parse("[[ a ]]"), SortError);
  CHECK_THROWS_AS(parse("skipp /> a"), SortError);
  CHECK_THROWS_AS(parse_standard("skipp"), SortError);
  CHECK_THROWS_AS(parse_compensable("skip"), SortError);
}

TEST_CASE("printing") {
  CHECK(to_source(S("a ; b")) == "(a ; b)");
  CHECK(to_source(S("[[ a % r ]]")) == "[[ (a % r) ]]");
  CHECK(to_source(S("a ||{b,a} c")) == "(a ||{a,b} c)");
  CHECK(to_source(StandardTerm::null()) == "0");
  CHECK(render_sync_set({}) == "{}");
}

TEST_CASE("round trip on generated terms") {
  GenConfig cfg;
  cfg.alphabet = {Event("a"), Event("b"), Event("c.1")};
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    cfg.seed = seed;
    const AnyTerm s = generate_standard(cfg);
    const AnyTerm c = generate_compensable(cfg);
    CHECK(parse(to_source(s)) == s);
    CHECK(parse(to_source(c)) == c);
  }
}
