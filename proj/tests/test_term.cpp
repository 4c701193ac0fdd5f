#include <doctest.h>

#include "specker/enumerate.hpp"
#include "specker/error.hpp"
#include "specker/term.hpp"
#include "util.hpp"

using namespace specker;
using testutil::rat;
using testutil::sv;

namespace {

SpeckerElement eval3(const std::string& text) {
  LatticeContext ctx = atom_context(make_algebra(3));
  return eval_term(parse_term(text, 3), ctx);
}

}  // namespace

TEST_CASE("parsing produces the expected trees") {
  CHECK(print_term(parse_term("u", 0)) == "u");
  CHECK(print_term(parse_term("(1/2)*g0 /\\ u", 1)) == "1/2*g0 /\\ u");
  CHECK(print_term(parse_term("abs(g0 - g1)", 2)) == "abs(g0 - g1)");
  CHECK(print_term(parse_term("g0 \\/ g1 /\\ g2", 3)) == "g0 \\/ g1 /\\ g2");  // meet binds tighter
  CHECK(print_term(parse_term("(g0 \\/ g1) /\\ g2", 3)) == "(g0 \\/ g1) /\\ g2");
  CHECK(print_term(parse_term("-g0 + u", 1)) == "-g0 + u");
  CHECK(print_term(parse_term("-(g0 + u)", 1)) == "-(g0 + u)");
  CHECK(print_term(parse_term("0", 0)) == "0");
  CHECK(print_term(parse_term("2*3*g0", 1)) == "2*3*g0");
  CHECK(print_term(parse_term("(-2)*g0", 1)) == "(-2)*g0");
  CHECK(print_term(parse_term("-2*g0", 1)) == "-2*g0");  // negation of the scalar multiple
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](const std::string& text, int n) -> std::size_t {
    try {
      parse_term(text, n);
    } catch (const ParseError& e) {
      return e.position();
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(position_of("u +", 0) == 3);            // missing operand
  CHECK(position_of("g7", 3) == 0);             // unknown generator
  CHECK(position_of("u @ u", 0) == 2);          // stray character
  CHECK(position_of("2 + u", 0) == 0);          // scalar outside '*'
  CHECK(position_of("abs u", 0) == 4);          // missing parenthesis
  CHECK(position_of("(u", 0) == 2);             // unbalanced
  CHECK(position_of("u u", 0) == 2);            // trailing input
  CHECK_THROWS_AS(parse_term("g0 /\\ v", 1), ParseError);
}

TEST_CASE("printing round-trips through the parser") {
  const char* samples[] = {
      "u",
      "0",
      "g0",
      "g1 + g2 - u",
      "abs(g0 - (u - g0))",
      "1/2*g0 \\/ (-3)*g1",
      "-abs(g2) /\\ u",
      "g0 /\\ (g1 \\/ g2) - 5*u",
      "u - u - u",
  };
  for (const char* text : samples) {
    Term t = parse_term(text, 3);
    std::string printed = print_term(t);
    CHECK(parse_term(printed, 3) == t);
    CHECK(print_term(parse_term(printed, 3)) == printed);
  }
}

TEST_CASE("evaluation in an atom context") {
  CHECK(eval3("u - u") == SpeckerElement::zero(make_algebra(3)));
  CHECK(eval3("u") == SpeckerElement::unit(make_algebra(3)));
  CHECK(eval3("g0 + 2*g1") == sv(make_algebra(3), {"1", "2", "0"}));
  CHECK(eval3("abs(g0 - g1)") == sv(make_algebra(3), {"1", "1", "0"}));
  CHECK(eval3("0") == SpeckerElement::zero(make_algebra(3)));
  CHECK(eval3("g0 \\/ g1 /\\ g2") == sv(make_algebra(3), {"1", "0", "0"}));
}

TEST_CASE("evaluation in a free lattice") {
  FreeLattice f = free_uha(1);
  CHECK(eval_term(parse_term("2*g0 \\/ g0", 1), f) == rat("2") * f.generators[0]);
  CHECK(eval_term(parse_term("abs(g0 - (u - g0))", 1), f) == f.lattice.unit());
  CHECK(eval_term(parse_term("u - u", 1), f) == f.lattice.zero());
}

TEST_CASE("evaluation as lazy free elements") {
  CHECK(eval_term_free(parse_term("u - u", 9)) == FreeElement::zero());
  CHECK(eval_term_free(parse_term("g0 /\\ g1", 2)) ==
        meet(FreeElement::generator(0), FreeElement::generator(1)));
  CHECK(eval_term_free(parse_term("g0 \\/ (u - g0)", 1)) == FreeElement::unit());
  // g5 only needs its own index in scope, not a dense lattice.
  FreeElement sparse = eval_term_free(parse_term("3*g5", 6));
  CHECK(sparse.support() == std::vector<int>{5});
}

TEST_CASE("generator indices out of the declared range fail") {
  CHECK_THROWS_AS(parse_term("g2", 2), ParseError);
  LatticeContext small = atom_context(make_algebra(1));
  CHECK_THROWS_AS(eval_term(parse_term("g1", 2), small), DomainError);
}

TEST_CASE("spot check vector-lattice identities through the term path") {
  LatticeContext ctx = atom_context(make_algebra(3));
  const char* lhs[] = {"g0 /\\ (g1 \\/ g2)", "abs(g0 - g1)", "g0 + g1 - g1"};
  const char* rhs[] = {"g0 /\\ g1 \\/ g0 /\\ g2", "g0 \\/ g1 - g0 /\\ g1", "g0"};
  for (int i = 0; i < 3; ++i) {
    CHECK(eval_term(parse_term(lhs[i], 3), ctx) == eval_term(parse_term(rhs[i], 3), ctx));
  }
}
