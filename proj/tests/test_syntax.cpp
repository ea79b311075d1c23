#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gknd/parse.hpp"
#include "gknd/syntax.hpp"
#include "support/gen.hpp"

using namespace gknd;

TEST_CASE("parsing elaborates sugar and precedence") {
  CHECK(parse_formula("bot")->kind == FKind::Bottom);

  auto f = parse_formula("~a -> bot");
  REQUIRE(f->kind == FKind::Implies);
  CHECK(struct_eq(f, Formula::neg(Formula::neg(Formula::atom("a")))));

  auto g = parse_formula("forall x. p(x) -> q");
  REQUIRE(g->kind == FKind::Forall);
  CHECK(g->lhs->kind == FKind::Implies);

  // right association and binding strengths
  CHECK(struct_eq(parse_formula("a -> b -> c"),
                  parse_formula("a -> (b -> c)")));
  CHECK(struct_eq(parse_formula("~a & b | c -> d"),
                  parse_formula("(((~a) & b) | c) -> d")));

  CHECK_THROWS_AS(parse_formula("a ->"), ParseError);
  CHECK_THROWS_AS(parse_formula("p(x) & p(x, y)"), ParseError);
}

TEST_CASE("printing uses negation sugar and minimal parentheses") {
  CHECK(print_formula(Formula::bottom()) == "bot");
  auto a = Formula::atom("a");
  CHECK(print_formula(Formula::neg(Formula::neg(a))) == "~~a");
  CHECK(print_formula(Formula::disj(a, Formula::neg(a))) == "a | ~a");
}

TEST_CASE("free variables") {
  auto x = Term::var("x");
  CHECK(free_vars(Formula::forall("x", Formula::atom("p", {x}))).empty());
  CHECK(free_vars(Formula::atom("p", {x, Term::var("y")})) ==
        std::set<std::string>{"x", "y"});
  CHECK(free_vars(Formula::exists("x", Formula::atom("p", {x, Term::var("y")}))) ==
        std::set<std::string>{"y"});
}

TEST_CASE("substitution is capture avoiding") {
  auto px = Formula::atom("p", {Term::var("x")});
  auto fc = Term::app("f", {Term::var("c")});
  CHECK(struct_eq(substitute(px, "x", fc), Formula::atom("p", {fc})));

  auto all = Formula::forall("x", px);
  CHECK(struct_eq(substitute(all, "x", Term::var("c")), all));

  // substituting f(y) under a binder for y must rename the binder
  auto g = Formula::forall("y", Formula::atom("p", {Term::var("x"), Term::var("y")}));
  auto fy = Term::app("f", {Term::var("y")});
  auto got = substitute(g, "x", fy);
  CHECK(alpha_eq(got, Formula::forall("z", Formula::atom("p", {fy, Term::var("z")}))));
  CHECK(free_vars(got) == std::set<std::string>{"y"});
}

TEST_CASE("alpha equivalence") {
  auto px = Formula::atom("p", {Term::var("x")});
  auto py = Formula::atom("p", {Term::var("y")});
  CHECK(alpha_eq(Formula::forall("x", px), Formula::forall("y", py)));
  CHECK_FALSE(alpha_eq(px, py));
  CHECK(alpha_eq(Formula::impl(Formula::atom("a"), Formula::bottom()),
                 parse_formula("~a")));
  CHECK_FALSE(alpha_eq(Formula::forall("x", px), Formula::exists("x", px)));
}

TEST_CASE("random formulas: parser round trip and substitution laws") {
  gen::Gen g(20260826);
  for (int i = 0; i < 300; ++i) {
    auto f = g.formula();
    auto printed = print_formula(f);
    auto back = parse_formula(printed);
    CHECK(struct_eq(back, f));
    CHECK(alpha_eq(f, f));

    // substituting for a variable that is not free is the identity
    CHECK(struct_eq(substitute(f, "zz", Term::var("c0")), f));

    // substitution never invents free variables outside the replaced term
    auto sub = substitute(f, "x", Term::var("c9"));
    for (const auto& v : free_vars(sub)) CHECK(v != "x");
  }
}

TEST_CASE("alpha_eq is a congruent equivalence on renamed quantifiers") {
  gen::Gen g(7);
  for (int i = 0; i < 100; ++i) {
    auto f = g.formula();
    auto wrapped = Formula::forall("x", substitute(f, "x", Term::var("x")));
    auto renamed = Formula::forall("w", substitute(f, "x", Term::var("w")));
    CHECK(alpha_eq(wrapped, renamed));
    CHECK(alpha_eq(renamed, wrapped));
  }
}
