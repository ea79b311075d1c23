#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gknd/checker.hpp"
#include "gknd/compiler.hpp"
#include "gknd/derivations.hpp"
#include "gknd/parse.hpp"

using namespace gknd;

static FormulaPtr F(const char* s) { return parse_formula(s); }

static bool translates_to(const ProofPtr& p, const Mode& src_mode) {
  Judgment j = check(p, src_mode);
  Judgment want{nn_translate_context(j.context), nn_translate(j.conclusion)};
  return check_sequent(nk_to_nj(p), Mode::nj(), want, true);
}

TEST_CASE("compiling the base cases") {
  auto c = nk_to_nj(pf::hyp(F("a")));
  CHECK(check_sequent(c, Mode::nj(), {{F("~~a")}, F("~~a")}, false));

  auto t = nk_to_nj(pf::tnd(F("a")));
  CHECK(check_sequent(t, Mode::nj(), {{}, F("~~(~~a | ~~~a)")}, false));

  auto r = nk_to_nj(raa_axiom_from_rule(F("a")));
  CHECK(check_sequent(r, Mode::nj(), {{}, F("~~~~a -> ~~a")}, false));
}

TEST_CASE("compiling every classical source") {
  CHECK(translates_to(raa_implies_tnd(F("a")), Mode::nk()));
  CHECK(translates_to(tnd_implies_peirce(F("p"), F("q")), Mode::nk()));
  CHECK(translates_to(peirce_implies_raa(F("p")), Mode::nk()));
  CHECK(translates_to(peirce_implies_raa(F("forall x. p(x)")), Mode::nk()));
}

TEST_CASE("compiling quantifier and disjunction eliminations") {
  // or_e with open side hypotheses
  auto by_cases = pf::or_e(1, pf::hyp(F("a | b")),
                           pf::impl_e(pf::hyp(F("a"), 1), pf::hyp(F("a -> c"))),
                           pf::impl_e(pf::hyp(F("b"), 1), pf::hyp(F("b -> c"))));
  CHECK(translates_to(by_cases, Mode::nk()));

  auto inst = pf::forall_e(Term::var("x"), pf::hyp(F("forall y. p(y) -> q")));
  auto witness = pf::exists_e(1, "x", pf::hyp(F("exists x. p(x)")),
                              pf::impl_e(pf::hyp(F("p(x)"), 1), inst));
  CHECK(translates_to(witness, Mode::nk()));

  auto gen = pf::forall_i("x", pf::forall_e(Term::var("x"), pf::hyp(F("forall y. p(y)"))));
  CHECK(translates_to(gen, Mode::nk()));

  auto intro = pf::exists_i(Term::var("c"), F("exists x. p(x)"), pf::hyp(F("p(c)")));
  CHECK(translates_to(intro, Mode::nk()));
}

TEST_CASE("nj proofs pass through nj_embed unchanged") {
  auto h = pf::hyp(F("a"));
  CHECK(nj_embed(h) == h);
  auto p2 = triple_neg_proof(F("a"));
  CHECK(nj_embed(p2) == p2);
  CHECK(judgment_matches(check(p2, Mode::nk()), check(p2, Mode::nj()), false));
  auto st = stability_proof(F("a | b"));
  CHECK(nj_embed(st) == st);
  check(st, Mode::nk());
}

TEST_CASE("adding and dropping double negations") {
  Mode raa = *Mode::from_string("nk-raa");
  auto a = F("a");
  auto add = add_dn_proof(a);
  CHECK(check_sequent(add, raa, {{a}, F("~~a")}, true));
  CHECK(classical_axioms_used(add).empty());

  auto drop = drop_dn_proof(a);
  CHECK(check_sequent(drop, raa, {{F("~~a")}, a}, true));

  auto dropor = drop_dn_proof(F("p | q"));
  CHECK(check_sequent(dropor, raa, {{F("~~(~~p | ~~q)")}, F("p | q")}, true));

  auto f = F("forall x. p(x) & (q | exists y. p(y))");
  auto dropq = drop_dn_proof(f);
  CHECK(check_sequent(dropq, raa, {{nn_translate(f)}, f}, true));
}

TEST_CASE("embedding a translation back into NK") {
  auto tnd_nj = nk_to_nj(pf::tnd(F("a")));
  auto back = nj_translation_to_nk(tnd_nj, {}, F("a | ~a"));
  CHECK(check_sequent(back, Mode::nk(), {{}, F("a | ~a")}, true));

  auto simple = nj_translation_to_nk(pf::hyp(F("~~a")), {F("a")}, F("a"));
  CHECK(check_sequent(simple, Mode::nk(), {{F("a")}, F("a")}, true));

  // full round trip on the 4.1 figure
  auto rt = nj_translation_to_nk(nk_to_nj(raa_implies_tnd(F("a"))), {}, F("a | ~a"));
  CHECK(check_sequent(rt, Mode::nk(), {{}, F("a | ~a")}, true));

  // the precondition is enforced: wrong target sequent is rejected
  CHECK_THROWS_AS(nj_translation_to_nk(pf::hyp(F("~~a")), {}, F("b")), CheckError);
}

TEST_CASE("rejects bad input and oversized output") {
  auto bogus = pf::and_e_l(pf::hyp(F("a")));
  CHECK_THROWS_AS(nk_to_nj(bogus), CheckError);
  CHECK_THROWS_AS(nk_to_nj(raa_implies_tnd(F("a")), 10), ProofSizeExceeded);
}
