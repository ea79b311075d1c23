#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gknd/checker.hpp"
#include "gknd/derivations.hpp"
#include "gknd/parse.hpp"
#include "gknd/translation.hpp"

using namespace gknd;

static FormulaPtr F(const char* s) { return parse_formula(s); }

static ErrorKind kind_of(const ProofPtr& p, const Mode& m) {
  try {
    check(p, m);
  } catch (const CheckError& e) {
    return e.kind;
  }
  FAIL("expected a CheckError");
  return ErrorKind::RuleMismatch;
}

TEST_CASE("axiom and figure judgments") {
  auto j = check(pf::hyp(F("a")), Mode::nj());
  REQUIRE(j.context.size() == 1);
  CHECK(struct_eq(j.context[0], F("a")));
  CHECK(struct_eq(j.conclusion, F("a")));

  auto j2 = check(triple_neg_proof(F("a")), Mode::nj());
  CHECK(print_judgment(j2) == "~~~a |- ~a");
}

TEST_CASE("mode gate and eigenvariable side condition") {
  CHECK(kind_of(pf::tnd(F("a")), Mode::nj()) == ErrorKind::ClassicalRuleNotAdmitted);
  CHECK(kind_of(pf::forall_i("x", pf::hyp(F("p(x)"))), Mode::nj()) ==
        ErrorKind::EigenvariableViolation);

  // exists_e: eigen free in the conclusion
  auto bad = pf::exists_e(1, "x", pf::hyp(F("exists x. p(x)")), pf::hyp(F("p(x)"), 1));
  CHECK(kind_of(bad, Mode::nj()) == ErrorKind::EigenvariableViolation);

  // generalizing a variable not open anywhere is fine
  auto ok = pf::forall_i("x", pf::hyp(F("p(c)")));
  CHECK(print_judgment(check(ok, Mode::nj())) == "p(c) |- forall x. p(c)");
}

TEST_CASE("label errors carry their designated kind") {
  CHECK(kind_of(pf::hyp(F("a"), 5), Mode::nj()) == ErrorKind::DanglingLabel);
  auto dup = pf::impl_i(F("a"), 1, pf::impl_i(F("b"), 1, pf::hyp(F("a"), 1)));
  CHECK(kind_of(dup, Mode::nj()) == ErrorKind::DuplicateLabel);
  // discharge label attached to the wrong formula
  auto wrong = pf::impl_i(F("a"), 1, pf::hyp(F("b"), 1));
  CHECK(kind_of(wrong, Mode::nj()) == ErrorKind::RuleMismatch);
}

TEST_CASE("rule mismatches") {
  CHECK(kind_of(pf::and_e_l(pf::hyp(F("a"))), Mode::nj()) == ErrorKind::RuleMismatch);
  CHECK(kind_of(pf::impl_e(pf::hyp(F("a")), pf::hyp(F("b -> c"))), Mode::nj()) ==
        ErrorKind::RuleMismatch);
  try {
    check(pf::and_i(pf::hyp(F("a")), pf::and_e_l(pf::hyp(F("b")))), Mode::nj());
    FAIL("expected a CheckError");
  } catch (const CheckError& e) {
    CHECK(e.path == std::vector<size_t>{1});
    CHECK(e.render().find("RuleMismatch") != std::string::npos);
  }
}

TEST_CASE("check_sequent in multiset and set mode") {
  auto prop2 = triple_neg_proof(F("a"));
  CHECK(check_sequent(prop2, Mode::nj(), {{F("~~~a")}, F("~a")}, false));

  auto conj = stability_proof(F("a & b"));
  auto hyp = F("~~(~~a & ~~b)");
  // the conjunction case uses the hypothesis twice, so only set mode matches
  CHECK(check_sequent(conj, Mode::nj(), {{hyp}, F("~~a & ~~b")}, true));
  CHECK_FALSE(check_sequent(conj, Mode::nj(), {{hyp}, F("~~a & ~~b")}, false));

  CHECK_FALSE(check_sequent(pf::hyp(F("a")), Mode::nj(), {{F("b")}, F("a")}, false));
  std::string err;
  CHECK_FALSE(check_sequent(pf::tnd(F("a")), Mode::nj(), {{}, F("a | ~a")}, false, &err));
  CHECK(err.find("ClassicalRuleNotAdmitted") != std::string::npos);
}

TEST_CASE("mode strings and monotonicity") {
  CHECK(Mode::from_string("nj")->admitted.empty());
  CHECK(Mode::from_string("nk")->admitted.size() == 4);
  CHECK(Mode::from_string("nk-raa")->admits(ClassicalAxiom::RAA_RULE));
  CHECK_FALSE(Mode::from_string("bogus").has_value());

  // anything that checks in a mode checks in every superset mode
  std::vector<ProofPtr> ps = {triple_neg_proof(F("a")), raa_implies_tnd(F("a")),
                              tnd_implies_peirce(F("p"), F("q")),
                              peirce_implies_raa(F("p"))};
  for (const auto& p : ps) {
    Judgment j = check(p, Mode::nk());
    for (const char* s : {"nk-tnd", "nk-raa", "nk-peirce"}) {
      Mode m = *Mode::from_string(s);
      if (auto used = classical_axioms_used(p); [&] {
            for (auto a : used)
              if (!m.admits(a)) return false;
            return true;
          }())
        CHECK(judgment_matches(check(p, m), j, false));
    }
  }
}

TEST_CASE("alpha equivalence is respected throughout checking") {
  // the hypothesis forall x. p(x) matches the assumption forall y. p(y)
  auto p = pf::impl_i(F("forall y. p(y)"), 1, pf::hyp(F("forall x. p(x)"), 1));
  auto j = check(p, Mode::nj());
  CHECK(j.context.empty());
}

TEST_CASE("forall_e instantiates and exists_i generalizes") {
  auto inst = pf::forall_e(parse_term("f(c)"), pf::hyp(F("forall x. p(x)")));
  CHECK(struct_eq(check(inst, Mode::nj()).conclusion, F("p(f(c))")));

  auto wit = pf::exists_i(parse_term("c"), F("exists x. p(x, c)"),
                          pf::hyp(F("p(c, c)")));
  CHECK(struct_eq(check(wit, Mode::nj()).conclusion, F("exists x. p(x, c)")));

  auto badwit = pf::exists_i(parse_term("c"), F("exists x. p(x)"), pf::hyp(F("q")));
  CHECK(kind_of(badwit, Mode::nj()) == ErrorKind::RuleMismatch);
}
