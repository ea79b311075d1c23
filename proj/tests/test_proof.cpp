#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gknd/checker.hpp"
#include "gknd/derivations.hpp"
#include "gknd/parse.hpp"
#include "gknd/proof.hpp"
#include "gknd/proof_io.hpp"
#include "gknd/translation.hpp"

using namespace gknd;

static FormulaPtr F(const char* s) { return parse_formula(s); }

TEST_CASE("open hypotheses") {
  auto a = F("a");
  auto hs = open_hypotheses(pf::hyp(a));
  REQUIRE(hs.size() == 1);
  CHECK(struct_eq(hs[0], a));

  auto prop2 = triple_neg_proof(a);
  auto open2 = open_hypotheses(prop2);
  REQUIRE(open2.size() == 1);
  CHECK(struct_eq(open2[0], F("~~~a")));

  // vacuous discharge leaves the body's hypotheses open
  auto vac = pf::impl_i(F("b"), 1, pf::hyp(a));
  auto open3 = open_hypotheses(vac);
  REQUIRE(open3.size() == 1);
  CHECK(struct_eq(open3[0], a));
}

TEST_CASE("size and height") {
  auto a = F("a");
  CHECK(proof_size(pf::hyp(a)) == 1);
  CHECK(proof_height(pf::hyp(a)) == 0);
  CHECK(proof_size(triple_neg_proof(a)) == 7);
  CHECK(proof_height(triple_neg_proof(a)) == 4);
  CHECK(proof_size(raa_axiom_from_rule(a)) == 5);
  CHECK(proof_height(raa_axiom_from_rule(a)) == 3);
}

TEST_CASE("classical axiom usage") {
  auto a = F("a");
  CHECK(classical_axioms_used(pf::hyp(a)).empty());
  CHECK(classical_axioms_used(raa_implies_tnd(a)) ==
        std::set<ClassicalAxiom>{ClassicalAxiom::RAA});
  CHECK(classical_axioms_used(peirce_implies_raa(a)) ==
        std::set<ClassicalAxiom>{ClassicalAxiom::PEIRCE});
}

TEST_CASE("label hygiene in open_hypotheses") {
  auto a = F("a");
  CHECK_THROWS_AS(open_hypotheses(pf::hyp(a, 5)), ProofError);
  auto dup = pf::impl_i(a, 1, pf::impl_i(F("b"), 1, pf::hyp(a, 1)));
  CHECK_THROWS_AS(open_hypotheses(dup), ProofError);
}

TEST_CASE("graft and label_hyps") {
  auto a = F("a");
  int counter = 10;
  auto body = pf::impl_e(pf::hyp(a), pf::hyp(F("a -> b")));
  auto grafted = graft(body, a, triple_neg_proof(a, counter), counter);
  // the a leaf is gone; ~~~a and a->b remain, with fresh labels only
  auto hs = open_hypotheses(grafted);
  REQUIRE(hs.size() == 2);
  CHECK(proof_size(grafted) == proof_size(body) + 6);

  auto labelled = label_hyps(body, a, 3);
  CHECK(labelled->premises[0]->rule.label == 3);
  CHECK(labelled->premises[1]->rule.label == 0);
}

TEST_CASE("relabel_bound leaves outer labels alone") {
  auto a = F("a");
  // label 7 is bound inside, label 9 is not
  auto p = pf::impl_i(a, 7, pf::and_i(pf::hyp(a, 7), pf::hyp(F("b"), 9)));
  int counter = 100;
  auto q = relabel_bound(p, counter);
  CHECK(q->rule.label >= 100);
  CHECK(q->premises[0]->premises[0]->rule.label == q->rule.label);
  CHECK(q->premises[0]->premises[1]->rule.label == 9);
}

TEST_CASE("proof file round trip") {
  auto a = F("a");
  std::vector<ProofPtr> samples = {
      pf::hyp(a),
      triple_neg_proof(a),
      raa_implies_tnd(F("p -> q")),
      stability_proof(F("exists x. p(x) | b")),
      pf::forall_i("x", pf::hyp(F("a"))),
      pf::exists_i(Term::var("c"), F("exists x. p(x)"), pf::hyp(F("p(c)"))),
  };
  for (const auto& p : samples) {
    auto text = write_proof(p);
    auto back = read_proof(text).proof;
    CHECK(write_proof(back) == text);
    CHECK(proof_size(back) == proof_size(p));
  }
}

TEST_CASE("expect header is parsed, not authoritative") {
  auto loaded = read_proof("(proof :expect \"~~~a |- ~a\" " +
                           write_proof(triple_neg_proof(F("a"))) + ")");
  REQUIRE(loaded.expect.has_value());
  CHECK(print_judgment(*loaded.expect) == "~~~a |- ~a");

  auto j = parse_judgment("a, a -> b |- b");
  CHECK(j.context.size() == 2);
  CHECK(struct_eq(j.conclusion, F("b")));
  auto empty = parse_judgment("|- a | ~a");
  CHECK(empty.context.empty());
}

TEST_CASE("builders validate structure") {
  CHECK_THROWS_AS(pf::impl_i(F("a"), 1, nullptr), ProofError);
  CHECK(rule_name(RuleKind::ExistsE) == std::string("exists_e"));
  CHECK(binding_premises(RuleKind::OrE) == std::vector<size_t>{1, 2});
  CHECK(binding_premises(RuleKind::ImpliesI) == std::vector<size_t>{0});
}
