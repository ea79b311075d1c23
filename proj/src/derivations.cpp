#include "gknd/derivations.hpp"

namespace gknd {

namespace {

FormulaPtr neg(const FormulaPtr& f) { return Formula::neg(f); }

}  // namespace

ProofPtr raa_rule_from_axiom(const FormulaPtr& a, const ProofPtr& body, int label) {
  // body: ... |- bot, with the ~a occurrences to cancel carrying `label`.
  std::set<int> bound;
  {
    // Label clash guard; a non-bot body surfaces from the kernel instead.
    std::vector<ProofPtr> stack{body};
    while (!stack.empty()) {
      auto p = stack.back();
      stack.pop_back();
      if (binds_label(p->rule.kind) && p->rule.label == label)
        throw ProofError("label " + std::to_string(label) +
                         " is already bound inside the body");
      for (const auto& q : p->premises) stack.push_back(q);
    }
  }
  auto not_not_a = pf::impl_i(neg(a), label, body);  // ~~a
  return pf::impl_e(not_not_a, pf::raa(a));          // a
}

ProofPtr raa_axiom_from_rule(const FormulaPtr& a, int& counter) {
  int l1 = counter++, l2 = counter++;
  auto falsum = pf::impl_e(pf::hyp(neg(a), l1), pf::hyp(neg(neg(a)), l2));  // bot
  auto via_rule = pf::raa_rule(a, l1, falsum);                              // a
  return pf::impl_i(neg(neg(a)), l2, via_rule);  // ~~a -> a
}

ProofPtr raa_implies_tnd(const FormulaPtr& a, int& counter) {
  auto t = Formula::disj(a, neg(a));  // a | ~a
  int l1 = counter++, l2 = counter++, l3 = counter++;
  // Left column: assuming a, a|~a contradicts ~(a|~a); so ~a.
  auto left = pf::impl_i(
      a, l2,
      pf::impl_e(pf::or_i_l(neg(a), pf::hyp(a, l2)), pf::hyp(neg(t), l3)));
  // Right column: assuming ~a likewise; so ~~a.
  auto right = pf::impl_i(
      neg(a), l1,
      pf::impl_e(pf::or_i_r(a, pf::hyp(neg(a), l1)), pf::hyp(neg(t), l3)));
  auto falsum = pf::impl_e(left, right);       // bot
  auto nn_t = pf::impl_i(neg(t), l3, falsum);  // ~~(a | ~a)
  return pf::impl_e(nn_t, pf::raa(t));         // a | ~a
}

ProofPtr tnd_implies_peirce(const FormulaPtr& p, const FormulaPtr& q, int& counter) {
  auto pqp = Formula::impl(Formula::impl(p, q), p);  // (p -> q) -> p
  int l1 = counter++, l2 = counter++, l3 = counter++, l4 = counter++;
  // Branch on p | ~p. Under p the conclusion follows by a vacuous discharge.
  auto case_p = pf::impl_i(pqp, l4, pf::hyp(p, l3));
  // Under ~p: p -> q by explosion, then (p -> q) -> p gives p.
  auto p_implies_q = pf::impl_i(
      p, l1, pf::bot_e(q, pf::impl_e(pf::hyp(p, l1), pf::hyp(neg(p), l3))));
  auto got_p = pf::impl_e(p_implies_q, pf::hyp(pqp, l2));
  auto case_not_p = pf::impl_i(pqp, l2, got_p);
  return pf::or_e(l3, pf::tnd(p), case_p, case_not_p);
}

ProofPtr peirce_implies_raa(const FormulaPtr& p, int& counter) {
  int l1 = counter++, l2 = counter++;
  // ~p -> p by explosion from ~~p and ~p, then Peirce with Q = bot.
  auto falsum = pf::impl_e(pf::hyp(neg(p), l1), pf::hyp(neg(neg(p)), l2));
  auto not_p_implies_p = pf::impl_i(neg(p), l1, pf::bot_e(p, falsum));
  auto got_p = pf::impl_e(not_p_implies_p, pf::peirce(p, Formula::bottom()));
  return pf::impl_i(neg(neg(p)), l2, got_p);  // ~~p -> p
}

ProofPtr raa_axiom_from_rule(const FormulaPtr& a) {
  int c = 1;
  return raa_axiom_from_rule(a, c);
}
ProofPtr raa_implies_tnd(const FormulaPtr& a) {
  int c = 1;
  return raa_implies_tnd(a, c);
}
ProofPtr tnd_implies_peirce(const FormulaPtr& p, const FormulaPtr& q) {
  int c = 1;
  return tnd_implies_peirce(p, q, c);
}
ProofPtr peirce_implies_raa(const FormulaPtr& p) {
  int c = 1;
  return peirce_implies_raa(p, c);
}

}  // namespace gknd
