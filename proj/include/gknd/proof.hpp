#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gknd/syntax.hpp"

namespace gknd {

enum class RuleKind {
  Hyp,
  ImpliesI, ImpliesE,
  AndI, AndEL, AndER,
  OrIL, OrIR, OrE,
  BotE,
  ForallI, ForallE,
  ExistsI, ExistsE,
  AxiomTND, AxiomRAA, RuleRAA, AxiomPeirce,
};

enum class ClassicalAxiom { TND, RAA, RAA_RULE, PEIRCE };

// Rule label with the annotations that are not recoverable from the premises.
// `formula` holds, depending on the kind: the Hyp formula, the ImpliesI
// assumption, the other disjunct of OrIL/OrIR, the BotE target, the ExistsI
// target, the axiom formula of TND/RAA/RuleRAA, or Peirce's P. `formula2` is
// Peirce's Q. label == 0 means unlabelled.
struct Rule {
  RuleKind kind;
  FormulaPtr formula;
  FormulaPtr formula2;
  TermPtr term;       // ForallE instantiation term, ExistsI witness
  std::string eigen;  // ForallI, ExistsE
  int label = 0;      // Hyp (optional), ImpliesI, OrE, ExistsE, RuleRAA
};

struct Proof;
using ProofPtr = std::shared_ptr<const Proof>;

// Rule-labelled tree. Conclusions are not stored; the checker recomputes them.
struct Proof {
  Rule rule;
  std::vector<ProofPtr> premises;
};

struct ProofError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Node builders. Each validates premise arity.
namespace pf {
ProofPtr hyp(FormulaPtr f, int label = 0);
ProofPtr impl_i(FormulaPtr assume, int label, ProofPtr p);
ProofPtr impl_e(ProofPtr of_a, ProofPtr of_a_implies_b);
ProofPtr and_i(ProofPtr l, ProofPtr r);
ProofPtr and_e_l(ProofPtr p);
ProofPtr and_e_r(ProofPtr p);
ProofPtr or_i_l(FormulaPtr other, ProofPtr p);
ProofPtr or_i_r(FormulaPtr other, ProofPtr p);
ProofPtr or_e(int label, ProofPtr of_disj, ProofPtr left, ProofPtr right);
ProofPtr bot_e(FormulaPtr target, ProofPtr p);
ProofPtr forall_i(std::string eigen, ProofPtr p);
ProofPtr forall_e(TermPtr term, ProofPtr p);
ProofPtr exists_i(TermPtr witness, FormulaPtr target, ProofPtr p);
ProofPtr exists_e(int label, std::string eigen, ProofPtr of_exists, ProofPtr body);
ProofPtr tnd(FormulaPtr a);
ProofPtr raa(FormulaPtr a);
ProofPtr raa_rule(FormulaPtr a, int label, ProofPtr of_bot);
ProofPtr peirce(FormulaPtr p, FormulaPtr q);
}  // namespace pf

const char* rule_name(RuleKind k);
size_t rule_arity(RuleKind k);
bool binds_label(RuleKind k);

// Premise indices in which a binder's label discharges hypotheses:
// ImpliesI and RuleRAA bind in premise 0, OrE in premises 1 and 2,
// ExistsE in premise 1.
std::vector<size_t> binding_premises(RuleKind k);

size_t proof_size(const ProofPtr& p);
size_t proof_height(const ProofPtr& p);  // single node has height 0
std::set<ClassicalAxiom> classical_axioms_used(const ProofPtr& p);

// Multiset of undischarged hypothesis formulas. Throws ProofError on a
// dangling or duplicated label.
std::vector<FormulaPtr> open_hypotheses(const ProofPtr& p);

int max_label(const ProofPtr& p);

// Copy of p with every internally bound label replaced by a fresh one drawn
// from `counter`; labels without a binder inside p are left alone.
ProofPtr relabel_bound(const ProofPtr& p, int& counter);

// Replace every unlabelled Hyp leaf alpha-equal to `target` by a fresh-label
// copy of `replacement` (labels freshened per site).
ProofPtr graft(const ProofPtr& p, const FormulaPtr& target,
               const ProofPtr& replacement, int& counter);

// Attach `label` to every unlabelled Hyp leaf alpha-equal to `target`.
ProofPtr label_hyps(const ProofPtr& p, const FormulaPtr& target, int label);

}  // namespace gknd
