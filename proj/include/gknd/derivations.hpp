#pragma once

#include "gknd/proof.hpp"
#include "gknd/syntax.hpp"

namespace gknd {

// Parametric constructions of the classical-axiom interderivations. Each
// builder works for arbitrary formulas, allocating discharge labels from
// `counter` (or from 1 past the labels already present).

// From a proof `body` of bot, conclude `a`, discharging the occurrences of ~a
// carrying `label` via an RAA axiom instance (the rule-to-axiom direction).
ProofPtr raa_rule_from_axiom(const FormulaPtr& a, const ProofPtr& body, int label);

// |- ~~a -> a using the raa_rule form exactly once.
ProofPtr raa_axiom_from_rule(const FormulaPtr& a);
ProofPtr raa_axiom_from_rule(const FormulaPtr& a, int& counter);

// |- a | ~a from an RAA axiom instance.
ProofPtr raa_implies_tnd(const FormulaPtr& a);
ProofPtr raa_implies_tnd(const FormulaPtr& a, int& counter);

// |- ((p -> q) -> p) -> p from a TND axiom instance.
ProofPtr tnd_implies_peirce(const FormulaPtr& p, const FormulaPtr& q);
ProofPtr tnd_implies_peirce(const FormulaPtr& p, const FormulaPtr& q, int& counter);

// |- ~~p -> p from Peirce's law with Q = bot.
ProofPtr peirce_implies_raa(const FormulaPtr& p);
ProofPtr peirce_implies_raa(const FormulaPtr& p, int& counter);

}  // namespace gknd
