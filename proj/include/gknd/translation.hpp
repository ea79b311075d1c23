#pragma once

#include "gknd/proof.hpp"
#include "gknd/syntax.hpp"

namespace gknd {

// Godel-Kolmogorov translation: bot and atoms map to bot / ~~atom; &, -> and
// forall commute; | and exists receive an outer ~~ over translated children.
FormulaPtr nn_translate(const FormulaPtr& f);
std::vector<FormulaPtr> nn_translate_context(const std::vector<FormulaPtr>& context);

// NJ proof of ~~~a |- ~a.
ProofPtr triple_neg_proof(const FormulaPtr& a);
ProofPtr triple_neg_proof(const FormulaPtr& a, int& counter);

// NJ proof of F's stability: ~~(F translated) |- F translated, by structural
// recursion on F.
ProofPtr stability_proof(const FormulaPtr& f);
ProofPtr stability_proof(const FormulaPtr& f, int& counter);

}  // namespace gknd
