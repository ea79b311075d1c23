#pragma once

#include <cstddef>

#include "gknd/checker.hpp"
#include "gknd/proof.hpp"
#include "gknd/translation.hpp"

namespace gknd {

inline constexpr size_t kDefaultProofSizeCap = 1'000'000;

struct ProofSizeExceeded : ProofError {
  explicit ProofSizeExceeded(size_t cap)
      : ProofError("compiled proof exceeds the size cap of " + std::to_string(cap) +
                   " nodes") {}
};

// Compiles an NK proof of Gamma |- F into an NJ proof of the translated
// sequent. The input is checked first; a failing input propagates its
// CheckError.
ProofPtr nk_to_nj(const ProofPtr& p, size_t size_cap = kDefaultProofSizeCap);

// NJ proofs are NK proofs; revalidates and returns the same tree.
ProofPtr nj_embed(const ProofPtr& p);

// {a} |- (a translated) resp. {(a translated)} |- a, in mode nk-raa, by
// structural induction on a.
ProofPtr add_dn_proof(const FormulaPtr& a);
ProofPtr drop_dn_proof(const FormulaPtr& a);

// From an NJ proof of (Gamma translated) |- (f translated), an NK proof of
// Gamma |- f: add double negations under each hypothesis, then lower the
// conclusion.
ProofPtr nj_translation_to_nk(const ProofPtr& p, const std::vector<FormulaPtr>& gamma,
                              const FormulaPtr& f,
                              size_t size_cap = kDefaultProofSizeCap);

}  // namespace gknd
