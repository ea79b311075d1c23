#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gknd/checker.hpp"
#include "gknd/proof.hpp"

namespace gknd {

struct LoadedProof {
  ProofPtr proof;
  // From an optional (:expect "Gamma |- C") header; cross-checked by whoever
  // checks the proof, never authoritative.
  std::optional<Judgment> expect;
};

// S-expression proof format, one rule per node:
//   (hyp "a" :label 1)
//   (impl_i :assume "a" :label 1 <proof>)
//   (impl_e <proof-of-A> <proof-of-A->B>)
//   (and_i <l> <r>) (and_e_l <p>) (and_e_r <p>)
//   (or_i_l :other "B" <p>) (or_i_r :other "A" <p>)
//   (or_e :label 2 <p-of-disj> <p-left> <p-right>)
//   (bot_e :target "A" <p>)
//   (forall_i :eigen "x" <p>) (forall_e :term "f(c)" <p>)
//   (exists_i :witness "c" :target "exists x. p(x)" <p>)
//   (exists_e :label 3 :eigen "x" <p-of-exists> <p-of-C>)
//   (tnd "A") (raa "A") (raa_rule "A" :label 4 <p-of-bot>) (peirce "P" "Q")
// A file may wrap the node as (proof :expect "Gamma |- C" <node>).
LoadedProof read_proof(std::string_view text);
std::string write_proof(const ProofPtr& p);
std::string write_proof(const ProofPtr& p, const Judgment& expect);

// "A1, A2 |- C" (an empty context side is allowed).
Judgment parse_judgment(std::string_view text);

}  // namespace gknd
