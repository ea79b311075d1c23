#pragma once

#include <string>

#include "gknd/checker.hpp"
#include "gknd/proof.hpp"

namespace gknd {

// Tree view, one line per inference, unicode rule names, discharge indices in
// parentheses. The proof must check in mode m (CheckError otherwise).
std::string render_ascii(const ProofPtr& p, const Mode& m = Mode::nk());

// Nested bussproofs markup matching the premise order left to right.
std::string render_latex(const ProofPtr& p, const Mode& m = Mode::nk());

}  // namespace gknd
