#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gknd/syntax.hpp"

namespace gknd {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(std::string msg, size_t pos)
      : std::runtime_error(std::move(msg) + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Grammar (ASCII, unicode connectives normalized on input):
//   formula := or_f ('->' formula)?
//   or_f    := and_f ('|' and_f)*
//   and_f   := unary ('&' unary)*
//   unary   := '~' unary | 'forall' ident '.' formula | 'exists' ident '.' formula
//            | 'bot' | ident ('(' term {',' term} ')')? | '(' formula ')'
// Quantifier bodies extend maximally to the right. ~A elaborates to A -> bot.
FormulaPtr parse_formula(std::string_view text);

// Standalone term, as used by proof-node annotations.
TermPtr parse_term(std::string_view text);

// Inverse of parse_formula up to alpha; Implies(A, Bottom) prints as ~A.
std::string print_formula(const FormulaPtr& f);
std::string print_term(const TermPtr& t);

}  // namespace gknd
