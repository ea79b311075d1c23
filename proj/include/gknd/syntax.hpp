#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace gknd {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// First-order term: a symbol applied to zero or more terms. A 0-ary symbol
// acts as a variable occurrence; quantifiers capture 0-ary symbols of the
// same name, and 0-ary symbols never bound anywhere behave as constants.
struct Term {
  std::string symbol;
  std::vector<TermPtr> args;

  static TermPtr var(std::string name);
  static TermPtr app(std::string symbol, std::vector<TermPtr> args);

  bool is_leaf() const { return args.empty(); }
};

enum class FKind { Bottom, Atom, And, Or, Implies, Forall, Exists };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Formula of first-order logic. There is no negation node: ~A is stored as
// Implies(A, Bottom) and only resugared when printing.
struct Formula {
  FKind kind;
  std::string name;           // Atom: predicate symbol; Forall/Exists: bound variable
  std::vector<TermPtr> args;  // Atom only
  FormulaPtr lhs;             // And/Or/Implies: left; Forall/Exists: body
  FormulaPtr rhs;             // And/Or/Implies: right

  static FormulaPtr bottom();
  static FormulaPtr atom(std::string name, std::vector<TermPtr> args = {});
  static FormulaPtr conj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr disj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr impl(FormulaPtr l, FormulaPtr r);
  static FormulaPtr neg(FormulaPtr f);  // f -> bot
  static FormulaPtr forall(std::string var, FormulaPtr body);
  static FormulaPtr exists(std::string var, FormulaPtr body);
};

bool is_negation(const FormulaPtr& f);

// Structural equality, bound names included (no alpha).
bool struct_eq(const TermPtr& a, const TermPtr& b);
bool struct_eq(const FormulaPtr& a, const FormulaPtr& b);

// Equality up to consistent renaming of bound variables.
bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b);

std::set<std::string> term_vars(const TermPtr& t);
std::set<std::string> free_vars(const FormulaPtr& f);

// Capture-avoiding substitution of t for free occurrences of var.
TermPtr substitute(const TermPtr& in, const std::string& var, const TermPtr& t);
FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const TermPtr& t);

// A name based on `base` not contained in `avoid`.
std::string fresh_var(const std::string& base, const std::set<std::string>& avoid);

bool is_identifier(const std::string& s);

}  // namespace gknd
