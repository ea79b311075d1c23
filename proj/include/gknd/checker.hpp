#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gknd/proof.hpp"
#include "gknd/syntax.hpp"

namespace gknd {

// Sequent: multiset of open hypotheses plus conclusion.
struct Judgment {
  std::vector<FormulaPtr> context;
  FormulaPtr conclusion;
};

// Which classical axiom families the checker admits; empty = NJ.
struct Mode {
  std::set<ClassicalAxiom> admitted;

  static Mode nj() { return {}; }
  static Mode nk() {
    return {{ClassicalAxiom::TND, ClassicalAxiom::RAA, ClassicalAxiom::RAA_RULE,
             ClassicalAxiom::PEIRCE}};
  }
  static Mode only(ClassicalAxiom a) { return {{a}}; }
  // Accepts: nj, nk, nk-tnd, nk-raa, nk-peirce.
  static std::optional<Mode> from_string(const std::string& s);

  bool admits(ClassicalAxiom a) const { return admitted.count(a) > 0; }
  bool subset_of(const Mode& other) const;
};

enum class ErrorKind {
  RuleMismatch,
  DanglingLabel,
  DuplicateLabel,
  EigenvariableViolation,
  ClassicalRuleNotAdmitted,
  ArityError,
  ConclusionMismatch,
};

const char* error_kind_name(ErrorKind k);

struct CheckError : std::runtime_error {
  ErrorKind kind;
  std::vector<size_t> path;  // premise indices from the root
  std::string detail;

  CheckError(ErrorKind k, std::vector<size_t> path, std::string detail);
  std::string render() const;  // "path: kind: detail"
};

// Validates p rule by rule and computes its Judgment; throws CheckError.
// `conclusions`, when given, receives the conclusion of every node.
Judgment check(const ProofPtr& p, const Mode& m,
               std::map<const Proof*, FormulaPtr>* conclusions = nullptr);

// Multiset (or set-of-alpha-classes) comparison of judgments.
bool judgment_matches(const Judgment& got, const Judgment& expected, bool as_set);

// True iff check succeeds and the judgment matches `expected`; a failing
// CheckError, if any, is surfaced through `error`.
bool check_sequent(const ProofPtr& p, const Mode& m, const Judgment& expected,
                   bool context_as_set, std::string* error = nullptr);

std::string print_judgment(const Judgment& j);

}  // namespace gknd
