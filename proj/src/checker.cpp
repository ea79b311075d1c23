#include "gknd/checker.hpp"

#include <algorithm>

#include "gknd/parse.hpp"

namespace gknd {

std::optional<Mode> Mode::from_string(const std::string& s) {
  if (s == "nj") return nj();
  if (s == "nk") return nk();
  // The axiom and rule forms of reductio are interderivable, so nk-raa
  // admits both.
  if (s == "nk-raa")
    return Mode{{ClassicalAxiom::RAA, ClassicalAxiom::RAA_RULE}};
  if (s == "nk-tnd") return only(ClassicalAxiom::TND);
  if (s == "nk-peirce") return only(ClassicalAxiom::PEIRCE);
  return std::nullopt;
}

bool Mode::subset_of(const Mode& other) const {
  return std::includes(other.admitted.begin(), other.admitted.end(),
                       admitted.begin(), admitted.end());
}

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::RuleMismatch: return "RuleMismatch";
    case ErrorKind::DanglingLabel: return "DanglingLabel";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::EigenvariableViolation: return "EigenvariableViolation";
    case ErrorKind::ClassicalRuleNotAdmitted: return "ClassicalRuleNotAdmitted";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::ConclusionMismatch: return "ConclusionMismatch";
  }
  return "?";
}

static std::string path_string(const std::vector<size_t>& path) {
  if (path.empty()) return "root";
  std::string s;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(path[i]);
  }
  return s;
}

CheckError::CheckError(ErrorKind k, std::vector<size_t> p, std::string d)
    : std::runtime_error(path_string(p) + ": " + error_kind_name(k) + ": " + d),
      kind(k),
      path(std::move(p)),
      detail(std::move(d)) {}

std::string CheckError::render() const { return what(); }

namespace {

struct OpenHyp {
  FormulaPtr formula;
  int label;
};

struct Checked {
  std::vector<OpenHyp> open;
  FormulaPtr conclusion;
};

class Checker {
 public:
  Checker(const Mode& m, std::map<const Proof*, FormulaPtr>* conclusions)
      : mode_(m), conclusions_(conclusions) {}

  Judgment run(const ProofPtr& p) {
    std::vector<size_t> path;
    scan_labels(p, path);
    Checked c = visit(p, path);
    Judgment j;
    j.conclusion = c.conclusion;
    for (auto& h : c.open) {
      if (h.label != 0)
        throw CheckError(ErrorKind::DanglingLabel, {},
                         "hypothesis " + print_formula(h.formula) + " labelled " +
                             std::to_string(h.label) + " is never discharged");
      j.context.push_back(h.formula);
    }
    return j;
  }

 private:
  const Mode& mode_;
  std::map<const Proof*, FormulaPtr>* conclusions_;
  std::map<int, std::vector<size_t>> binders_;

  void scan_labels(const ProofPtr& p, std::vector<size_t>& path) {
    if (binds_label(p->rule.kind)) {
      if (p->rule.label <= 0)
        throw CheckError(ErrorKind::RuleMismatch, path,
                         std::string(rule_name(p->rule.kind)) +
                             " requires a positive discharge label");
      auto [it, fresh] = binders_.emplace(p->rule.label, path);
      if (!fresh)
        throw CheckError(ErrorKind::DuplicateLabel, path,
                         "label " + std::to_string(p->rule.label) +
                             " already bound at " + path_string(it->second));
    }
    for (size_t i = 0; i < p->premises.size(); ++i) {
      path.push_back(i);
      scan_labels(p->premises[i], path);
      path.pop_back();
    }
  }

  [[noreturn]] void mismatch(const std::vector<size_t>& path, std::string detail) {
    throw CheckError(ErrorKind::RuleMismatch, path, std::move(detail));
  }

  void require_arity(const ProofPtr& p, const std::vector<size_t>& path) {
    if (p->premises.size() != rule_arity(p->rule.kind))
      throw CheckError(ErrorKind::ArityError, path,
                       std::string(rule_name(p->rule.kind)) + " takes " +
                           std::to_string(rule_arity(p->rule.kind)) +
                           " premises, got " + std::to_string(p->premises.size()));
  }

  void gate_classical(ClassicalAxiom a, const ProofPtr& p,
                      const std::vector<size_t>& path) {
    if (!mode_.admits(a))
      throw CheckError(ErrorKind::ClassicalRuleNotAdmitted, path,
                       std::string(rule_name(p->rule.kind)) +
                           " is not admitted in this mode");
  }

  Checked premise(const ProofPtr& p, size_t i, std::vector<size_t>& path) {
    path.push_back(i);
    Checked c = visit(p->premises[i], path);
    path.pop_back();
    return c;
  }

  // Remove hypotheses carrying `label` from `open`, checking each against
  // `required` (when given).
  void discharge(std::vector<OpenHyp>& open, int label, const FormulaPtr& required,
                 const std::vector<size_t>& path) {
    std::vector<OpenHyp> kept;
    for (auto& h : open) {
      if (h.label == label) {
        if (required && !alpha_eq(h.formula, required))
          mismatch(path, "hypothesis labelled " + std::to_string(label) + " is " +
                             print_formula(h.formula) + ", expected " +
                             print_formula(required));
      } else {
        kept.push_back(std::move(h));
      }
    }
    open = std::move(kept);
  }

  void forbid_label(const std::vector<OpenHyp>& open, int label,
                    const std::vector<size_t>& path) {
    for (const auto& h : open)
      if (h.label == label)
        throw CheckError(ErrorKind::DanglingLabel, path,
                         "hypothesis " + print_formula(h.formula) + " labelled " +
                             std::to_string(label) +
                             " occurs outside the premise its binder discharges");
  }

  Checked visit(const ProofPtr& p, std::vector<size_t>& path) {
    Checked out = dispatch(p, path);
    if (conclusions_) (*conclusions_)[p.get()] = out.conclusion;
    return out;
  }

  Checked dispatch(const ProofPtr& p, std::vector<size_t>& path) {
    require_arity(p, path);
    const Rule& r = p->rule;
    switch (r.kind) {
      case RuleKind::Hyp: {
        if (r.label != 0 && !binders_.count(r.label))
          throw CheckError(ErrorKind::DanglingLabel, path,
                           "hypothesis " + print_formula(r.formula) + " labelled " +
                               std::to_string(r.label) + " has no binding rule");
        return {{{r.formula, r.label}}, r.formula};
      }

      case RuleKind::ImpliesI: {
        Checked c = premise(p, 0, path);
        discharge(c.open, r.label, r.formula, path);
        return {std::move(c.open), Formula::impl(r.formula, c.conclusion)};
      }

      case RuleKind::ImpliesE: {
        Checked a = premise(p, 0, path);
        Checked ab = premise(p, 1, path);
        if (ab.conclusion->kind != FKind::Implies)
          mismatch(path, "second premise of impl_e concludes " +
                             print_formula(ab.conclusion) + ", not an implication");
        if (!alpha_eq(a.conclusion, ab.conclusion->lhs))
          mismatch(path, "impl_e premises disagree: " + print_formula(a.conclusion) +
                             " vs " + print_formula(ab.conclusion));
        auto open = std::move(a.open);
        open.insert(open.end(), ab.open.begin(), ab.open.end());
        return {std::move(open), ab.conclusion->rhs};
      }

      case RuleKind::AndI: {
        Checked l = premise(p, 0, path);
        Checked rr = premise(p, 1, path);
        auto open = std::move(l.open);
        open.insert(open.end(), rr.open.begin(), rr.open.end());
        return {std::move(open), Formula::conj(l.conclusion, rr.conclusion)};
      }

      case RuleKind::AndEL:
      case RuleKind::AndER: {
        Checked c = premise(p, 0, path);
        if (c.conclusion->kind != FKind::And)
          mismatch(path, "premise concludes " + print_formula(c.conclusion) +
                             ", not a conjunction");
        auto concl = r.kind == RuleKind::AndEL ? c.conclusion->lhs : c.conclusion->rhs;
        return {std::move(c.open), concl};
      }

      case RuleKind::OrIL: {
        Checked c = premise(p, 0, path);
        return {std::move(c.open), Formula::disj(c.conclusion, r.formula)};
      }

      case RuleKind::OrIR: {
        Checked c = premise(p, 0, path);
        return {std::move(c.open), Formula::disj(r.formula, c.conclusion)};
      }

      case RuleKind::OrE: {
        Checked d = premise(p, 0, path);
        if (d.conclusion->kind != FKind::Or)
          mismatch(path, "first premise of or_e concludes " +
                             print_formula(d.conclusion) + ", not a disjunction");
        forbid_label(d.open, r.label, path);
        Checked l = premise(p, 1, path);
        Checked rr = premise(p, 2, path);
        if (!alpha_eq(l.conclusion, rr.conclusion))
          mismatch(path, "or_e branches conclude " + print_formula(l.conclusion) +
                             " and " + print_formula(rr.conclusion));
        discharge(l.open, r.label, d.conclusion->lhs, path);
        discharge(rr.open, r.label, d.conclusion->rhs, path);
        auto open = std::move(d.open);
        open.insert(open.end(), l.open.begin(), l.open.end());
        open.insert(open.end(), rr.open.begin(), rr.open.end());
        return {std::move(open), l.conclusion};
      }

      case RuleKind::BotE: {
        Checked c = premise(p, 0, path);
        if (c.conclusion->kind != FKind::Bottom)
          mismatch(path, "bot_e premise concludes " + print_formula(c.conclusion) +
                             ", expected bot");
        return {std::move(c.open), r.formula};
      }

      case RuleKind::ForallI: {
        Checked c = premise(p, 0, path);
        for (const auto& h : c.open)
          if (free_vars(h.formula).count(r.eigen))
            throw CheckError(ErrorKind::EigenvariableViolation, path,
                             "eigenvariable " + r.eigen +
                                 " is free in open hypothesis " +
                                 print_formula(h.formula));
        return {std::move(c.open), Formula::forall(r.eigen, c.conclusion)};
      }

      case RuleKind::ForallE: {
        Checked c = premise(p, 0, path);
        if (c.conclusion->kind != FKind::Forall)
          mismatch(path, "forall_e premise concludes " +
                             print_formula(c.conclusion) + ", not a universal");
        auto concl = substitute(c.conclusion->lhs, c.conclusion->name, r.term);
        return {std::move(c.open), concl};
      }

      case RuleKind::ExistsI: {
        Checked c = premise(p, 0, path);
        if (!r.formula || r.formula->kind != FKind::Exists)
          mismatch(path, "exists_i target is not an existential");
        auto instance = substitute(r.formula->lhs, r.formula->name, r.term);
        if (!alpha_eq(c.conclusion, instance))
          mismatch(path, "exists_i premise concludes " +
                             print_formula(c.conclusion) + ", expected " +
                             print_formula(instance));
        return {std::move(c.open), r.formula};
      }

      case RuleKind::ExistsE: {
        Checked ex = premise(p, 0, path);
        if (ex.conclusion->kind != FKind::Exists)
          mismatch(path, "first premise of exists_e concludes " +
                             print_formula(ex.conclusion) + ", not an existential");
        forbid_label(ex.open, r.label, path);
        Checked body = premise(p, 1, path);
        auto instance =
            substitute(ex.conclusion->lhs, ex.conclusion->name, Term::var(r.eigen));
        discharge(body.open, r.label, instance, path);
        if (free_vars(body.conclusion).count(r.eigen))
          throw CheckError(ErrorKind::EigenvariableViolation, path,
                           "eigenvariable " + r.eigen + " is free in conclusion " +
                               print_formula(body.conclusion));
        for (const auto& h : body.open)
          if (free_vars(h.formula).count(r.eigen))
            throw CheckError(ErrorKind::EigenvariableViolation, path,
                             "eigenvariable " + r.eigen +
                                 " is free in open hypothesis " +
                                 print_formula(h.formula));
        auto open = std::move(ex.open);
        open.insert(open.end(), body.open.begin(), body.open.end());
        return {std::move(open), body.conclusion};
      }

      case RuleKind::AxiomTND: {
        gate_classical(ClassicalAxiom::TND, p, path);
        return {{}, Formula::disj(r.formula, Formula::neg(r.formula))};
      }

      case RuleKind::AxiomRAA: {
        gate_classical(ClassicalAxiom::RAA, p, path);
        return {{}, Formula::impl(Formula::neg(Formula::neg(r.formula)), r.formula)};
      }

      case RuleKind::RuleRAA: {
        gate_classical(ClassicalAxiom::RAA_RULE, p, path);
        Checked c = premise(p, 0, path);
        if (c.conclusion->kind != FKind::Bottom)
          mismatch(path, "raa_rule premise concludes " +
                             print_formula(c.conclusion) + ", expected bot");
        discharge(c.open, r.label, Formula::neg(r.formula), path);
        return {std::move(c.open), r.formula};
      }

      case RuleKind::AxiomPeirce: {
        gate_classical(ClassicalAxiom::PEIRCE, p, path);
        auto pq = Formula::impl(r.formula, r.formula2);
        return {{}, Formula::impl(Formula::impl(pq, r.formula), r.formula)};
      }
    }
    mismatch(path, "unknown rule");
  }
};

// Counts alpha-equivalence classes with multiplicity.
std::vector<std::pair<FormulaPtr, int>> alpha_classes(
    const std::vector<FormulaPtr>& fs) {
  std::vector<std::pair<FormulaPtr, int>> classes;
  for (const auto& f : fs) {
    bool found = false;
    for (auto& [rep, n] : classes)
      if (alpha_eq(rep, f)) {
        ++n;
        found = true;
        break;
      }
    if (!found) classes.emplace_back(f, 1);
  }
  return classes;
}

}  // namespace

Judgment check(const ProofPtr& p, const Mode& m,
               std::map<const Proof*, FormulaPtr>* conclusions) {
  return Checker(m, conclusions).run(p);
}

bool judgment_matches(const Judgment& got, const Judgment& expected, bool as_set) {
  if (!alpha_eq(got.conclusion, expected.conclusion)) return false;
  auto a = alpha_classes(got.context);
  auto b = alpha_classes(expected.context);
  if (a.size() != b.size()) return false;
  for (const auto& [rep, n] : a) {
    bool found = false;
    for (const auto& [rep2, n2] : b)
      if (alpha_eq(rep, rep2)) {
        if (!as_set && n != n2) return false;
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool check_sequent(const ProofPtr& p, const Mode& m, const Judgment& expected,
                   bool context_as_set, std::string* error) {
  try {
    Judgment got = check(p, m);
    if (judgment_matches(got, expected, context_as_set)) return true;
    if (error)
      *error = "sequent mismatch: proved " + print_judgment(got) + ", expected " +
               print_judgment(expected);
    return false;
  } catch (const CheckError& e) {
    if (error) *error = e.render();
    return false;
  }
}

std::string print_judgment(const Judgment& j) {
  std::string s;
  for (size_t i = 0; i < j.context.size(); ++i) {
    if (i) s += ", ";
    s += print_formula(j.context[i]);
  }
  if (!j.context.empty()) s += " ";
  s += "|- ";
  s += print_formula(j.conclusion);
  return s;
}

}  // namespace gknd
