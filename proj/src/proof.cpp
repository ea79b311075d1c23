#include "gknd/proof.hpp"

#include <algorithm>
#include <map>

#include "gknd/parse.hpp"

namespace gknd {

namespace {

ProofPtr node(Rule r, std::vector<ProofPtr> premises) {
  for (const auto& p : premises)
    if (!p) throw ProofError("null premise");
  if (premises.size() != rule_arity(r.kind))
    throw ProofError(std::string(rule_name(r.kind)) + " takes " +
                     std::to_string(rule_arity(r.kind)) + " premises, got " +
                     std::to_string(premises.size()));
  if (binds_label(r.kind) && r.kind != RuleKind::Hyp && r.label <= 0)
    throw ProofError(std::string(rule_name(r.kind)) + " needs a positive label");
  return std::make_shared<const Proof>(Proof{std::move(r), std::move(premises)});
}

}  // namespace

namespace pf {

ProofPtr hyp(FormulaPtr f, int label) {
  return node({RuleKind::Hyp, std::move(f), nullptr, nullptr, "", label}, {});
}
ProofPtr impl_i(FormulaPtr assume, int label, ProofPtr p) {
  return node({RuleKind::ImpliesI, std::move(assume), nullptr, nullptr, "", label},
              {std::move(p)});
}
ProofPtr impl_e(ProofPtr of_a, ProofPtr of_a_implies_b) {
  return node({RuleKind::ImpliesE}, {std::move(of_a), std::move(of_a_implies_b)});
}
ProofPtr and_i(ProofPtr l, ProofPtr r) {
  return node({RuleKind::AndI}, {std::move(l), std::move(r)});
}
ProofPtr and_e_l(ProofPtr p) { return node({RuleKind::AndEL}, {std::move(p)}); }
ProofPtr and_e_r(ProofPtr p) { return node({RuleKind::AndER}, {std::move(p)}); }
ProofPtr or_i_l(FormulaPtr other, ProofPtr p) {
  return node({RuleKind::OrIL, std::move(other)}, {std::move(p)});
}
ProofPtr or_i_r(FormulaPtr other, ProofPtr p) {
  return node({RuleKind::OrIR, std::move(other)}, {std::move(p)});
}
ProofPtr or_e(int label, ProofPtr of_disj, ProofPtr left, ProofPtr right) {
  return node({RuleKind::OrE, nullptr, nullptr, nullptr, "", label},
              {std::move(of_disj), std::move(left), std::move(right)});
}
ProofPtr bot_e(FormulaPtr target, ProofPtr p) {
  return node({RuleKind::BotE, std::move(target)}, {std::move(p)});
}
ProofPtr forall_i(std::string eigen, ProofPtr p) {
  return node({RuleKind::ForallI, nullptr, nullptr, nullptr, std::move(eigen)},
              {std::move(p)});
}
ProofPtr forall_e(TermPtr term, ProofPtr p) {
  return node({RuleKind::ForallE, nullptr, nullptr, std::move(term)},
              {std::move(p)});
}
ProofPtr exists_i(TermPtr witness, FormulaPtr target, ProofPtr p) {
  return node({RuleKind::ExistsI, std::move(target), nullptr, std::move(witness)},
              {std::move(p)});
}
ProofPtr exists_e(int label, std::string eigen, ProofPtr of_exists, ProofPtr body) {
  return node({RuleKind::ExistsE, nullptr, nullptr, nullptr, std::move(eigen), label},
              {std::move(of_exists), std::move(body)});
}
ProofPtr tnd(FormulaPtr a) { return node({RuleKind::AxiomTND, std::move(a)}, {}); }
ProofPtr raa(FormulaPtr a) { return node({RuleKind::AxiomRAA, std::move(a)}, {}); }
ProofPtr raa_rule(FormulaPtr a, int label, ProofPtr of_bot) {
  return node({RuleKind::RuleRAA, std::move(a), nullptr, nullptr, "", label},
              {std::move(of_bot)});
}
ProofPtr peirce(FormulaPtr p, FormulaPtr q) {
  return node({RuleKind::AxiomPeirce, std::move(p), std::move(q)}, {});
}

}  // namespace pf

const char* rule_name(RuleKind k) {
  switch (k) {
    case RuleKind::Hyp: return "hyp";
    case RuleKind::ImpliesI: return "impl_i";
    case RuleKind::ImpliesE: return "impl_e";
    case RuleKind::AndI: return "and_i";
    case RuleKind::AndEL: return "and_e_l";
    case RuleKind::AndER: return "and_e_r";
    case RuleKind::OrIL: return "or_i_l";
    case RuleKind::OrIR: return "or_i_r";
    case RuleKind::OrE: return "or_e";
    case RuleKind::BotE: return "bot_e";
    case RuleKind::ForallI: return "forall_i";
    case RuleKind::ForallE: return "forall_e";
    case RuleKind::ExistsI: return "exists_i";
    case RuleKind::ExistsE: return "exists_e";
    case RuleKind::AxiomTND: return "tnd";
    case RuleKind::AxiomRAA: return "raa";
    case RuleKind::RuleRAA: return "raa_rule";
    case RuleKind::AxiomPeirce: return "peirce";
  }
  return "?";
}

size_t rule_arity(RuleKind k) {
  switch (k) {
    case RuleKind::Hyp:
    case RuleKind::AxiomTND:
    case RuleKind::AxiomRAA:
    case RuleKind::AxiomPeirce:
      return 0;
    case RuleKind::ImpliesI:
    case RuleKind::AndEL:
    case RuleKind::AndER:
    case RuleKind::OrIL:
    case RuleKind::OrIR:
    case RuleKind::BotE:
    case RuleKind::ForallI:
    case RuleKind::ForallE:
    case RuleKind::ExistsI:
    case RuleKind::RuleRAA:
      return 1;
    case RuleKind::ImpliesE:
    case RuleKind::AndI:
    case RuleKind::ExistsE:
      return 2;
    case RuleKind::OrE:
      return 3;
  }
  return 0;
}

bool binds_label(RuleKind k) {
  return k == RuleKind::ImpliesI || k == RuleKind::OrE || k == RuleKind::ExistsE ||
         k == RuleKind::RuleRAA;
}

std::vector<size_t> binding_premises(RuleKind k) {
  switch (k) {
    case RuleKind::ImpliesI:
    case RuleKind::RuleRAA:
      return {0};
    case RuleKind::OrE:
      return {1, 2};
    case RuleKind::ExistsE:
      return {1};
    default:
      return {};
  }
}

size_t proof_size(const ProofPtr& p) {
  size_t n = 1;
  for (const auto& q : p->premises) n += proof_size(q);
  return n;
}

size_t proof_height(const ProofPtr& p) {
  size_t h = 0;
  for (const auto& q : p->premises) h = std::max(h, 1 + proof_height(q));
  return h;
}

std::set<ClassicalAxiom> classical_axioms_used(const ProofPtr& p) {
  std::set<ClassicalAxiom> out;
  switch (p->rule.kind) {
    case RuleKind::AxiomTND: out.insert(ClassicalAxiom::TND); break;
    case RuleKind::AxiomRAA: out.insert(ClassicalAxiom::RAA); break;
    case RuleKind::RuleRAA: out.insert(ClassicalAxiom::RAA_RULE); break;
    case RuleKind::AxiomPeirce: out.insert(ClassicalAxiom::PEIRCE); break;
    default: break;
  }
  for (const auto& q : p->premises) {
    auto sub = classical_axioms_used(q);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

namespace {

void collect_binders(const ProofPtr& p, std::set<int>& seen) {
  if (binds_label(p->rule.kind) && p->rule.kind != RuleKind::Hyp) {
    if (seen.count(p->rule.label))
      throw ProofError("duplicate discharge label " + std::to_string(p->rule.label));
    seen.insert(p->rule.label);
  }
  for (const auto& q : p->premises) collect_binders(q, seen);
}

// `scope` holds the labels whose binder designates the current subtree.
void open_hyps_rec(const ProofPtr& p, std::set<int>& scope,
                   std::vector<FormulaPtr>& out) {
  if (p->rule.kind == RuleKind::Hyp) {
    if (p->rule.label == 0) {
      out.push_back(p->rule.formula);
    } else if (!scope.count(p->rule.label)) {
      throw ProofError("dangling discharge label " + std::to_string(p->rule.label) +
                       " on hypothesis " + print_formula(p->rule.formula));
    }
    return;
  }
  auto binding = binding_premises(p->rule.kind);
  for (size_t i = 0; i < p->premises.size(); ++i) {
    bool binds_here = std::find(binding.begin(), binding.end(), i) != binding.end();
    if (binds_here) scope.insert(p->rule.label);
    open_hyps_rec(p->premises[i], scope, out);
    if (binds_here) scope.erase(p->rule.label);
  }
}

}  // namespace

std::vector<FormulaPtr> open_hypotheses(const ProofPtr& p) {
  std::set<int> binders;
  collect_binders(p, binders);
  std::set<int> scope;
  std::vector<FormulaPtr> out;
  open_hyps_rec(p, scope, out);
  return out;
}

int max_label(const ProofPtr& p) {
  int m = p->rule.label;
  for (const auto& q : p->premises) m = std::max(m, max_label(q));
  return m;
}

namespace {

void collect_bound_labels(const ProofPtr& p, std::set<int>& out) {
  if (binds_label(p->rule.kind)) out.insert(p->rule.label);
  for (const auto& q : p->premises) collect_bound_labels(q, out);
}

ProofPtr apply_relabel(const ProofPtr& p, const std::map<int, int>& m) {
  Rule r = p->rule;
  if (r.label != 0) {
    auto it = m.find(r.label);
    if (it != m.end()) r.label = it->second;
  }
  std::vector<ProofPtr> prem;
  prem.reserve(p->premises.size());
  for (const auto& q : p->premises) prem.push_back(apply_relabel(q, m));
  return std::make_shared<const Proof>(Proof{std::move(r), std::move(prem)});
}

}  // namespace

ProofPtr relabel_bound(const ProofPtr& p, int& counter) {
  std::set<int> bound;
  collect_bound_labels(p, bound);
  if (bound.empty()) return p;
  std::map<int, int> m;
  for (int l : bound) m[l] = counter++;
  return apply_relabel(p, m);
}

ProofPtr graft(const ProofPtr& p, const FormulaPtr& target,
               const ProofPtr& replacement, int& counter) {
  if (p->rule.kind == RuleKind::Hyp && p->rule.label == 0 &&
      alpha_eq(p->rule.formula, target))
    return relabel_bound(replacement, counter);
  std::vector<ProofPtr> prem;
  prem.reserve(p->premises.size());
  for (const auto& q : p->premises) prem.push_back(graft(q, target, replacement, counter));
  return std::make_shared<const Proof>(Proof{p->rule, std::move(prem)});
}

ProofPtr label_hyps(const ProofPtr& p, const FormulaPtr& target, int label) {
  if (p->rule.kind == RuleKind::Hyp && p->rule.label == 0 &&
      alpha_eq(p->rule.formula, target)) {
    Rule r = p->rule;
    r.label = label;
    return std::make_shared<const Proof>(Proof{std::move(r), {}});
  }
  std::vector<ProofPtr> prem;
  prem.reserve(p->premises.size());
  for (const auto& q : p->premises) prem.push_back(label_hyps(q, target, label));
  return std::make_shared<const Proof>(Proof{p->rule, std::move(prem)});
}

}  // namespace gknd
