#include "gknd/compiler.hpp"

#include <functional>

#include "gknd/derivations.hpp"
#include "gknd/parse.hpp"

namespace gknd {

namespace {

FormulaPtr neg(const FormulaPtr& f) { return Formula::neg(f); }
FormulaPtr nn(const FormulaPtr& f) { return neg(neg(f)); }

// Intuitionistic double-negation introduction over a subproof of g.
ProofPtr dn_intro(const FormulaPtr& g, const ProofPtr& of_g, int& counter) {
  int l = counter++;
  return pf::impl_i(neg(g), l, pf::impl_e(of_g, pf::hyp(neg(g), l)));
}

// Rewrites raa_rule nodes to their axiom form and expands Peirce axioms
// through tertium non datur, so that compilation only meets the axiom cases
// the translation argument covers.
ProofPtr normalize_classical(const ProofPtr& p, int& counter) {
  std::vector<ProofPtr> prem;
  prem.reserve(p->premises.size());
  for (const auto& q : p->premises) prem.push_back(normalize_classical(q, counter));
  switch (p->rule.kind) {
    case RuleKind::RuleRAA:
      return raa_rule_from_axiom(p->rule.formula, prem[0], p->rule.label);
    case RuleKind::AxiomPeirce:
      return tnd_implies_peirce(p->rule.formula, p->rule.formula2, counter);
    default:
      return std::make_shared<const Proof>(Proof{p->rule, std::move(prem)});
  }
}

class Compiler {
 public:
  Compiler(std::map<const Proof*, FormulaPtr> conclusions, int counter, size_t cap)
      : concl_(std::move(conclusions)), counter_(counter), cap_(cap) {}

  ProofPtr compile(const ProofPtr& p) {
    const Rule& r = p->rule;
    switch (r.kind) {
      case RuleKind::Hyp:
        return pf::hyp(nn_translate(r.formula), r.label);

      case RuleKind::ImpliesI:
        return pf::impl_i(nn_translate(r.formula), r.label, compile(p->premises[0]));

      case RuleKind::ImpliesE:
        return pf::impl_e(compile(p->premises[0]), compile(p->premises[1]));

      case RuleKind::AndI:
        return pf::and_i(compile(p->premises[0]), compile(p->premises[1]));

      case RuleKind::AndEL:
        return pf::and_e_l(compile(p->premises[0]));

      case RuleKind::AndER:
        return pf::and_e_r(compile(p->premises[0]));

      case RuleKind::BotE:
        return pf::bot_e(nn_translate(r.formula), compile(p->premises[0]));

      case RuleKind::ForallI:
        return pf::forall_i(r.eigen, compile(p->premises[0]));

      case RuleKind::ForallE:
        return pf::forall_e(r.term, compile(p->premises[0]));

      case RuleKind::OrIL: {
        auto g = nn_translate(concl(p->premises[0]));
        auto h = nn_translate(r.formula);
        return wrap_nn(Formula::disj(g, h),
                       pf::or_i_l(h, compile(p->premises[0])));
      }

      case RuleKind::OrIR: {
        auto g = nn_translate(r.formula);
        auto h = nn_translate(concl(p->premises[0]));
        return wrap_nn(Formula::disj(g, h),
                       pf::or_i_r(g, compile(p->premises[0])));
      }

      case RuleKind::ExistsI: {
        auto inner = Formula::exists(r.formula->name, nn_translate(r.formula->lhs));
        return wrap_nn(inner,
                       pf::exists_i(r.term, inner, compile(p->premises[0])));
      }

      case RuleKind::OrE: {
        auto disj = concl(p->premises[0]);
        auto gh = Formula::disj(nn_translate(disj->lhs), nn_translate(disj->rhs));
        auto c = concl(p->premises[1]);
        auto inner = pf::or_e(r.label, pf::hyp(gh, 0), compile(p->premises[1]),
                              compile(p->premises[2]));
        return stabilized_elim(gh, c, inner, compile(p->premises[0]));
      }

      case RuleKind::ExistsE: {
        auto ex = concl(p->premises[0]);
        auto ex_t = Formula::exists(ex->name, nn_translate(ex->lhs));
        auto c = concl(p->premises[1]);
        auto inner =
            pf::exists_e(r.label, r.eigen, pf::hyp(ex_t, 0), compile(p->premises[1]));
        return stabilized_elim(ex_t, c, inner, compile(p->premises[0]));
      }

      case RuleKind::AxiomTND: {
        auto g = nn_translate(r.formula);
        auto t = Formula::disj(g, neg(g));  // (a | ~a) translated, inner part
        int l1 = counter_++, l2 = counter_++;
        auto falsum1 =
            pf::impl_e(pf::or_i_l(neg(g), pf::hyp(g, l1)), pf::hyp(neg(t), l2));
        auto not_g = pf::impl_i(g, l1, falsum1);  // ~G
        auto falsum2 = pf::impl_e(pf::or_i_r(g, not_g), pf::hyp(neg(t), l2));
        return pf::impl_i(neg(t), l2, falsum2);  // ~~(G | ~G)
      }

      case RuleKind::AxiomRAA: {
        // T(~~A -> A) = ~~T(A) -> T(A): the stability proof with its
        // hypothesis discharged.
        auto g = nn_translate(r.formula);
        int l = counter_++;
        auto st = stability_proof(r.formula, counter_);
        charge(st);
        return pf::impl_i(nn(g), l, label_hyps(st, nn(g), l));
      }

      case RuleKind::RuleRAA:
      case RuleKind::AxiomPeirce:
        break;  // removed by normalize_classical
    }
    throw ProofError("unexpected rule in normalized proof");
  }

 private:
  std::map<const Proof*, FormulaPtr> concl_;
  int counter_;
  size_t cap_;
  size_t generated_ = 0;

  const FormulaPtr& concl(const ProofPtr& p) const { return concl_.at(p.get()); }

  void charge(const ProofPtr& p) {
    generated_ += proof_size(p);
    if (generated_ > cap_) throw ProofSizeExceeded(cap_);
  }

  ProofPtr wrap_nn(const FormulaPtr& g, const ProofPtr& of_g) {
    return dn_intro(g, of_g, counter_);
  }

  // Shared tail of the or_e / exists_e cases: `inner` concludes C translated
  // from a placeholder hypothesis of `shape` (the translated disjunction or
  // existential), `of_nn_shape` proves ~~shape. Produces C translated via the
  // stability of C.
  ProofPtr stabilized_elim(const FormulaPtr& shape, const FormulaPtr& c,
                           ProofPtr inner, const ProofPtr& of_nn_shape) {
    auto c_t = nn_translate(c);
    int l = counter_++, m = counter_++;
    inner = graft_placeholder(inner, shape, l);
    auto falsum = pf::impl_e(inner, pf::hyp(neg(c_t), m));
    auto not_shape = pf::impl_i(shape, l, falsum);
    auto falsum2 = pf::impl_e(not_shape, of_nn_shape);
    auto nn_c = pf::impl_i(neg(c_t), m, falsum2);  // ~~C translated
    auto st = stability_proof(c, counter_);
    auto out = graft(st, nn(c_t), nn_c, counter_);
    charge(out);
    return out;
  }

  // The elimination gadgets are built over hyp(shape, 0); give those leaves
  // the discharge label before wrapping.
  ProofPtr graft_placeholder(const ProofPtr& p, const FormulaPtr& shape, int l) {
    if (p->rule.kind == RuleKind::Hyp && p->rule.label == 0 &&
        struct_eq(p->rule.formula, shape)) {
      return pf::hyp(p->rule.formula, l);
    }
    // Only the major-premise placeholder is at the top; premises 2/3 are
    // compiled subproofs and must not be rewritten.
    std::vector<ProofPtr> prem = p->premises;
    if (!prem.empty()) prem[0] = graft_placeholder(prem[0], shape, l);
    return std::make_shared<const Proof>(Proof{p->rule, std::move(prem)});
  }
};

// Builds the double-negation insertion/removal proofs of the backward
// direction. `src` is consumed; duplicates are relabelled.
class DnBuilder {
 public:
  DnBuilder(const FormulaPtr& root, int counter) : counter_(counter) {
    collect_names(root);
  }

  int counter() const { return counter_; }

  // Proof of (a translated) from a subproof `src` of a.
  ProofPtr add(const FormulaPtr& a, ProofPtr src) {
    switch (a->kind) {
      case FKind::Bottom:
        return src;
      case FKind::Atom:
        return dn_intro(a, src, counter_);
      case FKind::And: {
        auto left = add(a->lhs, pf::and_e_l(src));
        auto right = add(a->rhs, pf::and_e_r(dup(src)));
        return pf::and_i(left, right);
      }
      case FKind::Implies: {
        int k = counter_++;
        auto arg = drop(a->lhs, pf::hyp(nn_translate(a->lhs), k));
        auto body = add(a->rhs, pf::impl_e(arg, src));
        return pf::impl_i(nn_translate(a->lhs), k, body);
      }
      case FKind::Or: {
        auto t1 = nn_translate(a->lhs);
        auto t2 = nn_translate(a->rhs);
        int k = counter_++;
        auto left = pf::or_i_l(t2, add(a->lhs, pf::hyp(a->lhs, k)));
        auto right = pf::or_i_r(t1, add(a->rhs, pf::hyp(a->rhs, k)));
        auto of_disj = pf::or_e(k, src, left, right);  // T1 | T2
        return dn_intro(Formula::disj(t1, t2), of_disj, counter_);
      }
      case FKind::Forall: {
        std::string y = fresh();
        auto body = substitute(a->lhs, a->name, Term::var(y));
        return pf::forall_i(y, add(body, pf::forall_e(Term::var(y), src)));
      }
      case FKind::Exists: {
        std::string y = fresh();
        int k = counter_++;
        auto body = substitute(a->lhs, a->name, Term::var(y));
        auto target = Formula::exists(a->name, nn_translate(a->lhs));
        auto witness =
            pf::exists_i(Term::var(y), target, add(body, pf::hyp(body, k)));
        auto of_ex = pf::exists_e(k, y, src, witness);  // exists x. T(A)
        return dn_intro(target, of_ex, counter_);
      }
    }
    throw ProofError("unreachable formula kind");
  }

  // Proof of a from a subproof `src` of (a translated).
  ProofPtr drop(const FormulaPtr& a, ProofPtr src) {
    switch (a->kind) {
      case FKind::Bottom:
        return src;
      case FKind::Atom:
        return pf::impl_e(src, pf::raa(a));
      case FKind::And: {
        auto left = drop(a->lhs, pf::and_e_l(src));
        auto right = drop(a->rhs, pf::and_e_r(dup(src)));
        return pf::and_i(left, right);
      }
      case FKind::Implies: {
        int k = counter_++;
        auto arg = add(a->lhs, pf::hyp(a->lhs, k));
        auto body = drop(a->rhs, pf::impl_e(arg, src));
        return pf::impl_i(a->lhs, k, body);
      }
      case FKind::Or: {
        auto t1 = nn_translate(a->lhs);
        auto t2 = nn_translate(a->rhs);
        auto disj = Formula::disj(t1, t2);
        auto of_disj = pf::impl_e(src, pf::raa(disj));  // T1 | T2
        int k = counter_++;
        auto left = pf::or_i_l(a->rhs, drop(a->lhs, pf::hyp(t1, k)));
        auto right = pf::or_i_r(a->lhs, drop(a->rhs, pf::hyp(t2, k)));
        return pf::or_e(k, of_disj, left, right);
      }
      case FKind::Forall: {
        std::string y = fresh();
        auto body = substitute(a->lhs, a->name, Term::var(y));
        return pf::forall_i(y, drop(body, pf::forall_e(Term::var(y), src)));
      }
      case FKind::Exists: {
        auto inner = Formula::exists(a->name, nn_translate(a->lhs));
        auto of_ex = pf::impl_e(src, pf::raa(inner));
        std::string y = fresh();
        int k = counter_++;
        auto body = substitute(a->lhs, a->name, Term::var(y));
        auto witness = pf::exists_i(Term::var(y), a,
                                    drop(body, pf::hyp(nn_translate(body), k)));
        return pf::exists_e(k, y, of_ex, witness);
      }
    }
    throw ProofError("unreachable formula kind");
  }

 private:
  int counter_;
  std::set<std::string> names_;
  int var_counter_ = 0;

  ProofPtr dup(const ProofPtr& src) { return relabel_bound(src, counter_); }

  std::string fresh() {
    for (;;) {
      std::string cand = "v" + std::to_string(++var_counter_);
      if (!names_.count(cand)) {
        names_.insert(cand);
        return cand;
      }
    }
  }

  void collect_names(const FormulaPtr& f) {
    switch (f->kind) {
      case FKind::Bottom:
        return;
      case FKind::Atom:
        for (const auto& t : f->args) collect_names(t);
        return;
      case FKind::And:
      case FKind::Or:
      case FKind::Implies:
        collect_names(f->lhs);
        collect_names(f->rhs);
        return;
      case FKind::Forall:
      case FKind::Exists:
        names_.insert(f->name);
        collect_names(f->lhs);
        return;
    }
  }

  void collect_names(const TermPtr& t) {
    names_.insert(t->symbol);
    for (const auto& a : t->args) collect_names(a);
  }
};

}  // namespace

ProofPtr nk_to_nj(const ProofPtr& p, size_t size_cap) {
  check(p, Mode::nk());  // rejects unchecked input
  int counter = max_label(p) + 1;
  auto normalized = normalize_classical(p, counter);
  std::map<const Proof*, FormulaPtr> conclusions;
  check(normalized, Mode::nk(), &conclusions);
  Compiler compiler(std::move(conclusions), counter, size_cap);
  auto out = compiler.compile(normalized);
  if (proof_size(out) > size_cap) throw ProofSizeExceeded(size_cap);
  return out;
}

ProofPtr nj_embed(const ProofPtr& p) {
  check(p, Mode::nj());
  return p;
}

ProofPtr add_dn_proof(const FormulaPtr& a) {
  DnBuilder b(a, 1);
  return b.add(a, pf::hyp(a));
}

ProofPtr drop_dn_proof(const FormulaPtr& a) {
  DnBuilder b(a, 1);
  return b.drop(a, pf::hyp(nn_translate(a)));
}

ProofPtr nj_translation_to_nk(const ProofPtr& p, const std::vector<FormulaPtr>& gamma,
                              const FormulaPtr& f, size_t size_cap) {
  Judgment expected{nn_translate_context(gamma), nn_translate(f)};
  Judgment got = check(p, Mode::nj());
  if (!judgment_matches(got, expected, /*as_set=*/true))
    throw CheckError(ErrorKind::ConclusionMismatch, {},
                     "proof of " + print_judgment(got) +
                         " does not match the translated sequent " +
                         print_judgment(expected));

  int counter = max_label(p) + 1;
  ProofPtr q = p;
  // Distinct hypothesis classes only; grafting is idempotent per class.
  std::vector<FormulaPtr> done;
  for (const auto& a : gamma) {
    bool seen = false;
    for (const auto& d : done)
      if (alpha_eq(d, a)) { seen = true; break; }
    if (seen) continue;
    done.push_back(a);
    DnBuilder b(a, counter);
    auto lift = b.add(a, pf::hyp(a));  // {a} |- a translated
    counter = b.counter();
    q = graft(q, nn_translate(a), lift, counter);
  }
  // Collect every name so eigenvariables stay fresh for the whole sequent.
  auto everything = f;
  for (const auto& a : gamma) everything = Formula::conj(everything, a);
  DnBuilder b(everything, counter);
  auto out = b.drop(f, q);
  if (proof_size(out) > size_cap) throw ProofSizeExceeded(size_cap);
  return out;
}

}  // namespace gknd
