#include "gknd/translation.hpp"

namespace gknd {

namespace {

FormulaPtr neg(const FormulaPtr& f) { return Formula::neg(f); }
FormulaPtr nn(const FormulaPtr& f) { return neg(neg(f)); }

}  // namespace

FormulaPtr nn_translate(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Bottom:
      return f;
    case FKind::Atom:
      return nn(f);
    case FKind::And:
      return Formula::conj(nn_translate(f->lhs), nn_translate(f->rhs));
    case FKind::Implies:
      return Formula::impl(nn_translate(f->lhs), nn_translate(f->rhs));
    case FKind::Forall:
      return Formula::forall(f->name, nn_translate(f->lhs));
    case FKind::Or:
      return nn(Formula::disj(nn_translate(f->lhs), nn_translate(f->rhs)));
    case FKind::Exists:
      return nn(Formula::exists(f->name, nn_translate(f->lhs)));
  }
  return f;
}

std::vector<FormulaPtr> nn_translate_context(const std::vector<FormulaPtr>& context) {
  std::vector<FormulaPtr> out;
  out.reserve(context.size());
  for (const auto& f : context) out.push_back(nn_translate(f));
  return out;
}

ProofPtr triple_neg_proof(const FormulaPtr& a, int& counter) {
  int l1 = counter++, l2 = counter++;
  auto falsum = pf::impl_e(pf::hyp(a, l2), pf::hyp(neg(a), l1));  // bot
  auto nn_a = pf::impl_i(neg(a), l1, falsum);                     // ~~a
  auto falsum2 = pf::impl_e(nn_a, pf::hyp(neg(nn(a))));           // bot
  return pf::impl_i(a, l2, falsum2);                              // ~a
}

namespace {

ProofPtr stability_rec(const FormulaPtr& f, int& counter);

// Graft the recursive stability proof of `component` onto a derivation of
// ~~(component translated).
ProofPtr graft_ih(const FormulaPtr& component, const ProofPtr& of_nn, int& counter) {
  auto ih = stability_rec(component, counter);
  auto hyp_formula = nn(nn_translate(component));
  return graft(ih, hyp_formula, of_nn, counter);
}

ProofPtr stability_rec(const FormulaPtr& f, int& counter) {
  switch (f->kind) {
    case FKind::Bottom: {
      // ~~bot |- bot
      int l1 = counter++;
      auto not_bot = pf::impl_i(Formula::bottom(), l1, pf::hyp(Formula::bottom(), l1));
      return pf::impl_e(not_bot, pf::hyp(nn(Formula::bottom())));
    }
    case FKind::Atom:
      // ~~~~a |- ~~a is the triple negation proof at ~a.
      return triple_neg_proof(neg(f), counter);
    case FKind::Or:
    case FKind::Exists: {
      // Translation is ~~G; triple negation proof at ~G.
      auto g = f->kind == FKind::Or
                   ? Formula::disj(nn_translate(f->lhs), nn_translate(f->rhs))
                   : Formula::exists(f->name, nn_translate(f->lhs));
      return triple_neg_proof(neg(g), counter);
    }
    case FKind::Implies: {
      auto g = nn_translate(f->lhs);  // A translated
      auto h = nn_translate(f->rhs);  // B translated
      auto gh = Formula::impl(g, h);
      int l1 = counter++, l2 = counter++, l3 = counter++;
      auto b_nn = pf::impl_e(pf::hyp(g, l3), pf::hyp(gh, l1));   // H
      auto falsum = pf::impl_e(b_nn, pf::hyp(neg(h), l2));       // bot
      auto not_gh = pf::impl_i(gh, l1, falsum);                  // ~(G -> H)
      auto falsum2 = pf::impl_e(not_gh, pf::hyp(nn(gh)));        // bot
      auto nn_h = pf::impl_i(neg(h), l2, falsum2);               // ~~H
      auto of_h = graft_ih(f->rhs, nn_h, counter);               // H
      return pf::impl_i(g, l3, of_h);                            // G -> H
    }
    case FKind::And: {
      auto g = nn_translate(f->lhs);
      auto h = nn_translate(f->rhs);
      auto gh = Formula::conj(g, h);
      auto branch = [&](bool leftside) {
        int l1 = counter++, l2 = counter++;
        auto part = leftside ? g : h;
        auto projected = leftside ? pf::and_e_l(pf::hyp(gh, l1))
                                  : pf::and_e_r(pf::hyp(gh, l1));   // G or H
        auto falsum = pf::impl_e(projected, pf::hyp(neg(part), l2));  // bot
        auto not_gh = pf::impl_i(gh, l1, falsum);                   // ~(G & H)
        auto falsum2 = pf::impl_e(not_gh, pf::hyp(nn(gh)));         // bot
        auto nn_part = pf::impl_i(neg(part), l2, falsum2);          // ~~G / ~~H
        return graft_ih(leftside ? f->lhs : f->rhs, nn_part, counter);
      };
      return pf::and_i(branch(true), branch(false));  // G & H
    }
    case FKind::Forall: {
      auto g = nn_translate(f->lhs);  // A translated
      auto all_g = Formula::forall(f->name, g);
      int l1 = counter++, l2 = counter++;
      auto instance = pf::forall_e(Term::var(f->name), pf::hyp(all_g, l1));  // G
      auto falsum = pf::impl_e(instance, pf::hyp(neg(g), l2));               // bot
      auto not_all = pf::impl_i(all_g, l1, falsum);           // ~forall x.G
      auto falsum2 = pf::impl_e(not_all, pf::hyp(nn(all_g))); // bot
      auto nn_g = pf::impl_i(neg(g), l2, falsum2);            // ~~G
      // The ~A hypothesis is cancelled before forall_i, so the eigenvariable
      // condition holds: only ~~forall x.G remains open.
      auto of_g = graft_ih(f->lhs, nn_g, counter);            // G
      return pf::forall_i(f->name, of_g);                     // forall x.G
    }
  }
  throw ProofError("unreachable formula kind");
}

}  // namespace

ProofPtr stability_proof(const FormulaPtr& f, int& counter) {
  return stability_rec(f, counter);
}

ProofPtr stability_proof(const FormulaPtr& f) {
  int c = 1;
  return stability_rec(f, c);
}

ProofPtr triple_neg_proof(const FormulaPtr& a) {
  int c = 1;
  return triple_neg_proof(a, c);
}

}  // namespace gknd
