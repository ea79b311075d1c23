#include "gknd/syntax.hpp"

#include <cassert>
#include <cctype>
#include <map>
#include <stdexcept>
#include <utility>

namespace gknd {

TermPtr Term::var(std::string name) {
  return std::make_shared<const Term>(Term{std::move(name), {}});
}

TermPtr Term::app(std::string symbol, std::vector<TermPtr> args) {
  return std::make_shared<const Term>(Term{std::move(symbol), std::move(args)});
}

static FormulaPtr make(FKind k, std::string name, std::vector<TermPtr> args,
                       FormulaPtr l, FormulaPtr r) {
  return std::make_shared<const Formula>(
      Formula{k, std::move(name), std::move(args), std::move(l), std::move(r)});
}

FormulaPtr Formula::bottom() { return make(FKind::Bottom, "", {}, nullptr, nullptr); }

FormulaPtr Formula::atom(std::string name, std::vector<TermPtr> args) {
  return make(FKind::Atom, std::move(name), std::move(args), nullptr, nullptr);
}

FormulaPtr Formula::conj(FormulaPtr l, FormulaPtr r) {
  return make(FKind::And, "", {}, std::move(l), std::move(r));
}

FormulaPtr Formula::disj(FormulaPtr l, FormulaPtr r) {
  return make(FKind::Or, "", {}, std::move(l), std::move(r));
}

FormulaPtr Formula::impl(FormulaPtr l, FormulaPtr r) {
  return make(FKind::Implies, "", {}, std::move(l), std::move(r));
}

FormulaPtr Formula::neg(FormulaPtr f) { return impl(std::move(f), bottom()); }

FormulaPtr Formula::forall(std::string var, FormulaPtr body) {
  return make(FKind::Forall, std::move(var), {}, std::move(body), nullptr);
}

FormulaPtr Formula::exists(std::string var, FormulaPtr body) {
  return make(FKind::Exists, std::move(var), {}, std::move(body), nullptr);
}

bool is_negation(const FormulaPtr& f) {
  return f->kind == FKind::Implies && f->rhs->kind == FKind::Bottom;
}

bool struct_eq(const TermPtr& a, const TermPtr& b) {
  if (a->symbol != b->symbol || a->args.size() != b->args.size()) return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!struct_eq(a->args[i], b->args[i])) return false;
  return true;
}

bool struct_eq(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FKind::Bottom:
      return true;
    case FKind::Atom: {
      if (a->name != b->name || a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!struct_eq(a->args[i], b->args[i])) return false;
      return true;
    }
    case FKind::And:
    case FKind::Or:
    case FKind::Implies:
      return struct_eq(a->lhs, b->lhs) && struct_eq(a->rhs, b->rhs);
    case FKind::Forall:
    case FKind::Exists:
      return a->name == b->name && struct_eq(a->lhs, b->lhs);
  }
  return false;
}

namespace {

using RenameMap = std::map<std::string, int>;

bool alpha_eq_term(const TermPtr& a, const TermPtr& b, const RenameMap& la,
                   const RenameMap& lb) {
  auto ia = la.find(a->symbol);
  auto ib = lb.find(b->symbol);
  if ((ia == la.end()) != (ib == lb.end())) return false;
  if (ia != la.end()) {
    // Both bound: indices must agree; bound occurrences are 0-ary.
    if (ia->second != ib->second) return false;
    return a->args.empty() && b->args.empty();
  }
  if (a->symbol != b->symbol || a->args.size() != b->args.size()) return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!alpha_eq_term(a->args[i], b->args[i], la, lb)) return false;
  return true;
}

bool alpha_eq_rec(const FormulaPtr& a, const FormulaPtr& b, RenameMap& la,
                  RenameMap& lb, int depth) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FKind::Bottom:
      return true;
    case FKind::Atom: {
      if (a->name != b->name || a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!alpha_eq_term(a->args[i], b->args[i], la, lb)) return false;
      return true;
    }
    case FKind::And:
    case FKind::Or:
    case FKind::Implies:
      return alpha_eq_rec(a->lhs, b->lhs, la, lb, depth) &&
             alpha_eq_rec(a->rhs, b->rhs, la, lb, depth);
    case FKind::Forall:
    case FKind::Exists: {
      auto olda = la.find(a->name) == la.end()
                      ? std::pair<bool, int>{false, 0}
                      : std::pair<bool, int>{true, la[a->name]};
      auto oldb = lb.find(b->name) == lb.end()
                      ? std::pair<bool, int>{false, 0}
                      : std::pair<bool, int>{true, lb[b->name]};
      la[a->name] = depth;
      lb[b->name] = depth;
      bool ok = alpha_eq_rec(a->lhs, b->lhs, la, lb, depth + 1);
      if (olda.first) la[a->name] = olda.second; else la.erase(a->name);
      if (oldb.first) lb[b->name] = oldb.second; else lb.erase(b->name);
      return ok;
    }
  }
  return false;
}

void collect_term_vars(const TermPtr& t, std::set<std::string>& out) {
  if (t->args.empty()) out.insert(t->symbol);
  for (const auto& a : t->args) collect_term_vars(a, out);
}

void free_vars_rec(const FormulaPtr& f, std::set<std::string>& bound,
                   std::set<std::string>& out) {
  switch (f->kind) {
    case FKind::Bottom:
      return;
    case FKind::Atom:
      for (const auto& t : f->args) {
        std::set<std::string> vs;
        collect_term_vars(t, vs);
        for (const auto& v : vs)
          if (!bound.count(v)) out.insert(v);
      }
      return;
    case FKind::And:
    case FKind::Or:
    case FKind::Implies:
      free_vars_rec(f->lhs, bound, out);
      free_vars_rec(f->rhs, bound, out);
      return;
    case FKind::Forall:
    case FKind::Exists: {
      bool was = bound.count(f->name) > 0;
      bound.insert(f->name);
      free_vars_rec(f->lhs, bound, out);
      if (!was) bound.erase(f->name);
      return;
    }
  }
}

}  // namespace

bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b) {
  RenameMap la, lb;
  return alpha_eq_rec(a, b, la, lb, 0);
}

std::set<std::string> term_vars(const TermPtr& t) {
  std::set<std::string> out;
  collect_term_vars(t, out);
  return out;
}

std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  free_vars_rec(f, bound, out);
  return out;
}

TermPtr substitute(const TermPtr& in, const std::string& var, const TermPtr& t) {
  if (in->args.empty()) return in->symbol == var ? t : in;
  std::vector<TermPtr> args;
  args.reserve(in->args.size());
  for (const auto& a : in->args) args.push_back(substitute(a, var, t));
  return Term::app(in->symbol, std::move(args));
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const TermPtr& t) {
  switch (f->kind) {
    case FKind::Bottom:
      return f;
    case FKind::Atom: {
      std::vector<TermPtr> args;
      args.reserve(f->args.size());
      for (const auto& a : f->args) args.push_back(substitute(a, var, t));
      return Formula::atom(f->name, std::move(args));
    }
    case FKind::And:
      return Formula::conj(substitute(f->lhs, var, t), substitute(f->rhs, var, t));
    case FKind::Or:
      return Formula::disj(substitute(f->lhs, var, t), substitute(f->rhs, var, t));
    case FKind::Implies:
      return Formula::impl(substitute(f->lhs, var, t), substitute(f->rhs, var, t));
    case FKind::Forall:
    case FKind::Exists: {
      if (f->name == var) return f;
      auto body = f->lhs;
      std::string bv = f->name;
      if (free_vars(f).count(var)) {
        auto captured = term_vars(t);
        if (captured.count(bv)) {
          std::set<std::string> avoid = captured;
          auto fv = free_vars(body);
          avoid.insert(fv.begin(), fv.end());
          avoid.insert(var);
          std::string nv = fresh_var(bv, avoid);
          body = substitute(body, bv, Term::var(nv));
          bv = nv;
        }
      } else {
        return f;  // var not free below, nothing to do
      }
      auto sub = substitute(body, var, t);
      return f->kind == FKind::Forall ? Formula::forall(bv, sub)
                                      : Formula::exists(bv, sub);
    }
  }
  return f;
}

std::string fresh_var(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace gknd
