#pragma once

// Seeded random formula generator for property tests. Formulas stay small:
// depth <= 5, at most 3 atom symbols, at most 2 quantified variables.

#include <random>
#include <string>
#include <vector>

#include "gknd/syntax.hpp"

namespace gen {

struct Gen {
  std::mt19937 rng;
  int max_depth = 5;
  std::vector<std::string> atoms = {"a", "b", "c"};
  // fixed arities so printed formulas reparse (the parser tracks arity)
  std::vector<std::pair<std::string, int>> preds = {{"p", 1}, {"q", 2}};
  std::vector<std::string> qvars = {"x", "y"};

  explicit Gen(unsigned seed) : rng(seed) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  gknd::TermPtr term(const std::vector<std::string>& bound) {
    if (!bound.empty() && pick(2) == 0)
      return gknd::Term::var(bound[size_t(pick(int(bound.size())))]);
    if (pick(3) == 0)
      return gknd::Term::app("f", {gknd::Term::var("c" + std::to_string(pick(2)))});
    return gknd::Term::var("c" + std::to_string(pick(2)));
  }

  gknd::FormulaPtr leaf(const std::vector<std::string>& bound) {
    int r = pick(8);
    if (r == 0) return gknd::Formula::bottom();
    if (r <= 4) return gknd::Formula::atom(atoms[size_t(pick(int(atoms.size())))]);
    const auto& [name, arity] = preds[size_t(pick(int(preds.size())))];
    std::vector<gknd::TermPtr> args;
    for (int i = 0; i < arity; ++i) args.push_back(term(bound));
    return gknd::Formula::atom(name, args);
  }

  gknd::FormulaPtr formula(int depth, std::vector<std::string> bound) {
    if (depth <= 0 || pick(4) == 0) return leaf(bound);
    switch (pick(6)) {
      case 0:
        return gknd::Formula::conj(formula(depth - 1, bound), formula(depth - 1, bound));
      case 1:
        return gknd::Formula::disj(formula(depth - 1, bound), formula(depth - 1, bound));
      case 2:
        return gknd::Formula::impl(formula(depth - 1, bound), formula(depth - 1, bound));
      case 3:
        return gknd::Formula::neg(formula(depth - 1, bound));
      default: {
        if (bound.size() >= 2) return leaf(bound);
        std::string v = qvars[bound.size()];
        bound.push_back(v);
        auto body = formula(depth - 1, bound);
        return pick(2) == 0 ? gknd::Formula::forall(v, body)
                            : gknd::Formula::exists(v, body);
      }
    }
  }

  gknd::FormulaPtr formula() { return formula(max_depth, {}); }
};

}  // namespace gen
