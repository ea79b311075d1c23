#include "gknd/render.hpp"

#include <map>

#include "gknd/parse.hpp"

namespace gknd {

namespace {

std::string display_rule(const Rule& r) {
  std::string name;
  switch (r.kind) {
    case RuleKind::Hyp: return r.label ? "hyp (" + std::to_string(r.label) + ")" : "hyp";
    case RuleKind::ImpliesI: name = "\u2192i"; break;
    case RuleKind::ImpliesE: name = "\u2192e"; break;
    case RuleKind::AndI: name = "\u2227i"; break;
    case RuleKind::AndEL: name = "\u2227e\u2097"; break;
    case RuleKind::AndER: name = "\u2227e\u1d63"; break;
    case RuleKind::OrIL: name = "\u2228i\u2097"; break;
    case RuleKind::OrIR: name = "\u2228i\u1d63"; break;
    case RuleKind::OrE: name = "\u2228e"; break;
    case RuleKind::BotE: name = "\u22a5e"; break;
    case RuleKind::ForallI: name = "\u2200i"; break;
    case RuleKind::ForallE: name = "\u2200e"; break;
    case RuleKind::ExistsI: name = "\u2203i"; break;
    case RuleKind::ExistsE: name = "\u2203e"; break;
    case RuleKind::AxiomTND: name = "tnd"; break;
    case RuleKind::AxiomRAA: name = "raa"; break;
    case RuleKind::RuleRAA: name = "raa\u2032"; break;
    case RuleKind::AxiomPeirce: name = "peirce"; break;
  }
  if (r.label != 0) name += " (" + std::to_string(r.label) + ")";
  return name;
}

std::string unicode_formula(const FormulaPtr& f) {
  // Render through the ASCII printer, then swap in the usual symbols.
  std::string s = print_formula(f);
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"~", "\u00ac"},   {"&", "\u2227"},       {"|", "\u2228"},
      {"->", "\u2192"},  {"bot", "\u22a5"},     {"forall ", "\u2200"},
      {"exists ", "\u2203"},
  };
  std::string out;
  size_t i = 0;
  while (i < s.size()) {
    bool matched = false;
    for (const auto& [from, to] : table) {
      if (s.compare(i, from.size(), from) == 0) {
        // "bot" must be a whole word.
        if (from == "bot") {
          bool left_ok = i == 0 || !std::isalnum(static_cast<unsigned char>(s[i - 1]));
          bool right_ok = i + 3 >= s.size() ||
                          (!std::isalnum(static_cast<unsigned char>(s[i + 3])) &&
                           s[i + 3] != '_');
          if (!left_ok || !right_ok) continue;
        }
        out += to;
        i += from.size();
        matched = true;
        break;
      }
    }
    if (!matched) out += s[i++];
  }
  return out;
}

void ascii_rec(const ProofPtr& p,
               const std::map<const Proof*, FormulaPtr>& concl,
               const std::map<const Proof*, bool>& discharged, int indent,
               std::string& out) {
  out.append(static_cast<size_t>(indent) * 2, ' ');
  bool bracket = discharged.count(p.get()) && discharged.at(p.get());
  if (bracket) out += "[";
  out += unicode_formula(concl.at(p.get()));
  if (bracket) {
    out += "]";
    if (p->rule.label) out += "^" + std::to_string(p->rule.label);
  }
  if (p->rule.kind != RuleKind::Hyp || !bracket) {
    out += "   ";
    out += display_rule(p->rule);
  }
  out += "\n";
  for (const auto& q : p->premises)
    ascii_rec(q, concl, discharged, indent + 1, out);
}

void mark_discharged(const ProofPtr& p, std::map<const Proof*, bool>& out) {
  if (p->rule.kind == RuleKind::Hyp && p->rule.label != 0) out[p.get()] = true;
  for (const auto& q : p->premises) mark_discharged(q, out);
}

std::string latex_escape_formula(const FormulaPtr& f) {
  std::string s = print_formula(f);
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"~", "\\lnot "},   {"&", "\\land "},      {"|", "\\lor "},
      {"->", "\\to "},    {"bot", "\\bot "},     {"forall ", "\\forall "},
      {"exists ", "\\exists "},
  };
  std::string out;
  size_t i = 0;
  while (i < s.size()) {
    bool matched = false;
    for (const auto& [from, to] : table) {
      if (s.compare(i, from.size(), from) == 0) {
        if (from == "bot") {
          bool left_ok = i == 0 || !std::isalnum(static_cast<unsigned char>(s[i - 1]));
          bool right_ok = i + 3 >= s.size() ||
                          (!std::isalnum(static_cast<unsigned char>(s[i + 3])) &&
                           s[i + 3] != '_');
          if (!left_ok || !right_ok) continue;
        }
        out += to;
        i += from.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      if (s[i] == '_') out += "\\_";
      else out += s[i];
      ++i;
    }
  }
  return out;
}

std::string latex_rule(const Rule& r) {
  std::string name;
  switch (r.kind) {
    case RuleKind::Hyp: return "";
    case RuleKind::ImpliesI: name = "\\to_i"; break;
    case RuleKind::ImpliesE: name = "\\to_e"; break;
    case RuleKind::AndI: name = "\\land_i"; break;
    case RuleKind::AndEL: name = "\\land_{e_l}"; break;
    case RuleKind::AndER: name = "\\land_{e_r}"; break;
    case RuleKind::OrIL: name = "\\lor_{i_l}"; break;
    case RuleKind::OrIR: name = "\\lor_{i_r}"; break;
    case RuleKind::OrE: name = "\\lor_e"; break;
    case RuleKind::BotE: name = "\\bot_e"; break;
    case RuleKind::ForallI: name = "\\forall_i"; break;
    case RuleKind::ForallE: name = "\\forall_e"; break;
    case RuleKind::ExistsI: name = "\\exists_i"; break;
    case RuleKind::ExistsE: name = "\\exists_e"; break;
    case RuleKind::AxiomTND: name = "\\mathit{tnd}"; break;
    case RuleKind::AxiomRAA: name = "\\mathit{raa}"; break;
    case RuleKind::RuleRAA: name = "\\mathit{raa}'"; break;
    case RuleKind::AxiomPeirce: name = "\\mathit{peirce}"; break;
  }
  if (r.label != 0) name += "\\,(" + std::to_string(r.label) + ")";
  return name;
}

void latex_rec(const ProofPtr& p,
               const std::map<const Proof*, FormulaPtr>& concl,
               std::string& out) {
  if (p->rule.kind == RuleKind::Hyp) {
    std::string f = latex_escape_formula(concl.at(p.get()));
    if (p->rule.label != 0)
      out += "\\AxiomC{$[" + f + "]^{" + std::to_string(p->rule.label) + "}$}\n";
    else
      out += "\\AxiomC{$" + f + "$}\n";
    return;
  }
  for (const auto& q : p->premises) latex_rec(q, concl, out);
  if (p->premises.empty()) out += "\\AxiomC{}\n";
  std::string rule = latex_rule(p->rule);
  if (!rule.empty()) out += "\\RightLabel{$" + rule + "$}\n";
  std::string f = latex_escape_formula(concl.at(p.get()));
  switch (p->premises.size()) {
    case 0:
    case 1:
      out += "\\UnaryInfC{$" + f + "$}\n";
      break;
    case 2:
      out += "\\BinaryInfC{$" + f + "$}\n";
      break;
    default:
      out += "\\TrinaryInfC{$" + f + "$}\n";
      break;
  }
}

}  // namespace

std::string render_ascii(const ProofPtr& p, const Mode& m) {
  std::map<const Proof*, FormulaPtr> concl;
  check(p, m, &concl);
  std::map<const Proof*, bool> discharged;
  mark_discharged(p, discharged);
  std::string out;
  ascii_rec(p, concl, discharged, 0, out);
  return out;
}

std::string render_latex(const ProofPtr& p, const Mode& m) {
  std::map<const Proof*, FormulaPtr> concl;
  check(p, m, &concl);
  std::string out = "\\begin{prooftree}\n";
  latex_rec(p, concl, out);
  out += "\\end{prooftree}\n";
  return out;
}

}  // namespace gknd
