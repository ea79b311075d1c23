#include "gknd/proof_io.hpp"

#include <cctype>
#include <map>
#include <variant>
#include <vector>

#include "gknd/parse.hpp"

namespace gknd {

namespace {

struct Sexp {
  // Leaf text with a flag for quoted strings, or a list.
  std::string text;
  bool quoted = false;
  std::vector<Sexp> items;
  bool is_list = false;
  size_t pos = 0;
};

class SexpParser {
 public:
  explicit SexpParser(std::string_view s) : s_(s) {}

  Sexp parse() {
    auto e = next();
    skip_ws();
    if (i_ < s_.size()) throw ParseError("trailing input after proof", i_);
    return e;
  }

 private:
  std::string_view s_;
  size_t i_ = 0;

  void skip_ws() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) { ++i_; continue; }
      if (s_[i_] == ';') {  // comment to end of line
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
        continue;
      }
      break;
    }
  }

  Sexp next() {
    skip_ws();
    if (i_ >= s_.size()) throw ParseError("unexpected end of proof file", i_);
    size_t start = i_;
    if (s_[i_] == '(') {
      ++i_;
      Sexp list;
      list.is_list = true;
      list.pos = start;
      for (;;) {
        skip_ws();
        if (i_ >= s_.size()) throw ParseError("missing ')'", start);
        if (s_[i_] == ')') { ++i_; break; }
        list.items.push_back(next());
      }
      return list;
    }
    if (s_[i_] == '"') {
      ++i_;
      std::string out;
      while (i_ < s_.size() && s_[i_] != '"') {
        if (s_[i_] == '\\' && i_ + 1 < s_.size()) ++i_;
        out += s_[i_++];
      }
      if (i_ >= s_.size()) throw ParseError("unterminated string", start);
      ++i_;
      return {out, true, {}, false, start};
    }
    std::string out;
    while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) &&
           s_[i_] != '(' && s_[i_] != ')' && s_[i_] != '"')
      out += s_[i_++];
    return {out, false, {}, false, start};
  }
};

struct NodeArgs {
  std::map<std::string, Sexp> keywords;
  std::vector<Sexp> positional;
};

NodeArgs split_args(const Sexp& list) {
  NodeArgs out;
  for (size_t i = 1; i < list.items.size(); ++i) {
    const Sexp& e = list.items[i];
    if (!e.is_list && !e.quoted && !e.text.empty() && e.text[0] == ':') {
      if (i + 1 >= list.items.size())
        throw ParseError("keyword " + e.text + " needs a value", e.pos);
      out.keywords.emplace(e.text.substr(1), list.items[++i]);
    } else {
      out.positional.push_back(e);
    }
  }
  return out;
}

std::string want_text(const NodeArgs& a, const std::string& key, size_t pos) {
  auto it = a.keywords.find(key);
  if (it == a.keywords.end())
    throw ParseError("missing :" + key, pos);
  return it->second.text;
}

int want_label(const NodeArgs& a, size_t pos) {
  auto text = want_text(a, "label", pos);
  try {
    int v = std::stoi(text);
    if (v > 0) return v;
  } catch (...) {
  }
  throw ParseError("label must be a positive integer, got '" + text + "'", pos);
}

ProofPtr read_node(const Sexp& e);

ProofPtr sub(const NodeArgs& a, size_t index, const Sexp& e) {
  if (index >= a.positional.size())
    throw ParseError("missing premise " + std::to_string(index + 1) + " of " +
                         e.items[0].text,
                     e.pos);
  return read_node(a.positional[index]);
}

void expect_premises(const NodeArgs& a, size_t n, const Sexp& e) {
  if (a.positional.size() != n)
    throw ParseError(e.items[0].text + " takes " + std::to_string(n) +
                         " premises, got " + std::to_string(a.positional.size()),
                     e.pos);
}

ProofPtr read_node(const Sexp& e) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list)
    throw ParseError("expected a (rule ...) form", e.pos);
  const std::string& head = e.items[0].text;
  NodeArgs a = split_args(e);

  auto formula_at = [&](size_t i) {
    if (i >= a.positional.size() || !a.positional[i].quoted)
      throw ParseError(head + " expects a quoted formula", e.pos);
    return parse_formula(a.positional[i].text);
  };
  auto kw_formula = [&](const std::string& key) {
    return parse_formula(want_text(a, key, e.pos));
  };
  auto kw_term = [&](const std::string& key) {
    return parse_term(want_text(a, key, e.pos));
  };
  auto opt_label = [&]() {
    return a.keywords.count("label") ? want_label(a, e.pos) : 0;
  };

  if (head == "hyp") {
    expect_premises(a, 1, e);  // the formula string is the positional
    return pf::hyp(formula_at(0), opt_label());
  }
  if (head == "impl_i") {
    expect_premises(a, 1, e);
    return pf::impl_i(kw_formula("assume"), want_label(a, e.pos), sub(a, 0, e));
  }
  if (head == "impl_e") {
    expect_premises(a, 2, e);
    return pf::impl_e(sub(a, 0, e), sub(a, 1, e));
  }
  if (head == "and_i") {
    expect_premises(a, 2, e);
    return pf::and_i(sub(a, 0, e), sub(a, 1, e));
  }
  if (head == "and_e_l") {
    expect_premises(a, 1, e);
    return pf::and_e_l(sub(a, 0, e));
  }
  if (head == "and_e_r") {
    expect_premises(a, 1, e);
    return pf::and_e_r(sub(a, 0, e));
  }
  if (head == "or_i_l") {
    expect_premises(a, 1, e);
    return pf::or_i_l(kw_formula("other"), sub(a, 0, e));
  }
  if (head == "or_i_r") {
    expect_premises(a, 1, e);
    return pf::or_i_r(kw_formula("other"), sub(a, 0, e));
  }
  if (head == "or_e") {
    expect_premises(a, 3, e);
    return pf::or_e(want_label(a, e.pos), sub(a, 0, e), sub(a, 1, e), sub(a, 2, e));
  }
  if (head == "bot_e") {
    expect_premises(a, 1, e);
    return pf::bot_e(kw_formula("target"), sub(a, 0, e));
  }
  if (head == "forall_i") {
    expect_premises(a, 1, e);
    return pf::forall_i(want_text(a, "eigen", e.pos), sub(a, 0, e));
  }
  if (head == "forall_e") {
    expect_premises(a, 1, e);
    return pf::forall_e(kw_term("term"), sub(a, 0, e));
  }
  if (head == "exists_i") {
    expect_premises(a, 1, e);
    return pf::exists_i(kw_term("witness"), kw_formula("target"), sub(a, 0, e));
  }
  if (head == "exists_e") {
    expect_premises(a, 2, e);
    return pf::exists_e(want_label(a, e.pos), want_text(a, "eigen", e.pos),
                        sub(a, 0, e), sub(a, 1, e));
  }
  if (head == "tnd") {
    expect_premises(a, 1, e);
    return pf::tnd(formula_at(0));
  }
  if (head == "raa") {
    expect_premises(a, 1, e);
    return pf::raa(formula_at(0));
  }
  if (head == "raa_rule") {
    expect_premises(a, 2, e);
    return pf::raa_rule(formula_at(0), want_label(a, e.pos), sub(a, 1, e));
  }
  if (head == "peirce") {
    expect_premises(a, 2, e);
    return pf::peirce(formula_at(0), formula_at(1));
  }
  throw ParseError("unknown rule '" + head + "'", e.pos);
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

void write_node(const ProofPtr& p, std::string& out, int indent) {
  const Rule& r = p->rule;
  out.append(static_cast<size_t>(indent) * 2, ' ');
  out += "(";
  out += rule_name(r.kind);
  switch (r.kind) {
    case RuleKind::Hyp:
    case RuleKind::AxiomTND:
    case RuleKind::AxiomRAA:
    case RuleKind::RuleRAA:
      out += " " + quote(print_formula(r.formula));
      break;
    case RuleKind::AxiomPeirce:
      out += " " + quote(print_formula(r.formula));
      out += " " + quote(print_formula(r.formula2));
      break;
    case RuleKind::ImpliesI:
      out += " :assume " + quote(print_formula(r.formula));
      break;
    case RuleKind::OrIL:
    case RuleKind::OrIR:
      out += " :other " + quote(print_formula(r.formula));
      break;
    case RuleKind::BotE:
      out += " :target " + quote(print_formula(r.formula));
      break;
    case RuleKind::ForallI:
      out += " :eigen " + r.eigen;
      break;
    case RuleKind::ForallE:
      out += " :term " + quote(print_term(r.term));
      break;
    case RuleKind::ExistsI:
      out += " :witness " + quote(print_term(r.term));
      out += " :target " + quote(print_formula(r.formula));
      break;
    case RuleKind::ExistsE:
      out += " :eigen " + r.eigen;
      break;
    default:
      break;
  }
  if (r.label != 0) out += " :label " + std::to_string(r.label);
  for (const auto& q : p->premises) {
    out += "\n";
    write_node(q, out, indent + 1);
  }
  out += ")";
}

}  // namespace

LoadedProof read_proof(std::string_view text) {
  Sexp root = SexpParser(text).parse();
  if (root.is_list && !root.items.empty() && !root.items[0].is_list &&
      root.items[0].text == "proof") {
    NodeArgs a = split_args(root);
    LoadedProof out;
    if (a.positional.size() != 1)
      throw ParseError("(proof ...) wraps exactly one node", root.pos);
    out.proof = read_node(a.positional[0]);
    if (a.keywords.count("expect"))
      out.expect = parse_judgment(a.keywords.at("expect").text);
    return out;
  }
  return {read_node(root), std::nullopt};
}

std::string write_proof(const ProofPtr& p) {
  std::string out;
  write_node(p, out, 0);
  out += "\n";
  return out;
}

std::string write_proof(const ProofPtr& p, const Judgment& expect) {
  std::string out = "(proof :expect " + quote(print_judgment(expect)) + "\n";
  write_node(p, out, 1);
  out += ")\n";
  return out;
}

Judgment parse_judgment(std::string_view text) {
  std::string s(text);
  // Accept the turnstile both ways.
  size_t at = s.find("|-");
  size_t len = 2;
  if (at == std::string::npos) {
    at = s.find("⊢");
    len = std::string("⊢").size();
  }
  if (at == std::string::npos)
    throw ParseError("judgment needs a '|-'", 0);
  std::string ctx = s.substr(0, at);
  std::string concl = s.substr(at + len);
  Judgment j;
  j.conclusion = parse_formula(concl);
  // Split the context on commas at paren depth 0.
  int depth = 0;
  std::string cur;
  auto flush = [&]() {
    bool blank = true;
    for (char c : cur)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) j.context.push_back(parse_formula(cur));
    cur.clear();
  };
  for (char c : ctx) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
      continue;
    }
    cur += c;
  }
  flush();
  return j;
}

}  // namespace gknd
