#include "gknd/parse.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace gknd {

namespace {

// Unicode connectives are accepted on input and normalized to ASCII.
std::string normalize(std::string_view text) {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"¬", "~"},        // ¬
      {"∧", "&"},        // ∧
      {"∨", "|"},        // ∨
      {"→", "->"},       // →
      {"⊥", " bot "},    // ⊥
      {"∀", " forall "}, // ∀
      {"∃", " exists "}, // ∃
  };
  std::string out(text);
  for (const auto& [from, to] : table) {
    size_t pos = 0;
    while ((pos = out.find(from, pos)) != std::string::npos) {
      out.replace(pos, from.size(), to);
      pos += to.size();
    }
  }
  return out;
}

struct Token {
  enum Kind { Ident, Tilde, Amp, Bar, Arrow, LParen, RParen, Comma, Dot, End } kind;
  std::string text;
  size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> ts;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      ts.push_back({Token::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    switch (c) {
      case '~': ts.push_back({Token::Tilde, "~", i}); ++i; break;
      case '&': ts.push_back({Token::Amp, "&", i}); ++i; break;
      case '|': ts.push_back({Token::Bar, "|", i}); ++i; break;
      case '(': ts.push_back({Token::LParen, "(", i}); ++i; break;
      case ')': ts.push_back({Token::RParen, ")", i}); ++i; break;
      case ',': ts.push_back({Token::Comma, ",", i}); ++i; break;
      case '.': ts.push_back({Token::Dot, ".", i}); ++i; break;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          ts.push_back({Token::Arrow, "->", i});
          i += 2;
          break;
        }
        throw ParseError("unexpected '-'", i);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  ts.push_back({Token::End, "", s.size()});
  return ts;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  FormulaPtr formula() {
    auto f = parse_implies();
    expect(Token::End, "end of input");
    return f;
  }

  TermPtr term() {
    auto t = parse_term();
    expect(Token::End, "end of input");
    return t;
  }

 private:
  std::vector<Token> toks_;
  size_t cur_ = 0;
  std::vector<std::string> bound_;
  std::map<std::string, size_t> term_arity_;
  std::map<std::string, size_t> pred_arity_;

  const Token& peek() const { return toks_[cur_]; }
  Token take() { return toks_[cur_++]; }

  void expect(Token::Kind k, const char* what) {
    if (peek().kind != k)
      throw ParseError(std::string("expected ") + what, peek().pos);
    take();
  }

  bool is_bound(const std::string& name) const {
    for (const auto& b : bound_)
      if (b == name) return true;
    return false;
  }

  void note_arity(std::map<std::string, size_t>& table, const std::string& sym,
                  size_t arity, size_t pos) {
    auto [it, inserted] = table.emplace(sym, arity);
    if (!inserted && it->second != arity)
      throw ParseError("arity clash for symbol '" + sym + "': used with " +
                           std::to_string(it->second) + " and " +
                           std::to_string(arity) + " arguments",
                       pos);
  }

  FormulaPtr parse_implies() {
    auto l = parse_or();
    if (peek().kind == Token::Arrow) {
      take();
      return Formula::impl(l, parse_implies());  // right-associative
    }
    return l;
  }

  FormulaPtr parse_or() {
    auto l = parse_and();
    while (peek().kind == Token::Bar) {
      take();
      l = Formula::disj(l, parse_and());
    }
    return l;
  }

  FormulaPtr parse_and() {
    auto l = parse_unary();
    while (peek().kind == Token::Amp) {
      take();
      l = Formula::conj(l, parse_unary());
    }
    return l;
  }

  FormulaPtr parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Tilde:
        take();
        return Formula::neg(parse_unary());
      case Token::LParen: {
        take();
        auto f = parse_implies();
        expect(Token::RParen, "')'");
        return f;
      }
      case Token::Ident: {
        if (t.text == "bot") { take(); return Formula::bottom(); }
        if (t.text == "forall" || t.text == "exists") return parse_quantifier();
        return parse_atom();
      }
      default:
        throw ParseError("expected a formula", t.pos);
    }
  }

  FormulaPtr parse_quantifier() {
    Token q = take();
    if (peek().kind != Token::Ident || peek().text == "bot" ||
        peek().text == "forall" || peek().text == "exists")
      throw ParseError("expected variable after '" + q.text + "'", peek().pos);
    std::string var = take().text;
    expect(Token::Dot, "'.'");
    bound_.push_back(var);
    auto body = parse_implies();  // body extends maximally right
    bound_.pop_back();
    return q.text == "forall" ? Formula::forall(var, body)
                              : Formula::exists(var, body);
  }

  FormulaPtr parse_atom() {
    Token id = take();
    std::vector<TermPtr> args;
    if (peek().kind == Token::LParen) {
      take();
      args.push_back(parse_term());
      while (peek().kind == Token::Comma) {
        take();
        args.push_back(parse_term());
      }
      expect(Token::RParen, "')'");
    }
    note_arity(pred_arity_, id.text, args.size(), id.pos);
    return Formula::atom(id.text, std::move(args));
  }

  TermPtr parse_term() {
    if (peek().kind != Token::Ident || peek().text == "bot")
      throw ParseError("expected a term", peek().pos);
    Token id = take();
    if (peek().kind == Token::LParen) {
      take();
      std::vector<TermPtr> args;
      args.push_back(parse_term());
      while (peek().kind == Token::Comma) {
        take();
        args.push_back(parse_term());
      }
      expect(Token::RParen, "')'");
      if (is_bound(id.text))
        throw ParseError("bound variable '" + id.text + "' used with arguments",
                         id.pos);
      note_arity(term_arity_, id.text, args.size(), id.pos);
      return Term::app(id.text, std::move(args));
    }
    if (!is_bound(id.text)) note_arity(term_arity_, id.text, 0, id.pos);
    return Term::var(id.text);
  }
};

// Printing precedence levels; higher binds tighter.
constexpr int kPrecImplies = 1;
constexpr int kPrecOr = 2;
constexpr int kPrecAnd = 3;
constexpr int kPrecUnary = 4;

void print_rec(const FormulaPtr& f, int parent, bool rightmost, std::string& out);

void print_binary(const FormulaPtr& f, int prec, const char* op, bool right_assoc,
                  int parent, bool rightmost, std::string& out) {
  // Left-associative chains reuse the same level on the left; implication
  // nests on the right.
  bool paren = prec < parent;
  if (paren) out += "(";
  if (right_assoc) {
    print_rec(f->lhs, prec + 1, false, out);
    out += op;
    print_rec(f->rhs, prec, paren || rightmost, out);
  } else {
    print_rec(f->lhs, prec, false, out);
    out += op;
    print_rec(f->rhs, prec + 1, paren || rightmost, out);
  }
  if (paren) out += ")";
}

void print_rec(const FormulaPtr& f, int parent, bool rightmost, std::string& out) {
  switch (f->kind) {
    case FKind::Bottom:
      out += "bot";
      return;
    case FKind::Atom: {
      out += f->name;
      if (!f->args.empty()) {
        out += "(";
        for (size_t i = 0; i < f->args.size(); ++i) {
          if (i) out += ",";
          out += print_term(f->args[i]);
        }
        out += ")";
      }
      return;
    }
    case FKind::Implies:
      if (is_negation(f)) {
        out += "~";
        print_rec(f->lhs, kPrecUnary, false, out);
        return;
      }
      print_binary(f, kPrecImplies, " -> ", true, parent, rightmost, out);
      return;
    case FKind::Or:
      print_binary(f, kPrecOr, " | ", false, parent, rightmost, out);
      return;
    case FKind::And:
      print_binary(f, kPrecAnd, " & ", false, parent, rightmost, out);
      return;
    case FKind::Forall:
    case FKind::Exists: {
      // A quantifier body runs to the end of the formula, so anywhere but
      // tail position the quantifier must be parenthesized.
      bool paren = !rightmost || parent > kPrecImplies;
      if (paren) out += "(";
      out += f->kind == FKind::Forall ? "forall " : "exists ";
      out += f->name;
      out += ". ";
      print_rec(f->lhs, kPrecImplies, true, out);
      if (paren) out += ")";
      return;
    }
  }
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
  return Parser(normalize(text)).formula();
}

TermPtr parse_term(std::string_view text) { return Parser(normalize(text)).term(); }

std::string print_term(const TermPtr& t) {
  std::string out = t->symbol;
  if (!t->args.empty()) {
    out += "(";
    for (size_t i = 0; i < t->args.size(); ++i) {
      if (i) out += ",";
      out += print_term(t->args[i]);
    }
    out += ")";
  }
  return out;
}

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  print_rec(f, 0, true, out);
  return out;
}

}  // namespace gknd
