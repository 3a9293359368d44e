#include "sublat/formula.hpp"

#include <algorithm>
#include <set>

namespace sublat {

Formula Formula::var(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Conn::Var, std::move(name), nullptr, nullptr}));
}
Formula Formula::imp(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{Conn::Imp, {}, std::move(l.node_), std::move(r.node_)}));
}
Formula Formula::conj(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{Conn::And, {}, std::move(l.node_), std::move(r.node_)}));
}
Formula Formula::disj(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{Conn::Or, {}, std::move(l.node_), std::move(r.node_)}));
}
Formula Formula::neg(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Conn::Not, {}, std::move(f.node_), nullptr}));
}

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Conn::Var:
      return a.name().compare(b.name());
    case Conn::Not:
      return compare(a.left(), b.left());
    default: {
      int c = compare(a.left(), b.left());
      return c != 0 ? c : compare(a.right(), b.right());
    }
  }
}

size_t Formula::hash() const {
  size_t h = static_cast<size_t>(kind()) * 0x9e3779b97f4a7c15ull;
  switch (kind()) {
    case Conn::Var:
      for (char c : name()) h = h * 131 + static_cast<unsigned char>(c);
      return h;
    case Conn::Not:
      return h ^ (left().hash() * 3);
    default:
      return h ^ (left().hash() * 3) ^ (right().hash() * 7);
  }
}

int Formula::node_count() const {
  switch (kind()) {
    case Conn::Var: return 1;
    case Conn::Not: return 1 + left().node_count();
    default: return 1 + left().node_count() + right().node_count();
  }
}

namespace {

constexpr const char* kReservedTopVar = "_t";

int precedence(Conn k) {
  switch (k) {
    case Conn::Imp: return 1;
    case Conn::Or: return 2;
    case Conn::And: return 3;
    case Conn::Not: return 4;
    case Conn::Var: return 5;
  }
  return 5;
}

void print_rec(const Formula& f, int min_prec, std::string& out) {
  if (f == top_formula()) {
    out += "top";
    return;
  }
  if (f == bot_formula()) {
    out += "bot";
    return;
  }
  const int prec = precedence(f.kind());
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Conn::Var:
      out += f.name();
      break;
    case Conn::Not:
      out += '~';
      print_rec(f.left(), 4, out);
      break;
    case Conn::And:
      print_rec(f.left(), 3, out);
      out += " /\\ ";
      print_rec(f.right(), 4, out);
      break;
    case Conn::Or:
      print_rec(f.left(), 2, out);
      out += " \\/ ";
      print_rec(f.right(), 3, out);
      break;
    case Conn::Imp:
      print_rec(f.left(), 2, out);
      out += " -> ";
      print_rec(f.right(), 1, out);
      break;
  }
  if (parens) out += ')';
}

struct Lexer {
  enum class Tok { Ident, Top, Bot, Arrow, And, Or, Not, LParen, RParen, End };
  std::string_view text;
  size_t pos = 0;
  Tok tok = Tok::End;
  std::string ident;
  size_t tok_pos = 0;

  explicit Lexer(std::string_view t) : text(t) { next(); }

  bool starts_with(std::string_view s) const { return text.substr(pos, s.size()) == s; }

  void next() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
      ++pos;
    tok_pos = pos;
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    struct Alias {
      std::string_view spelling;
      Tok tok;
    };
    static constexpr Alias aliases[] = {
        {"->", Tok::Arrow},      {"→", Tok::Arrow}, {"/\\", Tok::And},  {"∧", Tok::And},
        {"\\/", Tok::Or},        {"∨", Tok::Or},    {"~", Tok::Not},    {"¬", Tok::Not},
        {"⊤", Tok::Top},    {"⊥", Tok::Bot},   {"(", Tok::LParen}, {")", Tok::RParen},
    };
    for (const Alias& a : aliases)
      if (starts_with(a.spelling)) {
        pos += a.spelling.size();
        tok = a.tok;
        return;
      }
    if (text[pos] >= 'a' && text[pos] <= 'z') {
      size_t start = pos;
      while (pos < text.size() && (isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
      ident = std::string(text.substr(start, pos - start));
      if (ident == "top")
        tok = Tok::Top;
      else if (ident == "bot")
        tok = Tok::Bot;
      else
        tok = Tok::Ident;
      return;
    }
    throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos);
  }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Formula parse() {
    Formula f = implication();
    if (lex_.tok != Lexer::Tok::End) throw ParseError("trailing input", lex_.tok_pos);
    return f;
  }

 private:
  Lexer lex_;

  Formula implication() {
    Formula lhs = disjunction();
    if (lex_.tok == Lexer::Tok::Arrow) {
      lex_.next();
      return Formula::imp(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (lex_.tok == Lexer::Tok::Or) {
      lex_.next();
      f = Formula::disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (lex_.tok == Lexer::Tok::And) {
      lex_.next();
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    if (lex_.tok == Lexer::Tok::Not) {
      lex_.next();
      return Formula::neg(unary());
    }
    return atom();
  }

  Formula atom() {
    switch (lex_.tok) {
      case Lexer::Tok::Ident: {
        Formula f = Formula::var(lex_.ident);
        lex_.next();
        return f;
      }
      case Lexer::Tok::Top:
        lex_.next();
        return top_formula();
      case Lexer::Tok::Bot:
        lex_.next();
        return bot_formula();
      case Lexer::Tok::LParen: {
        lex_.next();
        Formula f = implication();
        if (lex_.tok != Lexer::Tok::RParen) throw ParseError("expected ')'", lex_.tok_pos);
        lex_.next();
        return f;
      }
      default:
        throw ParseError("expected a formula", lex_.tok_pos);
    }
  }
};

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print_rec(*this, 0, out);
  return out;
}

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

Formula top_formula() {
  static const Formula top = Formula::imp(Formula::var(kReservedTopVar), Formula::var(kReservedTopVar));
  return top;
}

Formula bot_formula() {
  static const Formula bot = Formula::neg(top_formula());
  return bot;
}

Formula box_formula(const Formula& f) { return Formula::imp(Formula::imp(f, f), f); }

namespace {

void collect_subformulas(const Formula& f, std::set<Formula>& out) {
  out.insert(f);
  switch (f.kind()) {
    case Conn::Var: return;
    case Conn::Not: collect_subformulas(f.left(), out); return;
    default:
      collect_subformulas(f.left(), out);
      collect_subformulas(f.right(), out);
  }
}

void collect_variables(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Conn::Var: out.insert(f.name()); return;
    case Conn::Not: collect_variables(f.left(), out); return;
    default:
      collect_variables(f.left(), out);
      collect_variables(f.right(), out);
  }
}

bool match_rec(const Formula& scheme, const Formula& f, Substitution& sigma) {
  if (scheme.kind() == Conn::Var) {
    auto [it, inserted] = sigma.try_emplace(scheme.name(), f);
    return inserted || it->second == f;
  }
  if (scheme.kind() != f.kind()) return false;
  if (scheme.kind() == Conn::Not) return match_rec(scheme.left(), f.left(), sigma);
  return match_rec(scheme.left(), f.left(), sigma) && match_rec(scheme.right(), f.right(), sigma);
}

}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
  std::set<Formula> out;
  collect_subformulas(f, out);
  return {out.begin(), out.end()};
}

std::vector<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  collect_variables(f, out);
  return {out.begin(), out.end()};
}

std::optional<Substitution> match_scheme(const Formula& scheme, const Formula& f) {
  Substitution sigma;
  if (!match_rec(scheme, f, sigma)) return std::nullopt;
  return sigma;
}

Formula substitute(const Substitution& sigma, const Formula& scheme) {
  switch (scheme.kind()) {
    case Conn::Var: {
      auto it = sigma.find(scheme.name());
      if (it == sigma.end()) throw ValidationError("substitute: unbound metavariable " + scheme.name());
      return it->second;
    }
    case Conn::Not:
      return Formula::neg(substitute(sigma, scheme.left()));
    case Conn::And:
      return Formula::conj(substitute(sigma, scheme.left()), substitute(sigma, scheme.right()));
    case Conn::Or:
      return Formula::disj(substitute(sigma, scheme.left()), substitute(sigma, scheme.right()));
    case Conn::Imp:
      return Formula::imp(substitute(sigma, scheme.left()), substitute(sigma, scheme.right()));
  }
  throw ValidationError("substitute: malformed scheme");
}

}  // namespace sublat
