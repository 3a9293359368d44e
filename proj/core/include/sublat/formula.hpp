#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sublat/errors.hpp"

namespace sublat {

enum class Conn { Var, Imp, And, Or, Not };

/// Immutable formula tree over {->, /\, \/, ~}.  top and bot are parser sugar:
/// top = _t -> _t for the reserved symbol _t, bot = ~top.
class Formula {
 public:
  Formula() = default;

  static Formula var(std::string name);
  static Formula imp(Formula l, Formula r);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula neg(Formula f);

  bool valid() const { return node_ != nullptr; }
  Conn kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }   // Var only
  Formula left() const { return Formula(node_->l); }        // Imp/And/Or/Not
  Formula right() const { return Formula(node_->r); }       // Imp/And/Or

  bool operator==(const Formula& other) const { return compare(*this, other) == 0; }
  bool operator!=(const Formula& other) const { return !(*this == other); }
  bool operator<(const Formula& other) const { return compare(*this, other) < 0; }

  static int compare(const Formula& a, const Formula& b);
  size_t hash() const;

  /// Minimal-parenthesis printing; precedence ~ > /\ > \/ > ->, with -> right
  /// associative and /\, \/ left associative.
  std::string to_string() const;

  int node_count() const;

 private:
  struct Node {
    Conn kind;
    std::string name;
    std::shared_ptr<const Node> l, r;
  };
  std::shared_ptr<const Node> node_;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
};

struct ParseError : ValidationError {
  size_t position;
  ParseError(const std::string& message, size_t pos)
      : ValidationError(message + " at position " + std::to_string(pos)), position(pos) {}
};

/// Tokens: identifiers [a-z][a-zA-Z0-9_]*, ->, /\, \/, ~, top, bot, parens.
/// Unicode aliases are accepted for all of them.
Formula parse_formula(std::string_view text);

Formula top_formula();
Formula bot_formula();

/// box f = (f -> f) -> f.
Formula box_formula(const Formula& f);

/// All subtrees, structurally deduplicated, in Formula::compare order.
std::vector<Formula> subformulas(const Formula& f);

/// Variable names, sorted, deduplicated.
std::vector<std::string> variables(const Formula& f);

using Substitution = std::map<std::string, Formula>;

/// Treats every variable of the scheme as a metavariable; returns the unique
/// substitution with substitute(result, scheme) == f, or nullopt.
std::optional<Substitution> match_scheme(const Formula& scheme, const Formula& f);

Formula substitute(const Substitution& sigma, const Formula& scheme);

}  // namespace sublat
