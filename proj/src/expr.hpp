#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "trees.hpp"

namespace butree {

enum class ExprKind { Apply, Sum, Product, Star };

// Regular tree expression AST. Immutable; copies share nodes.
//   Apply(f, args)        f(E1,...,Ek)
//   Sum(l, r)             E1 + E2
//   Product(l, c, r)      E1 .c E2   (every c of a left tree replaced by right trees)
//   Star(inner, c)        E1 *c      (iterated c-substitution closure, base {c})
class Expr {
 public:
  static Expr apply(Symbol symbol, std::vector<Expr> args);
  static Expr sum(Expr left, Expr right);
  static Expr product(Expr left, Symbol c, Expr right);
  static Expr star(Expr inner, Symbol c);

  ExprKind kind() const;
  // Apply head, or the Product/Star subscript.
  const Symbol& symbol() const;
  const std::vector<Expr>& args() const;  // Apply only
  const Expr& left() const;               // Sum/Product
  const Expr& right() const;              // Sum/Product
  const Expr& inner() const;              // Star

  std::string str() const;
  bool operator==(const Expr& other) const;
  bool operator!=(const Expr& other) const { return !(*this == other); }

  // Stable address of the shared node, usable as a memoization key.
  const void* identity() const { return node_.get(); }

 private:
  struct Node {
    ExprKind kind;
    Symbol symbol;
    std::vector<Expr> subs;
  };
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// A linearized expression: every arity >= 1 symbol occurrence carries a unique
// position index. positions holds all symbols occurring in expr (nullary ones
// unindexed); delinearizer maps each position back to its base symbol.
struct LinearExpr {
  Expr expr;
  std::set<Symbol> positions;
  std::map<Symbol, Symbol> delinearizer;
};

// Concrete syntax (whitespace insignificant):
//   sum     := prod ('+' prod)*
//   prod    := factor ('.' IDENT factor)*      left-associative
//   factor  := atom ('*' IDENT)*               star binds tightest
//   atom    := '(' sum ')' | IDENT [ '(' sum (',' sum)* ')' ]
//   IDENT   := letter digit*
// Subscripts are nullary; arities come from usage. Throws ParseError.
Expr parseExpr(const std::string& text);

// Well-formedness: consistent arity per name, argument counts matching
// declared arities, nullary subscripts, and every product subscript occurring
// syntactically in the left operand. Empty result means valid.
std::vector<std::string> validate(const Expr& e);

// parseExpr + validate; throws ParseError (syntax) or std::invalid_argument
// (first validation violation).
Expr parseValidated(const std::string& text);

// True iff every symbol of arity >= 1 occurs at most once.
bool isLinear(const Expr& e);

// Decides c in L(e) syntactically. c must be nullary.
bool containsNullary(const Expr& e, const Symbol& c);

// Indexes arity >= 1 occurrences 1..n in a left-to-right pre-order reading.
// Requires validate(e) to pass.
LinearExpr linearize(const Expr& e);

// Strips position indices; delinearize(linearize(e)) == e.
Expr delinearize(const LinearExpr& le);

// Name -> arity map of a validated expression.
RankedAlphabet alphabetOf(const Expr& e);

// JSON rendering of the AST (node kind plus children), byte-stable.
std::string exprToJson(const Expr& e);

}  // namespace butree
