#include "expr.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

namespace butree {

Expr Expr::apply(Symbol symbol, std::vector<Expr> args) {
  if (symbol.arity != static_cast<int>(args.size())) {
    throw std::invalid_argument("apply: symbol " + symbol.display() + " has arity " +
                                std::to_string(symbol.arity) + " but " +
                                std::to_string(args.size()) + " arguments were given");
  }
  return Expr(std::make_shared<const Node>(Node{ExprKind::Apply, std::move(symbol), std::move(args)}));
}

Expr Expr::sum(Expr left, Expr right) {
  return Expr(std::make_shared<const Node>(
      Node{ExprKind::Sum, Symbol{}, {std::move(left), std::move(right)}}));
}

Expr Expr::product(Expr left, Symbol c, Expr right) {
  return Expr(std::make_shared<const Node>(
      Node{ExprKind::Product, std::move(c), {std::move(left), std::move(right)}}));
}

Expr Expr::star(Expr inner, Symbol c) {
  return Expr(std::make_shared<const Node>(Node{ExprKind::Star, std::move(c), {std::move(inner)}}));
}

ExprKind Expr::kind() const { return node_->kind; }
const Symbol& Expr::symbol() const { return node_->symbol; }
const std::vector<Expr>& Expr::args() const { return node_->subs; }
const Expr& Expr::left() const { return node_->subs[0]; }
const Expr& Expr::right() const { return node_->subs[1]; }
const Expr& Expr::inner() const { return node_->subs[0]; }

bool Expr::operator==(const Expr& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind || node_->symbol != other.node_->symbol ||
      node_->subs.size() != other.node_->subs.size()) {
    return false;
  }
  for (std::size_t i = 0; i < node_->subs.size(); ++i) {
    if (!(node_->subs[i] == other.node_->subs[i])) return false;
  }
  return true;
}

namespace {

// Precedence: star (3) > product (2) > sum (1).
int precedence(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Apply: return 4;
    case ExprKind::Star: return 3;
    case ExprKind::Product: return 2;
    case ExprKind::Sum: return 1;
  }
  return 0;
}

void print(const Expr& e, std::ostream& out) {
  auto wrapped = [&out](const Expr& sub, int minPrec) {
    bool parens = precedence(sub) < minPrec;
    if (parens) out << '(';
    print(sub, out);
    if (parens) out << ')';
  };
  switch (e.kind()) {
    case ExprKind::Apply:
      out << e.symbol().display();
      if (!e.args().empty()) {
        out << '(';
        for (std::size_t i = 0; i < e.args().size(); ++i) {
          if (i != 0) out << ',';
          print(e.args()[i], out);
        }
        out << ')';
      }
      break;
    case ExprKind::Sum:
      wrapped(e.left(), 1);
      out << '+';
      wrapped(e.right(), 2);  // right operand of left-associative '+'
      break;
    case ExprKind::Product:
      wrapped(e.left(), 2);
      out << '.' << e.symbol().display();
      wrapped(e.right(), 3);
      break;
    case ExprKind::Star:
      wrapped(e.inner(), 3);
      out << '*' << e.symbol().display();
      break;
  }
}

}  // namespace

std::string Expr::str() const {
  std::ostringstream out;
  print(*this, out);
  return out.str();
}

namespace {

struct ExprParser {
  const std::string& text;
  std::size_t pos = 0;

  void skipWs() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skipWs();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos + 1), pos + 1);
  }

  std::string ident(const char* what) {
    skipWs();
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos]))) fail(what);
    std::string name(1, text[pos++]);
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      name += text[pos++];
    }
    return name;
  }

  Expr parseSum() {
    Expr e = parseProd();
    while (eat('+')) e = Expr::sum(std::move(e), parseProd());
    return e;
  }

  Expr parseProd() {
    Expr e = parseFactor();
    while (eat('.')) {
      Symbol c{ident("expected product subscript"), 0, 0};
      e = Expr::product(std::move(e), std::move(c), parseFactor());
    }
    return e;
  }

  Expr parseFactor() {
    Expr e = parseAtom();
    while (eat('*')) {
      Symbol c{ident("expected star subscript"), 0, 0};
      e = Expr::star(std::move(e), std::move(c));
    }
    return e;
  }

  Expr parseAtom() {
    skipWs();
    if (eat('(')) {
      Expr e = parseSum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    std::string name = ident("expected symbol or '('");
    std::vector<Expr> args;
    skipWs();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      args.push_back(parseSum());
      skipWs();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        args.push_back(parseSum());
        skipWs();
      }
      if (pos >= text.size() || text[pos] != ')') fail("expected ',' or ')'");
      ++pos;
    }
    Symbol head{name, static_cast<int>(args.size()), 0};
    return Expr::apply(std::move(head), std::move(args));
  }
};

}  // namespace

Expr parseExpr(const std::string& text) {
  ExprParser p{text};
  Expr e = p.parseSum();
  p.skipWs();
  if (p.pos != text.size()) p.fail("unexpected trailing input");
  return e;
}

namespace {

template <typename Fn>
void visit(const Expr& e, Fn&& fn) {
  fn(e);
  switch (e.kind()) {
    case ExprKind::Apply:
      for (const Expr& a : e.args()) visit(a, fn);
      break;
    case ExprKind::Sum:
    case ExprKind::Product:
      visit(e.left(), fn);
      visit(e.right(), fn);
      break;
    case ExprKind::Star:
      visit(e.inner(), fn);
      break;
  }
}

// Any appearance of a nullary symbol: as a leaf or as a subscript.
bool occursSyntactically(const Expr& e, const Symbol& c) {
  bool found = false;
  visit(e, [&](const Expr& sub) {
    if (sub.kind() == ExprKind::Apply && sub.symbol() == c) found = true;
    if ((sub.kind() == ExprKind::Product || sub.kind() == ExprKind::Star) && sub.symbol() == c) {
      found = true;
    }
  });
  return found;
}

}  // namespace

std::vector<std::string> validate(const Expr& e) {
  std::vector<std::string> violations;
  std::map<std::string, std::set<int>> arities;
  visit(e, [&](const Expr& sub) {
    switch (sub.kind()) {
      case ExprKind::Apply: {
        arities[sub.symbol().name].insert(sub.symbol().arity);
        if (sub.symbol().arity != static_cast<int>(sub.args().size())) {
          violations.push_back("arity mismatch: " + sub.symbol().display() + " declared arity " +
                               std::to_string(sub.symbol().arity) + " applied to " +
                               std::to_string(sub.args().size()) + " arguments");
        }
        break;
      }
      case ExprKind::Product:
        arities[sub.symbol().name].insert(0);
        if (sub.symbol().arity != 0) {
          violations.push_back("product subscript " + sub.symbol().display() + " is not nullary");
        }
        if (!occursSyntactically(sub.left(), Symbol{sub.symbol().name, 0, sub.symbol().index})) {
          violations.push_back("product subscript " + sub.symbol().display() +
                               " absent from left operand " + sub.left().str());
        }
        break;
      case ExprKind::Star:
        arities[sub.symbol().name].insert(0);
        if (sub.symbol().arity != 0) {
          violations.push_back("star subscript " + sub.symbol().display() + " is not nullary");
        }
        break;
      case ExprKind::Sum:
        break;
    }
  });
  for (const auto& [name, seen] : arities) {
    if (seen.size() > 1) {
      std::string msg = "symbol " + name + " used with arities";
      for (int a : seen) msg += " " + std::to_string(a);
      violations.push_back(msg);
    }
  }
  return violations;
}

Expr parseValidated(const std::string& text) {
  Expr e = parseExpr(text);
  auto violations = validate(e);
  if (!violations.empty()) throw std::invalid_argument("invalid expression: " + violations.front());
  return e;
}

bool isLinear(const Expr& e) {
  std::map<Symbol, int> counts;
  bool linear = true;
  visit(e, [&](const Expr& sub) {
    if (sub.kind() == ExprKind::Apply && sub.symbol().arity >= 1) {
      if (++counts[sub.symbol()] > 1) linear = false;
    }
  });
  return linear;
}

bool containsNullary(const Expr& e, const Symbol& c) {
  if (c.arity != 0) {
    throw std::invalid_argument("containsNullary: symbol " + c.display() + " must be nullary");
  }
  switch (e.kind()) {
    case ExprKind::Apply:
      return e.args().empty() && e.symbol() == c;
    case ExprKind::Sum:
      return containsNullary(e.left(), c) || containsNullary(e.right(), c);
    case ExprKind::Product: {
      const Symbol& d = e.symbol();
      return (c != d && containsNullary(e.left(), c)) ||
             (containsNullary(e.left(), d) && containsNullary(e.right(), c));
    }
    case ExprKind::Star:
      return c == e.symbol() || containsNullary(e.inner(), c);
  }
  return false;
}

namespace {

Expr indexOccurrences(const Expr& e, int& counter) {
  switch (e.kind()) {
    case ExprKind::Apply: {
      Symbol s = e.symbol();
      if (s.arity >= 1) s.index = ++counter;
      std::vector<Expr> args;
      args.reserve(e.args().size());
      for (const Expr& a : e.args()) args.push_back(indexOccurrences(a, counter));
      return Expr::apply(std::move(s), std::move(args));
    }
    case ExprKind::Sum: {
      Expr l = indexOccurrences(e.left(), counter);
      return Expr::sum(std::move(l), indexOccurrences(e.right(), counter));
    }
    case ExprKind::Product: {
      Expr l = indexOccurrences(e.left(), counter);
      return Expr::product(std::move(l), e.symbol(), indexOccurrences(e.right(), counter));
    }
    case ExprKind::Star:
      return Expr::star(indexOccurrences(e.inner(), counter), e.symbol());
  }
  throw std::logic_error("unreachable");
}

}  // namespace

LinearExpr linearize(const Expr& e) {
  auto violations = validate(e);
  if (!violations.empty()) {
    throw std::invalid_argument("linearize: invalid expression: " + violations.front());
  }
  int counter = 0;
  Expr indexed = indexOccurrences(e, counter);
  LinearExpr le{indexed, {}, {}};
  visit(indexed, [&](const Expr& sub) {
    // Subscripts count as occurrences: a star subscript can be a fresh
    // nullary symbol, and it roots the base tree of the closure.
    if (sub.kind() == ExprKind::Sum) return;
    le.positions.insert(sub.symbol());
    le.delinearizer[sub.symbol()] = sub.symbol().base();
  });
  return le;
}

namespace {

Expr stripIndices(const Expr& e, const std::map<Symbol, Symbol>& h) {
  auto mapSymbol = [&h](const Symbol& s) {
    auto it = h.find(s);
    return it != h.end() ? it->second : s.base();
  };
  switch (e.kind()) {
    case ExprKind::Apply: {
      std::vector<Expr> args;
      args.reserve(e.args().size());
      for (const Expr& a : e.args()) args.push_back(stripIndices(a, h));
      return Expr::apply(mapSymbol(e.symbol()), std::move(args));
    }
    case ExprKind::Sum: {
      Expr l = stripIndices(e.left(), h);
      return Expr::sum(std::move(l), stripIndices(e.right(), h));
    }
    case ExprKind::Product: {
      Expr l = stripIndices(e.left(), h);
      return Expr::product(std::move(l), mapSymbol(e.symbol()), stripIndices(e.right(), h));
    }
    case ExprKind::Star:
      return Expr::star(stripIndices(e.inner(), h), mapSymbol(e.symbol()));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Expr delinearize(const LinearExpr& le) { return stripIndices(le.expr, le.delinearizer); }

RankedAlphabet alphabetOf(const Expr& e) {
  auto violations = validate(e);
  if (!violations.empty()) {
    throw std::invalid_argument("alphabetOf: invalid expression: " + violations.front());
  }
  RankedAlphabet sigma;
  visit(e, [&](const Expr& sub) {
    switch (sub.kind()) {
      case ExprKind::Apply:
        sigma.add(sub.symbol().name, sub.symbol().arity);
        break;
      case ExprKind::Product:
      case ExprKind::Star:
        sigma.add(sub.symbol().name, 0);
        break;
      case ExprKind::Sum:
        break;
    }
  });
  return sigma;
}

namespace {

nlohmann::ordered_json astJson(const Expr& e) {
  nlohmann::ordered_json j;
  switch (e.kind()) {
    case ExprKind::Apply: {
      j["kind"] = "apply";
      j["symbol"] = e.symbol().display();
      j["arity"] = e.symbol().arity;
      auto args = nlohmann::ordered_json::array();
      for (const Expr& a : e.args()) args.push_back(astJson(a));
      j["args"] = std::move(args);
      break;
    }
    case ExprKind::Sum:
      j["kind"] = "sum";
      j["left"] = astJson(e.left());
      j["right"] = astJson(e.right());
      break;
    case ExprKind::Product:
      j["kind"] = "product";
      j["subscript"] = e.symbol().display();
      j["left"] = astJson(e.left());
      j["right"] = astJson(e.right());
      break;
    case ExprKind::Star:
      j["kind"] = "star";
      j["subscript"] = e.symbol().display();
      j["inner"] = astJson(e.inner());
      break;
  }
  return j;
}

}  // namespace

std::string exprToJson(const Expr& e) { return astJson(e).dump(2) + "\n"; }

}  // namespace butree
