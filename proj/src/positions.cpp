#include "positions.hpp"

#include <sstream>

#include <json.hpp>

namespace butree {

namespace {

struct Partial {
  std::set<Symbol> root;
  std::map<Symbol, std::set<FatherPair>> father;
};

void merge(std::map<Symbol, std::set<FatherPair>>& into,
           const std::map<Symbol, std::set<FatherPair>>& from) {
  for (const auto& [sym, pairs] : from) into[sym].insert(pairs.begin(), pairs.end());
}

// Inductive Root/Father computation. Guarded terms (X | psi) contribute X only
// when psi holds.
Partial analyze(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Apply: {
      Partial out;
      out.root = {e.symbol()};
      for (std::size_t i = 0; i < e.args().size(); ++i) {
        Partial sub = analyze(e.args()[i]);
        merge(out.father, sub.father);
        for (const Symbol& f : sub.root) {
          out.father[f].insert(FatherPair{e.symbol(), static_cast<int>(i) + 1});
        }
      }
      return out;
    }
    case ExprKind::Sum: {
      Partial out = analyze(e.left());
      Partial r = analyze(e.right());
      out.root.insert(r.root.begin(), r.root.end());
      merge(out.father, r.father);
      return out;
    }
    case ExprKind::Product: {
      const Symbol& c = e.symbol();
      Partial l = analyze(e.left());
      Partial r = analyze(e.right());
      Partial out;
      if (containsNullary(e.left(), c)) {
        out.root = l.root;
        out.root.erase(c);
        out.root.insert(r.root.begin(), r.root.end());
      } else {
        out.root = l.root;
      }
      std::set<Symbol> domain;
      for (const auto& [sym, pairs] : l.father) domain.insert(sym);
      for (const auto& [sym, pairs] : r.father) domain.insert(sym);
      domain.insert(r.root.begin(), r.root.end());  // the guarded Father(E1,c) term
      domain.insert(c);
      for (const Symbol& f : domain) {
        std::set<FatherPair> pairs;
        if (f != c) {
          auto it = l.father.find(f);
          if (it != l.father.end()) pairs.insert(it->second.begin(), it->second.end());
        }
        auto itR = r.father.find(f);
        if (itR != r.father.end()) pairs.insert(itR->second.begin(), itR->second.end());
        if (r.root.count(f)) {
          auto itC = l.father.find(c);
          if (itC != l.father.end()) pairs.insert(itC->second.begin(), itC->second.end());
        }
        if (!pairs.empty()) out.father[f] = std::move(pairs);
      }
      return out;
    }
    case ExprKind::Star: {
      const Symbol& c = e.symbol();
      Partial out = analyze(e.inner());
      std::set<Symbol> innerRoot = out.root;
      out.root.insert(c);
      auto itC = out.father.find(c);
      if (itC != out.father.end()) {
        const std::set<FatherPair> fathersOfC = itC->second;
        for (const Symbol& f : innerRoot) {
          out.father[f].insert(fathersOfC.begin(), fathersOfC.end());
        }
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

PositionTable computePositionTable(const LinearExpr& e) {
  if (!isLinear(e.expr)) {
    throw std::invalid_argument("position table: expression is not linear");
  }
  Partial partial = analyze(e.expr);
  PositionTable table;
  table.positions = e.positions;
  table.rootSet = std::move(partial.root);
  for (const Symbol& p : e.positions) {
    auto it = partial.father.find(p);
    table.fatherSets[p] = it != partial.father.end() ? it->second : std::set<FatherPair>{};
  }
  return table;
}

std::set<Symbol> rootSet(const LinearExpr& e) { return computePositionTable(e).rootSet; }

std::set<FatherPair> fatherSet(const LinearExpr& e, const Symbol& f) {
  PositionTable table = computePositionTable(e);
  auto it = table.fatherSets.find(f);
  if (it == table.fatherSets.end()) {
    throw std::invalid_argument("fatherSet: " + f.display() + " is not a position");
  }
  return it->second;
}

std::set<FatherPair> augmentedFatherSet(const PositionTable& table, const Symbol& f) {
  for (const Symbol& p : table.positions) {
    if (p.name == kDollar.name) {
      throw std::invalid_argument("augmentedFatherSet: '$' already occurs in the alphabet");
    }
  }
  auto it = table.fatherSets.find(f);
  if (it == table.fatherSets.end()) {
    throw std::invalid_argument("augmentedFatherSet: " + f.display() + " is not a position");
  }
  std::set<FatherPair> out = it->second;
  if (table.rootSet.count(f)) out.insert(FatherPair{kDollar, 1});
  return out;
}

std::set<FatherPair> augmentedFatherSet(const LinearExpr& e, const Symbol& f) {
  return augmentedFatherSet(computePositionTable(e), f);
}

namespace {

bool checkP(const PositionTable& table, const Tree& t) {
  if (!table.fatherSets.count(t.label())) {
    throw std::invalid_argument("satisfiesP: symbol " + t.label().display() +
                                " is not a position of the expression");
  }
  const auto& kids = t.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (!checkP(table, kids[i])) return false;
    const auto& fathers = table.fatherSets.at(kids[i].label());
    if (!fathers.count(FatherPair{t.label(), static_cast<int>(i) + 1})) return false;
  }
  return true;
}

// Precondition walk is separate so a foreign symbol deep in a failing tree
// still raises instead of short-circuiting to false.
void requireKnown(const PositionTable& table, const Tree& t) {
  if (!table.fatherSets.count(t.label())) {
    throw std::invalid_argument("satisfiesP: symbol " + t.label().display() +
                                " is not a position of the expression");
  }
  for (const Tree& child : t.children()) requireKnown(table, child);
}

}  // namespace

bool satisfiesP(const PositionTable& table, const Tree& t) {
  requireKnown(table, t);
  return checkP(table, t);
}

bool satisfiesP(const LinearExpr& e, const Tree& t) {
  return satisfiesP(computePositionTable(e), t);
}

bool membershipByCharacterization(const PositionTable& table, const Tree& t) {
  requireKnown(table, t);
  return table.rootSet.count(rootOf(t)) != 0 && checkP(table, t);
}

bool membershipByCharacterization(const LinearExpr& e, const Tree& t) {
  return membershipByCharacterization(computePositionTable(e), t);
}

namespace {

std::string braced(const std::set<FatherPair>& pairs) {
  std::string out = "{";
  bool first = true;
  for (const FatherPair& p : pairs) {
    if (!first) out += ", ";
    out += p.display();
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string positionTableToText(const PositionTable& table) {
  std::ostringstream out;
  out << "root: {";
  bool first = true;
  for (const Symbol& s : table.rootSet) {
    if (!first) out << ", ";
    out << s.display();
    first = false;
  }
  out << "}\n";
  std::size_t width = 0;
  for (const auto& [sym, pairs] : table.fatherSets) width = std::max(width, sym.display().size());
  out << "father:\n";
  for (const auto& [sym, pairs] : table.fatherSets) {
    std::string name = sym.display();
    out << "  " << name << std::string(width - name.size(), ' ') << " -> " << braced(pairs)
        << "\n";
  }
  return out.str();
}

std::string positionTableToJson(const PositionTable& table) {
  nlohmann::ordered_json j;
  auto roots = nlohmann::ordered_json::array();
  for (const Symbol& s : table.rootSet) roots.push_back(s.display());
  j["root"] = std::move(roots);
  nlohmann::ordered_json father = nlohmann::ordered_json::object();
  for (const auto& [sym, pairs] : table.fatherSets) {
    auto list = nlohmann::ordered_json::array();
    for (const FatherPair& p : pairs) {
      list.push_back(nlohmann::ordered_json::array({p.parent.display(), p.childIndex}));
    }
    father[sym.display()] = std::move(list);
  }
  j["father"] = std::move(father);
  return j.dump(2) + "\n";
}

}  // namespace butree
