#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "expr.hpp"
#include "trees.hpp"

namespace butree {

// Fresh unary symbol used to fold finality into the Father function. The
// expression parser cannot produce '$', so it is always outside the alphabet.
inline const Symbol kDollar{"$", 1, 0};

// Root(E) and Father(E,f) for every position of a linear expression, computed
// in one bottom-up pass over the AST.
struct PositionTable {
  std::set<Symbol> positions;
  std::set<Symbol> rootSet;
  std::map<Symbol, std::set<FatherPair>> fatherSets;  // one entry per position
};

PositionTable computePositionTable(const LinearExpr& e);

std::set<Symbol> rootSet(const LinearExpr& e);

// Father(E,f); f must be a position of e.
std::set<FatherPair> fatherSet(const LinearExpr& e, const Symbol& f);

// Father($(E),f): fatherSet plus ($,1) whenever f is a root.
std::set<FatherPair> augmentedFatherSet(const LinearExpr& e, const Symbol& f);
std::set<FatherPair> augmentedFatherSet(const PositionTable& table, const Symbol& f);

// P(t): every child edge (f,i) of t is sanctioned by Father(E, root of child).
bool satisfiesP(const PositionTable& table, const Tree& t);
bool satisfiesP(const LinearExpr& e, const Tree& t);

// t in L(E) iff root(t) in Root(E) and P(t).
bool membershipByCharacterization(const PositionTable& table, const Tree& t);
bool membershipByCharacterization(const LinearExpr& e, const Tree& t);

std::string positionTableToText(const PositionTable& table);
std::string positionTableToJson(const PositionTable& table);

}  // namespace butree
