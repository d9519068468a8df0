#pragma once

// Hand-transcribed machines and trees shared across suites, kept independent
// of the construction code so golden tests compare against fixed data.

#include <set>
#include <vector>

#include "automaton.hpp"
#include "compressed.hpp"
#include "expr.hpp"
#include "trees.hpp"

namespace fixtures {

using namespace butree;

inline const std::string kRunningExprText = "(f(a,a)+g(b))*a.bf(g(a),b)";

inline Symbol sym(const char* name, int arity, int index = 0) {
  return Symbol{name, arity, index};
}

// Positions of the linearized running example.
inline const Symbol A = sym("a", 0);
inline const Symbol B = sym("b", 0);
inline const Symbol F1 = sym("f", 2, 1);
inline const Symbol G2 = sym("g", 1, 2);
inline const Symbol F3 = sym("f", 2, 3);
inline const Symbol G4 = sym("g", 1, 4);

inline Tree leaf(const Symbol& s) { return Tree(s); }
inline Tree node(const Symbol& s, std::vector<Tree> kids) { return Tree(s, std::move(kids)); }

// The fourteen transitions of the position automaton of the running example,
// written out by hand from the Father table. The f3 origin tuple is (g4, b):
// g4 roots the first child of f3 and b the second.
inline TreeAutomaton runningPositionAutomaton() {
  std::set<Symbol> alphabet{A, B, F1, G2, F3, G4};
  std::set<StateId> states{"a", "b", "f1", "g2", "f3", "g4"};
  std::set<StateId> finals{"a", "f1", "g2"};
  std::set<Transition> delta;
  delta.insert({{}, A, "a"});
  delta.insert({{}, B, "b"});
  for (const StateId& x : {"a", "f1", "g2"}) {
    for (const StateId& y : {"a", "f1", "g2"}) {
      delta.insert({{x, y}, F1, "f1"});
    }
  }
  delta.insert({{"f3"}, G2, "g2"});
  delta.insert({{"g4", "b"}, F3, "f3"});
  delta.insert({{"a"}, G4, "g4"});
  return TreeAutomaton(alphabet, states, finals, delta);
}

// The nine transitions of the Father automaton of the running example.
inline TreeAutomaton runningFatherAutomaton() {
  std::set<Symbol> alphabet{A, B, F1, G2, F3, G4};
  const StateId qa = "{a}", qb = "{b}", qf = "{f1,g2}", qf3 = "{f3}", qg4 = "{g4}";
  std::set<StateId> states{qa, qb, qf, qf3, qg4};
  std::set<StateId> finals{qa, qf};
  std::set<Transition> delta;
  delta.insert({{}, A, qa});
  delta.insert({{}, B, qb});
  for (const StateId& x : {qa, qf}) {
    for (const StateId& y : {qa, qf}) {
      delta.insert({{x, y}, F1, qf});
    }
  }
  delta.insert({{qf3}, G2, qf});
  delta.insert({{qg4, qb}, F3, qf3});
  delta.insert({{qa}, G4, qg4});
  return TreeAutomaton(alphabet, states, finals, delta);
}

// Compressed transitions of the running example read off the Father table.
inline CompressedTreeAutomaton runningCompressedPositionAutomaton() {
  std::set<Symbol> alphabet{A, B, F1, G2, F3, G4};
  std::set<StateId> states{"a", "b", "f1", "g2", "f3", "g4"};
  std::set<StateId> finals{"a", "f1", "g2"};
  std::set<CompressedTransition> delta;
  delta.insert({{}, A, {"a"}});
  delta.insert({{}, B, {"b"}});
  delta.insert({{{"a", "f1", "g2"}, {"a", "f1", "g2"}}, F1, {"f1"}});
  delta.insert({{{"f3"}}, G2, {"g2"}});
  delta.insert({{{"g4"}, {"b"}}, F3, {"f3"}});
  delta.insert({{{"a"}}, G4, {"g4"}});
  return CompressedTreeAutomaton(alphabet, states, finals, delta);
}

inline CompressedTreeAutomaton runningCompressedFatherAutomaton() {
  std::set<Symbol> alphabet{A, B, F1, G2, F3, G4};
  const StateId qa = "{a}", qb = "{b}", qf = "{f1,g2}", qf3 = "{f3}", qg4 = "{g4}";
  std::set<StateId> states{qa, qb, qf, qf3, qg4};
  std::set<StateId> finals{qa, qf};
  std::set<CompressedTransition> delta;
  delta.insert({{}, A, {qa}});
  delta.insert({{}, B, {qb}});
  delta.insert({{{qa, qf}, {qa, qf}}, F1, {qf}});
  delta.insert({{{qf3}}, G2, {qf}});
  delta.insert({{{qg4}, {qb}}, F3, {qf3}});
  delta.insert({{{qa}}, G4, {qg4}});
  return CompressedTreeAutomaton(alphabet, states, finals, delta);
}

// The six-state compressed example automaton with numeric states and finals
// {1, 5}.
inline CompressedTreeAutomaton numericCompressedAutomaton() {
  Symbol f = sym("f", 2), g = sym("g", 1), a = sym("a", 0), b = sym("b", 0);
  std::set<Symbol> alphabet{f, g, a, b};
  std::set<StateId> states{"1", "2", "3", "4", "5", "6"};
  std::set<StateId> finals{"1", "5"};
  std::set<CompressedTransition> delta;
  delta.insert({{{"1", "2", "5"}, {"3", "4"}}, f, {"1"}});
  delta.insert({{{"2", "3", "5"}, {"4", "6"}}, f, {"2"}});
  delta.insert({{{"1", "2"}, {"3"}}, f, {"5"}});
  delta.insert({{{"6"}}, g, {"4"}});
  delta.insert({{{"6"}}, g, {"5"}});
  delta.insert({{}, a, {"6"}});
  delta.insert({{}, a, {"4"}});
  delta.insert({{}, b, {"3"}});
  return CompressedTreeAutomaton(alphabet, states, finals, delta);
}

}  // namespace fixtures
