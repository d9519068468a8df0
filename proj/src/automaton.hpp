#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "trees.hpp"

namespace butree {

using StateId = std::string;

struct Transition {
  std::vector<StateId> origins;  // |origins| == arity(symbol)
  Symbol symbol;
  StateId target;

  bool operator==(const Transition& o) const {
    return origins == o.origins && symbol == o.symbol && target == o.target;
  }
  bool operator<(const Transition& o) const {
    if (origins != o.origins) return origins < o.origins;
    if (symbol != o.symbol) return symbol < o.symbol;
    return target < o.target;
  }
  std::string display() const;
};

// Bottom-up tree automaton with tuple-origin transitions.
class TreeAutomaton {
 public:
  TreeAutomaton(std::set<Symbol> alphabet, std::set<StateId> states, std::set<StateId> finals,
                std::set<Transition> transitions);

  const std::set<Symbol>& alphabet() const { return alphabet_; }
  const std::set<StateId>& states() const { return states_; }
  const std::set<StateId>& finals() const { return finals_; }
  const std::set<Transition>& transitions() const { return transitions_; }

  // delta(q1,...,qk,f); empty set when no transition matches.
  const std::set<StateId>& lookup(const std::vector<StateId>& origins, const Symbol& f) const;
  const std::vector<const Transition*>& transitionsFor(const Symbol& f) const;

 private:
  std::set<Symbol> alphabet_;
  std::set<StateId> states_;
  std::set<StateId> finals_;
  std::set<Transition> transitions_;
  std::map<std::pair<Symbol, std::vector<StateId>>, std::set<StateId>> exact_;
  std::map<Symbol, std::vector<const Transition*>> bySymbol_;
};

// Linear extension of delta to sets of origin states.
std::set<StateId> deltaOnSets(const TreeAutomaton& a,
                              const std::vector<std::set<StateId>>& originSets, const Symbol& f);

// Delta(t), computed bottom-up.
std::set<StateId> runTree(const TreeAutomaton& a, const Tree& t);

bool accepts(const TreeAutomaton& a, const Tree& t);

bool isDeterministic(const TreeAutomaton& a);

// Relabels transitions through an arity-preserving symbol map; states and
// finals are untouched.
TreeAutomaton alphabeticalImage(const TreeAutomaton& a, const std::map<Symbol, Symbol>& phi);

// A partition of a state set into disjoint non-empty blocks.
class StatePartition {
 public:
  explicit StatePartition(std::set<std::set<StateId>> blocks);

  const std::set<std::set<StateId>>& blocks() const { return blocks_; }
  bool covers(const std::set<StateId>& states) const;
  const std::set<StateId>& blockOf(const StateId& q) const;
  // "{a}" or "{f1,g2}": sorted member list.
  static std::string blockName(const std::set<StateId>& block);
  std::string blockNameOf(const StateId& q) const;

  static StatePartition identity(const std::set<StateId>& states);

 private:
  std::set<std::set<StateId>> blocks_;
  std::map<StateId, const std::set<StateId>*> blockOf_;
};

// Checks the substitutive property: replacing a state by a block-mate in any
// transition context yields equivalent results (empty ~ empty, singletons by
// block), and blocks respect finality. The automaton must be deterministic.
bool isBottomUpCongruence(const TreeAutomaton& a, const StatePartition& partition);

// Quotient automaton; requires isBottomUpCongruence(a, partition).
TreeAutomaton quotient(const TreeAutomaton& a, const StatePartition& partition);

// Finality- and transition-preserving bijection search; symbols map to
// themselves.
bool isIsomorphic(const TreeAutomaton& a, const TreeAutomaton& b);

std::string toJson(const TreeAutomaton& a);
std::string toDot(const TreeAutomaton& a);
std::string toText(const TreeAutomaton& a);

}  // namespace butree
