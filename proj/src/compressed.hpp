#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "automaton.hpp"
#include "trees.hpp"

namespace butree {

// Transition whose origin slots carry sets of states: it stands for every
// tuple in the cartesian product of its origin sets.
struct CompressedTransition {
  std::vector<std::set<StateId>> originSets;  // |originSets| == arity(symbol)
  Symbol symbol;
  std::set<StateId> targets;

  bool operator==(const CompressedTransition& o) const {
    return originSets == o.originSets && symbol == o.symbol && targets == o.targets;
  }
  bool operator<(const CompressedTransition& o) const {
    if (originSets != o.originSets) return originSets < o.originSets;
    if (symbol != o.symbol) return symbol < o.symbol;
    return targets < o.targets;
  }
  std::string display() const;
};

class CompressedTreeAutomaton {
 public:
  CompressedTreeAutomaton(std::set<Symbol> alphabet, std::set<StateId> states,
                          std::set<StateId> finals, std::set<CompressedTransition> transitions);

  const std::set<Symbol>& alphabet() const { return alphabet_; }
  const std::set<StateId>& states() const { return states_; }
  const std::set<StateId>& finals() const { return finals_; }
  const std::set<CompressedTransition>& transitions() const { return transitions_; }
  const std::vector<const CompressedTransition*>& transitionsFor(const Symbol& f) const;

 private:
  std::set<Symbol> alphabet_;
  std::set<StateId> states_;
  std::set<StateId> finals_;
  std::set<CompressedTransition> transitions_;
  std::map<Symbol, std::vector<const CompressedTransition*>> bySymbol_;
};

// delta restricted to a state tuple: union of targets of the transitions
// whose i-th origin set contains the i-th origin.
std::set<StateId> restrictedDelta(const CompressedTreeAutomaton& c,
                                  const std::vector<StateId>& origins, const Symbol& f);

// Compressed Delta(t): a transition fires when every child's Delta intersects
// the matching origin set.
std::set<StateId> runCompressed(const CompressedTreeAutomaton& c, const Tree& t);

bool acceptsCompressed(const CompressedTreeAutomaton& c, const Tree& t);

CompressedTreeAutomaton alphabeticalImageCompressed(const CompressedTreeAutomaton& c,
                                                    const std::map<Symbol, Symbol>& phi);

// Quotient by a Bottom-Up congruence of the expansion: origin sets and targets
// mapped blockwise, duplicates merged.
CompressedTreeAutomaton quotientCompressed(const CompressedTreeAutomaton& c,
                                           const StatePartition& partition);

// One plain transition per tuple of the cartesian product of origin sets and
// per target.
TreeAutomaton expand(const CompressedTreeAutomaton& c);

// Transitions with an empty origin slot can never fire under either
// semantics; they are kept but reported here.
std::vector<CompressedTransition> deadTransitions(const CompressedTreeAutomaton& c);

bool isIsomorphicCompressed(const CompressedTreeAutomaton& a, const CompressedTreeAutomaton& b);

std::string toJson(const CompressedTreeAutomaton& c);
std::string toDot(const CompressedTreeAutomaton& c);
std::string toText(const CompressedTreeAutomaton& c);

}  // namespace butree
