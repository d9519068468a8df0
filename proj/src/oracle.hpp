#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "constructions.hpp"

namespace butree {

struct EnumerationBound {
  int maxNodes = 9;
  int maxStarIterations = 0;  // 0 means maxNodes

  int effectiveStarIterations() const {
    return maxStarIterations > 0 ? maxStarIterations : maxNodes;
  }
};

// All trees of L(e) with at most maxNodes nodes. Substitution only grows node
// counts, so size-pruned recursion is exact; star substitution is iterated to
// a fixpoint within the bound (the iteration cap is asserted, not a silent
// truncation).
std::set<Tree> enumerateLanguage(const Expr& e, const EnumerationBound& b);

// Union of fatherOfTree over the enumerated language: a monotone
// under-approximation of Father(E,f).
std::set<FatherPair> fatherViaEnumeration(const Expr& e, const Symbol& f,
                                          const EnumerationBound& b);

std::set<Symbol> rootViaEnumeration(const Expr& e, const EnumerationBound& b);

// Seed-reproducible valid expression with at most maxPositions arity >= 1
// occurrences. Product subscripts are drawn from nullary symbols occurring in
// the already-generated left operand.
Expr randomExpression(std::uint64_t seed, int maxPositions, const RankedAlphabet& alphabet);

// Pooled enumeration of every tree over a fixed symbol set up to a node
// bound. Nodes are identified by dense ids, children precede parents, and
// subtrees are shared, so whole-universe sweeps run without materializing
// value trees.
class TreeUniverse {
 public:
  struct Node {
    int sym;
    std::vector<int> kids;
  };

  TreeUniverse(const std::set<Symbol>& symbolSet, int maxNodes);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  const Symbol& symbolOf(int id) const {
    return symbols_[static_cast<std::size_t>(nodes_[static_cast<std::size_t>(id)].sym)];
  }

  // Id of a tree, or -1 when it is not in the universe.
  int find(const Tree& t) const;
  Tree materialize(int id) const;

 private:
  int symbolIndex(const Symbol& s) const;
  void addNode(int si, std::vector<int> kids, int size);
  void fill(int si, std::vector<int>& kids, std::size_t slot, int remaining, int total);

  std::vector<Symbol> symbols_;
  std::vector<Node> nodes_;
  std::vector<std::vector<int>> bySize_;
  std::map<std::pair<int, std::vector<int>>, int> intern_;
};

// Every tree over exactly the given symbols with at most maxNodes nodes,
// materialized in ascending node count. Intended for small bounds; sweeps
// should use TreeUniverse directly.
std::vector<Tree> allTreesUpTo(const std::set<Symbol>& symbols, int maxNodes);

// The four constructions of an expression, linear and general, plus the
// position table they are read from.
struct ConstructionSuite {
  LinearExpr linear;
  PositionTable table;
  TreeAutomaton position;
  TreeAutomaton father;
  CompressedTreeAutomaton cposition;
  CompressedTreeAutomaton cfather;
  TreeAutomaton positionGeneral;
  TreeAutomaton fatherGeneral;
  CompressedTreeAutomaton cpositionGeneral;
  CompressedTreeAutomaton cfatherGeneral;
};

ConstructionSuite buildConstructionSuite(const Expr& e);

struct ValidationReport {
  Expr expression;
  EnumerationBound bound;
  long long treesChecked = 0;
  std::map<ConstructionKind, bool> perConstruction;
  bool positionFunctionAgreement = true;
  std::optional<Tree> firstCounterexample;

  bool allAgree() const;
  std::string summary() const;
};

// Enumerates every tree over the symbols of e (indexed universe for the
// linear constructions and the membership characterization, delinearized
// universe for the general ones) up to the bound and compares all membership
// paths against the enumeration oracle. Also checks that the enumerated root
// symbols and father pairs stay inside Root(E) / Father(E,.).
ValidationReport crossValidate(const Expr& e, const EnumerationBound& b);

// Same, over caller-supplied constructions; lets tests feed tampered automata
// to confirm the harness reports counterexamples.
ValidationReport validateConstructions(const Expr& e, const EnumerationBound& b,
                                       const ConstructionSuite& suite);

}  // namespace butree
