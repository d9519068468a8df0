#include "constructions.hpp"

#include <functional>

namespace butree {

const char* constructionName(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::Position: return "position";
    case ConstructionKind::Father: return "father";
    case ConstructionKind::CompressedPosition: return "cposition";
    case ConstructionKind::CompressedFather: return "cfather";
  }
  return "?";
}

std::map<Symbol, Symbol> delinearizerOf(const LinearExpr& e) { return e.delinearizer; }

namespace {

void requireLinear(const LinearExpr& e, const char* who) {
  if (!isLinear(e.expr)) {
    throw std::invalid_argument(std::string(who) + ": expression is not linear");
  }
}

// Per slot i of position g: the positions x with (g,i) in Father(E,x).
std::vector<std::set<Symbol>> slotOrigins(const PositionTable& table, const Symbol& g) {
  std::vector<std::set<Symbol>> slots(static_cast<std::size_t>(g.arity));
  for (const auto& [x, fathers] : table.fatherSets) {
    for (int i = 1; i <= g.arity; ++i) {
      if (fathers.count(FatherPair{g, i})) slots[static_cast<std::size_t>(i - 1)].insert(x);
    }
  }
  return slots;
}

}  // namespace

TreeAutomaton positionAutomaton(const LinearExpr& e) {
  requireLinear(e, "positionAutomaton");
  PositionTable table = computePositionTable(e);
  std::set<Symbol> alphabet = e.positions;
  std::set<StateId> states;
  for (const Symbol& p : e.positions) states.insert(p.display());
  std::set<StateId> finals;
  for (const Symbol& r : table.rootSet) finals.insert(r.display());
  std::set<Transition> transitions;
  for (const Symbol& g : e.positions) {
    auto slots = slotOrigins(table, g);
    std::vector<StateId> tuple(static_cast<std::size_t>(g.arity));
    std::function<void(std::size_t)> emit = [&](std::size_t slot) {
      if (slot == slots.size()) {
        transitions.insert(Transition{tuple, g, g.display()});
        return;
      }
      for (const Symbol& x : slots[slot]) {
        tuple[slot] = x.display();
        emit(slot + 1);
      }
    };
    emit(0);
  }
  return TreeAutomaton(std::move(alphabet), std::move(states), std::move(finals),
                       std::move(transitions));
}

TreeAutomaton positionAutomatonGeneral(const Expr& e) {
  LinearExpr le = linearize(e);
  return alphabeticalImage(positionAutomaton(le), delinearizerOf(le));
}

StatePartition fatherCongruence(const LinearExpr& e) {
  requireLinear(e, "fatherCongruence");
  PositionTable table = computePositionTable(e);
  std::map<std::set<FatherPair>, std::set<StateId>> byFatherSet;
  for (const Symbol& p : e.positions) {
    byFatherSet[augmentedFatherSet(table, p)].insert(p.display());
  }
  std::set<std::set<StateId>> blocks;
  for (auto& [fathers, block] : byFatherSet) blocks.insert(block);
  return StatePartition(std::move(blocks));
}

TreeAutomaton fatherAutomaton(const LinearExpr& e) {
  requireLinear(e, "fatherAutomaton");
  PositionTable table = computePositionTable(e);
  StatePartition partition = fatherCongruence(e);
  std::set<StateId> states;
  std::set<StateId> finals;
  for (const Symbol& p : e.positions) {
    StateId name = partition.blockNameOf(p.display());
    states.insert(name);
    if (augmentedFatherSet(table, p).count(FatherPair{kDollar, 1})) finals.insert(name);
  }
  std::set<Transition> transitions;
  for (const Symbol& g : e.positions) {
    auto slots = slotOrigins(table, g);
    std::vector<StateId> tuple(static_cast<std::size_t>(g.arity));
    std::function<void(std::size_t)> emit = [&](std::size_t slot) {
      if (slot == slots.size()) {
        transitions.insert(Transition{tuple, g, partition.blockNameOf(g.display())});
        return;
      }
      for (const Symbol& x : slots[slot]) {
        tuple[slot] = partition.blockNameOf(x.display());
        emit(slot + 1);
      }
    };
    emit(0);
  }
  return TreeAutomaton(e.positions, std::move(states), std::move(finals), std::move(transitions));
}

TreeAutomaton fatherAutomatonGeneral(const Expr& e) {
  LinearExpr le = linearize(e);
  return alphabeticalImage(fatherAutomaton(le), delinearizerOf(le));
}

CompressedTreeAutomaton compressedPositionAutomaton(const LinearExpr& e) {
  requireLinear(e, "compressedPositionAutomaton");
  PositionTable table = computePositionTable(e);
  std::set<StateId> states;
  for (const Symbol& p : e.positions) states.insert(p.display());
  std::set<StateId> finals;
  for (const Symbol& r : table.rootSet) finals.insert(r.display());
  std::set<CompressedTransition> transitions;
  for (const Symbol& f : e.positions) {
    auto slots = slotOrigins(table, f);
    std::vector<std::set<StateId>> originSets;
    originSets.reserve(slots.size());
    for (const auto& slot : slots) {
      std::set<StateId> names;
      for (const Symbol& x : slot) names.insert(x.display());
      originSets.push_back(std::move(names));
    }
    transitions.insert(CompressedTransition{std::move(originSets), f, {f.display()}});
  }
  return CompressedTreeAutomaton(e.positions, std::move(states), std::move(finals),
                                 std::move(transitions));
}

CompressedTreeAutomaton compressedPositionAutomatonGeneral(const Expr& e) {
  LinearExpr le = linearize(e);
  return alphabeticalImageCompressed(compressedPositionAutomaton(le), delinearizerOf(le));
}

CompressedTreeAutomaton compressedFatherAutomaton(const LinearExpr& e) {
  requireLinear(e, "compressedFatherAutomaton");
  PositionTable table = computePositionTable(e);
  StatePartition partition = fatherCongruence(e);
  std::set<StateId> states;
  std::set<StateId> finals;
  for (const Symbol& p : e.positions) {
    StateId name = partition.blockNameOf(p.display());
    states.insert(name);
    if (augmentedFatherSet(table, p).count(FatherPair{kDollar, 1})) finals.insert(name);
  }
  std::set<CompressedTransition> transitions;
  for (const Symbol& f : e.positions) {
    auto slots = slotOrigins(table, f);
    std::vector<std::set<StateId>> originSets;
    originSets.reserve(slots.size());
    for (const auto& slot : slots) {
      std::set<StateId> blockNames;
      for (const Symbol& x : slot) blockNames.insert(partition.blockNameOf(x.display()));
      originSets.push_back(std::move(blockNames));
    }
    transitions.insert(CompressedTransition{std::move(originSets), f,
                                            {partition.blockNameOf(f.display())}});
  }
  return CompressedTreeAutomaton(e.positions, std::move(states), std::move(finals),
                                 std::move(transitions));
}

CompressedTreeAutomaton compressedFatherAutomatonGeneral(const Expr& e) {
  LinearExpr le = linearize(e);
  return alphabeticalImageCompressed(compressedFatherAutomaton(le), delinearizerOf(le));
}

}  // namespace butree
