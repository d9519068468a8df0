#include "oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>

namespace butree {

namespace {

void requireBound(const EnumerationBound& b) {
  if (b.maxNodes < 1) throw std::invalid_argument("enumeration bound: maxNodes must be >= 1");
  if (b.maxStarIterations < 0) {
    throw std::invalid_argument("enumeration bound: maxStarIterations must be >= 1");
  }
}

// All substitution results of size <= budget. Candidate sets iterate in
// ascending node count (Tree orders by size first), so slots can stop early.
void substituteBounded(const Tree& t, const Symbol& c, const std::set<Tree>& candidates,
                       int budget, std::set<Tree>& out) {
  if (t.size() > budget && !(t.label() == c)) return;
  if (t.label() == c) {
    for (const Tree& cand : candidates) {
      if (cand.size() > budget) break;
      out.insert(cand);
    }
    return;
  }
  if (t.children().empty()) {
    out.insert(t);
    return;
  }
  const auto& kids = t.children();
  // Minimum sizes of the remaining slots (a replacement never shrinks).
  std::vector<int> suffixMin(kids.size() + 1, 0);
  for (std::size_t i = kids.size(); i-- > 0;) {
    suffixMin[i] = suffixMin[i + 1] + kids[i].size();
  }
  std::vector<std::vector<Tree>> chosen(kids.size());
  std::vector<Tree> acc;
  std::function<void(std::size_t, int)> walk = [&](std::size_t slot, int remaining) {
    if (slot == kids.size()) {
      out.insert(Tree(t.label(), acc));
      return;
    }
    int slotBudget = remaining - suffixMin[slot + 1];
    std::set<Tree> slotResults;
    substituteBounded(kids[slot], c, candidates, slotBudget, slotResults);
    for (const Tree& pick : slotResults) {
      acc.push_back(pick);
      walk(slot + 1, remaining - pick.size());
      acc.pop_back();
    }
  };
  walk(0, budget - 1);
}

std::set<Tree> enumerate(const Expr& e, int maxNodes, int maxStarIterations) {
  switch (e.kind()) {
    case ExprKind::Apply: {
      int k = e.symbol().arity;
      if (k == 0) return {Tree(e.symbol())};
      if (maxNodes < k + 1) return {};
      std::vector<std::set<Tree>> childSets;
      childSets.reserve(static_cast<std::size_t>(k));
      for (const Expr& arg : e.args()) {
        childSets.push_back(enumerate(arg, maxNodes - k, maxStarIterations));
        if (childSets.back().empty()) return {};
      }
      std::set<Tree> out;
      std::vector<Tree> acc;
      std::function<void(std::size_t, int)> walk = [&](std::size_t slot, int remaining) {
        if (slot == childSets.size()) {
          out.insert(Tree(e.symbol(), acc));
          return;
        }
        int others = k - 1 - static_cast<int>(slot);
        for (const Tree& pick : childSets[slot]) {
          if (pick.size() > remaining - others) break;
          acc.push_back(pick);
          walk(slot + 1, remaining - pick.size());
          acc.pop_back();
        }
      };
      walk(0, maxNodes - 1);
      return out;
    }
    case ExprKind::Sum: {
      std::set<Tree> out = enumerate(e.left(), maxNodes, maxStarIterations);
      std::set<Tree> r = enumerate(e.right(), maxNodes, maxStarIterations);
      out.insert(r.begin(), r.end());
      return out;
    }
    case ExprKind::Product: {
      std::set<Tree> leftTrees = enumerate(e.left(), maxNodes, maxStarIterations);
      std::set<Tree> rightTrees = enumerate(e.right(), maxNodes, maxStarIterations);
      std::set<Tree> out;
      for (const Tree& t : leftTrees) substituteBounded(t, e.symbol(), rightTrees, maxNodes, out);
      return out;
    }
    case ExprKind::Star: {
      const Symbol& c = e.symbol();
      std::set<Tree> base = enumerate(e.inner(), maxNodes, maxStarIterations);
      std::set<Tree> closure = {Tree(c)};
      bool settled = false;
      for (int round = 0; round < maxStarIterations && !settled; ++round) {
        std::size_t before = closure.size();
        std::set<Tree> next;
        for (const Tree& t : base) substituteBounded(t, c, closure, maxNodes, next);
        closure.insert(next.begin(), next.end());
        settled = closure.size() == before;
      }
      if (!settled) {
        // One extra round distinguishes "converged on the last round" from a
        // genuinely insufficient cap.
        std::size_t before = closure.size();
        std::set<Tree> next;
        for (const Tree& t : base) substituteBounded(t, c, closure, maxNodes, next);
        closure.insert(next.begin(), next.end());
        if (closure.size() != before) {
          throw std::logic_error("enumerateLanguage: star iteration cap " +
                                 std::to_string(maxStarIterations) +
                                 " too small for node bound " + std::to_string(maxNodes));
        }
      }
      return closure;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::set<Tree> enumerateLanguage(const Expr& e, const EnumerationBound& b) {
  requireBound(b);
  auto violations = validate(e);
  if (!violations.empty()) {
    throw std::invalid_argument("enumerateLanguage: invalid expression: " + violations.front());
  }
  return enumerate(e, b.maxNodes, b.effectiveStarIterations());
}

std::set<FatherPair> fatherViaEnumeration(const Expr& e, const Symbol& f,
                                          const EnumerationBound& b) {
  std::set<FatherPair> out;
  for (const Tree& t : enumerateLanguage(e, b)) {
    auto pairs = fatherOfTree(t, f);
    out.insert(pairs.begin(), pairs.end());
  }
  return out;
}

std::set<Symbol> rootViaEnumeration(const Expr& e, const EnumerationBound& b) {
  std::set<Symbol> out;
  for (const Tree& t : enumerateLanguage(e, b)) out.insert(rootOf(t));
  return out;
}

namespace {

struct Generator {
  std::mt19937_64 rng;
  std::vector<Symbol> nullary;
  std::vector<Symbol> ranked;  // arity >= 1
  int budget;                  // remaining arity >= 1 occurrences
  static constexpr int kMaxDepth = 5;

  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng() % n); }

  Symbol nullaryIn(const Expr& e) {
    std::vector<Symbol> occurring;
    std::function<void(const Expr&)> collect = [&](const Expr& sub) {
      switch (sub.kind()) {
        case ExprKind::Apply:
          if (sub.args().empty()) occurring.push_back(sub.symbol());
          for (const Expr& a : sub.args()) collect(a);
          break;
        case ExprKind::Sum:
        case ExprKind::Product:
          collect(sub.left());
          collect(sub.right());
          break;
        case ExprKind::Star:
          collect(sub.inner());
          break;
      }
    };
    collect(e);
    return occurring[pick(occurring.size())];
  }

  Expr gen(int depth) {
    // 0..2 leaf, 3..7 ranked apply, 8..9 sum, 10..11 product, 12..13 star
    int roll = static_cast<int>(rng() % 14);
    bool canRank = budget > 0 && !ranked.empty();
    bool canNest = depth < kMaxDepth;
    if (roll >= 3 && roll <= 7 && canRank) {
      Symbol f = ranked[pick(ranked.size())];
      --budget;
      std::vector<Expr> args;
      args.reserve(static_cast<std::size_t>(f.arity));
      for (int i = 0; i < f.arity; ++i) args.push_back(gen(depth + 1));
      return Expr::apply(f, std::move(args));
    }
    if (roll >= 8 && roll <= 9 && canNest) {
      Expr l = gen(depth + 1);
      return Expr::sum(std::move(l), gen(depth + 1));
    }
    if (roll >= 10 && roll <= 11 && canNest) {
      Expr l = gen(depth + 1);
      Symbol c = nullaryIn(l);
      return Expr::product(std::move(l), std::move(c), gen(depth + 1));
    }
    if (roll >= 12 && canNest) {
      Expr l = gen(depth + 1);
      return Expr::star(std::move(l), nullary[pick(nullary.size())]);
    }
    return Expr::apply(nullary[pick(nullary.size())], {});
  }
};

}  // namespace

Expr randomExpression(std::uint64_t seed, int maxPositions, const RankedAlphabet& alphabet) {
  Generator g{std::mt19937_64(seed), {}, {}, maxPositions};
  for (const auto& [name, arity] : alphabet.symbols()) {
    (arity == 0 ? g.nullary : g.ranked).push_back(Symbol{name, arity, 0});
  }
  if (g.nullary.empty()) {
    throw std::invalid_argument("randomExpression: alphabet has no nullary symbol");
  }
  return g.gen(0);
}

// ---------------------------------------------------------------------------
// Pooled tree universe: built once, children before parents, subtrees shared.

TreeUniverse::TreeUniverse(const std::set<Symbol>& symbolSet, int maxNodes)
    : symbols_(symbolSet.begin(), symbolSet.end()) {
  if (maxNodes < 1) throw std::invalid_argument("tree universe: maxNodes must be >= 1");
  bySize_.resize(static_cast<std::size_t>(maxNodes) + 1);
  for (int s = 1; s <= maxNodes; ++s) {
    for (std::size_t si = 0; si < symbols_.size(); ++si) {
      int k = symbols_[si].arity;
      if (k == 0) {
        if (s == 1) addNode(static_cast<int>(si), {}, s);
        continue;
      }
      if (s < k + 1) continue;
      std::vector<int> kids(static_cast<std::size_t>(k));
      fill(static_cast<int>(si), kids, 0, s - 1, s);
    }
  }
}

int TreeUniverse::find(const Tree& t) const {
  int si = symbolIndex(t.label());
  if (si < 0) return -1;
  std::vector<int> kids;
  kids.reserve(t.children().size());
  for (const Tree& child : t.children()) {
    int kid = find(child);
    if (kid < 0) return -1;
    kids.push_back(kid);
  }
  auto it = intern_.find({si, kids});
  return it != intern_.end() ? it->second : -1;
}

Tree TreeUniverse::materialize(int id) const {
  const Node& n = nodes_[static_cast<std::size_t>(id)];
  std::vector<Tree> kids;
  kids.reserve(n.kids.size());
  for (int kid : n.kids) kids.push_back(materialize(kid));
  return Tree(symbols_[static_cast<std::size_t>(n.sym)], std::move(kids));
}

int TreeUniverse::symbolIndex(const Symbol& s) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
  if (it == symbols_.end() || !(*it == s)) return -1;
  return static_cast<int>(it - symbols_.begin());
}

void TreeUniverse::addNode(int si, std::vector<int> kids, int size) {
  int id = static_cast<int>(nodes_.size());
  if (!intern_.emplace(std::make_pair(si, kids), id).second) {
    throw std::logic_error("tree universe: duplicate node");
  }
  nodes_.push_back(Node{si, std::move(kids)});
  bySize_[static_cast<std::size_t>(size)].push_back(id);
}

// Distribute `remaining` nodes over kid slots from `slot` on, each >= 1;
// the last slot consumes the rest exactly.
void TreeUniverse::fill(int si, std::vector<int>& kids, std::size_t slot, int remaining,
                        int total) {
  int slotsLeft = static_cast<int>(kids.size() - slot);
  if (slotsLeft == 1) {
    for (int id : bySize_[static_cast<std::size_t>(remaining)]) {
      kids[slot] = id;
      addNode(si, kids, total);
    }
    return;
  }
  for (int take = 1; take <= remaining - (slotsLeft - 1); ++take) {
    for (int id : bySize_[static_cast<std::size_t>(take)]) {
      kids[slot] = id;
      fill(si, kids, slot + 1, remaining - take, total);
    }
  }
}

namespace {

using Mask = std::uint64_t;

std::map<StateId, int> stateBits(const std::set<StateId>& states, const char* who) {
  if (states.size() > 64) {
    throw std::logic_error(std::string(who) + ": more than 64 states in pooled runner");
  }
  std::map<StateId, int> bits;
  int next = 0;
  for (const StateId& q : states) bits[q] = next++;
  return bits;
}

// Delta over the whole pool for a plain automaton, one bitmask per tree.
struct PlainRunner {
  std::vector<std::vector<std::pair<std::vector<int>, int>>> bySym;
  Mask finals = 0;

  PlainRunner(const TreeAutomaton& a, const TreeUniverse& pool) {
    auto bits = stateBits(a.states(), "plain runner");
    for (const StateId& q : a.finals()) finals |= Mask{1} << bits.at(q);
    bySym.resize(pool.symbols().size());
    for (std::size_t si = 0; si < pool.symbols().size(); ++si) {
      for (const Transition* t : a.transitionsFor(pool.symbols()[si])) {
        std::vector<int> origins;
        origins.reserve(t->origins.size());
        for (const StateId& q : t->origins) origins.push_back(bits.at(q));
        bySym[si].emplace_back(std::move(origins), bits.at(t->target));
      }
    }
  }

  std::vector<Mask> run(const TreeUniverse& pool) const {
    std::vector<Mask> delta(pool.nodes().size(), 0);
    for (std::size_t id = 0; id < pool.nodes().size(); ++id) {
      const auto& node = pool.nodes()[id];
      Mask mask = 0;
      for (const auto& [origins, target] : bySym[static_cast<std::size_t>(node.sym)]) {
        bool match = true;
        for (std::size_t i = 0; i < origins.size() && match; ++i) {
          match = (delta[static_cast<std::size_t>(node.kids[i])] >> origins[i]) & 1;
        }
        if (match) mask |= Mask{1} << target;
      }
      delta[id] = mask;
    }
    return delta;
  }
};

struct CompressedRunner {
  std::vector<std::vector<std::pair<std::vector<Mask>, Mask>>> bySym;
  Mask finals = 0;

  CompressedRunner(const CompressedTreeAutomaton& a, const TreeUniverse& pool) {
    auto bits = stateBits(a.states(), "compressed runner");
    for (const StateId& q : a.finals()) finals |= Mask{1} << bits.at(q);
    bySym.resize(pool.symbols().size());
    for (std::size_t si = 0; si < pool.symbols().size(); ++si) {
      for (const CompressedTransition* t : a.transitionsFor(pool.symbols()[si])) {
        std::vector<Mask> slots;
        slots.reserve(t->originSets.size());
        for (const auto& originSet : t->originSets) {
          Mask m = 0;
          for (const StateId& q : originSet) m |= Mask{1} << bits.at(q);
          slots.push_back(m);
        }
        Mask targets = 0;
        for (const StateId& q : t->targets) targets |= Mask{1} << bits.at(q);
        bySym[si].emplace_back(std::move(slots), targets);
      }
    }
  }

  std::vector<Mask> run(const TreeUniverse& pool) const {
    std::vector<Mask> delta(pool.nodes().size(), 0);
    for (std::size_t id = 0; id < pool.nodes().size(); ++id) {
      const auto& node = pool.nodes()[id];
      Mask mask = 0;
      for (const auto& [slots, targets] : bySym[static_cast<std::size_t>(node.sym)]) {
        bool active = true;
        for (std::size_t i = 0; i < slots.size() && active; ++i) {
          active = (delta[static_cast<std::size_t>(node.kids[i])] & slots[i]) != 0;
        }
        if (active) mask |= targets;
      }
      delta[id] = mask;
    }
    return delta;
  }
};

std::set<int> internLanguage(const std::set<Tree>& language, const TreeUniverse& pool,
                             const char* who) {
  std::set<int> ids;
  for (const Tree& t : language) {
    int id = pool.find(t);
    if (id < 0) throw std::logic_error(std::string(who) + ": enumerated tree " + t.str() +
                                       " missing from the universe pool");
    ids.insert(id);
  }
  return ids;
}

}  // namespace

ConstructionSuite buildConstructionSuite(const Expr& e) {
  LinearExpr linear = linearize(e);
  PositionTable table = computePositionTable(linear);
  auto h = delinearizerOf(linear);
  TreeAutomaton position = positionAutomaton(linear);
  TreeAutomaton father = fatherAutomaton(linear);
  CompressedTreeAutomaton cposition = compressedPositionAutomaton(linear);
  CompressedTreeAutomaton cfather = compressedFatherAutomaton(linear);
  TreeAutomaton positionGeneral = alphabeticalImage(position, h);
  TreeAutomaton fatherGeneral = alphabeticalImage(father, h);
  CompressedTreeAutomaton cpositionGeneral = alphabeticalImageCompressed(cposition, h);
  CompressedTreeAutomaton cfatherGeneral = alphabeticalImageCompressed(cfather, h);
  return ConstructionSuite{std::move(linear),        std::move(table),
                           std::move(position),      std::move(father),
                           std::move(cposition),     std::move(cfather),
                           std::move(positionGeneral), std::move(fatherGeneral),
                           std::move(cpositionGeneral), std::move(cfatherGeneral)};
}

bool ValidationReport::allAgree() const {
  if (!positionFunctionAgreement) return false;
  for (const auto& [kind, ok] : perConstruction) {
    if (!ok) return false;
  }
  return true;
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  out << "expression: " << expression.str() << "\n";
  out << "bound: maxNodes=" << bound.maxNodes
      << " maxStarIterations=" << bound.effectiveStarIterations() << "\n";
  out << "trees checked: " << treesChecked << "\n";
  out << "position functions: " << (positionFunctionAgreement ? "ok" : "DISAGREE") << "\n";
  for (const auto& [kind, ok] : perConstruction) {
    out << constructionName(kind) << ": " << (ok ? "ok" : "DISAGREE") << "\n";
  }
  if (firstCounterexample) {
    out << "counterexample: " << firstCounterexample->str() << "\n";
  }
  out << "result: " << (allAgree() ? "AGREE" : "DISAGREE") << "\n";
  return out.str();
}

ValidationReport validateConstructions(const Expr& e, const EnumerationBound& b,
                                       const ConstructionSuite& suite) {
  requireBound(b);
  ValidationReport report{e, b, 0, {}, true, std::nullopt};
  report.perConstruction[ConstructionKind::Position] = true;
  report.perConstruction[ConstructionKind::Father] = true;
  report.perConstruction[ConstructionKind::CompressedPosition] = true;
  report.perConstruction[ConstructionKind::CompressedFather] = true;

  auto noteCounterexample = [&](const Tree& t) {
    if (!report.firstCounterexample) report.firstCounterexample = t;
  };

  // Indexed side: linear constructions and the membership characterization.
  {
    TreeUniverse pool(suite.linear.positions, b.maxNodes);
    std::set<int> language =
        internLanguage(enumerateLanguage(suite.linear.expr, b), pool, "crossValidate");
    PlainRunner rP(suite.position, pool);
    PlainRunner rF(suite.father, pool);
    CompressedRunner rCP(suite.cposition, pool);
    CompressedRunner rCF(suite.cfather, pool);
    auto dP = rP.run(pool);
    auto dF = rF.run(pool);
    auto dCP = rCP.run(pool);
    auto dCF = rCF.run(pool);
    Mask fP = rP.finals;
    Mask fF = rF.finals;
    Mask fCP = rCP.finals;
    Mask fCF = rCF.finals;

    // Characterization, bottom-up: every child edge sanctioned plus root
    // membership at the top.
    std::vector<char> chainOk(pool.nodes().size(), 1);
    std::vector<char> rootOk(pool.nodes().size(), 0);
    for (std::size_t id = 0; id < pool.nodes().size(); ++id) {
      const auto& node = pool.nodes()[id];
      const Symbol& sym = pool.symbols()[static_cast<std::size_t>(node.sym)];
      bool ok = true;
      for (std::size_t i = 0; i < node.kids.size() && ok; ++i) {
        int kid = node.kids[i];
        ok = chainOk[static_cast<std::size_t>(kid)] &&
             suite.table.fatherSets.at(pool.symbolOf(kid))
                 .count(FatherPair{sym, static_cast<int>(i) + 1});
      }
      chainOk[id] = ok;
      rootOk[id] = suite.table.rootSet.count(sym) != 0;
    }

    for (std::size_t id = 0; id < pool.nodes().size(); ++id) {
      bool oracle = language.count(static_cast<int>(id)) != 0;
      bool characterization = chainOk[id] && rootOk[id];
      bool acceptP = (dP[id] & fP) != 0;
      bool acceptF = (dF[id] & fF) != 0;
      bool acceptCP = (dCP[id] & fCP) != 0;
      bool acceptCF = (dCF[id] & fCF) != 0;
      if (characterization != oracle) {
        report.positionFunctionAgreement = false;
        noteCounterexample(pool.materialize(static_cast<int>(id)));
      }
      if (acceptP != oracle) {
        report.perConstruction[ConstructionKind::Position] = false;
        noteCounterexample(pool.materialize(static_cast<int>(id)));
      }
      if (acceptF != oracle) {
        report.perConstruction[ConstructionKind::Father] = false;
        noteCounterexample(pool.materialize(static_cast<int>(id)));
      }
      if (acceptCP != oracle) {
        report.perConstruction[ConstructionKind::CompressedPosition] = false;
        noteCounterexample(pool.materialize(static_cast<int>(id)));
      }
      if (acceptCF != oracle) {
        report.perConstruction[ConstructionKind::CompressedFather] = false;
        noteCounterexample(pool.materialize(static_cast<int>(id)));
      }
    }

    // The pooled characterization must match the public operation; sample a
    // deterministic slice rather than re-walking every tree.
    std::size_t stride = std::max<std::size_t>(1, pool.nodes().size() / 50);
    for (std::size_t id = 0; id < pool.nodes().size(); id += stride) {
      Tree t = pool.materialize(static_cast<int>(id));
      if (membershipByCharacterization(suite.table, t) !=
          static_cast<bool>(chainOk[id] && rootOk[id])) {
        report.positionFunctionAgreement = false;
        noteCounterexample(t);
      }
    }

    // Soundness of the position functions against the enumeration (Root and
    // Father both collect over language members only).
    std::set<int> subtrees = language;
    for (std::size_t id = pool.nodes().size(); id-- > 0;) {
      if (!subtrees.count(static_cast<int>(id))) continue;
      for (int kid : pool.nodes()[id].kids) subtrees.insert(kid);
    }
    for (int id : language) {
      if (!suite.table.rootSet.count(pool.symbolOf(id))) {
        report.positionFunctionAgreement = false;
        noteCounterexample(pool.materialize(id));
      }
    }
    for (int id : subtrees) {
      const auto& node = pool.nodes()[static_cast<std::size_t>(id)];
      const Symbol& sym = pool.symbols()[static_cast<std::size_t>(node.sym)];
      for (std::size_t i = 0; i < node.kids.size(); ++i) {
        const Symbol& kidSym = pool.symbolOf(node.kids[i]);
        if (!suite.table.fatherSets.at(kidSym).count(FatherPair{sym, static_cast<int>(i) + 1})) {
          report.positionFunctionAgreement = false;
          noteCounterexample(pool.materialize(id));
        }
      }
    }

    report.treesChecked += static_cast<long long>(pool.nodes().size());
  }

  // Delinearized side: the four general constructions against L(e).
  {
    std::set<Symbol> baseSymbols;
    for (const Symbol& p : suite.linear.positions) baseSymbols.insert(p.base());
    TreeUniverse pool(baseSymbols, b.maxNodes);
    std::set<int> language = internLanguage(enumerateLanguage(e, b), pool, "crossValidate");
    PlainRunner rP(suite.positionGeneral, pool);
    PlainRunner rF(suite.fatherGeneral, pool);
    CompressedRunner rCP(suite.cpositionGeneral, pool);
    CompressedRunner rCF(suite.cfatherGeneral, pool);
    auto dP = rP.run(pool);
    auto dF = rF.run(pool);
    auto dCP = rCP.run(pool);
    auto dCF = rCF.run(pool);
    for (std::size_t id = 0; id < pool.nodes().size(); ++id) {
      bool oracle = language.count(static_cast<int>(id)) != 0;
      struct Row {
        ConstructionKind kind;
        bool accept;
      } rows[] = {
          {ConstructionKind::Position, (dP[id] & rP.finals) != 0},
          {ConstructionKind::Father, (dF[id] & rF.finals) != 0},
          {ConstructionKind::CompressedPosition, (dCP[id] & rCP.finals) != 0},
          {ConstructionKind::CompressedFather, (dCF[id] & rCF.finals) != 0},
      };
      for (const Row& row : rows) {
        if (row.accept != oracle) {
          report.perConstruction[row.kind] = false;
          noteCounterexample(pool.materialize(static_cast<int>(id)));
        }
      }
    }
    report.treesChecked += static_cast<long long>(pool.nodes().size());
  }

  return report;
}

ValidationReport crossValidate(const Expr& e, const EnumerationBound& b) {
  return validateConstructions(e, b, buildConstructionSuite(e));
}

std::vector<Tree> allTreesUpTo(const std::set<Symbol>& symbols, int maxNodes) {
  TreeUniverse universe(symbols, maxNodes);
  std::vector<Tree> out;
  out.reserve(universe.nodes().size());
  // Ids are assigned in ascending size already.
  for (std::size_t id = 0; id < universe.nodes().size(); ++id) {
    out.push_back(universe.materialize(static_cast<int>(id)));
  }
  return out;
}

}  // namespace butree
