#include <doctest.h>

#include <functional>
#include <random>

#include "compressed.hpp"
#include "fixtures.hpp"

using namespace butree;
using fixtures::leaf;
using fixtures::node;
using fixtures::sym;

namespace {

const Symbol F = sym("f", 2);
const Symbol G = sym("g", 1);
const Symbol A0 = sym("a", 0);
const Symbol B0 = sym("b", 0);

Tree randomNumericTree(std::mt19937& rng, int depth) {
  int roll = static_cast<int>(rng() % 5);
  if (depth >= 3 || roll < 2) return leaf(rng() % 2 ? A0 : B0);
  if (roll == 2) return node(G, {randomNumericTree(rng, depth + 1)});
  return node(F, {randomNumericTree(rng, depth + 1), randomNumericTree(rng, depth + 1)});
}

// Arbitrary small compressed automata for the expand/run agreement property.
CompressedTreeAutomaton randomCompressed(std::mt19937& rng) {
  std::set<Symbol> alphabet{F, G, A0, B0};
  int n = 3 + static_cast<int>(rng() % 4);
  std::set<StateId> states;
  for (int i = 0; i < n; ++i) states.insert("q" + std::to_string(i));
  std::vector<StateId> pool(states.begin(), states.end());
  auto randomSubset = [&](bool allowEmpty) {
    std::set<StateId> out;
    for (const StateId& q : pool) {
      if (rng() % 3 == 0) out.insert(q);
    }
    if (out.empty() && !allowEmpty) out.insert(pool[rng() % pool.size()]);
    return out;
  };
  std::set<StateId> finals = randomSubset(true);
  std::set<CompressedTransition> delta;
  int transitions = 2 + static_cast<int>(rng() % 6);
  const Symbol choices[] = {F, G, A0, B0};
  for (int i = 0; i < transitions; ++i) {
    const Symbol& s = choices[rng() % 4];
    std::vector<std::set<StateId>> originSets;
    for (int k = 0; k < s.arity; ++k) originSets.push_back(randomSubset(rng() % 4 == 0));
    delta.insert(CompressedTransition{originSets, s, randomSubset(false)});
  }
  return CompressedTreeAutomaton(alphabet, states, finals, delta);
}

}  // namespace

TEST_SUITE("compressed") {

TEST_CASE("construction invariants") {
  std::set<Symbol> sigma{A0, G};
  CHECK_THROWS_AS(CompressedTreeAutomaton(sigma, {"q"}, {"x"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(
      CompressedTreeAutomaton(sigma, {"q"}, {}, {CompressedTransition{{}, G, {"q"}}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      CompressedTreeAutomaton(sigma, {"q"}, {}, {CompressedTransition{{{"z"}}, G, {"q"}}}),
      std::invalid_argument);
}

TEST_CASE("restrictedDelta on the numeric example") {
  CompressedTreeAutomaton c = fixtures::numericCompressedAutomaton();
  CHECK(restrictedDelta(c, {"3", "6"}, F) == std::set<StateId>{"2"});
  CHECK(restrictedDelta(c, {"3", "4"}, F) == std::set<StateId>{"2"});
  CHECK(restrictedDelta(c, {"6", "6"}, F).empty());
  CHECK(restrictedDelta(c, {}, A0) == std::set<StateId>{"4", "6"});
  CHECK(restrictedDelta(c, {"2", "3"}, F) == std::set<StateId>{"1", "5"});
  CHECK_THROWS_AS(restrictedDelta(c, {"1"}, F), std::invalid_argument);
}

TEST_CASE("compressed run chain of the numeric example") {
  CompressedTreeAutomaton c = fixtures::numericCompressedAutomaton();
  CHECK(runCompressed(c, leaf(A0)) == std::set<StateId>{"4", "6"});
  CHECK(runCompressed(c, leaf(B0)) == std::set<StateId>{"3"});
  Tree fba = node(F, {leaf(B0), leaf(A0)});
  CHECK(runCompressed(c, fba) == std::set<StateId>{"2"});
  Tree ga = node(G, {leaf(A0)});
  CHECK(runCompressed(c, ga) == std::set<StateId>{"4", "5"});
  Tree t = node(F, {fba, ga});
  CHECK(runCompressed(c, t) == std::set<StateId>{"1", "2"});
  CHECK(acceptsCompressed(c, t));
  CHECK_FALSE(acceptsCompressed(c, leaf(B0)));
  CHECK_THROWS_AS(runCompressed(c, leaf(sym("z", 0))), std::invalid_argument);
}

TEST_CASE("compressed run equals the tuple-wise union of restrictedDelta") {
  CompressedTreeAutomaton c = fixtures::numericCompressedAutomaton();
  std::mt19937 rng(808);
  std::function<void(const Tree&)> checkTree = [&](const Tree& t) {
    if (t.children().empty()) return;
    std::vector<std::set<StateId>> childSets;
    for (const Tree& child : t.children()) childSets.push_back(runCompressed(c, child));
    std::set<StateId> viaTuples;
    std::vector<StateId> tuple(childSets.size());
    std::function<void(std::size_t)> walk = [&](std::size_t slot) {
      if (slot == childSets.size()) {
        auto part = restrictedDelta(c, tuple, t.label());
        viaTuples.insert(part.begin(), part.end());
        return;
      }
      for (const StateId& q : childSets[slot]) {
        tuple[slot] = q;
        walk(slot + 1);
      }
    };
    walk(0);
    CHECK(runCompressed(c, t) == viaTuples);
  };
  for (int i = 0; i < 300; ++i) checkTree(randomNumericTree(rng, 0));
}

TEST_CASE("expand produces one tuple per cartesian choice") {
  std::set<Symbol> sigma{F, A0};
  CompressedTreeAutomaton c(
      sigma, {"q1", "q2", "q3"}, {"q3"},
      {CompressedTransition{{{"q1", "q2"}, {"q1", "q2"}}, F, {"q3"}},
       CompressedTransition{{}, A0, {"q1"}}});
  TreeAutomaton plain = expand(c);
  CHECK(plain.transitions().size() == 5);  // 4 f-tuples + 1 nullary
  CHECK(plain.states() == c.states());
  CHECK(plain.finals() == c.finals());

  CompressedTreeAutomaton dead(
      sigma, {"q1"}, {},
      {CompressedTransition{{{}, {"q1"}}, F, {"q1"}}, CompressedTransition{{}, A0, {"q1"}}});
  CHECK(expand(dead).transitions().size() == 1);
  CHECK(deadTransitions(dead).size() == 1);
  CHECK(deadTransitions(c).empty());
}

TEST_CASE("expansion and compressed runs agree on random automata") {
  std::mt19937 rng(321);
  for (int round = 0; round < 60; ++round) {
    CompressedTreeAutomaton c = randomCompressed(rng);
    TreeAutomaton plain = expand(c);
    for (int i = 0; i < 40; ++i) {
      Tree t = randomNumericTree(rng, 0);
      CAPTURE(toText(c));
      CHECK(runTree(plain, t) == runCompressed(c, t));
    }
  }
}

TEST_CASE("alphabetical image of a compressed automaton") {
  CompressedTreeAutomaton c = fixtures::numericCompressedAutomaton();
  std::map<Symbol, Symbol> identity;
  for (const Symbol& s : c.alphabet()) identity[s] = s;
  CompressedTreeAutomaton same = alphabeticalImageCompressed(c, identity);
  CHECK(same.transitions() == c.transitions());
  CHECK(same.states() == c.states());

  std::map<Symbol, Symbol> bad = identity;
  bad[G] = sym("g", 2);
  CHECK_THROWS_AS(alphabeticalImageCompressed(c, bad), std::invalid_argument);
}

TEST_CASE("compressed quotient by the identity is isomorphic") {
  CompressedTreeAutomaton c = fixtures::runningCompressedPositionAutomaton();
  StatePartition identity = StatePartition::identity(c.states());
  CompressedTreeAutomaton q = quotientCompressed(c, identity);
  CHECK(isIsomorphicCompressed(c, q));
  CHECK_FALSE(isIsomorphicCompressed(c, fixtures::runningCompressedFatherAutomaton()));
}

TEST_CASE("compressed quotient rejects non-congruences") {
  CompressedTreeAutomaton c = fixtures::runningCompressedPositionAutomaton();
  StatePartition bad({{"a", "b"}, {"f1"}, {"g2"}, {"f3"}, {"g4"}});
  CHECK_THROWS_AS(quotientCompressed(c, bad), std::invalid_argument);
}

TEST_CASE("compressed quotient by the father partition") {
  CompressedTreeAutomaton c = fixtures::runningCompressedPositionAutomaton();
  StatePartition father({{"a"}, {"b"}, {"f1", "g2"}, {"f3"}, {"g4"}});
  CompressedTreeAutomaton q = quotientCompressed(c, father);
  CHECK(q.states().size() == 5);
  CHECK(isIsomorphicCompressed(q, fixtures::runningCompressedFatherAutomaton()));
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    // Trees over the indexed alphabet of the running example.
    std::function<Tree(int)> gen = [&](int depth) -> Tree {
      int roll = static_cast<int>(rng() % 6);
      if (depth >= 3 || roll < 2) return leaf(rng() % 2 ? fixtures::A : fixtures::B);
      switch (roll) {
        case 2: return node(fixtures::G2, {gen(depth + 1)});
        case 3: return node(fixtures::G4, {gen(depth + 1)});
        case 4: return node(fixtures::F1, {gen(depth + 1), gen(depth + 1)});
        default: return node(fixtures::F3, {gen(depth + 1), gen(depth + 1)});
      }
    };
    Tree t = gen(0);
    CHECK(acceptsCompressed(q, t) == acceptsCompressed(c, t));
  }
}

TEST_CASE("compressed serialization is deterministic") {
  CompressedTreeAutomaton c = fixtures::numericCompressedAutomaton();
  CHECK(toJson(c) == toJson(fixtures::numericCompressedAutomaton()));
  CHECK(toJson(c).find("originSets") != std::string::npos);
  CHECK(toDot(c).find("style=dashed") != std::string::npos);
  CHECK(toText(c).find("f ({1,2,5}, {3,4}) -> {1}") != std::string::npos);
}

}  // TEST_SUITE
