#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "fixtures.hpp"
#include "trees.hpp"

using namespace butree;
using fixtures::A;
using fixtures::B;
using fixtures::F1;
using fixtures::G2;
using fixtures::leaf;
using fixtures::node;
using fixtures::sym;

namespace {

// Direct scan over all subtrees, the definitional reading of father(t,f);
// the library computes it by the recursive decomposition instead.
void collectSubtrees(const Tree& t, std::vector<Tree>& out) {
  out.push_back(t);
  for (const Tree& child : t.children()) collectSubtrees(child, out);
}

std::set<FatherPair> fatherByScan(const Tree& t, const Symbol& f) {
  std::vector<Tree> subs;
  collectSubtrees(t, subs);
  std::set<FatherPair> out;
  for (const Tree& s : subs) {
    for (std::size_t i = 0; i < s.children().size(); ++i) {
      if (s.children()[i].label() == f) out.insert({s.label(), static_cast<int>(i) + 1});
    }
  }
  return out;
}

Tree randomTree(std::mt19937& rng, int depth) {
  static const Symbol f = sym("f", 2), g = sym("g", 1), a = sym("a", 0), b = sym("b", 0);
  int roll = static_cast<int>(rng() % 4);
  if (depth >= 4 || roll == 0) return leaf(rng() % 2 ? a : b);
  if (roll == 1) return node(g, {randomTree(rng, depth + 1)});
  return node(f, {randomTree(rng, depth + 1), randomTree(rng, depth + 1)});
}

}  // namespace

TEST_SUITE("trees") {

TEST_CASE("rootOf returns the top label") {
  CHECK(rootOf(leaf(A)) == A);
  CHECK(rootOf(node(F1, {leaf(A), leaf(A)})) == F1);
}

TEST_CASE("fatherOfTree unfolds direct children") {
  Tree t = node(F1, {leaf(A), leaf(A)});
  CHECK(fatherOfTree(t, A) == std::set<FatherPair>{{F1, 1}, {F1, 2}});
  CHECK(fatherOfTree(leaf(A), A).empty());
}

TEST_CASE("fatherOfTree recursive decomposition equals subtree scanning") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 300; ++i) {
    Tree t = randomTree(rng, 0);
    for (const Symbol& s : {sym("f", 2), sym("g", 1), sym("a", 0), sym("b", 0)}) {
      CAPTURE(t.str());
      CHECK(fatherOfTree(t, s) == fatherByScan(t, s));
    }
  }
}

TEST_CASE("father pairs stay within the parent arity") {
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    Tree t = randomTree(rng, 0);
    for (const Symbol& s : {sym("f", 2), sym("g", 1), sym("a", 0)}) {
      for (const FatherPair& p : fatherOfTree(t, s)) {
        CHECK(p.childIndex >= 1);
        CHECK(p.childIndex <= p.parent.arity);
      }
    }
  }
}

TEST_CASE("substituteAll single occurrence") {
  Symbol c = sym("c", 0);
  CHECK(substituteAll(leaf(c), c, {leaf(A), leaf(B)}) == std::set<Tree>{leaf(A), leaf(B)});
}

TEST_CASE("substituteAll replaces occurrences independently") {
  Symbol c = sym("c", 0);
  Tree t = node(F1, {leaf(c), leaf(c)});
  std::set<Tree> candidates{leaf(A), leaf(B)};
  // Expected set built by explicit choice enumeration.
  std::set<Tree> expected;
  for (const Tree& x : candidates) {
    for (const Tree& y : candidates) {
      expected.insert(node(F1, {x, y}));
    }
  }
  CHECK(expected.size() == 4);
  CHECK(substituteAll(t, c, candidates) == expected);
}

TEST_CASE("substituteAll without occurrences is the identity") {
  Symbol c = sym("c", 0);
  Tree t = node(G2, {leaf(B)});
  CHECK(substituteAll(t, c, {leaf(A)}) == std::set<Tree>{t});
}

TEST_CASE("substituteAll edge cases") {
  Symbol c = sym("c", 0);
  CHECK(substituteAll(leaf(c), c, {}).empty());
  CHECK_THROWS_AS(substituteAll(leaf(A), sym("g", 1), {leaf(A)}), std::invalid_argument);
}

TEST_CASE("substitution count bound") {
  Symbol c = sym("c", 0);
  std::set<Tree> candidates{leaf(A), leaf(B), node(G2, {leaf(A)})};
  std::function<int(const Tree&)> occurrences = [&](const Tree& t) {
    int n = t.label() == c ? 1 : 0;
    for (const Tree& child : t.children()) n += occurrences(child);
    return n;
  };
  // Random trees over {c, b} via relabeling a -> c.
  std::mt19937 rng(99);
  std::function<Tree(const Tree&)> relabel = [&](const Tree& t) {
    std::vector<Tree> kids;
    for (const Tree& child : t.children()) kids.push_back(relabel(child));
    return Tree(t.label() == A ? c : t.label(), std::move(kids));
  };
  for (int i = 0; i < 50; ++i) {
    Tree t = relabel(randomTree(rng, 0));
    auto results = substituteAll(t, c, candidates);
    double bound = std::pow(static_cast<double>(candidates.size()), occurrences(t));
    CHECK(static_cast<double>(results.size()) <= bound);
    if (occurrences(t) > 0) {
      CHECK(static_cast<double>(results.size()) == bound);  // distinct candidates
    } else {
      CHECK(results == std::set<Tree>{t});
    }
  }
  Tree twoC = node(F1, {leaf(c), node(G2, {leaf(c)})});
  CHECK(substituteAll(twoC, c, candidates).size() == 9);  // 3^2 combinations
}

TEST_CASE("tree equality and ordering are structural") {
  Tree x = node(F1, {leaf(A), leaf(B)});
  Tree y = node(F1, {leaf(A), leaf(B)});
  Tree z = node(F1, {leaf(B), leaf(A)});
  CHECK(x == y);
  CHECK_FALSE(x == z);
  CHECK((x < z || z < x));
  CHECK(leaf(A) < x);  // fewer nodes first
}

TEST_CASE("tree arity invariant is enforced") {
  CHECK_THROWS_AS(Tree(F1, {leaf(A)}), std::invalid_argument);
  CHECK_THROWS_AS(Tree(A, {leaf(A)}), std::invalid_argument);
}

TEST_CASE("parseTree round trips") {
  Tree t = parseTree("f(g(a),b)");
  CHECK(t.label() == sym("f", 2));
  CHECK(t.children()[0] == node(sym("g", 1), {leaf(A)}));
  CHECK(t.str() == "f(g(a),b)");
  CHECK(parseTree(" f ( g ( a ) , b ) ") == t);
  CHECK(parseTree("a") == leaf(A));
}

TEST_CASE("parseTree reports 1-based offsets") {
  CHECK_THROWS_AS(parseTree("f(a"), ParseError);
  try {
    parseTree("f(a");
  } catch (const ParseError& err) {
    CHECK(err.offset() == 4);
  }
  CHECK_THROWS_AS(parseTree("$"), ParseError);
  CHECK_THROWS_AS(parseTree("f(a,b) junk"), ParseError);
  CHECK_THROWS_AS(parseTree(""), ParseError);
}

TEST_CASE("ranked alphabet rejects conflicting arities") {
  RankedAlphabet sigma;
  sigma.add("f", 2);
  CHECK(sigma.arityOf("f") == 2);
  CHECK_THROWS_AS(sigma.add("f", 1), std::invalid_argument);
  CHECK_THROWS_AS(sigma.arityOf("q"), std::invalid_argument);
  CHECK_FALSE(sigma.hasNullary());
  sigma.add("a", 0);
  CHECK(sigma.hasNullary());
}

TEST_CASE("indexed symbol display") {
  CHECK(F1.display() == "f1");
  CHECK(sym("f1", 2, 1).display() == "f1_1");
  CHECK(A.display() == "a");
}

}  // TEST_SUITE
