#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace butree {

// Syntax error carrying a 1-based character offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A ranked symbol. Symbols of arity >= 1 may carry a position index assigned
// by linearization; index 0 means unindexed.
struct Symbol {
  std::string name;
  int arity = 0;
  int index = 0;

  bool indexed() const { return index > 0; }
  Symbol base() const { return Symbol{name, arity, 0}; }
  std::string display() const;

  auto operator<=>(const Symbol&) const = default;
};

// Maps each symbol name to its unique arity.
class RankedAlphabet {
 public:
  RankedAlphabet() = default;
  explicit RankedAlphabet(const std::map<std::string, int>& symbols);

  void add(const std::string& name, int arity);
  bool contains(const std::string& name) const;
  int arityOf(const std::string& name) const;
  Symbol symbol(const std::string& name) const;
  bool hasNullary() const;
  const std::map<std::string, int>& symbols() const { return symbols_; }

 private:
  std::map<std::string, int> symbols_;
};

// Finite ordered ranked tree; immutable value, usable as a set member.
class Tree {
 public:
  explicit Tree(Symbol label, std::vector<Tree> children = {});

  const Symbol& label() const { return label_; }
  const std::vector<Tree>& children() const { return children_; }
  int size() const { return size_; }  // node count
  std::string str() const;

  bool operator==(const Tree& other) const;
  // Orders by node count first, then structurally; any total order works for
  // set storage, size-first keeps enumeration output small-to-large.
  bool operator<(const Tree& other) const;

 private:
  Symbol label_;
  std::vector<Tree> children_;
  int size_;
};

// (g, i): some node labeled g has the symbol in question rooting its i-th
// child. childIndex is 1-based.
struct FatherPair {
  Symbol parent;
  int childIndex = 1;

  std::string display() const;
  auto operator<=>(const FatherPair&) const = default;
};

Symbol rootOf(const Tree& t);

// father(t, f): all pairs (g, i) such that a subtree g(s1,...,sl) of t has
// root(s_i) = f, computed by the recursive decomposition over children.
std::set<FatherPair> fatherOfTree(const Tree& t, const Symbol& f);

// Replaces every occurrence of the nullary symbol c in t, each occurrence
// independently, by a member of candidates. No occurrence of c yields {t};
// empty candidates with at least one occurrence yields the empty set.
std::set<Tree> substituteAll(const Tree& t, const Symbol& c,
                             const std::set<Tree>& candidates);

// Textual tree syntax: f(g(a),b). Nullary symbols are written bare,
// identifiers are one letter followed by optional digits, whitespace is
// insignificant. Arities are taken from the child counts.
Tree parseTree(const std::string& text);

}  // namespace butree
