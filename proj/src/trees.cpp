#include "trees.hpp"

#include <cctype>
#include <sstream>

namespace butree {

std::string Symbol::display() const {
  if (index <= 0) return name;
  // A separator avoids collisions like {f1, index 1} vs {f, index 11}.
  if (!name.empty() && std::isdigit(static_cast<unsigned char>(name.back()))) {
    return name + "_" + std::to_string(index);
  }
  return name + std::to_string(index);
}

RankedAlphabet::RankedAlphabet(const std::map<std::string, int>& symbols) {
  for (const auto& [name, arity] : symbols) add(name, arity);
}

void RankedAlphabet::add(const std::string& name, int arity) {
  if (name.empty()) throw std::invalid_argument("alphabet: empty symbol name");
  if (arity < 0) throw std::invalid_argument("alphabet: negative arity for " + name);
  auto it = symbols_.find(name);
  if (it != symbols_.end() && it->second != arity) {
    throw std::invalid_argument("alphabet: symbol " + name + " declared with arities " +
                                std::to_string(it->second) + " and " + std::to_string(arity));
  }
  symbols_[name] = arity;
}

bool RankedAlphabet::contains(const std::string& name) const {
  return symbols_.count(name) != 0;
}

int RankedAlphabet::arityOf(const std::string& name) const {
  auto it = symbols_.find(name);
  if (it == symbols_.end()) throw std::invalid_argument("alphabet: unknown symbol " + name);
  return it->second;
}

Symbol RankedAlphabet::symbol(const std::string& name) const {
  return Symbol{name, arityOf(name), 0};
}

bool RankedAlphabet::hasNullary() const {
  for (const auto& [name, arity] : symbols_) {
    if (arity == 0) return true;
  }
  return false;
}

Tree::Tree(Symbol label, std::vector<Tree> children)
    : label_(std::move(label)), children_(std::move(children)), size_(1) {
  if (static_cast<int>(children_.size()) != label_.arity) {
    throw std::invalid_argument("tree: symbol " + label_.display() + " has arity " +
                                std::to_string(label_.arity) + " but " +
                                std::to_string(children_.size()) + " children were given");
  }
  for (const Tree& child : children_) size_ += child.size();
}

std::string Tree::str() const {
  std::ostringstream out;
  out << label_.display();
  if (!children_.empty()) {
    out << '(';
    for (std::size_t i = 0; i < children_.size(); ++i) {
      if (i != 0) out << ',';
      out << children_[i].str();
    }
    out << ')';
  }
  return out.str();
}

bool Tree::operator==(const Tree& other) const {
  if (size_ != other.size_ || label_ != other.label_) return false;
  return children_ == other.children_;
}

bool Tree::operator<(const Tree& other) const {
  if (size_ != other.size_) return size_ < other.size_;
  if (label_ != other.label_) return label_ < other.label_;
  return children_ < other.children_;
}

std::string FatherPair::display() const {
  return "(" + parent.display() + "," + std::to_string(childIndex) + ")";
}

Symbol rootOf(const Tree& t) { return t.label(); }

std::set<FatherPair> fatherOfTree(const Tree& t, const Symbol& f) {
  std::set<FatherPair> out;
  const auto& kids = t.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    auto below = fatherOfTree(kids[i], f);
    out.insert(below.begin(), below.end());
    if (kids[i].label() == f) out.insert(FatherPair{t.label(), static_cast<int>(i) + 1});
  }
  return out;
}

namespace {

void combineChildren(const std::vector<std::set<Tree>>& per, std::size_t slot,
                     std::vector<Tree>& acc, const Symbol& label, std::set<Tree>& out) {
  if (slot == per.size()) {
    out.insert(Tree(label, acc));
    return;
  }
  for (const Tree& choice : per[slot]) {
    acc.push_back(choice);
    combineChildren(per, slot + 1, acc, label, out);
    acc.pop_back();
  }
}

}  // namespace

std::set<Tree> substituteAll(const Tree& t, const Symbol& c,
                             const std::set<Tree>& candidates) {
  if (c.arity != 0) {
    throw std::invalid_argument("substituteAll: substituted symbol " + c.display() +
                                " must be nullary");
  }
  if (t.label() == c) return candidates;
  if (t.children().empty()) return {t};
  std::vector<std::set<Tree>> per;
  per.reserve(t.children().size());
  for (const Tree& child : t.children()) {
    per.push_back(substituteAll(child, c, candidates));
    if (per.back().empty()) return {};  // empty cartesian factor
  }
  std::set<Tree> out;
  std::vector<Tree> acc;
  combineChildren(per, 0, acc, t.label(), out);
  return out;
}

namespace {

struct TreeParser {
  const std::string& text;
  std::size_t pos = 0;

  void skipWs() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos + 1), pos + 1);
  }

  std::string ident() {
    skipWs();
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos]))) {
      fail("expected symbol name");
    }
    std::string name(1, text[pos++]);
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      name += text[pos++];
    }
    return name;
  }

  Tree parseNode() {
    std::string name = ident();
    skipWs();
    std::vector<Tree> kids;
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      kids.push_back(parseNode());
      skipWs();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        kids.push_back(parseNode());
        skipWs();
      }
      if (pos >= text.size() || text[pos] != ')') fail("expected ',' or ')'");
      ++pos;
    }
    Symbol label{name, static_cast<int>(kids.size()), 0};
    return Tree(std::move(label), std::move(kids));
  }
};

}  // namespace

Tree parseTree(const std::string& text) {
  TreeParser p{text};
  Tree t = p.parseNode();
  p.skipWs();
  if (p.pos != text.size()) p.fail("unexpected trailing input");
  return t;
}

}  // namespace butree
