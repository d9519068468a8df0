#pragma once

// Test-only membership decision procedure, written directly from the language
// semantics by un-substituting: a product (or star) member is decomposed into
// an antichain of replaced subtrees plus a left tree whose former c-leaves are
// exactly the replacement sites. Deliberately independent of the library's
// enumeration; used to check enumerateLanguage both ways at small bounds.

#include <functional>
#include <vector>

#include "expr.hpp"
#include "trees.hpp"

namespace semantic {

using butree::Expr;
using butree::ExprKind;
using butree::Symbol;
using butree::Tree;

struct Decomp {
  Tree replaced;               // t with the chosen antichain replaced by c
  std::vector<Tree> removed;   // the subtrees cut out, in no particular order
};

// Every way to cut an antichain out of t. A bare c-leaf must itself be a
// replacement site (total substitution leaves no original c behind), so at a
// c-leaf the only option is to cut; elsewhere cutting is optional.
inline void decompositions(const Tree& t, const Symbol& c, bool allowRootCut,
                           std::vector<Decomp>& out) {
  if (t.label() == c) {
    if (allowRootCut) out.push_back(Decomp{Tree(c), {t}});
    return;
  }
  if (allowRootCut) out.push_back(Decomp{Tree(c), {t}});
  // Keep the root, combine child decompositions.
  std::vector<std::vector<Decomp>> per;
  per.reserve(t.children().size());
  for (const Tree& child : t.children()) {
    std::vector<Decomp> sub;
    decompositions(child, c, true, sub);
    if (sub.empty()) return;  // a kept bare c below: no valid decomposition
    per.push_back(std::move(sub));
  }
  std::vector<Tree> kids;
  std::vector<Tree> removed;
  std::function<void(std::size_t)> walk = [&](std::size_t slot) {
    if (slot == per.size()) {
      out.push_back(Decomp{Tree(t.label(), kids), removed});
      return;
    }
    for (const Decomp& d : per[slot]) {
      kids.push_back(d.replaced);
      std::size_t mark = removed.size();
      removed.insert(removed.end(), d.removed.begin(), d.removed.end());
      walk(slot + 1);
      removed.erase(removed.begin() + static_cast<std::ptrdiff_t>(mark), removed.end());
      kids.pop_back();
    }
  };
  walk(0);
}

using Memo = std::map<std::pair<const void*, Tree>, bool>;

inline bool memberMemo(const Expr& e, const Tree& t, Memo& memo) {
  auto key = std::make_pair(e.identity(), t);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool result = false;
  switch (e.kind()) {
    case ExprKind::Apply: {
      result = t.label() == e.symbol();
      for (std::size_t i = 0; i < e.args().size() && result; ++i) {
        result = memberMemo(e.args()[i], t.children()[i], memo);
      }
      break;
    }
    case ExprKind::Sum:
      result = memberMemo(e.left(), t, memo) || memberMemo(e.right(), t, memo);
      break;
    case ExprKind::Product: {
      std::vector<Decomp> cuts;
      decompositions(t, e.symbol(), true, cuts);
      for (const Decomp& d : cuts) {
        bool ok = memberMemo(e.left(), d.replaced, memo);
        for (std::size_t i = 0; i < d.removed.size() && ok; ++i) {
          ok = memberMemo(e.right(), d.removed[i], memo);
        }
        if (ok) {
          result = true;
          break;
        }
      }
      break;
    }
    case ExprKind::Star: {
      if (t == Tree(e.symbol())) {
        result = true;
        break;
      }
      // Root stays, so every removed subtree is strictly smaller and the
      // recursion terminates.
      std::vector<Decomp> cuts;
      decompositions(t, e.symbol(), false, cuts);
      for (const Decomp& d : cuts) {
        bool ok = memberMemo(e.inner(), d.replaced, memo);
        for (std::size_t i = 0; i < d.removed.size() && ok; ++i) {
          ok = memberMemo(e, d.removed[i], memo);
        }
        if (ok) {
          result = true;
          break;
        }
      }
      break;
    }
  }
  memo[key] = result;
  return result;
}

inline bool member(const Expr& e, const Tree& t) {
  Memo memo;
  return memberMemo(e, t, memo);
}

}  // namespace semantic
