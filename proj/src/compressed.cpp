#include "compressed.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace butree {

namespace {

std::string bracedSet(const std::set<StateId>& states) {
  std::string out = "{";
  bool first = true;
  for (const StateId& q : states) {
    if (!first) out += ",";
    out += q;
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string CompressedTransition::display() const {
  std::string out = "((";
  for (std::size_t i = 0; i < originSets.size(); ++i) {
    if (i != 0) out += ",";
    out += bracedSet(originSets[i]);
  }
  out += "),";
  out += symbol.display();
  out += ",";
  out += bracedSet(targets);
  out += ")";
  return out;
}

CompressedTreeAutomaton::CompressedTreeAutomaton(std::set<Symbol> alphabet,
                                                 std::set<StateId> states,
                                                 std::set<StateId> finals,
                                                 std::set<CompressedTransition> transitions)
    : alphabet_(std::move(alphabet)),
      states_(std::move(states)),
      finals_(std::move(finals)),
      transitions_(std::move(transitions)) {
  for (const StateId& q : finals_) {
    if (!states_.count(q)) {
      throw std::invalid_argument("compressed automaton: final state " + q + " unknown");
    }
  }
  for (const CompressedTransition& t : transitions_) {
    if (!alphabet_.count(t.symbol)) {
      throw std::invalid_argument("compressed automaton: transition symbol " +
                                  t.symbol.display() + " not in the alphabet");
    }
    if (static_cast<int>(t.originSets.size()) != t.symbol.arity) {
      throw std::invalid_argument("compressed automaton: transition " + t.display() +
                                  " has an origin-set count different from the symbol arity");
    }
    for (const auto& originSet : t.originSets) {
      for (const StateId& q : originSet) {
        if (!states_.count(q)) {
          throw std::invalid_argument("compressed automaton: transition origin " + q + " unknown");
        }
      }
    }
    for (const StateId& q : t.targets) {
      if (!states_.count(q)) {
        throw std::invalid_argument("compressed automaton: transition target " + q + " unknown");
      }
    }
  }
  for (const CompressedTransition& t : transitions_) bySymbol_[t.symbol].push_back(&t);
}

const std::vector<const CompressedTransition*>& CompressedTreeAutomaton::transitionsFor(
    const Symbol& f) const {
  static const std::vector<const CompressedTransition*> kNone;
  auto it = bySymbol_.find(f);
  return it != bySymbol_.end() ? it->second : kNone;
}

std::set<StateId> restrictedDelta(const CompressedTreeAutomaton& c,
                                  const std::vector<StateId>& origins, const Symbol& f) {
  if (static_cast<int>(origins.size()) != f.arity) {
    throw std::invalid_argument("restrictedDelta: " + std::to_string(origins.size()) +
                                " origins for symbol " + f.display() + " of arity " +
                                std::to_string(f.arity));
  }
  std::set<StateId> out;
  for (const CompressedTransition* t : c.transitionsFor(f)) {
    bool active = true;
    for (std::size_t i = 0; i < origins.size() && active; ++i) {
      active = t->originSets[i].count(origins[i]) != 0;
    }
    if (active) out.insert(t->targets.begin(), t->targets.end());
  }
  return out;
}

namespace {

bool intersects(const std::set<StateId>& a, const std::set<StateId>& b) {
  const std::set<StateId>& small = a.size() <= b.size() ? a : b;
  const std::set<StateId>& big = a.size() <= b.size() ? b : a;
  for (const StateId& q : small) {
    if (big.count(q)) return true;
  }
  return false;
}

}  // namespace

std::set<StateId> runCompressed(const CompressedTreeAutomaton& c, const Tree& t) {
  if (!c.alphabet().count(t.label())) {
    throw std::invalid_argument("runCompressed: symbol " + t.label().display() +
                                " not in the automaton alphabet");
  }
  std::vector<std::set<StateId>> childSets;
  childSets.reserve(t.children().size());
  for (const Tree& child : t.children()) childSets.push_back(runCompressed(c, child));
  std::set<StateId> out;
  for (const CompressedTransition* tr : c.transitionsFor(t.label())) {
    bool active = true;
    for (std::size_t i = 0; i < childSets.size() && active; ++i) {
      active = intersects(childSets[i], tr->originSets[i]);
    }
    if (active) out.insert(tr->targets.begin(), tr->targets.end());
  }
  return out;
}

bool acceptsCompressed(const CompressedTreeAutomaton& c, const Tree& t) {
  std::set<StateId> reached = runCompressed(c, t);
  for (const StateId& q : reached) {
    if (c.finals().count(q)) return true;
  }
  return false;
}

CompressedTreeAutomaton alphabeticalImageCompressed(const CompressedTreeAutomaton& c,
                                                    const std::map<Symbol, Symbol>& phi) {
  std::set<Symbol> alphabet;
  for (const Symbol& s : c.alphabet()) {
    auto it = phi.find(s);
    if (it == phi.end()) {
      throw std::invalid_argument("alphabeticalImageCompressed: morphism undefined on " +
                                  s.display());
    }
    if (it->second.arity != s.arity) {
      throw std::invalid_argument("alphabeticalImageCompressed: morphism changes the arity of " +
                                  s.display());
    }
    alphabet.insert(it->second);
  }
  std::set<CompressedTransition> transitions;
  for (const CompressedTransition& t : c.transitions()) {
    transitions.insert(CompressedTransition{t.originSets, phi.at(t.symbol), t.targets});
  }
  return CompressedTreeAutomaton(std::move(alphabet), c.states(), c.finals(),
                                 std::move(transitions));
}

TreeAutomaton expand(const CompressedTreeAutomaton& c) {
  std::set<Transition> transitions;
  for (const CompressedTransition& t : c.transitions()) {
    std::vector<StateId> tuple(t.originSets.size());
    std::function<void(std::size_t)> emit = [&](std::size_t slot) {
      if (slot == t.originSets.size()) {
        for (const StateId& q : t.targets) transitions.insert(Transition{tuple, t.symbol, q});
        return;
      }
      for (const StateId& q : t.originSets[slot]) {
        tuple[slot] = q;
        emit(slot + 1);
      }
    };
    emit(0);
  }
  return TreeAutomaton(c.alphabet(), c.states(), c.finals(), std::move(transitions));
}

CompressedTreeAutomaton quotientCompressed(const CompressedTreeAutomaton& c,
                                           const StatePartition& partition) {
  if (!isBottomUpCongruence(expand(c), partition)) {
    throw std::invalid_argument(
        "quotientCompressed: partition is not a Bottom-Up congruence for the expansion");
  }
  std::set<StateId> states;
  std::set<StateId> finals;
  for (const auto& block : partition.blocks()) {
    StateId name = StatePartition::blockName(block);
    states.insert(name);
    if (c.finals().count(*block.begin())) finals.insert(name);
  }
  std::set<CompressedTransition> transitions;
  for (const CompressedTransition& t : c.transitions()) {
    std::vector<std::set<StateId>> originSets;
    originSets.reserve(t.originSets.size());
    for (const auto& originSet : t.originSets) {
      std::set<StateId> mapped;
      for (const StateId& q : originSet) mapped.insert(partition.blockNameOf(q));
      originSets.push_back(std::move(mapped));
    }
    std::set<StateId> targets;
    for (const StateId& q : t.targets) targets.insert(partition.blockNameOf(q));
    transitions.insert(
        CompressedTransition{std::move(originSets), t.symbol, std::move(targets)});
  }
  return CompressedTreeAutomaton(c.alphabet(), std::move(states), std::move(finals),
                                 std::move(transitions));
}

std::vector<CompressedTransition> deadTransitions(const CompressedTreeAutomaton& c) {
  std::vector<CompressedTransition> out;
  for (const CompressedTransition& t : c.transitions()) {
    for (const auto& originSet : t.originSets) {
      if (originSet.empty()) {
        out.push_back(t);
        break;
      }
    }
  }
  return out;
}

namespace {

std::map<StateId, std::string> compressedSignatures(const CompressedTreeAutomaton& a) {
  std::map<StateId, std::map<std::string, int>> features;
  for (const StateId& q : a.states()) features[q] = {};
  for (const CompressedTransition& t : a.transitions()) {
    for (const StateId& q : t.targets) features[q]["t:" + t.symbol.display()]++;
    for (std::size_t i = 0; i < t.originSets.size(); ++i) {
      for (const StateId& q : t.originSets[i]) {
        features[q]["o:" + t.symbol.display() + ":" + std::to_string(i)]++;
      }
    }
  }
  std::map<StateId, std::string> out;
  for (const StateId& q : a.states()) {
    std::string sig = a.finals().count(q) ? "F" : "-";
    for (const auto& [key, count] : features[q]) sig += "|" + key + "=" + std::to_string(count);
    out[q] = sig;
  }
  return out;
}

}  // namespace

bool isIsomorphicCompressed(const CompressedTreeAutomaton& a, const CompressedTreeAutomaton& b) {
  if (a.states().size() != b.states().size() || a.finals().size() != b.finals().size() ||
      a.transitions().size() != b.transitions().size() || a.alphabet() != b.alphabet()) {
    return false;
  }
  auto sigA = compressedSignatures(a);
  auto sigB = compressedSignatures(b);
  std::map<std::string, std::vector<StateId>> groupsB;
  for (const auto& [q, sig] : sigB) groupsB[sig].push_back(q);
  for (const auto& [q, sig] : sigA) {
    auto it = groupsB.find(sig);
    if (it == groupsB.end()) return false;
  }

  std::vector<StateId> order(a.states().begin(), a.states().end());
  std::map<StateId, StateId> mapping;
  std::set<StateId> used;
  std::function<bool(std::size_t)> assign = [&](std::size_t idx) -> bool {
    if (idx == order.size()) {
      std::set<CompressedTransition> mapped;
      for (const CompressedTransition& t : a.transitions()) {
        std::vector<std::set<StateId>> originSets;
        for (const auto& originSet : t.originSets) {
          std::set<StateId> s;
          for (const StateId& q : originSet) s.insert(mapping.at(q));
          originSets.push_back(std::move(s));
        }
        std::set<StateId> targets;
        for (const StateId& q : t.targets) targets.insert(mapping.at(q));
        mapped.insert(CompressedTransition{std::move(originSets), t.symbol, std::move(targets)});
      }
      return mapped == b.transitions();
    }
    const StateId& q = order[idx];
    auto it = groupsB.find(sigA.at(q));
    if (it == groupsB.end()) return false;
    for (const StateId& candidate : it->second) {
      if (used.count(candidate)) continue;
      mapping[q] = candidate;
      used.insert(candidate);
      if (assign(idx + 1)) return true;
      used.erase(candidate);
      mapping.erase(q);
    }
    return false;
  };
  return assign(0);
}

namespace {

std::vector<const CompressedTransition*> sortedTransitions(const CompressedTreeAutomaton& a) {
  std::vector<const CompressedTransition*> out;
  out.reserve(a.transitions().size());
  for (const CompressedTransition& t : a.transitions()) out.push_back(&t);
  std::sort(out.begin(), out.end(),
            [](const CompressedTransition* x, const CompressedTransition* y) {
              auto kx = std::make_tuple(x->symbol.display(), x->originSets, x->targets);
              auto ky = std::make_tuple(y->symbol.display(), y->originSets, y->targets);
              return kx < ky;
            });
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string toJson(const CompressedTreeAutomaton& a) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json alphabet = nlohmann::ordered_json::object();
  std::map<std::string, int> names;
  for (const Symbol& s : a.alphabet()) names[s.display()] = s.arity;
  for (const auto& [name, arity] : names) alphabet[name] = arity;
  j["alphabet"] = std::move(alphabet);
  j["states"] = std::vector<StateId>(a.states().begin(), a.states().end());
  j["finals"] = std::vector<StateId>(a.finals().begin(), a.finals().end());
  auto transitions = nlohmann::ordered_json::array();
  for (const CompressedTransition* t : sortedTransitions(a)) {
    nlohmann::ordered_json entry;
    auto originSets = nlohmann::ordered_json::array();
    for (const auto& originSet : t->originSets) {
      originSets.push_back(std::vector<StateId>(originSet.begin(), originSet.end()));
    }
    entry["originSets"] = std::move(originSets);
    entry["symbol"] = t->symbol.display();
    entry["targets"] = std::vector<StateId>(t->targets.begin(), t->targets.end());
    transitions.push_back(std::move(entry));
  }
  j["transitions"] = std::move(transitions);
  return j.dump(2) + "\n";
}

std::string toDot(const CompressedTreeAutomaton& a) {
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (const StateId& q : a.states()) {
    out << "  " << quoted(q) << " [shape=" << (a.finals().count(q) ? "doublecircle" : "circle")
        << "];\n";
  }
  int junction = 0;
  for (const CompressedTransition* t : sortedTransitions(a)) {
    std::string node = "t" + std::to_string(junction++);
    if (t->originSets.empty()) {
      out << "  " << node << " [shape=none, label=" << quoted(t->symbol.display()) << "];\n";
      for (const StateId& target : t->targets) {
        out << "  " << node << " -> " << quoted(target) << ";\n";
      }
    } else {
      out << "  " << node << " [shape=point, label=\"\"];\n";
      for (const StateId& target : t->targets) {
        out << "  " << node << " -> " << quoted(target)
            << " [label=" << quoted(t->symbol.display()) << "];\n";
      }
      for (std::size_t i = 0; i < t->originSets.size(); ++i) {
        for (const StateId& q : t->originSets[i]) {
          out << "  " << quoted(q) << " -> " << node << " [style=dashed, label=\"" << (i + 1)
              << "\"];\n";
        }
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string toText(const CompressedTreeAutomaton& a) {
  std::ostringstream out;
  out << "states:";
  for (const StateId& q : a.states()) out << " " << q;
  out << "\nfinals:";
  for (const StateId& q : a.finals()) out << " " << q;
  out << "\ntransitions:\n";
  for (const CompressedTransition* t : sortedTransitions(a)) {
    out << "  " << t->symbol.display() << " (";
    for (std::size_t i = 0; i < t->originSets.size(); ++i) {
      if (i != 0) out << ", ";
      out << bracedSet(t->originSets[i]);
    }
    out << ") -> " << bracedSet(t->targets) << "\n";
  }
  return out.str();
}

}  // namespace butree
