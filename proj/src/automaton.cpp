#include "automaton.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace butree {

std::string Transition::display() const {
  std::string out = "(";
  out += "(";
  for (std::size_t i = 0; i < origins.size(); ++i) {
    if (i != 0) out += ",";
    out += origins[i];
  }
  out += "),";
  out += symbol.display();
  out += ",";
  out += target;
  out += ")";
  return out;
}

TreeAutomaton::TreeAutomaton(std::set<Symbol> alphabet, std::set<StateId> states,
                             std::set<StateId> finals, std::set<Transition> transitions)
    : alphabet_(std::move(alphabet)),
      states_(std::move(states)),
      finals_(std::move(finals)),
      transitions_(std::move(transitions)) {
  for (const StateId& q : finals_) {
    if (!states_.count(q)) throw std::invalid_argument("automaton: final state " + q + " unknown");
  }
  for (const Transition& t : transitions_) {
    if (!alphabet_.count(t.symbol)) {
      throw std::invalid_argument("automaton: transition symbol " + t.symbol.display() +
                                  " not in the alphabet");
    }
    if (static_cast<int>(t.origins.size()) != t.symbol.arity) {
      throw std::invalid_argument("automaton: transition " + t.display() +
                                  " has an origin count different from the symbol arity");
    }
    if (!states_.count(t.target)) {
      throw std::invalid_argument("automaton: transition target " + t.target + " unknown");
    }
    for (const StateId& q : t.origins) {
      if (!states_.count(q)) {
        throw std::invalid_argument("automaton: transition origin " + q + " unknown");
      }
    }
  }
  for (const Transition& t : transitions_) {
    exact_[{t.symbol, t.origins}].insert(t.target);
    bySymbol_[t.symbol].push_back(&t);
  }
}

const std::set<StateId>& TreeAutomaton::lookup(const std::vector<StateId>& origins,
                                               const Symbol& f) const {
  static const std::set<StateId> kEmpty;
  auto it = exact_.find({f, origins});
  return it != exact_.end() ? it->second : kEmpty;
}

const std::vector<const Transition*>& TreeAutomaton::transitionsFor(const Symbol& f) const {
  static const std::vector<const Transition*> kNone;
  auto it = bySymbol_.find(f);
  return it != bySymbol_.end() ? it->second : kNone;
}

std::set<StateId> deltaOnSets(const TreeAutomaton& a,
                              const std::vector<std::set<StateId>>& originSets, const Symbol& f) {
  if (static_cast<int>(originSets.size()) != f.arity) {
    throw std::invalid_argument("deltaOnSets: " + std::to_string(originSets.size()) +
                                " origin sets for symbol " + f.display() + " of arity " +
                                std::to_string(f.arity));
  }
  // Union over the cartesian product of the origin sets; scanning the
  // transitions of f and testing slot membership computes the same set.
  std::set<StateId> out;
  for (const Transition* t : a.transitionsFor(f)) {
    bool match = true;
    for (std::size_t i = 0; i < originSets.size() && match; ++i) {
      match = originSets[i].count(t->origins[i]) != 0;
    }
    if (match) out.insert(t->target);
  }
  return out;
}

std::set<StateId> runTree(const TreeAutomaton& a, const Tree& t) {
  if (!a.alphabet().count(t.label())) {
    throw std::invalid_argument("runTree: symbol " + t.label().display() +
                                " not in the automaton alphabet");
  }
  std::vector<std::set<StateId>> childSets;
  childSets.reserve(t.children().size());
  for (const Tree& child : t.children()) childSets.push_back(runTree(a, child));
  return deltaOnSets(a, childSets, t.label());
}

bool accepts(const TreeAutomaton& a, const Tree& t) {
  std::set<StateId> reached = runTree(a, t);
  for (const StateId& q : reached) {
    if (a.finals().count(q)) return true;
  }
  return false;
}

bool isDeterministic(const TreeAutomaton& a) {
  std::map<std::pair<Symbol, std::vector<StateId>>, int> counts;
  for (const Transition& t : a.transitions()) {
    if (++counts[{t.symbol, t.origins}] > 1) return false;
  }
  return true;
}

TreeAutomaton alphabeticalImage(const TreeAutomaton& a, const std::map<Symbol, Symbol>& phi) {
  std::set<Symbol> alphabet;
  for (const Symbol& s : a.alphabet()) {
    auto it = phi.find(s);
    if (it == phi.end()) {
      throw std::invalid_argument("alphabeticalImage: morphism undefined on " + s.display());
    }
    if (it->second.arity != s.arity) {
      throw std::invalid_argument("alphabeticalImage: morphism changes the arity of " +
                                  s.display());
    }
    alphabet.insert(it->second);
  }
  std::set<Transition> transitions;
  for (const Transition& t : a.transitions()) {
    transitions.insert(Transition{t.origins, phi.at(t.symbol), t.target});
  }
  return TreeAutomaton(std::move(alphabet), a.states(), a.finals(), std::move(transitions));
}

StatePartition::StatePartition(std::set<std::set<StateId>> blocks) : blocks_(std::move(blocks)) {
  for (const auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("partition: empty block");
    for (const StateId& q : block) {
      if (!blockOf_.emplace(q, &block).second) {
        throw std::invalid_argument("partition: state " + q + " appears in two blocks");
      }
    }
  }
}

bool StatePartition::covers(const std::set<StateId>& states) const {
  if (blockOf_.size() != states.size()) return false;
  for (const StateId& q : states) {
    if (!blockOf_.count(q)) return false;
  }
  return true;
}

const std::set<StateId>& StatePartition::blockOf(const StateId& q) const {
  auto it = blockOf_.find(q);
  if (it == blockOf_.end()) throw std::invalid_argument("partition: unknown state " + q);
  return *it->second;
}

std::string StatePartition::blockName(const std::set<StateId>& block) {
  std::string out = "{";
  bool first = true;
  for (const StateId& q : block) {
    if (!first) out += ",";
    out += q;
    first = false;
  }
  return out + "}";
}

std::string StatePartition::blockNameOf(const StateId& q) const { return blockName(blockOf(q)); }

StatePartition StatePartition::identity(const std::set<StateId>& states) {
  std::set<std::set<StateId>> blocks;
  for (const StateId& q : states) blocks.insert({q});
  return StatePartition(std::move(blocks));
}

namespace {

// ~ on delta values of a deterministic automaton: sets of size 0 or 1.
bool equivalentResults(const std::set<StateId>& x, const std::set<StateId>& y,
                       const StatePartition& partition) {
  if (x.empty() || y.empty()) return x.empty() && y.empty();
  return &partition.blockOf(*x.begin()) == &partition.blockOf(*y.begin());
}

}  // namespace

bool isBottomUpCongruence(const TreeAutomaton& a, const StatePartition& partition) {
  if (!isDeterministic(a)) {
    throw std::invalid_argument("isBottomUpCongruence: automaton is not deterministic");
  }
  if (!partition.covers(a.states())) {
    throw std::invalid_argument("isBottomUpCongruence: partition does not cover the state set");
  }
  for (const auto& block : partition.blocks()) {
    bool anyFinal = false, anyNonFinal = false;
    for (const StateId& q : block) {
      (a.finals().count(q) ? anyFinal : anyNonFinal) = true;
    }
    if (anyFinal && anyNonFinal) return false;
  }
  std::vector<StateId> all(a.states().begin(), a.states().end());
  for (const auto& block : partition.blocks()) {
    std::vector<StateId> members(block.begin(), block.end());
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        const StateId& p = members[x];
        const StateId& pPrime = members[y];
        for (const Symbol& f : a.alphabet()) {
          int m = f.arity;
          if (m == 0) continue;
          // All placements of p/p' in one slot, other slots over Q^(m-1).
          std::vector<StateId> ctx(static_cast<std::size_t>(m));
          std::function<bool(int, int)> walk = [&](int slot, int fill) -> bool {
            if (fill == m) {
              std::vector<StateId> left = ctx;
              std::vector<StateId> right = ctx;
              left[static_cast<std::size_t>(slot)] = p;
              right[static_cast<std::size_t>(slot)] = pPrime;
              return equivalentResults(a.lookup(left, f), a.lookup(right, f), partition);
            }
            if (fill == slot) return walk(slot, fill + 1);
            for (const StateId& q : all) {
              ctx[static_cast<std::size_t>(fill)] = q;
              if (!walk(slot, fill + 1)) return false;
            }
            return true;
          };
          for (int slot = 0; slot < m; ++slot) {
            ctx.assign(static_cast<std::size_t>(m), StateId{});
            if (!walk(slot, 0)) return false;
          }
        }
      }
    }
  }
  return true;
}

TreeAutomaton quotient(const TreeAutomaton& a, const StatePartition& partition) {
  if (!isBottomUpCongruence(a, partition)) {
    throw std::invalid_argument("quotient: partition is not a Bottom-Up congruence");
  }
  std::set<StateId> states;
  std::set<StateId> finals;
  for (const auto& block : partition.blocks()) {
    StateId name = StatePartition::blockName(block);
    states.insert(name);
    if (a.finals().count(*block.begin())) finals.insert(name);
  }
  std::set<Transition> transitions;
  for (const Transition& t : a.transitions()) {
    std::vector<StateId> origins;
    origins.reserve(t.origins.size());
    for (const StateId& q : t.origins) origins.push_back(partition.blockNameOf(q));
    transitions.insert(Transition{std::move(origins), t.symbol, partition.blockNameOf(t.target)});
  }
  return TreeAutomaton(a.alphabet(), std::move(states), std::move(finals), std::move(transitions));
}

namespace {

// Per-state shape fingerprint used to cut the bijection search space: finality
// plus, per symbol, how often the state occurs as target and in each origin
// slot.
std::map<StateId, std::string> stateSignatures(const TreeAutomaton& a) {
  std::map<StateId, std::map<std::string, int>> features;
  for (const StateId& q : a.states()) features[q] = {};
  for (const Transition& t : a.transitions()) {
    features[t.target]["t:" + t.symbol.display()]++;
    for (std::size_t i = 0; i < t.origins.size(); ++i) {
      features[t.origins[i]]["o:" + t.symbol.display() + ":" + std::to_string(i)]++;
    }
  }
  std::map<StateId, std::string> out;
  for (const StateId& q : a.states()) {
    std::string sig = a.finals().count(q) ? "F" : "-";
    for (const auto& [key, count] : features[q]) {
      sig += "|" + key + "=" + std::to_string(count);
    }
    out[q] = sig;
  }
  return out;
}

}  // namespace

bool isIsomorphic(const TreeAutomaton& a, const TreeAutomaton& b) {
  if (a.states().size() != b.states().size() || a.finals().size() != b.finals().size() ||
      a.transitions().size() != b.transitions().size() || a.alphabet() != b.alphabet()) {
    return false;
  }
  auto sigA = stateSignatures(a);
  auto sigB = stateSignatures(b);
  std::map<std::string, std::vector<StateId>> groupsA, groupsB;
  for (const auto& [q, sig] : sigA) groupsA[sig].push_back(q);
  for (const auto& [q, sig] : sigB) groupsB[sig].push_back(q);
  if (groupsA.size() != groupsB.size()) return false;
  for (const auto& [sig, members] : groupsA) {
    auto it = groupsB.find(sig);
    if (it == groupsB.end() || it->second.size() != members.size()) return false;
  }

  std::vector<StateId> order(a.states().begin(), a.states().end());
  std::map<StateId, StateId> mapping;
  std::set<StateId> used;

  std::function<bool(std::size_t)> assign = [&](std::size_t idx) -> bool {
    if (idx == order.size()) {
      std::set<Transition> mapped;
      for (const Transition& t : a.transitions()) {
        std::vector<StateId> origins;
        origins.reserve(t.origins.size());
        for (const StateId& q : t.origins) origins.push_back(mapping.at(q));
        mapped.insert(Transition{std::move(origins), t.symbol, mapping.at(t.target)});
      }
      return mapped == b.transitions();
    }
    const StateId& q = order[idx];
    for (const StateId& candidate : groupsB.at(sigA.at(q))) {
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

std::vector<const Transition*> sortedTransitions(const TreeAutomaton& a) {
  std::vector<const Transition*> out;
  out.reserve(a.transitions().size());
  for (const Transition& t : a.transitions()) out.push_back(&t);
  std::sort(out.begin(), out.end(), [](const Transition* x, const Transition* y) {
    auto kx = std::make_tuple(x->symbol.display(), x->origins, x->target);
    auto ky = std::make_tuple(y->symbol.display(), y->origins, y->target);
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

std::string toJson(const TreeAutomaton& a) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json alphabet = nlohmann::ordered_json::object();
  std::map<std::string, int> names;
  for (const Symbol& s : a.alphabet()) names[s.display()] = s.arity;
  for (const auto& [name, arity] : names) alphabet[name] = arity;
  j["alphabet"] = std::move(alphabet);
  j["states"] = std::vector<StateId>(a.states().begin(), a.states().end());
  j["finals"] = std::vector<StateId>(a.finals().begin(), a.finals().end());
  auto transitions = nlohmann::ordered_json::array();
  for (const Transition* t : sortedTransitions(a)) {
    nlohmann::ordered_json entry;
    entry["origins"] = t->origins;
    entry["symbol"] = t->symbol.display();
    entry["target"] = t->target;
    transitions.push_back(std::move(entry));
  }
  j["transitions"] = std::move(transitions);
  return j.dump(2) + "\n";
}

std::string toDot(const TreeAutomaton& a) {
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (const StateId& q : a.states()) {
    out << "  " << quoted(q) << " [shape=" << (a.finals().count(q) ? "doublecircle" : "circle")
        << "];\n";
  }
  int junction = 0;
  for (const Transition* t : sortedTransitions(a)) {
    std::string node = "t" + std::to_string(junction++);
    if (t->origins.empty()) {
      out << "  " << node << " [shape=none, label=" << quoted(t->symbol.display()) << "];\n";
      out << "  " << node << " -> " << quoted(t->target) << ";\n";
    } else {
      out << "  " << node << " [shape=point, label=\"\"];\n";
      out << "  " << node << " -> " << quoted(t->target)
          << " [label=" << quoted(t->symbol.display()) << "];\n";
      for (std::size_t i = 0; i < t->origins.size(); ++i) {
        out << "  " << quoted(t->origins[i]) << " -> " << node
            << " [style=dashed, label=\"" << (i + 1) << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string toText(const TreeAutomaton& a) {
  std::ostringstream out;
  out << "states:";
  for (const StateId& q : a.states()) out << " " << q;
  out << "\nfinals:";
  for (const StateId& q : a.finals()) out << " " << q;
  out << "\ntransitions:\n";
  for (const Transition* t : sortedTransitions(a)) {
    out << "  " << t->symbol.display() << " (";
    for (std::size_t i = 0; i < t->origins.size(); ++i) {
      if (i != 0) out << ", ";
      out << t->origins[i];
    }
    out << ") -> " << t->target << "\n";
  }
  return out.str();
}

}  // namespace butree
