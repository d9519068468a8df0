#include "butree/butree.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <variant>

#include "constructions.hpp"
#include "oracle.hpp"

using namespace butree;

struct butree_expr {
  Expr expr;
};

struct butree_tree {
  Tree tree;
};

struct butree_automaton {
  std::variant<TreeAutomaton, CompressedTreeAutomaton> automaton;
};

namespace {

thread_local std::string tl_error;
thread_local std::size_t tl_error_offset = 0;

void clearError() {
  tl_error.clear();
  tl_error_offset = 0;
}

butree_status fail(butree_status code, const std::string& message, std::size_t offset = 0) {
  tl_error = message;
  tl_error_offset = offset;
  return code;
}

// Runs the body, translating exceptions into status codes.
template <typename Fn>
butree_status guarded(Fn&& fn) {
  clearError();
  try {
    return fn();
  } catch (const ParseError& err) {
    return fail(BUTREE_ERR_PARSE, err.what(), err.offset());
  } catch (const std::exception& err) {
    return fail(BUTREE_ERR_INVALID, err.what());
  }
}

char* copyOut(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

butree_status requireOut(const void* p, const char* name) {
  if (p == nullptr) return fail(BUTREE_ERR_NULL, std::string("null pointer: ") + name);
  return BUTREE_OK;
}

}  // namespace

extern "C" {

const char* butree_last_error(void) { return tl_error.c_str(); }

size_t butree_last_error_offset(void) { return tl_error_offset; }

void butree_string_free(char* s) { std::free(s); }

butree_status butree_expr_parse(const char* text, butree_expr** out) {
  if (auto rc = requireOut(text, "text"); rc != BUTREE_OK) return rc;
  if (auto rc = requireOut(out, "out"); rc != BUTREE_OK) return rc;
  return guarded([&] {
    *out = new butree_expr{parseValidated(text)};
    return BUTREE_OK;
  });
}

void butree_expr_free(butree_expr* expr) { delete expr; }

butree_status butree_expr_str(const butree_expr* expr, char** out) {
  if (auto rc = requireOut(expr, "expr"); rc != BUTREE_OK) return rc;
  if (auto rc = requireOut(out, "out"); rc != BUTREE_OK) return rc;
  return guarded([&] {
    *out = copyOut(expr->expr.str());
    return BUTREE_OK;
  });
}

butree_status butree_expr_to_json(const butree_expr* expr, char** out) {
  if (auto rc = requireOut(expr, "expr"); rc != BUTREE_OK) return rc;
  if (auto rc = requireOut(out, "out"); rc != BUTREE_OK) return rc;
  return guarded([&] {
    *out = copyOut(exprToJson(expr->expr));
    return BUTREE_OK;
  });
}

butree_status butree_expr_positions(const butree_expr* expr, butree_format format, char** out) {
  if (auto rc = requireOut(expr, "expr"); rc != BUTREE_OK) return rc;
  if (auto rc = requireOut(out, "out"); rc != BUTREE_OK) return rc;
  return guarded([&]() -> butree_status {
    PositionTable table = computePositionTable(linearize(expr->expr));
    switch (format) {
      case BUTREE_FORMAT_TEXT:
        *out = copyOut(positionTableToText(table));
        return BUTREE_OK;
      case BUTREE_FORMAT_JSON:
        *out = copyOut(positionTableToJson(table));
        return BUTREE_OK;
      default:
        return fail(BUTREE_ERR_INVALID, "positions support text and json formats");
    }
  });
}

butree_status butree_tree_parse(const char* text, butree_tree** out) {
  if (auto rc = requireOut(text, "text"); rc != BUTREE_OK) return rc;
  if (auto rc = requireOut(out, "out"); rc != BUTREE_OK) return rc;
  return guarded([&] {
    *out = new butree_tree{parseTree(text)};
    return BUTREE_OK;
  });
}

void butree_tree_free(butree_tree* tree) { delete tree; }

butree_status butree_automaton_build(const butree_expr* expr, butree_construction kind,
                                     int general, butree_automaton** out) {
  if (auto rc = requireOut(expr, "expr"); rc != BUTREE_OK) return rc;
  if (auto rc = requireOut(out, "out"); rc != BUTREE_OK) return rc;
  return guarded([&]() -> butree_status {
    const Expr& e = expr->expr;
    LinearExpr le = linearize(e);
    switch (kind) {
      case BUTREE_CONSTRUCTION_POSITION:
        *out = new butree_automaton{
            {general ? positionAutomatonGeneral(e) : positionAutomaton(le)}};
        return BUTREE_OK;
      case BUTREE_CONSTRUCTION_FATHER:
        *out = new butree_automaton{{general ? fatherAutomatonGeneral(e) : fatherAutomaton(le)}};
        return BUTREE_OK;
      case BUTREE_CONSTRUCTION_COMPRESSED_POSITION:
        *out = new butree_automaton{
            {general ? compressedPositionAutomatonGeneral(e) : compressedPositionAutomaton(le)}};
        return BUTREE_OK;
      case BUTREE_CONSTRUCTION_COMPRESSED_FATHER:
        *out = new butree_automaton{
            {general ? compressedFatherAutomatonGeneral(e) : compressedFatherAutomaton(le)}};
        return BUTREE_OK;
    }
    return fail(BUTREE_ERR_INVALID, "unknown construction kind");
  });
}

void butree_automaton_free(butree_automaton* automaton) { delete automaton; }

butree_status butree_automaton_render(const butree_automaton* automaton, butree_format format,
                                      char** out) {
  if (auto rc = requireOut(automaton, "automaton"); rc != BUTREE_OK) return rc;
  if (auto rc = requireOut(out, "out"); rc != BUTREE_OK) return rc;
  return guarded([&] {
    auto render = [&](const auto& machine) -> std::string {
      switch (format) {
        case BUTREE_FORMAT_JSON: return toJson(machine);
        case BUTREE_FORMAT_DOT: return toDot(machine);
        default: return toText(machine);
      }
    };
    *out = copyOut(std::visit(render, automaton->automaton));
    return BUTREE_OK;
  });
}

butree_status butree_automaton_run(const butree_automaton* automaton, const butree_tree* tree,
                                   int* accepted, char** states) {
  if (auto rc = requireOut(automaton, "automaton"); rc != BUTREE_OK) return rc;
  if (auto rc = requireOut(tree, "tree"); rc != BUTREE_OK) return rc;
  if (auto rc = requireOut(accepted, "accepted"); rc != BUTREE_OK) return rc;
  if (auto rc = requireOut(states, "states"); rc != BUTREE_OK) return rc;
  return guarded([&] {
    std::set<StateId> reached;
    bool ok = false;
    if (const auto* plain = std::get_if<TreeAutomaton>(&automaton->automaton)) {
      reached = runTree(*plain, tree->tree);
      ok = accepts(*plain, tree->tree);
    } else {
      const auto& compressed = std::get<CompressedTreeAutomaton>(automaton->automaton);
      reached = runCompressed(compressed, tree->tree);
      ok = acceptsCompressed(compressed, tree->tree);
    }
    std::ostringstream text;
    text << "{";
    bool first = true;
    for (const StateId& q : reached) {
      if (!first) text << ",";
      text << q;
      first = false;
    }
    text << "}";
    *accepted = ok ? 1 : 0;
    *states = copyOut(text.str());
    return BUTREE_OK;
  });
}

butree_status butree_enumerate(const butree_expr* expr, int max_nodes, char** out) {
  if (auto rc = requireOut(expr, "expr"); rc != BUTREE_OK) return rc;
  if (auto rc = requireOut(out, "out"); rc != BUTREE_OK) return rc;
  return guarded([&] {
    std::ostringstream lines;
    for (const Tree& t : enumerateLanguage(expr->expr, EnumerationBound{max_nodes, 0})) {
      lines << t.str() << "\n";
    }
    *out = copyOut(lines.str());
    return BUTREE_OK;
  });
}

butree_status butree_check_expression(const butree_expr* expr, int max_nodes, int* agree,
                                      char** report) {
  if (auto rc = requireOut(expr, "expr"); rc != BUTREE_OK) return rc;
  if (auto rc = requireOut(agree, "agree"); rc != BUTREE_OK) return rc;
  if (auto rc = requireOut(report, "report"); rc != BUTREE_OK) return rc;
  return guarded([&] {
    ValidationReport result = crossValidate(expr->expr, EnumerationBound{max_nodes, 0});
    *agree = result.allAgree() ? 1 : 0;
    *report = copyOut(result.summary());
    return BUTREE_OK;
  });
}

butree_status butree_check_random(unsigned long long seed_start, int count, int max_positions,
                                  int max_nodes, int* agree, char** report) {
  if (auto rc = requireOut(agree, "agree"); rc != BUTREE_OK) return rc;
  if (auto rc = requireOut(report, "report"); rc != BUTREE_OK) return rc;
  return guarded([&]() -> butree_status {
    if (count < 1) return fail(BUTREE_ERR_INVALID, "seed count must be >= 1");
    RankedAlphabet sigma({{"a", 0}, {"b", 0}, {"g", 1}, {"f", 2}, {"h", 3}});
    std::ostringstream table;
    bool all = true;
    long long trees = 0;
    table << "seed\ttrees\tresult\texpression\n";
    unsigned long long end = seed_start + static_cast<unsigned long long>(count);
    for (unsigned long long seed = seed_start; seed < end; ++seed) {
      Expr e = randomExpression(seed, max_positions, sigma);
      ValidationReport result = crossValidate(e, EnumerationBound{max_nodes, 0});
      all = all && result.allAgree();
      trees += result.treesChecked;
      table << seed << "\t" << result.treesChecked << "\t"
            << (result.allAgree() ? "agree" : "DISAGREE") << "\t" << e.str() << "\n";
      if (!result.allAgree() && result.firstCounterexample) {
        table << "\tcounterexample: " << result.firstCounterexample->str() << "\n";
      }
    }
    table << "total trees: " << trees << "; result: " << (all ? "AGREE" : "DISAGREE") << "\n";
    *agree = all ? 1 : 0;
    *report = copyOut(table.str());
    return BUTREE_OK;
  });
}

}  // extern "C"
