// Command-line front end over the butree C API.
//
// Exit codes: 0 success, 1 rejected tree or validation disagreement,
// 2 usage or parse error.

#include <butree/butree.h>

#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

struct StringOut {
  char* value = nullptr;
  ~StringOut() { butree_string_free(value); }
  char** slot() { return &value; }
  std::string str() const { return value ? value : ""; }
};

using ExprHandle = std::unique_ptr<butree_expr, decltype(&butree_expr_free)>;
using TreeHandle = std::unique_ptr<butree_tree, decltype(&butree_tree_free)>;
using AutomatonHandle = std::unique_ptr<butree_automaton, decltype(&butree_automaton_free)>;

int reportError(butree_status rc) {
  std::cerr << "error: " << butree_last_error() << "\n";
  return rc == BUTREE_OK ? 0 : 2;
}

std::string readExpressionText(const std::string& arg) {
  if (arg != "-") return arg;
  std::string text((std::istreambuf_iterator<char>(std::cin)),
                   std::istreambuf_iterator<char>());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

ExprHandle parseExpression(const std::string& arg, int& exitCode) {
  butree_expr* raw = nullptr;
  butree_status rc = butree_expr_parse(readExpressionText(arg).c_str(), &raw);
  if (rc != BUTREE_OK) exitCode = reportError(rc);
  return ExprHandle(raw, &butree_expr_free);
}

butree_format parseFormat(const std::string& name) {
  if (name == "json") return BUTREE_FORMAT_JSON;
  if (name == "dot") return BUTREE_FORMAT_DOT;
  return BUTREE_FORMAT_TEXT;
}

butree_construction parseConstruction(const std::string& name) {
  if (name == "father") return BUTREE_CONSTRUCTION_FATHER;
  if (name == "cposition") return BUTREE_CONSTRUCTION_COMPRESSED_POSITION;
  if (name == "cfather") return BUTREE_CONSTRUCTION_COMPRESSED_FATHER;
  return BUTREE_CONSTRUCTION_POSITION;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bottom-up tree automata from regular tree expressions"};
  app.require_subcommand(1);

  std::string expression;
  std::string construction = "position";
  std::string format = "text";
  bool general = false;
  std::vector<std::string> treeTexts;
  int maxNodes = 9;
  int seedCount = 25;
  int maxPositions = 4;

  auto addConstruction = [&](CLI::App* cmd) {
    cmd->add_option("--construction", construction,
                    "Construction: position, father, cposition, cfather")
        ->check(CLI::IsMember({"position", "father", "cposition", "cfather"}));
  };

  CLI::App* build = app.add_subcommand(
      "build", "Build an automaton and print it (states and symbols keep their "
               "position indices unless --general is given)");
  addConstruction(build);
  build->add_flag("--general", general, "Apply the delinearization morphism");
  build->add_option("--format", format, "Output format: text, json, dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  build->add_option("expression", expression, "Expression, or - for stdin")->required();

  CLI::App* run = app.add_subcommand(
      "run", "Test trees for membership in L(E) with the chosen construction "
             "(always the delinearized automaton)");
  addConstruction(run);
  run->add_option("--tree", treeTexts, "Tree, e.g. f(g(a),b); repeatable")->required();
  run->add_option("expression", expression, "Expression, or - for stdin")->required();

  CLI::App* positions = app.add_subcommand("positions", "Print the Root and Father sets");
  positions->add_option("--format", format, "Output format: text, json")
      ->check(CLI::IsMember({"text", "json"}));
  positions->add_option("expression", expression, "Expression, or - for stdin")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "List language members, one per line");
  enumerate->add_option("--max-nodes", maxNodes, "Node bound")->check(CLI::PositiveNumber);
  enumerate->add_option("expression", expression, "Expression, or - for stdin")->required();

  CLI::App* check = app.add_subcommand(
      "check", "Cross-validate constructions against the enumeration oracle");
  check->add_option("--max-nodes", maxNodes, "Node bound")->check(CLI::PositiveNumber);
  check->add_option("--seed-count", seedCount, "Random expressions to validate")
      ->check(CLI::PositiveNumber);
  check->add_option("--max-positions", maxPositions, "Arity >= 1 occurrences per expression")
      ->check(CLI::PositiveNumber);
  check->add_option("expression", expression,
                    "Expression to validate instead of random ones, or - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  int exitCode = 0;

  if (build->parsed()) {
    ExprHandle expr = parseExpression(expression, exitCode);
    if (!expr) return exitCode;
    butree_automaton* raw = nullptr;
    butree_status rc =
        butree_automaton_build(expr.get(), parseConstruction(construction), general ? 1 : 0, &raw);
    if (rc != BUTREE_OK) return reportError(rc);
    AutomatonHandle automaton(raw, &butree_automaton_free);
    StringOut text;
    rc = butree_automaton_render(automaton.get(), parseFormat(format), text.slot());
    if (rc != BUTREE_OK) return reportError(rc);
    std::cout << text.str();
    return 0;
  }

  if (run->parsed()) {
    ExprHandle expr = parseExpression(expression, exitCode);
    if (!expr) return exitCode;
    butree_automaton* raw = nullptr;
    butree_status rc =
        butree_automaton_build(expr.get(), parseConstruction(construction), 1, &raw);
    if (rc != BUTREE_OK) return reportError(rc);
    AutomatonHandle automaton(raw, &butree_automaton_free);
    bool anyRejected = false;
    for (const std::string& text : treeTexts) {
      butree_tree* rawTree = nullptr;
      rc = butree_tree_parse(text.c_str(), &rawTree);
      if (rc != BUTREE_OK) return reportError(rc);
      TreeHandle tree(rawTree, &butree_tree_free);
      int accepted = 0;
      StringOut states;
      rc = butree_automaton_run(automaton.get(), tree.get(), &accepted, states.slot());
      if (rc != BUTREE_OK) return reportError(rc);
      anyRejected = anyRejected || accepted == 0;
      std::cout << text << "\t" << (accepted ? "accept" : "reject") << "\t" << states.str()
                << "\n";
    }
    return anyRejected ? 1 : 0;
  }

  if (positions->parsed()) {
    ExprHandle expr = parseExpression(expression, exitCode);
    if (!expr) return exitCode;
    StringOut text;
    butree_status rc = butree_expr_positions(expr.get(), parseFormat(format), text.slot());
    if (rc != BUTREE_OK) return reportError(rc);
    std::cout << text.str();
    return 0;
  }

  if (enumerate->parsed()) {
    ExprHandle expr = parseExpression(expression, exitCode);
    if (!expr) return exitCode;
    StringOut text;
    butree_status rc = butree_enumerate(expr.get(), maxNodes, text.slot());
    if (rc != BUTREE_OK) return reportError(rc);
    std::cout << text.str();
    return 0;
  }

  if (check->parsed()) {
    int agree = 0;
    StringOut report;
    butree_status rc;
    if (!expression.empty()) {
      ExprHandle expr = parseExpression(expression, exitCode);
      if (!expr) return exitCode;
      rc = butree_check_expression(expr.get(), maxNodes, &agree, report.slot());
    } else {
      rc = butree_check_random(1, seedCount, maxPositions, maxNodes, &agree, report.slot());
    }
    if (rc != BUTREE_OK) return reportError(rc);
    std::cout << report.str();
    return agree ? 0 : 1;
  }

  return 2;
}
