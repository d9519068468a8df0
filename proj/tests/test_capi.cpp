#include <doctest.h>

#include <butree/butree.h>

#include <string>

namespace {

struct Str {
  char* v = nullptr;
  ~Str() { butree_string_free(v); }
  std::string get() const { return v ? v : ""; }
};

const char* kRunning = "(f(a,a)+g(b))*a.bf(g(a),b)";

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("expression lifecycle") {
  butree_expr* expr = nullptr;
  REQUIRE(butree_expr_parse(kRunning, &expr) == BUTREE_OK);
  Str text;
  CHECK(butree_expr_str(expr, &text.v) == BUTREE_OK);
  CHECK(text.get() == kRunning);
  Str json;
  CHECK(butree_expr_to_json(expr, &json.v) == BUTREE_OK);
  CHECK(json.get().find("\"product\"") != std::string::npos);
  butree_expr_free(expr);
}

TEST_CASE("parse errors report offsets") {
  butree_expr* expr = nullptr;
  CHECK(butree_expr_parse("f(a", &expr) == BUTREE_ERR_PARSE);
  CHECK(butree_last_error_offset() == 4);
  CHECK(std::string(butree_last_error()).find("offset 4") != std::string::npos);

  CHECK(butree_expr_parse("a.bb", &expr) == BUTREE_ERR_INVALID);
  CHECK(std::string(butree_last_error()).find("absent from left operand") != std::string::npos);

  CHECK(butree_expr_parse(nullptr, &expr) == BUTREE_ERR_NULL);
  CHECK(butree_expr_parse("a", nullptr) == BUTREE_ERR_NULL);
}

TEST_CASE("positions rendering") {
  butree_expr* expr = nullptr;
  REQUIRE(butree_expr_parse(kRunning, &expr) == BUTREE_OK);
  Str text;
  CHECK(butree_expr_positions(expr, BUTREE_FORMAT_TEXT, &text.v) == BUTREE_OK);
  CHECK(text.get().find("root: {a, f1, g2}") != std::string::npos);
  Str json;
  CHECK(butree_expr_positions(expr, BUTREE_FORMAT_JSON, &json.v) == BUTREE_OK);
  CHECK(json.get().find("\"father\"") != std::string::npos);
  Str dot;
  CHECK(butree_expr_positions(expr, BUTREE_FORMAT_DOT, &dot.v) == BUTREE_ERR_INVALID);
  butree_expr_free(expr);
}

TEST_CASE("automaton build, render, run") {
  butree_expr* expr = nullptr;
  REQUIRE(butree_expr_parse(kRunning, &expr) == BUTREE_OK);

  butree_automaton* linear = nullptr;
  REQUIRE(butree_automaton_build(expr, BUTREE_CONSTRUCTION_POSITION, 0, &linear) == BUTREE_OK);
  Str json;
  CHECK(butree_automaton_render(linear, BUTREE_FORMAT_JSON, &json.v) == BUTREE_OK);
  CHECK(json.get().find("\"f1\"") != std::string::npos);
  Str again;
  CHECK(butree_automaton_render(linear, BUTREE_FORMAT_JSON, &again.v) == BUTREE_OK);
  CHECK(json.get() == again.get());  // byte-stable
  butree_automaton_free(linear);

  butree_automaton* general = nullptr;
  REQUIRE(butree_automaton_build(expr, BUTREE_CONSTRUCTION_FATHER, 1, &general) == BUTREE_OK);
  butree_tree* inside = nullptr;
  REQUIRE(butree_tree_parse("g(f(g(a),b))", &inside) == BUTREE_OK);
  int accepted = -1;
  Str states;
  CHECK(butree_automaton_run(general, inside, &accepted, &states.v) == BUTREE_OK);
  CHECK(accepted == 1);
  CHECK(states.get() == "{{f1,g2}}");
  butree_tree_free(inside);

  butree_tree* outside = nullptr;
  REQUIRE(butree_tree_parse("b", &outside) == BUTREE_OK);
  Str rejects;
  CHECK(butree_automaton_run(general, outside, &accepted, &rejects.v) == BUTREE_OK);
  CHECK(accepted == 0);
  butree_tree_free(outside);

  // Foreign symbols are precondition failures, not crashes.
  butree_tree* foreign = nullptr;
  REQUIRE(butree_tree_parse("z", &foreign) == BUTREE_OK);
  Str unused;
  CHECK(butree_automaton_run(general, foreign, &accepted, &unused.v) == BUTREE_ERR_INVALID);
  butree_tree_free(foreign);
  butree_automaton_free(general);
  butree_expr_free(expr);
}

TEST_CASE("compressed constructions run through the same surface") {
  butree_expr* expr = nullptr;
  REQUIRE(butree_expr_parse(kRunning, &expr) == BUTREE_OK);
  butree_automaton* compressed = nullptr;
  REQUIRE(butree_automaton_build(expr, BUTREE_CONSTRUCTION_COMPRESSED_POSITION, 1, &compressed) ==
          BUTREE_OK);
  Str text;
  CHECK(butree_automaton_render(compressed, BUTREE_FORMAT_TEXT, &text.v) == BUTREE_OK);
  CHECK(text.get().find("{a,f1,g2}") != std::string::npos);
  butree_tree* tree = nullptr;
  REQUIRE(butree_tree_parse("f(a,a)", &tree) == BUTREE_OK);
  int accepted = 0;
  Str states;
  CHECK(butree_automaton_run(compressed, tree, &accepted, &states.v) == BUTREE_OK);
  CHECK(accepted == 1);
  CHECK(states.get() == "{f1}");
  butree_tree_free(tree);
  butree_automaton_free(compressed);
  butree_expr_free(expr);
}

TEST_CASE("enumerate") {
  butree_expr* expr = nullptr;
  REQUIRE(butree_expr_parse("f(a,a)*a", &expr) == BUTREE_OK);
  Str lines;
  CHECK(butree_enumerate(expr, 3, &lines.v) == BUTREE_OK);
  CHECK(lines.get() == "a\nf(a,a)\n");
  butree_expr_free(expr);
}

TEST_CASE("check expression and random sweep") {
  butree_expr* expr = nullptr;
  REQUIRE(butree_expr_parse(kRunning, &expr) == BUTREE_OK);
  int agree = 0;
  Str report;
  CHECK(butree_check_expression(expr, 7, &agree, &report.v) == BUTREE_OK);
  CHECK(agree == 1);
  CHECK(report.get().find("result: AGREE") != std::string::npos);
  butree_expr_free(expr);

  int sweepAgree = 0;
  Str sweep;
  CHECK(butree_check_random(1, 5, 3, 6, &sweepAgree, &sweep.v) == BUTREE_OK);
  CHECK(sweepAgree == 1);
  CHECK(sweep.get().find("result: AGREE") != std::string::npos);
  CHECK(butree_check_random(1, 0, 3, 6, &sweepAgree, &sweep.v) == BUTREE_ERR_INVALID);
}

}  // TEST_SUITE
