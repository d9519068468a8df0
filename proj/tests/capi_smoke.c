/* Compiled as C: proves the public header and the shared library link
 * without any C++ toolchain involvement. */
#include <butree/butree.h>

#include <stdio.h>
#include <string.h>

int main(void) {
  butree_expr *expr = NULL;
  if (butree_expr_parse("(f(a,a)+g(b))*a.bf(g(a),b)", &expr) != BUTREE_OK) {
    fprintf(stderr, "parse: %s\n", butree_last_error());
    return 1;
  }
  butree_automaton *automaton = NULL;
  if (butree_automaton_build(expr, BUTREE_CONSTRUCTION_POSITION, 1, &automaton) != BUTREE_OK) {
    fprintf(stderr, "build: %s\n", butree_last_error());
    return 1;
  }
  butree_tree *tree = NULL;
  if (butree_tree_parse("f(f(a,a),a)", &tree) != BUTREE_OK) {
    fprintf(stderr, "tree: %s\n", butree_last_error());
    return 1;
  }
  int accepted = 0;
  char *states = NULL;
  if (butree_automaton_run(automaton, tree, &accepted, &states) != BUTREE_OK) {
    fprintf(stderr, "run: %s\n", butree_last_error());
    return 1;
  }
  int ok = accepted == 1 && strcmp(states, "{f1}") == 0;
  butree_string_free(states);
  butree_tree_free(tree);
  butree_automaton_free(automaton);
  butree_expr_free(expr);
  if (!ok) {
    fprintf(stderr, "unexpected run result\n");
    return 1;
  }
  puts("ok");
  return 0;
}
