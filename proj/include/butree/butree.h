/*
 * butree: bottom-up tree automata from regular tree expressions.
 *
 * C interface over the C++ core: opaque handles, integer status codes, and
 * caller-freed strings. Every function returns BUTREE_OK on success; on
 * failure the thread-local message from butree_last_error() describes the
 * problem (parse errors also expose a 1-based input offset).
 */
#ifndef BUTREE_H
#define BUTREE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum butree_status {
  BUTREE_OK = 0,
  BUTREE_ERR_PARSE = 1,   /* malformed expression or tree text */
  BUTREE_ERR_INVALID = 2, /* validation or precondition failure */
  BUTREE_ERR_NULL = 3     /* null handle or output pointer */
} butree_status;

typedef enum butree_construction {
  BUTREE_CONSTRUCTION_POSITION = 0,
  BUTREE_CONSTRUCTION_FATHER = 1,
  BUTREE_CONSTRUCTION_COMPRESSED_POSITION = 2,
  BUTREE_CONSTRUCTION_COMPRESSED_FATHER = 3
} butree_construction;

typedef enum butree_format {
  BUTREE_FORMAT_TEXT = 0,
  BUTREE_FORMAT_JSON = 1,
  BUTREE_FORMAT_DOT = 2
} butree_format;

typedef struct butree_expr butree_expr;
typedef struct butree_tree butree_tree;
typedef struct butree_automaton butree_automaton;

/* Thread-local description of the most recent failure. */
const char *butree_last_error(void);
/* 1-based offset of the most recent syntax error; 0 when not applicable. */
size_t butree_last_error_offset(void);

/* Frees a string returned through a char** out parameter. */
void butree_string_free(char *s);

/* --- Expressions --------------------------------------------------------- */

/* Parses and validates a regular tree expression, e.g.
 * "(f(a,a)+g(b))*a.bf(g(a),b)". */
butree_status butree_expr_parse(const char *text, butree_expr **out);
void butree_expr_free(butree_expr *expr);

/* Canonical text of the expression. */
butree_status butree_expr_str(const butree_expr *expr, char **out);
/* JSON rendering of the AST (node kind plus children). */
butree_status butree_expr_to_json(const butree_expr *expr, char **out);
/* Root and Father sets of the linearized expression, as text or JSON. */
butree_status butree_expr_positions(const butree_expr *expr, butree_format format, char **out);

/* --- Trees --------------------------------------------------------------- */

/* Parses a tree such as "f(g(a),b)". */
butree_status butree_tree_parse(const char *text, butree_tree **out);
void butree_tree_free(butree_tree *tree);

/* --- Automata ------------------------------------------------------------ */

/* Builds the selected construction. With general != 0 the delinearization
 * morphism is applied, yielding an automaton over the original alphabet;
 * otherwise states and symbols carry position indices. */
butree_status butree_automaton_build(const butree_expr *expr, butree_construction kind,
                                     int general, butree_automaton **out);
void butree_automaton_free(butree_automaton *automaton);

butree_status butree_automaton_render(const butree_automaton *automaton, butree_format format,
                                      char **out);

/* Runs the automaton on a tree: *accepted is set to 0/1 and *states to the
 * reached state set, formatted "{q1,q2}". */
butree_status butree_automaton_run(const butree_automaton *automaton, const butree_tree *tree,
                                   int *accepted, char **states);

/* --- Language oracle ----------------------------------------------------- */

/* All members of L(expr) with at most max_nodes nodes, one per line,
 * smallest first. */
butree_status butree_enumerate(const butree_expr *expr, int max_nodes, char **out);

/* Cross-validates every membership path on the expression: enumeration
 * oracle, position-function characterization, and all four constructions,
 * over every tree up to max_nodes. *agree is set to 0/1; *report to a
 * human-readable summary. */
butree_status butree_check_expression(const butree_expr *expr, int max_nodes, int *agree,
                                      char **report);

/* Same over seed-generated random expressions seed_start..seed_start+count-1. */
butree_status butree_check_random(unsigned long long seed_start, int count, int max_positions,
                                  int max_nodes, int *agree, char **report);

#ifdef __cplusplus
}
#endif

#endif /* BUTREE_H */
