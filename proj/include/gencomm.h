/* C interface to the gencomm library: exact experiments around
 * generalized commutator operators and signed Eulerian path counts.
 *
 * Conventions:
 *   - Every fallible call returns a gc_status; GC_OK means success.
 *   - On failure, gc_last_error() returns a message for the calling
 *     thread; output parameters are left untouched.
 *   - Strings returned through char** are heap-allocated JSON documents;
 *     release them with gc_string_free().
 *   - Graphs are opaque handles; release them with gc_graph_free().
 */

#ifndef GENCOMM_H
#define GENCOMM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  GC_OK = 0,
  GC_EINVAL = 1,   /* invalid argument or precondition violation */
  GC_EPARSE = 2,   /* malformed JSON input */
  GC_EDOMAIN = 3,  /* mathematically inadmissible request */
  GC_EINTERNAL = 4 /* internal invariant failure */
} gc_status;

typedef enum {
  GC_FIELD_RATIONAL = 0,
  GC_FIELD_PRIME = 1
} gc_field;

typedef struct gc_graph gc_graph;

const char* gc_version(void);
const char* gc_status_name(gc_status s);
const char* gc_last_error(void);
void gc_string_free(char* s);

/* Default prime modulus, honoring the GENCOMM_DEFAULT_P override. */
uint64_t gc_default_prime(void);

/* -- labeled digraphs ---------------------------------------------------- */

/* JSON schema: {"n":3, "displacements":{"1":1,"2":2}, "edges":{"1":0}} */
gc_status gc_graph_parse(const char* json, gc_graph** out);
gc_status gc_graph_to_json(const gc_graph* g, char** out_json);
void gc_graph_free(gc_graph* g);

/* Copy of g with its final label placed at the given source vertex. */
gc_status gc_graph_with_extra_edge(const gc_graph* g, int source, gc_graph** out);

gc_status gc_graph_eulerian_path_exists(const gc_graph* g, int from, int to, int* out);

/* Signed count of Eulerian paths from `start` under ascending-label
 * signature order. */
gc_status gc_graph_signed_sum(const gc_graph* g, int start, long long* out);

/* -- experiment reports (JSON out) --------------------------------------- */

/* Generic-nullity sampling experiment for the operator
 * X -> [A_1,...,A_k,X] on random k-tuples. */
gc_status gc_conjecture(int n, int k, gc_field field, uint64_t p, int trials, uint64_t seed,
                        char** report_json);

/* Vanishing check of the alternating product for m >= 2n factors. */
gc_status gc_al_check(int n, int m, gc_field field, uint64_t p, int trials, uint64_t seed,
                      char** report_json);

/* One shifted-diagonal block of the specialized operator; method is
 * "direct" (graph-by-graph coefficients) or "operator" (sliced from the
 * assembled operator). */
gc_status gc_block(int n, int r, int j, const char* method, char** report_json);

/* Initial coefficient matrices; j = -1 emits every shift. */
gc_status gc_ic(int n, int r, int j, char** report_json);

/* The greatest admissible graph for a row/shift pair. */
gc_status gc_maximal_graph(int n, int r, int a, int j, char** report_json);

/* Full initial-coefficient structure verification for one (n, r). */
gc_status gc_structure_report(int n, int r, gc_field field, uint64_t p, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* GENCOMM_H */
