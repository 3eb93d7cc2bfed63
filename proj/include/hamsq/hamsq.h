#ifndef HAMSQ_H
#define HAMSQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HAMSQ_API __declspec(dllexport)
#else
#define HAMSQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hamsq_status {
  HAMSQ_OK = 0,
  HAMSQ_INVALID_ARGUMENT = 1,
  HAMSQ_PARSE = 2,
  HAMSQ_PRECONDITION = 3,
  HAMSQ_THEOREM_VIOLATION = 4,
  HAMSQ_INTERNAL = 5,
  HAMSQ_NULL = 6 /* a required pointer argument was NULL */
} hamsq_status;

/* Verdict of a check, decomposition request or campaign. */
typedef enum hamsq_outcome {
  HAMSQ_PASS = 0,
  HAMSQ_FAIL = 1,
  HAMSQ_UNDECIDED = 3
} hamsq_outcome;

typedef struct hamsq_graph hamsq_graph;

/* Message for the last non-OK status on the calling thread ("" if none). */
HAMSQ_API const char* hamsq_last_error(void);

/* Frees strings returned through char** out-parameters. */
HAMSQ_API void hamsq_string_free(char* s);

HAMSQ_API const char* hamsq_version(void);

/* Graph handles. */
HAMSQ_API hamsq_status hamsq_graph_from_graph6(const char* text, hamsq_graph** out);
/* edges: 2*m vertex indices, pairs (u, v). */
HAMSQ_API hamsq_status hamsq_graph_from_edges(int n, const int* edges, size_t m,
                                              hamsq_graph** out);
/* "k2m:K", "h:N,K", "cycle:N", "complete:N". */
HAMSQ_API hamsq_status hamsq_graph_builtin(const char* name, hamsq_graph** out);
HAMSQ_API void hamsq_graph_free(hamsq_graph* g);
HAMSQ_API int hamsq_graph_order(const hamsq_graph* g);
HAMSQ_API int hamsq_graph_size(const hamsq_graph* g);
HAMSQ_API hamsq_status hamsq_graph_to_graph6(const hamsq_graph* g, char** out);

/* New handle holding the square of g. */
HAMSQ_API hamsq_status hamsq_graph_square(const hamsq_graph* g, hamsq_graph** out);

/* Block decomposition as JSON. */
HAMSQ_API hamsq_status hamsq_blocks_json(const hamsq_graph* g, char** out);

/* Decomposition search. request is a JSON object:
 *   {"mode":"eps","root":r,"light":[...],"cycle":[...]}
 *   {"mode":"jeps","v":v,"w":w,"forbid":[...]}
 *   {"mode":"theorem-a","v":v,"w":w}
 * budget 0 means unlimited. */
HAMSQ_API hamsq_status hamsq_eps_json(const hamsq_graph* g, const char* request,
                                      uint64_t budget, hamsq_outcome* outcome, char** out);

/* Single-instance check of a property on a vertex tuple. */
HAMSQ_API hamsq_status hamsq_check_json(const hamsq_graph* g, const char* property,
                                        const int* tuple, size_t tuple_len, uint64_t budget,
                                        hamsq_outcome* outcome, char** out);

typedef struct hamsq_verify_options {
  int min_n;  /* 0: property default */
  int max_n;
  int jobs;   /* <= 0 means 1 */
  uint64_t budget;
  const char* cache_path; /* NULL: $HAMSQ_CACHE, else no cache */
} hamsq_verify_options;

HAMSQ_API void hamsq_verify_options_init(hamsq_verify_options* options);

/* Exhaustive campaign over small graphs. property "all" runs every campaign
 * and returns a JSON array. */
HAMSQ_API hamsq_status hamsq_verify_json(const char* property,
                                         const hamsq_verify_options* options,
                                         hamsq_outcome* outcome, char** out);

/* Known negative examples. suite: "k2m" (ks, count ks_len), "h" (pairs
 * n,k in hs, count hs_len pairs), "fbar" (options range) or "all".
 * Empty lists select defaults. */
HAMSQ_API hamsq_status hamsq_counterexamples_json(const char* suite, const int* ks,
                                                  size_t ks_len, const int* hs,
                                                  size_t hs_len,
                                                  const hamsq_verify_options* options,
                                                  hamsq_outcome* outcome, char** out);

#ifdef __cplusplus
}
#endif

#endif
