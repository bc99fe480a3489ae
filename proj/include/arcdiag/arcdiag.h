/* C interface to the arcdiag library.
 *
 * Every function that can fail returns an arcdiag_status; on failure
 * arcdiag_last_error() describes the problem (per thread, valid until the
 * next call on that thread). Strings returned through char** are owned by the
 * caller and released with arcdiag_string_free. Large integers are exchanged
 * as decimal strings.
 */
#ifndef ARCDIAG_ARCDIAG_H
#define ARCDIAG_ARCDIAG_H

#include <stddef.h>

#if defined(_WIN32)
#define ARCDIAG_API __declspec(dllexport)
#else
#define ARCDIAG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arcdiag_status {
  ARCDIAG_OK = 0,
  ARCDIAG_INVALID_ARGUMENT = 1,
  ARCDIAG_PARSE_ERROR = 2,
  ARCDIAG_OUT_OF_RANGE = 3,
  ARCDIAG_RESOURCE_LIMIT = 4,
  ARCDIAG_INVALID_DIAGRAM = 5,
  ARCDIAG_WRONG_FAMILY = 6,
  ARCDIAG_WRONG_PARITY = 7,
  ARCDIAG_NOT_SYMMETRIC = 8,
  ARCDIAG_IO_ERROR = 9,
  ARCDIAG_PRECISION_ERROR = 10,
  ARCDIAG_INTERNAL_ERROR = 99
} arcdiag_status;

typedef enum arcdiag_family {
  ARCDIAG_NC_MATCHING = 0,
  ARCDIAG_MATCHING = 1,
  ARCDIAG_MOTZKIN = 2,
  ARCDIAG_BELL = 3
} arcdiag_family;

typedef enum arcdiag_method { ARCDIAG_METHOD_RECURRENCE = 0, ARCDIAG_METHOD_ORACLE = 1 } arcdiag_method;

typedef enum arcdiag_statistic {
  ARCDIAG_STAT_ISOLATED_NODES = 1,
  ARCDIAG_STAT_COMPONENTS_MINUS_ONE = 2
} arcdiag_statistic;

typedef struct arcdiag_diagram arcdiag_diagram;

ARCDIAG_API const char* arcdiag_version(void);
ARCDIAG_API const char* arcdiag_last_error(void);
ARCDIAG_API const char* arcdiag_status_name(arcdiag_status status);
ARCDIAG_API void arcdiag_string_free(char* text);

/* ---- diagrams ---------------------------------------------------------- */

/* Text form "n;l1-r1,l2-r2,..." such as "5;1-3,3-5" or "5;". */
ARCDIAG_API arcdiag_status arcdiag_diagram_parse(const char* text, arcdiag_diagram** out);
ARCDIAG_API arcdiag_status arcdiag_diagram_create(int node_count, const int* lefts,
                                                  const int* rights, size_t arc_count,
                                                  arcdiag_diagram** out);
ARCDIAG_API arcdiag_diagram* arcdiag_diagram_clone(const arcdiag_diagram* diagram);
ARCDIAG_API void arcdiag_diagram_free(arcdiag_diagram* diagram);

ARCDIAG_API int arcdiag_diagram_node_count(const arcdiag_diagram* diagram);
ARCDIAG_API size_t arcdiag_diagram_arc_count(const arcdiag_diagram* diagram);
ARCDIAG_API arcdiag_status arcdiag_diagram_arc(const arcdiag_diagram* diagram, size_t index,
                                               int* left, int* right);
ARCDIAG_API arcdiag_status arcdiag_diagram_format(const arcdiag_diagram* diagram, char** out);
/* Blocks of the arc-connected components, e.g. "{1,3,5}|{2}|{4}". */
ARCDIAG_API arcdiag_status arcdiag_diagram_blocks(const arcdiag_diagram* diagram, char** out);

ARCDIAG_API arcdiag_status arcdiag_diagram_is_valid(const arcdiag_diagram* diagram, int* out);
ARCDIAG_API arcdiag_status arcdiag_diagram_in_family(const arcdiag_diagram* diagram,
                                                     arcdiag_family family, int* out);
ARCDIAG_API arcdiag_status arcdiag_diagram_is_symmetric(const arcdiag_diagram* diagram, int* out);
ARCDIAG_API arcdiag_status arcdiag_diagram_isolated_count(const arcdiag_diagram* diagram, int* out);
ARCDIAG_API arcdiag_status arcdiag_diagram_component_count(const arcdiag_diagram* diagram,
                                                           int* out);
ARCDIAG_API arcdiag_status arcdiag_diagram_reverse_complement(const arcdiag_diagram* diagram,
                                                              arcdiag_diagram** out);

/* "nc-matching", "matching", "motzkin", "bell". */
ARCDIAG_API arcdiag_status arcdiag_parse_family(const char* name, arcdiag_family* out);

/* ---- enumeration and counting ------------------------------------------ */

/* Enumeration cap: a positive `cap` applies to every family. 0 uses the
 * ARCDIAG_ENUM_CAP environment variable when set, otherwise 16 for matching
 * and bell and 20 for nc-matching and motzkin. */
ARCDIAG_API arcdiag_status arcdiag_default_cap(arcdiag_family family, int* out);

/* Return nonzero to continue. The diagram is only valid during the call. */
typedef int (*arcdiag_diagram_callback)(const arcdiag_diagram* diagram, void* user_data);

ARCDIAG_API arcdiag_status arcdiag_enumerate(arcdiag_family family, int n, int symmetric_only,
                                             int cap, arcdiag_diagram_callback callback,
                                             void* user_data);
ARCDIAG_API arcdiag_status arcdiag_count(arcdiag_family family, int n, int symmetric_only,
                                         arcdiag_method method, int cap, char** out_decimal);
/* JSON object {"k": "count", ...}. */
ARCDIAG_API arcdiag_status arcdiag_count_by_statistic(arcdiag_family family, int n,
                                                      int symmetric_only,
                                                      arcdiag_statistic statistic, int cap,
                                                      char** out_json);

/* ---- sequences and triangles ------------------------------------------- */

/* Sequence names: S, R, P, Q, M, L, A005773, A, BELL, FIB. */
ARCDIAG_API arcdiag_status arcdiag_sequence_offset(const char* name, int* out);
ARCDIAG_API arcdiag_status arcdiag_sequence_label(const char* name, char** out);
ARCDIAG_API arcdiag_status arcdiag_sequence_value(const char* name, int n, char** out_decimal);
/* Lines "n value" from the sequence offset to max_n. */
ARCDIAG_API arcdiag_status arcdiag_bfile_text(const char* name, int max_n, char** out);
ARCDIAG_API arcdiag_status arcdiag_bfile_write(const char* name, int max_n, const char* path);

/* which: "P", "Q", "A"; format: "csv", "tsv", "json". */
ARCDIAG_API arcdiag_status arcdiag_triangle_render(const char* which, int rows, const char* format,
                                                   char** out);

/* ---- bijections ------------------------------------------------------- */

/* Steps are written over U, H, D, e.g. "UHDUD". */
ARCDIAG_API arcdiag_status arcdiag_phi(const char* steps, arcdiag_diagram** out);
ARCDIAG_API arcdiag_status arcdiag_phi_inverse(const arcdiag_diagram* diagram, char** out_steps);
ARCDIAG_API arcdiag_status arcdiag_phi_left(const arcdiag_diagram* diagram, char** out_steps);
ARCDIAG_API arcdiag_status arcdiag_tau(const char* steps, char** out_word);
ARCDIAG_API arcdiag_status arcdiag_psi(const arcdiag_diagram* diagram, char** out_word);
/* "ends-at-0", "ends-at-1", "full-ascent" or "general". */
ARCDIAG_API arcdiag_status arcdiag_psi_case(const arcdiag_diagram* diagram, char** out);
ARCDIAG_API arcdiag_status arcdiag_merge_even(const arcdiag_diagram* diagram,
                                              arcdiag_diagram** out);
ARCDIAG_API arcdiag_status arcdiag_split_odd(const arcdiag_diagram* diagram,
                                             arcdiag_diagram** out);
/* Words of length n, digit sum n, no leading zero; one per line. */
ARCDIAG_API arcdiag_status arcdiag_ternary_words(int n, char** out);

/* ---- analysis and verification ----------------------------------------- */

/* format: "csv", "text", "json". */
ARCDIAG_API arcdiag_status arcdiag_ratio_table(int max_n, int digits, int min_n,
                                               const char* format, char** out);
ARCDIAG_API arcdiag_status arcdiag_asymptotic_report(int max_n, int precision_digits, int json,
                                                     char** out);
ARCDIAG_API arcdiag_status arcdiag_asymptotic_estimate(int n, int precision_digits,
                                                       double* c1_hat, double* c2_hat,
                                                       double* m_hat);
ARCDIAG_API arcdiag_status arcdiag_decay_check(int max_n, int from, int json, char** out,
                                               int* passed);

/* scope: tables, oracle, roundtrip, qconjecture, deutsch, aformula, all.
 * max_n <= 0 picks each scope's default bound. */
ARCDIAG_API arcdiag_status arcdiag_verify(const char* scope, int max_n, int json, char** out,
                                          int* passed);

#ifdef __cplusplus
}
#endif

#endif /* ARCDIAG_ARCDIAG_H */
