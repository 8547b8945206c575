/* C interface to the quandle cocycle library.
 *
 * Handles are opaque and owned by the caller; release each with its _free
 * function. Strings returned through char** are malloc'd and released with
 * qcc_string_free. On failure a function returns a nonzero status and
 * qcc_last_error() describes it (per thread, valid until the next call). */
#ifndef QCC_QCC_H
#define QCC_QCC_H

#include <stddef.h>
#include <stdint.h>

#if defined(QCC_BUILDING_LIBRARY)
#define QCC_API __attribute__((visibility("default")))
#else
#define QCC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qcc_status {
  QCC_OK = 0,
  QCC_ERR_ARGUMENT = 1,      /* null pointer, bad index */
  QCC_ERR_PARSE = 2,         /* malformed spec string or file */
  QCC_ERR_NOT_FOUND = 3,     /* unknown knot, tangle or variant */
  QCC_ERR_REFUSED = 4,       /* well formed, but the operation does not apply */
  QCC_ERR_VERIFY = 5,        /* axiom or cocycle check failed */
  QCC_ERR_IO = 6,
  QCC_ERR_INTERNAL = 7
} qcc_status;

typedef struct qcc_quandle qcc_quandle;
typedef struct qcc_cocycle qcc_cocycle;
typedef struct qcc_diagram qcc_diagram;
typedef struct qcc_knot_table qcc_knot_table;
typedef struct qcc_tangle_table qcc_tangle_table;
typedef struct qcc_cache qcc_cache;
typedef struct qcc_scan_report qcc_scan_report;

QCC_API const char* qcc_version(void);
QCC_API const char* qcc_last_error(void);
QCC_API const char* qcc_status_name(qcc_status s);
QCC_API void qcc_string_free(char* s);

/* quandles: "dihedral:5", "alexander:2:t^2+t+1", or Cayley table text */
QCC_API qcc_status qcc_quandle_parse(const char* spec, qcc_quandle** out);
QCC_API qcc_status qcc_quandle_from_cayley(const char* text, qcc_quandle** out);
QCC_API void qcc_quandle_free(qcc_quandle* q);
QCC_API int qcc_quandle_size(const qcc_quandle* q);
QCC_API qcc_status qcc_quandle_spec(const qcc_quandle* q, char** out);
QCC_API qcc_status qcc_quandle_cayley(const qcc_quandle* q, char** out);
/* QCC_ERR_VERIFY with a witness in *report when an axiom fails */
QCC_API qcc_status qcc_quandle_verify(const qcc_quandle* q, char** report);

/* cocycles: "poly2:<expr>", "poly3:<expr>", "mochizuki:<p>" */
QCC_API qcc_status qcc_cocycle_parse(const qcc_quandle* q, const char* spec, qcc_cocycle** out);
/* table text "cocycle <name> <arity> <n> <group>" plus values; QCC_ERR_VERIFY
 * when the cocycle condition fails */
QCC_API qcc_status qcc_cocycle_from_table(const qcc_quandle* q, const char* text, qcc_cocycle** out);
QCC_API void qcc_cocycle_free(qcc_cocycle* c);
QCC_API int qcc_cocycle_arity(const qcc_cocycle* c);
QCC_API qcc_status qcc_cocycle_verify(const qcc_cocycle* c, char** report);
QCC_API qcc_status qcc_cocycle_table(const qcc_cocycle* c, char** out);

/* diagrams */
QCC_API qcc_status qcc_diagram_from_braid(int strands, const char* word, qcc_diagram** out);
QCC_API qcc_status qcc_diagram_parse_pd(const char* text, qcc_diagram** out);
/* rational/tangle expressions such as "N(add(R(-3),R(-3))+R(1))"; names in
 * the expression resolve against tangles (may be null) */
QCC_API qcc_status qcc_diagram_expression(const char* expr, const qcc_tangle_table* tangles, qcc_diagram** out);
QCC_API qcc_status qcc_diagram_clone(const qcc_diagram* d, qcc_diagram** out);
QCC_API void qcc_diagram_free(qcc_diagram* d);
QCC_API int qcc_diagram_is_tangle(const qcc_diagram* d);
QCC_API int qcc_diagram_crossings(const qcc_diagram* d);
QCC_API int qcc_diagram_writhe(const qcc_diagram* d);
QCC_API qcc_status qcc_diagram_name(const qcc_diagram* d, char** out);
QCC_API qcc_status qcc_diagram_set_name(qcc_diagram* d, const char* name);
/* tangles only: "NWin-SWout" */
QCC_API qcc_status qcc_diagram_orient(qcc_diagram* d, const char* variant);
QCC_API qcc_status qcc_diagram_variant(const qcc_diagram* d, char** out);
QCC_API qcc_status qcc_diagram_mirror(const qcc_diagram* d, qcc_diagram** out);
QCC_API qcc_status qcc_diagram_write_pd(const qcc_diagram* d, char** out);

/* colorings (tangles: boundary-monochromatic, summed over the boundary color) */
QCC_API qcc_status qcc_count_colorings(const qcc_diagram* d, const qcc_quandle* q, uint64_t* out);
/* one coloring per line, arc colors separated by spaces */
QCC_API qcc_status qcc_list_colorings(const qcc_diagram* d, const qcc_quandle* q, char** out);

/* invariants, printed as multisets like "4 + 12u^(t+1)" */
QCC_API qcc_status qcc_invariant(const qcc_diagram* knot, const qcc_cocycle* c, char** out);
/* total in *out; per-boundary-color breakdown in *detail (may be null) */
QCC_API qcc_status qcc_tangle_invariant(const qcc_diagram* tangle, const qcc_cocycle* c, char** out, char** detail);
/* QCC_ERR_REFUSED when some part depends on its boundary data */
QCC_API qcc_status qcc_disjoint_union(const qcc_diagram* const* tangles, size_t count, const qcc_cocycle* c,
                                      char** out, char** detail);
/* a and b are multiset strings over the coefficient group of c */
QCC_API qcc_status qcc_multiset_included(const char* a, const char* b, const qcc_cocycle* c, int* out);

/* tables; path may be null for the bundled files */
QCC_API qcc_status qcc_knot_table_load(const char* path, qcc_knot_table** out);
QCC_API void qcc_knot_table_free(qcc_knot_table* t);
QCC_API size_t qcc_knot_table_size(const qcc_knot_table* t);
QCC_API const char* qcc_knot_table_name(const qcc_knot_table* t, size_t i);
QCC_API qcc_status qcc_knot_table_get(const qcc_knot_table* t, const char* name, qcc_diagram** out);

QCC_API qcc_status qcc_tangle_table_load(const char* path, int strict, qcc_tangle_table** out);
QCC_API void qcc_tangle_table_free(qcc_tangle_table* t);
/* "6_2:NWin-SWout", or a bare name for its first variant */
QCC_API qcc_status qcc_tangle_table_get(const qcc_tangle_table* t, const char* spec, qcc_diagram** out);
/* one line per colors entry and check-set quandle */
QCC_API qcc_status qcc_tangle_table_check(const qcc_tangle_table* t, char** report, int* mismatches);

/* invariant cache; path may be null for memory only */
QCC_API qcc_status qcc_cache_open(const char* path, qcc_cache** out);
QCC_API void qcc_cache_free(qcc_cache* c);
QCC_API size_t qcc_cache_size(const qcc_cache* c);

/* obstruction; specs is a named set (prop2, prop3, ...) or a comma list of
 * "quandle/cocycle" */
typedef struct qcc_scan_options {
  int full;            /* evaluate every spec instead of stopping at the first exclusion */
  unsigned threads;    /* 0: available parallelism */
  int with_mirrors;    /* scan mirror images too */
  qcc_cache* cache;    /* may be null */
} qcc_scan_options;

QCC_API qcc_status qcc_obstruct(const qcc_diagram* tangle, const qcc_diagram* knot, const char* specs,
                                const qcc_scan_options* opt, int* excluded, char** report);
QCC_API qcc_status qcc_scan(const qcc_diagram* tangle, const qcc_knot_table* knots, const char* specs,
                            const qcc_scan_options* opt, qcc_scan_report** out);
QCC_API qcc_status qcc_scan_disjoint(const qcc_diagram* const* tangles, size_t count, const qcc_knot_table* knots,
                                     const char* specs, const qcc_scan_options* opt, qcc_scan_report** out);
QCC_API void qcc_scan_report_free(qcc_scan_report* r);
QCC_API size_t qcc_scan_report_spec_count(const qcc_scan_report* r);
/* format 0: table text, 1: one verdict line per knot */
QCC_API qcc_status qcc_scan_report_text(const qcc_scan_report* r, int format, char** out);
/* comma-separated open knots; spec < 0 for all specs combined */
QCC_API qcc_status qcc_scan_report_open(const qcc_scan_report* r, int spec, char** out);

/* reproduction suites: prop2, prop3, examples5; one PASS/FAIL line each */
QCC_API qcc_status qcc_reproduce(const char* suite, const char* data_dir, const qcc_scan_options* opt, char** out,
                                 int* failures);

#ifdef __cplusplus
}
#endif

#endif
