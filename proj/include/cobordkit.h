/*
 * cobordkit C API.
 *
 * Exact-arithmetic computations for complex-bordism invariants of projective
 * CP^(n-1)-bundles over CP^1: Chern numbers of the standard and twisted
 * stably complex structures, bordism-identity verification, clutching-degree
 * bookkeeping, combinatorial simple polytopes with characteristic/isotropy
 * data and the hexagon-prism bordism certificate.
 *
 * Conventions:
 *   - Every function returning cobord_status reports COBORD_OK on success.
 *     On failure cobord_last_error() carries a human-readable message for
 *     the calling thread.
 *   - Out-parameters are written only on COBORD_OK.
 *   - Large integers cross the ABI as decimal strings; release them with
 *     cobord_free_string. Handles are released with their _free function.
 *   - Structured results come back as a cobord_doc: a JSON report with a
 *     pass/fail verdict. The JSON pointer stays valid until the doc is freed.
 *   - All computations are pure; handles are immutable and safe to share
 *     across threads.
 */

#ifndef COBORDKIT_H
#define COBORDKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define COBORD_API __declspec(dllexport)
#else
#  define COBORD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cobord_status {
    COBORD_OK = 0,
    COBORD_ERR_DOMAIN = 1,   /* invalid mathematical input */
    COBORD_ERR_PARSE = 2,    /* malformed JSON or numeric text */
    COBORD_ERR_NULL_ARG = 3, /* a required pointer argument was NULL */
    COBORD_ERR_INTERNAL = 4  /* postcondition self-check failed */
} cobord_status;

typedef struct cobord_polytope cobord_polytope;
typedef struct cobord_assignment cobord_assignment;
typedef struct cobord_doc cobord_doc;

COBORD_API const char* cobord_version(void);
COBORD_API const char* cobord_status_name(cobord_status status);
/* Message of the last failure on this thread; empty string if none. */
COBORD_API const char* cobord_last_error(void);
COBORD_API void cobord_free_string(char* s);

/* ----- Chern numbers ---------------------------------------------------- */

enum { COBORD_STRUCTURE_STANDARD = 0, COBORD_STRUCTURE_TWISTED = 1 };

/* c_I of P^n(a) for the partition I = parts[0..nparts), via ring arithmetic.
 * Returns the value as a decimal string. */
COBORD_API cobord_status cobord_chern_number(int64_t n, int64_t a, int structure,
                                             const int64_t* parts, size_t nparts,
                                             char** out_decimal);

/* Closed binomial form of the standard-structure Chern number. */
COBORD_API cobord_status cobord_chern_number_closed(int64_t n, const int64_t* parts,
                                                    size_t nparts, char** out_decimal);

/* All Chern numbers of P^n(a), ring-computed and closed form side by side.
 * Doc passes iff the two routes agree on every partition. */
COBORD_API cobord_status cobord_chern_table(int64_t n, int64_t a, int structure,
                                            cobord_doc** out);

/* ----- Bordism identity verification ------------------------------------ */

COBORD_API cobord_status cobord_verify_independence(int64_t n, int64_t a_lo, int64_t a_hi,
                                                    cobord_doc** out);
COBORD_API cobord_status cobord_verify_twisted_null(int64_t n, int64_t a_lo, int64_t a_hi,
                                                    cobord_doc** out);
COBORD_API cobord_status cobord_verify_triple(int64_t n, int64_t a, int64_t b,
                                              cobord_doc** out);
/* Clutching triple labels plus the signed Chern-number sum certificate. */
COBORD_API cobord_status cobord_verify_gluing(int64_t n, int64_t a, int64_t b,
                                              cobord_doc** out);

/* ----- Simple polytopes -------------------------------------------------- */

COBORD_API cobord_status cobord_polytope_simplex(int64_t m, cobord_polytope** out);
COBORD_API cobord_status cobord_polytope_polygon(int64_t k, cobord_polytope** out);
COBORD_API cobord_status cobord_polytope_product(const cobord_polytope* p,
                                                 const cobord_polytope* r,
                                                 cobord_polytope** out);
/* JSON schema: { "dim": int, "facets": [string], "vertices": [[string]] } */
COBORD_API cobord_status cobord_polytope_from_json(const char* json, cobord_polytope** out);
COBORD_API cobord_status cobord_polytope_to_json(const cobord_polytope* p, char** out_json);
COBORD_API int64_t cobord_polytope_dim(const cobord_polytope* p);
COBORD_API int64_t cobord_polytope_facet_count(const cobord_polytope* p);
COBORD_API int64_t cobord_polytope_vertex_count(const cobord_polytope* p);
COBORD_API void cobord_polytope_free(cobord_polytope* p);

/* ----- Facet vector assignments ------------------------------------------ */

/* JSON schema: { "rank": int, "vectors": { "<facet>": [int, ...] } } */
COBORD_API cobord_status cobord_assignment_from_json(const char* json,
                                                     cobord_assignment** out);
COBORD_API cobord_status cobord_assignment_to_json(const cobord_assignment* a,
                                                   char** out_json);
COBORD_API int64_t cobord_assignment_rank(const cobord_assignment* a);
COBORD_API void cobord_assignment_free(cobord_assignment* a);

/* ----- Lattice checks ----------------------------------------------------- */

/* Characteristic-function check: every vertex determinant is +-1. */
COBORD_API cobord_status cobord_check_characteristic(const cobord_polytope* p,
                                                     const cobord_assignment* chi,
                                                     cobord_doc** out);

enum { COBORD_ISOTROPY_INDEPENDENCE = 0, COBORD_ISOTROPY_SARKAR = 1 };

/* Isotropy-function check on a polytope with marked (exceptional) facets. */
COBORD_API cobord_status cobord_validate_isotropy(const cobord_polytope* p,
                                                  const char* const* marked, size_t nmarked,
                                                  const cobord_assignment* lambda, int mode,
                                                  cobord_doc** out);

/* Both routes of the checking lemma; doc passes iff they agree. */
COBORD_API cobord_status cobord_check_lemma(const cobord_polytope* p,
                                            const char* const* marked, size_t nmarked,
                                            const cobord_assignment* lambda, cobord_doc** out);

/* GL_n(Z)-equivalence search. blocks_json is a JSON array of arrays of facet
 * ids within which the facet permutation may act, e.g. [["F3","F4"]]; pass
 * "[]" for none. Doc passes iff a verified witness was found (absence of a
 * witness is a normal fail verdict, not an error). */
COBORD_API cobord_status cobord_gl_equivalent(const cobord_assignment* a,
                                              const cobord_assignment* b,
                                              const char* blocks_json, int allow_sign,
                                              cobord_doc** out);

/* ----- Hexagon-prism construction ---------------------------------------- */

/* Full certificate for the hexagon-prism bordism construction: exceptional
 * marking, isotropy validation, boundary matching with GL witnesses, triple
 * identity and gluing certificate. Requires n >= 2. */
COBORD_API cobord_status cobord_hexprism_certificate(int64_t n, int64_t a, int64_t b,
                                                     cobord_doc** out);

/* ----- Result documents --------------------------------------------------- */

COBORD_API int cobord_doc_pass(const cobord_doc* doc); /* 1 = pass, 0 = fail */
COBORD_API const char* cobord_doc_json(const cobord_doc* doc);
COBORD_API void cobord_doc_free(cobord_doc* doc);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* COBORDKIT_H */
