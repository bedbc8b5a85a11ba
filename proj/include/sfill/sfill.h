/*
 * sfill: Stein fillability of Seifert fibered 3-manifolds, C interface.
 *
 * Objects are opaque handles created by sfill_*_parse / sfill_classify /
 * ... and released with the matching sfill_*_free. Strings returned through
 * a char** out-parameter are heap-allocated and must be released with
 * sfill_string_free. Every function returning sfill_status records a message
 * retrievable with sfill_last_error() on failure; the message is
 * thread-local and valid until the next sfill call on the same thread.
 *
 * All functions are safe to call concurrently on distinct handles, and on
 * shared handles for read-only operations.
 */
#ifndef SFILL_SFILL_H
#define SFILL_SFILL_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SFILL_BUILDING)
#    define SFILL_API __declspec(dllexport)
#  else
#    define SFILL_API __declspec(dllimport)
#  endif
#else
#  define SFILL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sfill_status {
    SFILL_OK = 0,
    SFILL_INVALID_INPUT = 1, /* malformed text, domain or precondition error */
    SFILL_TIMEOUT = 2,       /* a search hit its time limit */
    SFILL_INTERNAL = 3       /* invariant violation; a bug */
} sfill_status;

typedef enum sfill_format {
    SFILL_FORMAT_TEXT = 0,
    SFILL_FORMAT_JSON = 1
} sfill_format;

typedef enum sfill_outcome {
    SFILL_OUTCOME_FOUND = 0,
    SFILL_OUTCOME_NO_EMBEDDING = 1,
    SFILL_OUTCOME_TIMEOUT = 2
} sfill_outcome;

typedef struct sfill_manifold sfill_manifold;
typedef struct sfill_verdict sfill_verdict;
typedef struct sfill_lattice sfill_lattice;
typedef struct sfill_certificate sfill_certificate;

SFILL_API const char* sfill_version(void);
SFILL_API const char* sfill_last_error(void);
SFILL_API void sfill_string_free(char* s);

/* ---- Seifert invariants -------------------------------------------------
 * Text form "<e0>;<r1>,<r2>,..." with rationals "p/q"; blanks ignored.
 */
SFILL_API sfill_status sfill_manifold_parse(const char* text, sfill_manifold** out);
SFILL_API sfill_status sfill_manifold_reverse(const sfill_manifold* m, sfill_manifold** out);
SFILL_API sfill_status sfill_manifold_string(const sfill_manifold* m, char** out);
SFILL_API sfill_status sfill_manifold_euler(const sfill_manifold* m, char** out);
SFILL_API void sfill_manifold_free(sfill_manifold* m);

/* ---- classification ------------------------------------------------------ */
typedef struct sfill_classify_options {
    int certify_obstruction; /* nonzero: run the embedding search for special verdicts */
    double max_seconds;      /* time limit for that search */
    size_t max_rank;         /* 0: use the completeness bound */
} sfill_classify_options;

SFILL_API sfill_classify_options sfill_classify_options_default(void);

/* options may be NULL. */
SFILL_API sfill_status sfill_classify(const sfill_manifold* m, const sfill_classify_options* options,
                                      sfill_verdict** out);
SFILL_API int sfill_verdict_fillable(const sfill_verdict* v);
/* "gompf_unconditional" | "realizable" | "pair_sum_automatic" | "farey_witness" | "special_type" */
SFILL_API const char* sfill_verdict_reason(const sfill_verdict* v);
/* 1 when the evidence re-validates independently, 0 otherwise. */
SFILL_API int sfill_verdict_recheck(const sfill_verdict* v);
/* Outcome of the attached obstruction search (sfill_outcome), or -1 if none. */
SFILL_API int sfill_verdict_obstruction(const sfill_verdict* v);
SFILL_API sfill_status sfill_verdict_render(const sfill_verdict* v, sfill_format format, char** out);
SFILL_API void sfill_verdict_free(sfill_verdict* v);

/* Realizability search report (needs k >= 3). */
SFILL_API sfill_status sfill_realizability(const sfill_manifold* m, sfill_format format, char** out);
/* Gompf map for e0 = -1, k >= 3 when realizable or r1 + r2 > 1. */
SFILL_API sfill_status sfill_witness(const sfill_manifold* m, sfill_format format, char** out);

/* Check a verdict against the embedding obstruction (see crosscheck).
 * Returns SFILL_TIMEOUT when the search ran out of time and SFILL_INTERNAL
 * on disagreement; the report is produced in every case. */
SFILL_API sfill_status sfill_crosscheck(const sfill_manifold* m, double max_seconds, sfill_format format, char** out);

/* ---- plumbing and lattices ----------------------------------------------- */
/* Plumbing graph, intersection form, determinant and definiteness. */
SFILL_API sfill_status sfill_plumbing(const sfill_manifold* m, sfill_format format, char** out);
/* {"central":e0,"legs":[[...],...]} or {"matrix":[[...],...]} */
SFILL_API sfill_status sfill_lattice_from_json(const char* json, sfill_lattice** out);
SFILL_API sfill_status sfill_lattice_from_manifold(const sfill_manifold* m, sfill_lattice** out);
SFILL_API size_t sfill_lattice_dim(const sfill_lattice* l);
SFILL_API void sfill_lattice_free(sfill_lattice* l);

/* Embedding search into (Z^d, -Id). A timeout is reported through the
 * certificate outcome, not the status. max_rank 0 uses the completeness bound. */
SFILL_API sfill_status sfill_embed(const sfill_lattice* l, double max_seconds, size_t max_rank,
                                   sfill_certificate** out);
SFILL_API sfill_outcome sfill_certificate_outcome(const sfill_certificate* c);
SFILL_API sfill_status sfill_certificate_render(const sfill_certificate* c, sfill_format format, char** out);
SFILL_API sfill_status sfill_certificate_from_json(const char* json, sfill_certificate** out);
/* 1 when c is a Found certificate that verifies against l. */
SFILL_API int sfill_certificate_verify(const sfill_lattice* l, const sfill_certificate* c);
SFILL_API void sfill_certificate_free(sfill_certificate* c);

/* ---- continued fractions and the Farey tessellation ----------------------- */
/* "-7/5" -> "-2,-2,-3" */
SFILL_API sfill_status sfill_cf_expand(const char* rational, char** out);
/* "-2,-2,-3" -> "-7/5" */
SFILL_API sfill_status sfill_cf_eval(const char* cf, char** out);
/* "-2,-2,-3" -> "-4,-2" */
SFILL_API sfill_status sfill_cf_dual(const char* cf, char** out);
/* JSON {"alpha":..,"beta":..,"gamma":..,"delta":..,"extra_arc":..} */
SFILL_API sfill_status sfill_farey_config3(const char* s, const char* r2p, char** out);
/* JSON {"alpha":..,"beta":..,"gamma":..} */
SFILL_API sfill_status sfill_farey_config1(const char* s, const char* r2p, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SFILL_SFILL_H */
