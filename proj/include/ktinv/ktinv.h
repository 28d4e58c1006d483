/*
 * ktinv: exact equivariant K-theory invariants of Z/nZ-actions on UHF
 * algebras End(V)^{(x)infinity}.
 *
 * C interface. All results are returned as NUL-terminated UTF-8 strings
 * (JSON documents with a top-level "schema":"ktinv/1" field, or DOT text)
 * that the caller releases with ktinv_string_free. Integers that can grow
 * without bound (coefficients, multiplicities) cross the boundary as
 * comma-separated decimal strings.
 *
 * Every function returns a ktinv_status. On failure the output pointer is
 * left NULL and ktinv_last_error() describes the failure as a JSON error
 * document for the calling thread.
 */
#ifndef KTINV_H
#define KTINV_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(KTINV_BUILDING)
#    define KTINV_API __declspec(dllexport)
#  else
#    define KTINV_API __declspec(dllimport)
#  endif
#else
#  define KTINV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ktinv_status {
  KTINV_OK = 0,
  KTINV_ERR_MALFORMED = 1,   /* unparsable or invalid input */
  KTINV_ERR_HYPOTHESIS = 2,  /* precondition (e.g. primitivity) fails */
  KTINV_ERR_BOUND = 3,       /* a configured cap or search bound was hit */
  KTINV_ERR_INTERNAL = 4,    /* self-check failed */
  KTINV_ERR_NULL = 5         /* a required pointer argument was NULL */
} ktinv_status;

typedef enum ktinv_bound {
  KTINV_BOUND_MAX_POW = 0,          /* iteration cap, default 10000 */
  KTINV_BOUND_UNIT = 1,             /* unit witness bound L, default 12 */
  KTINV_BOUND_MAX_DEPTH = 2,        /* Bratteli depth cap, default 64 */
  KTINV_BOUND_CERTIFICATES = 3,     /* report certificate count, default 8 */
  KTINV_BOUND_ORACLE_MAX_L = 4,     /* default 50 */
  KTINV_BOUND_ORACLE_HEIGHT = 5,    /* default 20 */
  KTINV_BOUND_ORACLE_UNIT_L = 6     /* default 6 */
} ktinv_bound;

typedef enum ktinv_format { KTINV_FORMAT_JSON = 0, KTINV_FORMAT_DOT = 1 } ktinv_format;

typedef enum ktinv_target {
  KTINV_TARGET_AUT = 0,      /* pi_n(Aut^G(D (x) K)) */
  KTINV_TARGET_UNITARY = 1,  /* pi_n(U(D^G)) */
  KTINV_TARGET_KU = 2        /* pi_n^H(KU^D) */
} ktinv_target;

typedef enum ktinv_subgroup { KTINV_SUBGROUP_TRIVIAL = 0, KTINV_SUBGROUP_FULL = 1 } ktinv_subgroup;

/* Opaque: the group Z/nZ, the representation V and the configured bounds. */
typedef struct ktinv_context ktinv_context;

KTINV_API const char* ktinv_version(void);
KTINV_API const char* ktinv_status_name(ktinv_status status);

/* Thread-local JSON error document of the last failing call ("" if none). */
KTINV_API const char* ktinv_last_error(void);

KTINV_API ktinv_status ktinv_context_create(uint32_t order, const char* multiplicities,
                                            ktinv_context** out);
KTINV_API void ktinv_context_destroy(ktinv_context* ctx);

KTINV_API ktinv_status ktinv_context_set_bound(ktinv_context* ctx, ktinv_bound which,
                                               uint64_t value);
KTINV_API ktinv_status ktinv_context_get_bound(const ktinv_context* ctx, ktinv_bound which,
                                               uint64_t* value);

/* 1 if the support differences of p_V generate Z/nZ, else 0. */
KTINV_API ktinv_status ktinv_is_primitive(const ktinv_context* ctx, int* out);

/* Full invariant report. */
KTINV_API ktinv_status ktinv_analyze(const ktinv_context* ctx, uint64_t max_n, uint64_t depth,
                                     char** json_out);

/* Positivity of elem / p_V^kpow. use_oracle routes through the brute-force
 * reference implementation. */
KTINV_API ktinv_status ktinv_positivity(const ktinv_context* ctx, const char* elem,
                                        uint64_t kpow, int use_oracle, char** json_out);

/* Unit decision of elem / p_V^kpow; positive != 0 selects the positive-unit
 * decision. */
KTINV_API ktinv_status ktinv_unit(const ktinv_context* ctx, const char* elem, uint64_t kpow,
                                  int positive, int use_oracle, char** json_out);

KTINV_API ktinv_status ktinv_bratteli(const ktinv_context* ctx, uint64_t depth,
                                      ktinv_format format, char** out);

KTINV_API ktinv_status ktinv_doubling(const ktinv_context* ctx, int use_oracle,
                                      char** json_out);

KTINV_API ktinv_status ktinv_homotopy(const ktinv_context* ctx, ktinv_target target,
                                      int64_t n, ktinv_subgroup subgroup, char** json_out);

KTINV_API void ktinv_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* KTINV_H */
