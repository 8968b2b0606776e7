#ifndef FINORTHO_H
#define FINORTHO_H

/*
 * C interface to the finortho library.
 *
 * Families are opaque handles. Every call returns an fo_status; on failure
 * fo_last_error() describes the problem (per thread). Strings returned
 * through char** are owned by the caller and released with fo_string_free.
 * Rational parameters travel as JSON strings such as "-51", "1/2" or "-0.5".
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(FINORTHO_BUILDING_LIBRARY)
#define FO_API __attribute__((visibility("default")))
#else
#define FO_API
#endif

typedef enum fo_status {
  FO_OK = 0,
  FO_ERR_PARAMETER = 1,
  FO_ERR_ADMISSIBILITY = 2,
  FO_ERR_POLE = 3,
  FO_ERR_DIVERGENCE = 4,
  FO_ERR_CONVERGENCE = 5,
  FO_ERR_REALNESS = 6,
  FO_ERR_UNSUPPORTED = 7,
  FO_ERR_INVALID_ARGUMENT = 8, /* null pointers, malformed JSON */
  FO_ERR_INTERNAL = 9
} fo_status;

typedef struct fo_family fo_family;

/* kind: "M", "N", "I", "J", "phi" or "psi"; params_json: a JSON object. */
FO_API fo_status fo_family_create(const char* kind, const char* params_json, fo_family** out);
FO_API void fo_family_destroy(fo_family* fam);

/* Largest admissible index (-1 if none). */
FO_API fo_status fo_family_max_index(const fo_family* fam, long* out);

/* Member n in the polynomial JSON schema {"parity", "terms": [{"exp", "num", "den"}]}. */
FO_API fo_status fo_family_poly_json(const fo_family* fam, long n, char** out);

/* Monic generalized Bessel polynomial of degree n; alpha as a rational string. */
FO_API fo_status fo_bessel_poly_json(long n, const char* alpha, char** out);

/* [{"n", "degree", "sign", "log10", "value"?}] for n = 0..n_max. */
FO_API fo_status fo_family_norms_json(const fo_family* fam, long n_max, char** out);

/* Bound C, max index and named conditions; "valid" is false when a condition fails. */
FO_API fo_status fo_family_admissibility_json(const fo_family* fam, char** out);

/*
 * which: "gram", "ode", "oracle" or "all". tol bounds the normalized
 * off-diagonals and the diagonal relative errors (<= 0 selects 1e-8).
 * *verdict_pass is 1 on pass, 0 on fail.
 */
FO_API fo_status fo_verify_json(const fo_family* fam, const char* which, long n_max, double tol, char** out,
                                int* verdict_pass);

/* Projection of a built-in target ("monomial:J", "gauss:J", "member:N", "table:PATH"). */
FO_API fo_status fo_approx_json(const fo_family* fam, const char* target, long n_max, char** out);

FO_API void fo_string_free(char* s);
FO_API const char* fo_last_error(void);
FO_API const char* fo_status_name(fo_status status);

#ifdef __cplusplus
}
#endif

#endif /* FINORTHO_H */
