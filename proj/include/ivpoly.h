/* C interface of the ivpoly shared library.
 *
 * Two layers:
 *   - polynomial handles (exact rational arithmetic, opaque pointers),
 *     returning ivp_status;
 *   - command entry points mirroring the CLI, returning the process exit
 *     code convention directly: 0 member/success, 1 checked-false,
 *     2 usage or parse error, 3 internal invariant violation.
 *
 * Every char** output is heap-allocated; release it with ivp_string_free.
 * On failure ivp_last_error() describes the most recent error in the calling
 * thread. */

#ifndef IVPOLY_H
#define IVPOLY_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ivp_status {
  IVP_OK = 0,
  IVP_CHECKED_FALSE = 1,   /* well-formed query, negative verdict */
  IVP_PARSE_ERROR = 2,     /* input text did not parse */
  IVP_INVALID_ARGUMENT = 3, /* arguments outside the documented domain */
  IVP_INTERNAL_ERROR = 4   /* invariant violation; report it */
} ivp_status;

const char* ivp_version(void);

/* Stable name for either an ivp_status or a command exit code. */
const char* ivp_status_name(int status);

/* Message for the most recent failure in this thread; never NULL. */
const char* ivp_last_error(void);

void ivp_string_free(char* s);

/* ---- polynomials over Q ---- */

typedef struct ivp_poly ivp_poly;

/* Accepts monomial and binomial-coefficient syntax, e.g. "1/2*X^2 - 1/2*X"
 * or "C(X,2)". */
ivp_status ivp_poly_parse(const char* text, ivp_poly** out);

/* binomial_basis = 0: monomial form; nonzero: binomial-coefficient form. */
ivp_status ivp_poly_format(const ivp_poly* f, int binomial_basis, char** out);

ivp_status ivp_poly_add(const ivp_poly* a, const ivp_poly* b, ivp_poly** out);
ivp_status ivp_poly_mul(const ivp_poly* a, const ivp_poly* b, ivp_poly** out);
ivp_status ivp_poly_derivative(const ivp_poly* f, ivp_poly** out);

/* point is a rational literal like "7" or "-3/2"; *out_value likewise. */
ivp_status ivp_poly_eval(const ivp_poly* f, const char* point,
                         char** out_value);

void ivp_poly_free(ivp_poly* f);

/* ---- commands (mirror the CLI; see the library documentation) ---- */

/* target: int | int-k:<k> | int-mod:<m> | int-multiset:<list> |
 * ext:<relations> | idealization:<module>,<k>. format: "json" | "text". */
int ivp_cmd_member(const char* expr, const char* target, const char* format,
                   char** report);

/* selector: mod:<m> | diff:<k>; degree <= 64; conjecture nonzero runs the
 * mod-4 comparison (selector must be mod:4, degree >= 6). */
int ivp_cmd_basis(const char* selector, unsigned degree, int conjecture,
                  const char* format, char** report);

/* Seed every randomized suite uses unless the caller overrides it. */
#define IVP_DEFAULT_SEED 20260816u

/* suite: all | core | section2 | section3 | section4 | section5. */
int ivp_cmd_verify(const char* suite, uint64_t seed, const char* format,
                   char** report);

#ifdef __cplusplus
}
#endif

#endif /* IVPOLY_H */
