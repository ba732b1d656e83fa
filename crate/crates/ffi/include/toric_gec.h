#ifndef TORIC_GEC_H
#define TORIC_GEC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every entry point.
typedef enum TgStatus {
  TG_STATUS_OK = 0,
  TG_STATUS_NULL_POINTER = 1,
  TG_STATUS_INVALID_UTF8 = 2,
  TG_STATUS_PARSE_ERROR = 3,
  TG_STATUS_NON_UNIMODULAR_SUPPORT = 4,
  TG_STATUS_INVALID_ARGUMENT = 5,
  TG_STATUS_COMPUTATION_ERROR = 6,
  TG_STATUS_PANIC = 7,
} TgStatus;

typedef enum TgVerdict {
  TG_VERDICT_GEC_HOLDS = 0,
  TG_VERDICT_GEC_FAILS = 1,
  TG_VERDICT_INCONCLUSIVE = 2,
} TgVerdict;

// A Laurent polynomial with rational coefficients.
typedef struct TgPolynomial TgPolynomial;

// A lattice polytope.
typedef struct TgPolytope TgPolytope;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. Valid until the
// next call on this thread.
const char *tg_last_error(void);

// Library version as a static string.
const char *tg_version(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void tg_string_free(char *s);

// Parses an expression such as `1+x+y` or an alias such as `hexagon-q`.
//
// # Safety
// `expr` must be a valid C string and `out` a valid pointer.
enum TgStatus tg_polynomial_parse(const char *expr, struct TgPolynomial **out);

// Reads `{"rank": n, "terms": [{"e": [...], "c": "p/q"}, ...]}`.
//
// # Safety
// `text` must be a valid C string and `out` a valid pointer.
enum TgStatus tg_polynomial_from_json(const char *text, struct TgPolynomial **out);

// # Safety
// `p` must be a live handle and `out` a valid pointer.
enum TgStatus tg_polynomial_to_json(const struct TgPolynomial *p, char **out);

// # Safety
// `p` must be a live handle and `out` a valid pointer.
enum TgStatus tg_polynomial_to_string(const struct TgPolynomial *p, char **out);

// # Safety
// `p` must be null or a handle from this library not yet freed.
void tg_polynomial_free(struct TgPolynomial *p);

// μ(p) as a new handle.
//
// # Safety
// `p` must be a live handle and `out` a valid pointer.
enum TgStatus tg_mu(const struct TgPolynomial *p, struct TgPolynomial **out);

// Decides GEC for `p`. If `report` is not null it receives the report as
// JSON.
//
// # Safety
// `p` must be a live handle, `verdict` valid, `report` null or valid.
enum TgStatus tg_gec(const struct TgPolynomial *p, enum TgVerdict *verdict, char **report);

// Tests `μ(p) = c·χ^m·p^{n+1−λ}`; `lambda` is null to test `μ(p) = p^n`,
// or a decimal integer or fraction.
//
// # Safety
// `p` must be a live handle, `lambda` null or a C string, `holds` valid.
enum TgStatus tg_einstein(const struct TgPolynomial *p, const char *lambda, bool *holds);

// Reads `{"rank": n, "vertices": [[...], ...]}`.
//
// # Safety
// `text` must be a valid C string and `out` a valid pointer.
enum TgStatus tg_polytope_from_json(const char *text, struct TgPolytope **out);

// # Safety
// `p` must be a live handle and `out` a valid pointer.
enum TgStatus tg_polytope_newton(const struct TgPolynomial *p, struct TgPolytope **out);

// Anticanonical polytope of a family member such as `V:k=2` or `NP1`.
//
// # Safety
// `spec` must be a valid C string and `out` a valid pointer.
enum TgStatus tg_polytope_family(const char *spec, struct TgPolytope **out);

// Vertices, facets, reflexivity, face counts and edge ratios as JSON.
//
// # Safety
// `d` must be a live handle and `out` a valid pointer.
enum TgStatus tg_polytope_info(const struct TgPolytope *d, char **out);

// # Safety
// `d` must be a live handle and `reflexive` a valid pointer.
enum TgStatus tg_polytope_is_reflexive(const struct TgPolytope *d, bool *reflexive);

// # Safety
// `d` must be null or a handle from this library not yet freed.
void tg_polytope_free(struct TgPolytope *d);

// Polytope-only face descent for one family member, trying its
// obstructing face first. `report` (nullable) receives the JSON report.
//
// # Safety
// `spec` must be a valid C string, `verdict` valid, `report` null or valid.
enum TgStatus tg_family_descent(const char *spec,
                                size_t dmax,
                                enum TgVerdict *verdict,
                                char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TORIC_GEC_H */
