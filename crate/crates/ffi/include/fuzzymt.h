#ifndef FUZZYMT_H
#define FUZZYMT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FzmtDiagnostic {
  FZMT_DIAGNOSTIC_NONE = 0,
  FZMT_DIAGNOSTIC_R_NEGATION_FRACTIONAL_PREMISE = 1,
  FZMT_DIAGNOSTIC_R_IMPLICATION_TWO_VALUED = 2,
  FZMT_DIAGNOSTIC_ZERO_CONSEQUENT = 3,
  FZMT_DIAGNOSTIC_GODEL_REQUIRES_P1_EQUALS_P = 4,
  FZMT_DIAGNOSTIC_CONTRADICTORY_PREMISES = 5,
  FZMT_DIAGNOSTIC_CROSS_CHECK_FAILED = 6,
  FZMT_DIAGNOSTIC_NOT_ANALYZABLE = 7,
} FzmtDiagnostic;

// Selects the S (1 - x based) or R (residuum based) variant of a connective.
typedef enum FzmtSide {
  FZMT_SIDE_S = 0,
  FZMT_SIDE_R = 1,
} FzmtSide;

typedef enum FzmtStatus {
  FZMT_STATUS_OK = 0,
  FZMT_STATUS_NULL_POINTER = 1,
  FZMT_STATUS_OUT_OF_RANGE = 2,
  FZMT_STATUS_INVALID_ARGUMENT = 3,
  FZMT_STATUS_PARSE = 4,
  FZMT_STATUS_UNBOUND_ATOM = 5,
  FZMT_STATUS_UNDEFINED = 6,
  FZMT_STATUS_NUMERIC = 7,
  FZMT_STATUS_PANIC = 8,
} FzmtStatus;

typedef enum FzmtTNorm {
  FZMT_T_NORM_GODEL = 0,
  FZMT_T_NORM_PRODUCT = 1,
  FZMT_T_NORM_LUKASIEWICZ = 2,
} FzmtTNorm;

// Opaque algebra handle.
typedef struct FzmtAlgebra FzmtAlgebra;

// Opaque parsed-formula handle.
typedef struct FzmtFormula FzmtFormula;

// Flat Modus Tollens result. Undetermined values are NaN.
typedef struct FzmtMtResult {
  bool consistent;
  double nu_not_h;
  double nu_h;
  double nu_consequent;
  double nu_contrapositive;
  enum FzmtDiagnostic diagnostic;
  bool boundary;
  bool generalized;
  bool underdetermined;
} FzmtMtResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *fzmt_version(void);

// Message for the most recent failed call on this thread, or an empty
// string. The pointer stays valid until the next `fzmt_*` call on the thread.
const char *fzmt_last_error_message(void);

// Creates an algebra from a built-in t-norm and an implication/negation mix.
//
// # Safety
// `out` must be null or point to writable storage for a handle pointer.
enum FzmtStatus fzmt_algebra_new(enum FzmtTNorm tnorm,
                                 enum FzmtSide implication,
                                 enum FzmtSide negation,
                                 struct FzmtAlgebra **out);

// Releases an algebra handle. Null is ignored.
//
// # Safety
// `algebra` must be null or a handle from [`fzmt_algebra_new`] not yet freed.
void fzmt_algebra_free(struct FzmtAlgebra *algebra);

// # Safety
// `algebra` must be a live handle; `out` must be null or writable.
enum FzmtStatus fzmt_and(const struct FzmtAlgebra *algebra, double x, double y, double *out);

// # Safety
// `algebra` must be a live handle; `out` must be null or writable.
enum FzmtStatus fzmt_or(const struct FzmtAlgebra *algebra, double x, double y, double *out);

// # Safety
// `algebra` must be a live handle; `out` must be null or writable.
enum FzmtStatus fzmt_not(const struct FzmtAlgebra *algebra, double x, double *out);

// # Safety
// `algebra` must be a live handle; `out` must be null or writable.
enum FzmtStatus fzmt_implies(const struct FzmtAlgebra *algebra, double x, double y, double *out);

// Fuzzy Modus Tollens from `v(H -> C)` and `v(not C)`. An inconsistent
// algebra is reported through `out->consistent`, not the status.
//
// # Safety
// `algebra` must be a live handle; `out` must be null or writable.
enum FzmtStatus fzmt_modus_tollens(const struct FzmtAlgebra *algebra,
                                   double nu_p1,
                                   double nu_p2,
                                   struct FzmtMtResult *out);

// Hypothesis-test scenario: premises `1 - alpha^n` and `1 - p_err`.
//
// # Safety
// `algebra` must be a live handle; `out` must be null or writable.
enum FzmtStatus fzmt_sht(const struct FzmtAlgebra *algebra,
                         double alpha,
                         double p_err,
                         double model_n,
                         struct FzmtMtResult *out);

// Upper-tail p-value of `observed` under a normal null.
//
// # Safety
// `out` must be null or writable.
enum FzmtStatus fzmt_p_value_upper(double observed, double null_mean, double null_sd, double *out);

// Bayes posterior `P(H|E)`; returns `Undefined` when the evidence has
// probability zero.
//
// # Safety
// `out` must be null or writable.
enum FzmtStatus fzmt_posterior(double p_e_h, double p_h, double p_e_not_h, double *out);

// Parses a formula such as `"a & !b -> c"`.
//
// # Safety
// `text` must be null or a NUL-terminated string; `out` must be null or
// writable.
enum FzmtStatus fzmt_formula_parse(const char *text, struct FzmtFormula **out);

// Releases a formula handle. Null is ignored.
//
// # Safety
// `formula` must be null or a handle from [`fzmt_formula_parse`] not yet freed.
void fzmt_formula_free(struct FzmtFormula *formula);

// Evaluates a formula with `len` atoms bound by the parallel arrays
// `names` and `values`.
//
// # Safety
// `formula` and `algebra` must be live handles; `names` and `values` must
// each point to `len` elements (or may be null when `len` is 0); every
// name must be NUL-terminated; `out` must be null or writable.
enum FzmtStatus fzmt_formula_eval(const struct FzmtFormula *formula,
                                  const struct FzmtAlgebra *algebra,
                                  const char *const *names,
                                  const double *values,
                                  size_t len,
                                  double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FUZZYMT_H */
