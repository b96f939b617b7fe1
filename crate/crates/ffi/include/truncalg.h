#ifndef TRUNCALG_H
#define TRUNCALG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define TRUNCALG_METHOD_ECHELON 0

#define TRUNCALG_METHOD_SUBSPACE 1

/**
 * Result code of every call.
 */
typedef enum TruncalgStatus {
  TRUNCALG_STATUS_OK = 0,
  TRUNCALG_STATUS_NULL_POINTER = 1,
  TRUNCALG_STATUS_INVALID_ARGUMENT = 2,
  TRUNCALG_STATUS_NOT_PRIME = 3,
  TRUNCALG_STATUS_NOT_CLOSED = 4,
  TRUNCALG_STATUS_INFEASIBLE = 5,
  TRUNCALG_STATUS_CLAIM_VIOLATED = 6,
  TRUNCALG_STATUS_BUFFER_TOO_SMALL = 7,
  TRUNCALG_STATUS_OVERFLOW = 8,
  TRUNCALG_STATUS_PANIC = 9,
} TruncalgStatus;

/**
 * A full census at one `(p, n)`.
 */
typedef struct TruncalgCensus TruncalgCensus;

/**
 * A subalgebra of `F_p[x]/x^n`.
 */
typedef struct TruncalgSubalgebra TruncalgSubalgebra;

/**
 * `dim m`, `dim m^2` and `dim m/m^2`.
 */
typedef struct TruncalgMDims {
  size_t m;
  size_t m2;
  size_t quotient;
} TruncalgMDims;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next call on the same thread.
 */
const char *truncalg_last_error(void);

/**
 * Library version, a static string.
 */
const char *truncalg_version(void);

/**
 * Whether `members` (any order) is a partial monoid of `[0, n-1]`.
 *
 * # Safety
 * `members` must point to `len` readable values; `result` must be writable.
 */
enum TruncalgStatus truncalg_is_partial_monoid(size_t n,
                                               const size_t *members,
                                               size_t len,
                                               bool *result);

/**
 * `e(E)` for a partial monoid `E` of `[0, n-1]`.
 *
 * # Safety
 * As for [`truncalg_is_partial_monoid`].
 */
enum TruncalgStatus truncalg_e_invariant(size_t n,
                                         const size_t *members,
                                         size_t len,
                                         size_t *result);

/**
 * `d(E)`, the number of minimal generators of `E`.
 *
 * # Safety
 * As for [`truncalg_is_partial_monoid`].
 */
enum TruncalgStatus truncalg_d_invariant(size_t n,
                                         const size_t *members,
                                         size_t len,
                                         size_t *result);

/**
 * Coefficients of the codimension-`c` count polynomial at bound `n`,
 * constant term first. `*len` always receives the needed length.
 *
 * # Safety
 * `coeffs` must have room for `cap` values; `len` must be writable.
 */
enum TruncalgStatus truncalg_count_polynomial(size_t n,
                                              size_t c,
                                              uint64_t *coeffs,
                                              size_t cap,
                                              size_t *len);

/**
 * The codimension-`c` count polynomial evaluated at `q`.
 *
 * # Safety
 * `result` must be writable.
 */
enum TruncalgStatus truncalg_count_eval(size_t n, size_t c, uint64_t q, uint64_t *result);

/**
 * The span of `rows` vectors given row-major as `rows * n` integers, which
 * must already be a unital subalgebra.
 *
 * # Safety
 * `coeffs` must point to `rows * n` values; `result` must be writable.
 */
enum TruncalgStatus truncalg_subalgebra_from_span(uint32_t p,
                                                  size_t n,
                                                  const int64_t *coeffs,
                                                  size_t rows,
                                                  struct TruncalgSubalgebra **result);

/**
 * The subalgebra generated by `rows` vectors, laid out as in
 * [`truncalg_subalgebra_from_span`].
 *
 * # Safety
 * As for [`truncalg_subalgebra_from_span`].
 */
enum TruncalgStatus truncalg_subalgebra_generated(uint32_t p,
                                                  size_t n,
                                                  const int64_t *coeffs,
                                                  size_t rows,
                                                  struct TruncalgSubalgebra **result);

/**
 * The non-thin witness at `n = 14` over `F_p`, checked before it is returned.
 *
 * # Safety
 * `result` must be writable.
 */
enum TruncalgStatus truncalg_witness(uint32_t p, struct TruncalgSubalgebra **result);

/**
 * Vector space dimension.
 *
 * # Safety
 * `alg` must be a live handle; `result` must be writable.
 */
enum TruncalgStatus truncalg_subalgebra_dim(const struct TruncalgSubalgebra *alg, size_t *result);

/**
 * The exponent set in increasing order. `*len` always receives its size.
 *
 * # Safety
 * `alg` must be a live handle; `members` must have room for `cap` values.
 */
enum TruncalgStatus truncalg_subalgebra_exponents(const struct TruncalgSubalgebra *alg,
                                                  size_t *members,
                                                  size_t cap,
                                                  size_t *len);

/**
 * Dimensions of the maximal ideal, its square and their quotient.
 *
 * # Safety
 * `alg` must be a live handle; `result` must be writable.
 */
enum TruncalgStatus truncalg_subalgebra_m_dims(const struct TruncalgSubalgebra *alg,
                                               struct TruncalgMDims *result);

/**
 * Whether `dim m/m^2` equals `d` of the exponent set.
 *
 * # Safety
 * `alg` must be a live handle; `result` must be writable.
 */
enum TruncalgStatus truncalg_subalgebra_is_thin(const struct TruncalgSubalgebra *alg, bool *result);

/**
 * Number of subalgebras of `F_p[x]/x^(n+1)` projecting onto this one.
 *
 * # Safety
 * `alg` must be a live handle; `result` must be writable.
 */
enum TruncalgStatus truncalg_subalgebra_lift_count(const struct TruncalgSubalgebra *alg,
                                                   uint64_t *result);

/**
 * JSON `{p, n, basis}`; release with [`truncalg_string_free`].
 *
 * # Safety
 * `alg` must be a live handle; `result` must be writable.
 */
enum TruncalgStatus truncalg_subalgebra_to_json(const struct TruncalgSubalgebra *alg,
                                                char **result);

/**
 * Releases a subalgebra handle. Null is ignored.
 *
 * # Safety
 * `alg` must come from this library and not be used afterwards.
 */
void truncalg_subalgebra_free(struct TruncalgSubalgebra *alg);

/**
 * Full census of `F_p[x]/x^n`. `method` is one of the `TRUNCALG_METHOD_*`
 * constants; `force` lifts the feasibility limit.
 *
 * # Safety
 * `result` must be writable.
 */
enum TruncalgStatus truncalg_census(uint32_t p,
                                    size_t n,
                                    uint32_t method,
                                    bool force,
                                    struct TruncalgCensus **result);

/**
 * Total number of subalgebras and how many of them are not thin.
 *
 * # Safety
 * `census` must be a live handle; both outputs must be writable.
 */
enum TruncalgStatus truncalg_census_totals(const struct TruncalgCensus *census,
                                           uint64_t *total,
                                           uint64_t *non_thin);

/**
 * The census report as JSON; release with [`truncalg_string_free`].
 *
 * # Safety
 * `census` must be a live handle; `result` must be writable.
 */
enum TruncalgStatus truncalg_census_to_json(const struct TruncalgCensus *census, char **result);

/**
 * Releases a census handle. Null is ignored.
 *
 * # Safety
 * `census` must come from this library and not be used afterwards.
 */
void truncalg_census_free(struct TruncalgCensus *census);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void truncalg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRUNCALG_H */
