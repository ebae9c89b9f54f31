#ifndef BRANDT_OMEGA_H
#define BRANDT_OMEGA_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum BoStatus {
  BO_STATUS_OK = 0,
  BO_STATUS_NULL_POINTER = 1,
  BO_STATUS_PARSE_ERROR = 2,
  BO_STATUS_INVALID_ELEMENT = 3,
  BO_STATUS_NOT_RESTRICTED = 4,
  BO_STATUS_OUT_OF_RANGE = 5,
  BO_STATUS_INVALID_ARGUMENT = 6,
  BO_STATUS_PANIC = 7,
} BoStatus;

typedef enum BoSide {
  /**
   * `A·X = B`
   */
  BO_SIDE_LEFT = 0,
  /**
   * `X·A = B`
   */
  BO_SIDE_RIGHT = 1,
} BoSide;

/**
 * Opaque atomic family.
 */
typedef struct BoFamily BoFamily;

/**
 * Opaque solution set of an equation.
 */
typedef struct BoSolutions BoSolutions;

/**
 * An element of `B_ω^𝓕`: the zero when `is_zero`, otherwise `(i, j, {k})`.
 */
typedef struct BoElem {
  bool is_zero;
  uint64_t i;
  uint64_t j;
  uint64_t k;
} BoElem;

/**
 * A Brandt element: `O` when `is_zero`, otherwise `(row; val; col)`.
 */
typedef struct BoBrandt {
  bool is_zero;
  uint64_t row;
  uint64_t val;
  uint64_t col;
} BoBrandt;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *bo_last_error(void);

/**
 * Parses a support such as `"0,1,3"` or `"0,2,+5"`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum BoStatus bo_family_new(const char *spec, struct BoFamily **out);

/**
 * # Safety
 * `family` must come from [`bo_family_new`] and not be freed twice.
 */
void bo_family_free(struct BoFamily *family);

/**
 * Product in `B_ω^𝓕`; both factors must be valid for the family.
 *
 * # Safety
 * `family` must be a live handle; `out` must be valid for writes.
 */
enum BoStatus bo_multiply(const struct BoFamily *family,
                          struct BoElem a,
                          struct BoElem b,
                          struct BoElem *out);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum BoStatus bo_invert(struct BoElem x, struct BoElem *out);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum BoStatus bo_nat_leq(struct BoElem x, struct BoElem y, bool *out);

/**
 * `(i, j, {k}) ↦ (i + k; k; j + k)`.
 *
 * # Safety
 * `family` must be a live handle; `out` must be valid for writes.
 */
enum BoStatus bo_embed(const struct BoFamily *family, struct BoElem x, struct BoBrandt *out);

/**
 * # Safety
 * `family` must be a live handle; `out` must be valid for writes.
 */
enum BoStatus bo_embed_inverse(const struct BoFamily *family,
                               struct BoBrandt e,
                               struct BoElem *out);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum BoStatus bo_brandt_multiply(struct BoBrandt a, struct BoBrandt b, struct BoBrandt *out);

/**
 * Solves `A·X = B` or `X·A = B` in the restricted subsemigroup.
 *
 * # Safety
 * `family` must be a live handle; `out` must be valid for writes. The
 * handle written to `out` is released with [`bo_solutions_free`].
 */
enum BoStatus bo_solve(const struct BoFamily *family,
                       enum BoSide side,
                       struct BoBrandt a,
                       struct BoBrandt b,
                       struct BoSolutions **out);

/**
 * True for the `B = O` case, whose solution set is infinite.
 *
 * # Safety
 * `solutions` must be a live handle or null.
 */
bool bo_solutions_is_infinite(const struct BoSolutions *solutions);

/**
 * Number of solutions; 0 for the infinite case.
 *
 * # Safety
 * `solutions` must be a live handle or null.
 */
size_t bo_solutions_len(const struct BoSolutions *solutions);

/**
 * # Safety
 * `solutions` must be a live handle; `out` must be valid for writes.
 */
enum BoStatus bo_solutions_get(const struct BoSolutions *solutions,
                               size_t index,
                               struct BoBrandt *out);

/**
 * # Safety
 * `solutions` must come from [`bo_solve`] and not be freed twice.
 */
void bo_solutions_free(struct BoSolutions *solutions);

/**
 * Runs the verification suite and writes its JSON report. `*all_passed`
 * is set when every check passes.
 *
 * # Safety
 * `family` must be a live handle; `out` and `all_passed` must be valid for
 * writes. The string is released with [`bo_string_free`].
 */
enum BoStatus bo_verify_json(const struct BoFamily *family,
                             uint64_t bound,
                             char **out,
                             bool *all_passed);

/**
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void bo_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BRANDT_OMEGA_H */
