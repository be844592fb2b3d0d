#ifndef HOMCONJ_H
#define HOMCONJ_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HomconjFailedCondition {
  HOMCONJ_FAILED_CONDITION_NONE = 0,
  HOMCONJ_FAILED_CONDITION_GENERATOR_TYPES = 1,
  HOMCONJ_FAILED_CONDITION_FIX_PART = 2,
  HOMCONJ_FAILED_CONDITION_BAR_TYPE = 3,
  HOMCONJ_FAILED_CONDITION_EXPONENTS = 4,
  HOMCONJ_FAILED_CONDITION_ORBIT_POWERS = 5,
  HOMCONJ_FAILED_CONDITION_BLOCK_TYPE = 6,
} HomconjFailedCondition;

typedef enum HomconjStatus {
  HOMCONJ_STATUS_OK = 0,
  HOMCONJ_STATUS_NULL_POINTER = 1,
  HOMCONJ_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed cycle notation or image list.
   */
  HOMCONJ_STATUS_PARSE = 3,
  HOMCONJ_STATUS_DEGREE_MISMATCH = 4,
  /**
   * Inputs violate a precondition, e.g. generator images that do not commute.
   */
  HOMCONJ_STATUS_INVALID_INPUT = 5,
  HOMCONJ_STATUS_CAP_EXCEEDED = 6,
  HOMCONJ_STATUS_BUFFER_TOO_SMALL = 7,
  HOMCONJ_STATUS_INTERNAL = 8,
} HomconjStatus;

/**
 * Opaque permutation handle.
 */
typedef struct HomconjPerm HomconjPerm;

typedef struct HomconjDecision {
  bool conjugate;
  bool element_conjugate;
  bool generator_conjugate;
  enum HomconjFailedCondition failed_condition;
} HomconjDecision;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null after a
 * successful one. Owned by the library; valid until the next call.
 */
const char *homconj_last_error(void);

/**
 * Parses cycle notation such as `"(1 2 3)(4 5)"` into a permutation of `degree` points.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` valid for one write.
 */
enum HomconjStatus homconj_perm_parse(const char *text, size_t degree, struct HomconjPerm **out);

/**
 * Builds a permutation from `len` 1-based images: `images[i]` is the image of `i + 1`.
 *
 * # Safety
 * `images` must point to `len` readable values and `out` be valid for one write.
 */
enum HomconjStatus homconj_perm_from_images(const size_t *images,
                                            size_t len,
                                            struct HomconjPerm **out);

/**
 * # Safety
 * `out` must be valid for one write.
 */
enum HomconjStatus homconj_perm_identity(size_t degree, struct HomconjPerm **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `p` must be null or a handle from this library that has not been freed.
 */
void homconj_perm_free(struct HomconjPerm *p);

/**
 * Degree of `p`, or 0 for null.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t homconj_perm_degree(const struct HomconjPerm *p);

/**
 * Image of the 1-based `point`.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for one write.
 */
enum HomconjStatus homconj_perm_apply(const struct HomconjPerm *p, size_t point, size_t *out);

/**
 * Canonical cycle notation of `p`, or null for a null handle. Release with
 * `homconj_string_free`.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
char *homconj_perm_format(const struct HomconjPerm *p);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void homconj_string_free(char *s);

/**
 * `out = p q`, the map `x -> p(q(x))`.
 *
 * # Safety
 * `p`, `q` must be live handles and `out` valid for one write.
 */
enum HomconjStatus homconj_perm_compose(const struct HomconjPerm *p,
                                        const struct HomconjPerm *q,
                                        struct HomconjPerm **out);

/**
 * # Safety
 * `p` must be a live handle and `out` valid for one write.
 */
enum HomconjStatus homconj_perm_inverse(const struct HomconjPerm *p, struct HomconjPerm **out);

/**
 * `out = g p g^-1`.
 *
 * # Safety
 * `g`, `p` must be live handles and `out` valid for one write.
 */
enum HomconjStatus homconj_perm_conjugate(const struct HomconjPerm *g,
                                          const struct HomconjPerm *p,
                                          struct HomconjPerm **out);

/**
 * Order of `p`, saturating at `UINT64_MAX`.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for one write.
 */
enum HomconjStatus homconj_perm_order(const struct HomconjPerm *p, uint64_t *out);

/**
 * Writes the cycle lengths of `p`, fixed points included, in descending
 * order. `len` receives the number of lengths; when it exceeds `capacity`
 * nothing is written to `buf` and `BUFFER_TOO_SMALL` is returned.
 *
 * # Safety
 * `p` must be a live handle, `buf` valid for `capacity` writes (or null when
 * `capacity` is 0) and `len` valid for one write.
 */
enum HomconjStatus homconj_perm_cycle_type(const struct HomconjPerm *p,
                                           size_t *buf,
                                           size_t capacity,
                                           size_t *len);

/**
 * True iff both handles are non-null and hold equal permutations.
 *
 * # Safety
 * Each argument must be null or a live handle.
 */
bool homconj_perm_equal(const struct HomconjPerm *p, const struct HomconjPerm *q);

/**
 * Decides conjugacy of the homomorphisms `a -> phi_a, b -> phi_b` and
 * `a -> psi_a, b -> psi_b` from an abelian group on `a`, `b`.
 *
 * When `witness_out` is non-null it receives a conjugator `w` with
 * `w phi w^-1 = psi`, or null if the pair is not conjugate. The witness
 * search is cap-limited and may fail with `CAP_EXCEEDED`.
 *
 * # Safety
 * The four permutations must be live handles, `out` valid for one write,
 * and `witness_out` null or valid for one write.
 */
enum HomconjStatus homconj_decide_abelian(const struct HomconjPerm *phi_a,
                                          const struct HomconjPerm *phi_b,
                                          const struct HomconjPerm *psi_a,
                                          const struct HomconjPerm *psi_b,
                                          struct HomconjDecision *out,
                                          struct HomconjPerm **witness_out);

/**
 * As `homconj_decide_abelian`, for `D_2m` on rotation `r` and reflection `s`.
 *
 * # Safety
 * As for `homconj_decide_abelian`.
 */
enum HomconjStatus homconj_decide_dihedral(uint64_t m,
                                           const struct HomconjPerm *phi_r,
                                           const struct HomconjPerm *phi_s,
                                           const struct HomconjPerm *psi_r,
                                           const struct HomconjPerm *psi_s,
                                           struct HomconjDecision *out,
                                           struct HomconjPerm **witness_out);

/**
 * Searches for `w` with `w phi[i] w^-1 = psi[i]` for all `i < count`.
 * `out` receives the first such `w` in enumeration order, or null.
 * Searches larger than `cap` candidates fail with `CAP_EXCEEDED`.
 *
 * # Safety
 * `phi` and `psi` must point to `count` live handles each and `out` be valid
 * for one write.
 */
enum HomconjStatus homconj_find_conjugator(const struct HomconjPerm *const *phi,
                                           const struct HomconjPerm *const *psi,
                                           size_t count,
                                           uint64_t cap,
                                           struct HomconjPerm **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOMCONJ_H */
