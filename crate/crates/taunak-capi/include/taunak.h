#ifndef TAUNAK_H
#define TAUNAK_H

/* Generated by cbindgen from the taunak-capi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum TaunakStatus {
  TAUNAK_STATUS_OK = 0,
  TAUNAK_STATUS_NULL_POINTER = 1,
  TAUNAK_STATUS_INVALID_SPEC = 2,
  TAUNAK_STATUS_INVALID_MODULE = 3,
  TAUNAK_STATUS_BUFFER_TOO_SMALL = 4,
  TAUNAK_STATUS_VERIFICATION_FAILED = 5,
} TaunakStatus;

/**
 * Opaque handle: an algebra given by its Kupisch series.
 */
typedef struct TaunakAlgebra TaunakAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Create an algebra from a Kupisch series of length `n`.
 * On success writes a fresh handle into `out`.
 */
enum TaunakStatus taunak_algebra_new(size_t n, const size_t *kupisch, struct TaunakAlgebra **out);

/**
 * Destroy a handle created by [`taunak_algebra_new`]. Null is a no-op.
 */
void taunak_algebra_free(struct TaunakAlgebra *handle);

/**
 * Number of simple modules, or 0 on a null handle.
 */
size_t taunak_algebra_rank(const struct TaunakAlgebra *handle);

/**
 * Whether the algebra is cyclic (the last projective is not simple).
 */
bool taunak_algebra_is_cyclic(const struct TaunakAlgebra *handle);

/**
 * Number of indecomposable modules.
 */
size_t taunak_indec_count(const struct TaunakAlgebra *handle);

/**
 * Number of bricks.
 */
size_t taunak_brick_count(const struct TaunakAlgebra *handle);

/**
 * Dimension of the Hom space between two serial modules.
 */
enum TaunakStatus taunak_hom_dim(const struct TaunakAlgebra *handle,
                                 size_t from_top,
                                 size_t from_len,
                                 size_t to_top,
                                 size_t to_len,
                                 size_t *out);

/**
 * Dimension of the Ext space between two serial modules.
 */
enum TaunakStatus taunak_ext_dim(const struct TaunakAlgebra *handle,
                                 size_t from_top,
                                 size_t from_len,
                                 size_t to_top,
                                 size_t to_len,
                                 size_t *out);

/**
 * Number of two-term simple-minded collections.
 */
enum TaunakStatus taunak_collection_count(const struct TaunakAlgebra *handle, size_t *out);

/**
 * Whether the classifying cube complex satisfies the flag condition at
 * every vertex link.
 */
enum TaunakStatus taunak_complex_is_nonpositively_curved(const struct TaunakAlgebra *handle,
                                                         bool *out);

/**
 * Run the whole cross-pipeline verification suite; `Ok` means every
 * certificate holds.
 */
enum TaunakStatus taunak_verify(const struct TaunakAlgebra *handle);

/**
 * JSON summary of the algebra. Writes at most `cap` bytes including the
 * terminator; `written` always receives the required size.
 */
enum TaunakStatus taunak_info_json(const struct TaunakAlgebra *handle,
                                   char *buf,
                                   size_t cap,
                                   size_t *written);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* TAUNAK_H */
