#ifndef THETA_FORMS_H
#define THETA_FORMS_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TfFamily {
  TF_FAMILY_UNITARY = 0,
  TF_FAMILY_ORTHOGONAL = 1,
} TfFamily;

typedef enum TfForm {
  TF_FORM_PSI_Q = 0,
  TF_FORM_PSI_CUP = 1,
  TF_FORM_PSI_ORTH = 2,
  TF_FORM_KM_NABLA = 3,
  TF_FORM_KM_EXPLICIT = 4,
  TF_FORM_MIXED = 5,
} TfForm;

typedef enum TfFormat {
  TF_FORMAT_JSON = 0,
  TF_FORMAT_LATEX = 1,
} TfFormat;

typedef enum TfStatus {
  TF_STATUS_OK = 0,
  TF_STATUS_NULL_POINTER = 1,
  TF_STATUS_INVALID_SIGNATURE = 2,
  TF_STATUS_INVALID_ARGUMENT = 3,
  TF_STATUS_SHAPE_MISMATCH = 4,
  TF_STATUS_PARSE_ERROR = 5,
  TF_STATUS_VERIFICATION_FAILED = 6,
  TF_STATUS_INTERNAL = 7,
} TfStatus;

/**
 * Opaque cochain handle.
 */
typedef struct TfCochain TfCochain;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Human-readable name of a status code. The string is static.
 */
const char *tf_status_message(enum TfStatus status);

/**
 * Builds a form and stores a new handle in `*out`.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum TfStatus tf_build(enum TfForm form,
                       enum TfFamily family,
                       uint16_t p,
                       uint16_t q,
                       uint16_t r,
                       uint16_t s,
                       struct TfCochain **out);

/**
 * Parses a JSON artifact into a new handle.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be valid for a write.
 */
enum TfStatus tf_cochain_from_json(const char *json, struct TfCochain **out);

/**
 * # Safety
 * `c` must be null or a handle from this library not yet freed.
 */
void tf_cochain_free(struct TfCochain *c);

/**
 * Renders `c` and stores a new string in `*out`.
 *
 * # Safety
 * `c` must be a live handle; `out` must be valid for a write.
 */
enum TfStatus tf_cochain_export(const struct TfCochain *c, enum TfFormat format, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void tf_string_free(char *s);

/**
 * Number of nonzero wedge terms of `c`.
 *
 * # Safety
 * `c` must be a live handle; `out` must be valid for a write.
 */
enum TfStatus tf_cochain_term_count(const struct TfCochain *c, size_t *out);

/**
 * Writes whether `d c = 0`.
 *
 * # Safety
 * `c` must be a live handle; `out` must be valid for a write.
 */
enum TfStatus tf_cochain_is_closed(const struct TfCochain *c, bool *out);

/**
 * Writes whether the K-invariance residual of `c` vanishes.
 *
 * # Safety
 * `c` must be a live handle; `out` must be valid for a write.
 */
enum TfStatus tf_cochain_is_k_invariant(const struct TfCochain *c, bool *out);

/**
 * Runs a named suite. Returns [`TfStatus::VerificationFailed`] when any
 * check fails; `*passed` is written in both cases.
 *
 * # Safety
 * `suite` must be NUL-terminated; `passed` must be valid for a write.
 */
enum TfStatus tf_verify(const char *suite, uint64_t seed, bool *passed);

/**
 * Writes `r(0), …, r(n_max)` for the lattice with integer Gram matrix
 * `gram` (row-major, `dim × dim`) into `out`, which must hold `n_max + 1`
 * entries. A null `gram` selects E8.
 *
 * # Safety
 * `gram` must be null or hold `dim * dim` entries; `out` must hold
 * `n_max + 1` entries.
 */
enum TfStatus tf_rep_numbers(const int64_t *gram, size_t dim, uint64_t n_max, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* THETA_FORMS_H */
