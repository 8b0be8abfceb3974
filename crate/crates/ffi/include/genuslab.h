/* Copyright (c) 2026, genuslab contributors */
/* SPDX-License-Identifier: Apache-2.0 */

#ifndef GENUSLAB_H
#define GENUSLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum GlStatus {
  GL_STATUS_OK = 0,
  GL_STATUS_NULL_POINTER = 1,
  GL_STATUS_INVALID_ARGUMENT = 2,
  GL_STATUS_PARSE = 3,
  GL_STATUS_INVARIANT = 4,
  GL_STATUS_FORM = 5,
  GL_STATUS_OVERFLOW = 6,
  GL_STATUS_BUFFER_TOO_SMALL = 7,
  GL_STATUS_NOT_FOUND = 8,
  GL_STATUS_PANIC = 9,
} GlStatus;

// `(χ^0, …, χ^n)` of a compact complex variety.
typedef struct GlChiVector GlChiVector;

// Integral symmetric bilinear lattice.
typedef struct GlLattice GlLattice;

// Validated manifold model.
typedef struct GlModel GlModel;

// Nonsingular symmetric Z/2 form with a quadratic enhancement.
typedef struct GlZ2Form GlZ2Form;

// Z/4-valued quadratic refinement of a Z/2 form.
typedef struct GlZ4Form GlZ4Form;

typedef struct GlSpecializations {
  int64_t euler;
  int64_t todd;
  int64_t signature;
} GlSpecializations;

typedef struct GlCongruenceReport {
  int64_t y;
  int64_t defect_value;
  int64_t sigma_defect;
  uint32_t guaranteed_modulus;
  uint32_t strong_modulus;
  bool holds;
  bool equivalence_checked;
  bool equivalence_holds;
  bool ok;
} GlCongruenceReport;

typedef struct GlMoritaReport {
  int64_t signature;
  int64_t characteristic_square;
  bool van_der_blij;
  uintptr_t quotient_dim;
  uint8_t arf;
  bool consistent;
} GlMoritaReport;

typedef struct GlPipelineResult {
  int64_t sigma_defect;
  uintptr_t perp_dim;
  uintptr_t sublagrangian_dim;
  uintptr_t w_dim;
  uint8_t arf;
  // `4·Arf ≡ σ-defect mod 8`.
  bool congruence_holds;
} GlPipelineResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread; empty if none.
// The pointer stays valid until the next failing call on this thread.
const char *gl_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *gl_version(void);

// # Safety
// `values` must point to `len` readable `int64_t`; `out` must be writable.
enum GlStatus gl_chi_vector_new(const int64_t *values, uintptr_t len, struct GlChiVector **out);

// # Safety
// `h` must be null or a handle from this library not yet freed.
void gl_chi_vector_free(struct GlChiVector *h);

// # Safety
// `h` must be a live handle and `out` writable.
enum GlStatus gl_chi_vector_dim(const struct GlChiVector *h, uintptr_t *out);

// Copies the coefficients of `χ_y` (ascending powers) into `out`, which
// holds `cap` values. `out_len` receives the number required; pass
// `cap = 0` to query it.
//
// # Safety
// `out` must hold `cap` writable values; `out_len` must be writable.
enum GlStatus gl_chi_y_coefficients(const struct GlChiVector *h,
                                    int64_t *out,
                                    uintptr_t cap,
                                    uintptr_t *out_len);

// `χ_y` at `y = -1, 0, 1`.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum GlStatus gl_specialize(const struct GlChiVector *h, struct GlSpecializations *out);

// # Safety
// `h` must be a live handle and `out` writable.
enum GlStatus gl_check_duality(const struct GlChiVector *h, bool *out);

// # Safety
// `h` must be a live handle and `out` writable.
enum GlStatus gl_check_parity_identities(const struct GlChiVector *h, bool *out);

// Checks the bundle congruences for `F → E → B` at one odd `y`.
//
// # Safety
// All handles must be live and `out` writable.
enum GlStatus gl_check_congruence(const struct GlChiVector *e,
                                  const struct GlChiVector *f,
                                  const struct GlChiVector *b,
                                  int64_t y,
                                  bool singular,
                                  bool monodromy_mod4_trivial,
                                  struct GlCongruenceReport *out);

// `gram` is `dim × dim` row-major with entries 0/1; `h` lists the
// enhancement on the standard basis.
//
// # Safety
// `gram` must hold `dim * dim` bytes, `h` `dim` bytes; `out` writable.
enum GlStatus gl_z2_form_new(const uint8_t *gram,
                             const uint8_t *h,
                             uintptr_t dim,
                             struct GlZ2Form **out);

// # Safety
// `h` must be null or a live handle.
void gl_z2_form_free(struct GlZ2Form *h);

// # Safety
// `h` must be a live handle and `out` writable.
enum GlStatus gl_arf(const struct GlZ2Form *h, uint8_t *out);

// `q` lists Z/4 values on the standard basis; `q[i] ≡ gram[i][i] mod 2`.
//
// # Safety
// `gram` must hold `dim * dim` bytes, `q` `dim` values; `out` writable.
enum GlStatus gl_z4_form_new(const uint8_t *gram,
                             const int64_t *q,
                             uintptr_t dim,
                             struct GlZ4Form **out);

// # Safety
// `h` must be null or a live handle.
void gl_z4_form_free(struct GlZ4Form *h);

// # Safety
// `h` must be a live handle and `out` writable.
enum GlStatus gl_brown(const struct GlZ4Form *h, uint8_t *out);

// # Safety
// `gram` must hold `dim * dim` values (row-major); `out` writable.
enum GlStatus gl_lattice_new(const int64_t *gram, uintptr_t dim, struct GlLattice **out);

// Parses a `genuslab/lattice/1` document.
//
// # Safety
// `json` must be a NUL-terminated string; `out` writable.
enum GlStatus gl_lattice_from_json(const char *json, struct GlLattice **out);

// # Safety
// `h` must be null or a live handle.
void gl_lattice_free(struct GlLattice *h);

// # Safety
// `h` must be a live handle and `out` writable.
enum GlStatus gl_lattice_signature(const struct GlLattice *h, int64_t *out);

// Reduction by the characteristic element for a unimodular lattice with
// signature divisible by 4.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum GlStatus gl_morita_check(const struct GlLattice *h, struct GlMoritaReport *out);

// Reduces `E ⊕ -(F×B)` by `(v, v')` and compares `4·Arf` with
// `σ(E) - σ(F×B)` mod 8.
//
// # Safety
// Both handles must be live and `out` writable.
enum GlStatus gl_pipeline(const struct GlLattice *e,
                          const struct GlLattice *fb,
                          struct GlPipelineResult *out);

// Parses and validates a `genuslab/manifold/1` document.
//
// # Safety
// `json` must be a NUL-terminated string; `out` writable.
enum GlStatus gl_model_from_json(const char *json, struct GlModel **out);

// # Safety
// `name` must be a NUL-terminated string; `out` writable.
enum GlStatus gl_model_from_catalog(const char *name, struct GlModel **out);

// New chi-vector handle owned by the caller.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum GlStatus gl_model_chi_vector(const struct GlModel *h, struct GlChiVector **out);

// Intersection lattice of the model, if it carries one; otherwise
// `GL_STATUS_NOT_FOUND`.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum GlStatus gl_model_lattice(const struct GlModel *h, struct GlLattice **out);

// # Safety
// `h` must be null or a live handle.
void gl_model_free(struct GlModel *h);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* GENUSLAB_H */
