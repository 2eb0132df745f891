#ifndef SPHSYS_H
#define SPHSYS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum SphStatus {
  SPH_STATUS_OK = 0,
  SPH_STATUS_NULL_ARGUMENT = 1,
  SPH_STATUS_INVALID_UTF8 = 2,
  SPH_STATUS_PARSE_ERROR = 3,
  SPH_STATUS_INVALID_SYSTEM = 4,
  SPH_STATUS_NOT_CLOSED = 5,
  SPH_STATUS_RANK_TOO_LARGE = 6,
  SPH_STATUS_OUT_OF_RANGE = 7,
  SPH_STATUS_BUFFER_TOO_SMALL = 8,
  SPH_STATUS_INTERNAL = 9,
} SphStatus;

// Stream of the spherical systems of a root system.
typedef struct SphEnumerator SphEnumerator;

// A root system together with its spherical roots.
typedef struct SphRootSystem SphRootSystem;

// A spherical system bound to its root system.
typedef struct SphSystem SphSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *sph_version(void);

// Message of the last failed call on this thread, or NULL. Valid until the
// next call into the library on the same thread.
const char *sph_last_error(void);

// # Safety
// `s` must be NULL or a string returned by this library and not yet freed.
void sph_string_free(char *s);

// Builds the root system of a Dynkin type such as "B3" or "A1xG2".
//
// # Safety
// `dynkin` must be a NUL-terminated string and `out` a writable pointer.
enum SphStatus sph_root_system_new(const char *dynkin, struct SphRootSystem **out);

// # Safety
// `h` must be NULL or a handle from [`sph_root_system_new`] not yet freed.
void sph_root_system_free(struct SphRootSystem *h);

// # Safety
// `h` must be a live handle and `out` writable.
enum SphStatus sph_root_system_rank(const struct SphRootSystem *h, size_t *out);

// Cartan entry `(alpha_j, alpha_i^vee)`.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum SphStatus sph_root_system_cartan(const struct SphRootSystem *h,
                                      size_t i,
                                      size_t j,
                                      int64_t *out);

// `(chi, alpha^vee)` for `chi` given by `len` simple-root coefficients.
//
// # Safety
// `coeffs` must point to `len` readable integers; `h` must be live and
// `out` writable.
enum SphStatus sph_root_system_pairing(const struct SphRootSystem *h,
                                       const int64_t *coeffs,
                                       size_t len,
                                       size_t alpha,
                                       int64_t *out);

// # Safety
// `h` must be a live handle and `out` writable.
enum SphStatus sph_root_system_positive_root_count(const struct SphRootSystem *h, size_t *out);

// Number of spherical roots.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum SphStatus sph_catalogue_len(const struct SphRootSystem *h, size_t *out);

// Copies the coefficients of spherical root `index` into `buf`, which
// must hold at least `rank` integers.
//
// # Safety
// `buf` must point to `len` writable integers; `h` must be live.
enum SphStatus sph_catalogue_root(const struct SphRootSystem *h,
                                  size_t index,
                                  int64_t *buf,
                                  size_t len);

// # Safety
// `h` must be a live handle and `out` writable.
enum SphStatus sph_catalogue_is_loose(const struct SphRootSystem *h, size_t index, bool *out);

// The spherical-root catalogue as JSON.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum SphStatus sph_catalogue_json(const struct SphRootSystem *h, char **out);

// Reads a spherical system in the JSON system-file format.
//
// # Safety
// `json` must be a NUL-terminated string and `out` writable.
enum SphStatus sph_system_from_json(const char *json, struct SphSystem **out);

// # Safety
// `h` must be NULL or a system handle not yet freed.
void sph_system_free(struct SphSystem *h);

// The system in the JSON system-file format.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum SphStatus sph_system_to_json(const struct SphSystem *h, char **out);

// Whether the system satisfies every axiom.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum SphStatus sph_system_validate(const struct SphSystem *h, bool *out);

// The full validation report as JSON.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum SphStatus sph_system_validation_json(const struct SphSystem *h, char **out);

// Fails with `InvalidSystem` when the system is not valid.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum SphStatus sph_system_is_spherically_closed(const struct SphSystem *h, bool *out);

// Number of colors of a valid system.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum SphStatus sph_system_color_count(const struct SphSystem *h, size_t *out);

// Colors, weights, `a`-matrix and `Xi(C)` as JSON.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum SphStatus sph_system_colors_json(const struct SphSystem *h, char **out);

// Tangent window and Hilbert-scheme profile as JSON; fails with
// `NotClosed` on systems that are not spherically closed.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum SphStatus sph_system_tangent_json(const struct SphSystem *h, char **out);

// Starts enumerating the spherical systems of a Dynkin type. A negative
// `max_sigma` means no bound on `|Sigma|`.
//
// # Safety
// `dynkin` must be a NUL-terminated string and `out` writable.
enum SphStatus sph_enumerator_new(const char *dynkin,
                                  bool closed_only,
                                  int64_t max_sigma,
                                  struct SphEnumerator **out);

// Stores the next system in `*out`, or NULL once the stream is exhausted.
//
// # Safety
// `e` must be a live enumerator and `out` writable.
enum SphStatus sph_enumerator_next(struct SphEnumerator *e, struct SphSystem **out);

// # Safety
// `e` must be NULL or an enumerator not yet freed.
void sph_enumerator_free(struct SphEnumerator *e);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPHSYS_H */
