#ifndef NESTLAT_H
#define NESTLAT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NlSide {
  NL_SIDE_LEFT = 0,
  NL_SIDE_RIGHT = 1,
} NlSide;

// Result code of every call.
typedef enum NlStatus {
  NL_STATUS_OK = 0,
  // A mathematical precondition failed.
  NL_STATUS_DOMAIN_ERROR = 1,
  // Malformed document, shape or descriptor.
  NL_STATUS_USAGE_ERROR = 2,
  NL_STATUS_NULL_POINTER = 3,
  NL_STATUS_INVALID_UTF8 = 4,
  NL_STATUS_PANIC = 5,
} NlStatus;

// Opaque handle to a validated matrix document.
typedef struct NlMatrix NlMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses and validates a matrix document.
//
// # Safety
// `json` must be a NUL-terminated string and `out` a valid pointer.
enum NlStatus nl_matrix_from_json(const char *json, struct NlMatrix **out);

// Canonical JSON text of a matrix.
//
// # Safety
// `m` must come from [`nl_matrix_from_json`]; `out` must be valid.
enum NlStatus nl_matrix_to_json(const struct NlMatrix *m, char **out);

// Releases a matrix handle. Null is ignored.
//
// # Safety
// `m` must come from [`nl_matrix_from_json`] and not be used afterwards.
void nl_matrix_free(struct NlMatrix *m);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void nl_string_free(char *s);

// Message describing the last failure on this thread, or null. The pointer
// stays valid until the next call on the same thread.
const char *nl_last_error_message(void);

// Echelon form document of `m` on the given side.
//
// # Safety
// `m` must be a live handle and `out` valid.
enum NlStatus nl_echelon(const struct NlMatrix *m, enum NlSide side, char **out);

// Whether the row space (left) or column space (right) of `a` lies in that of `b`.
//
// # Safety
// `a` and `b` must be live handles and `out` valid.
enum NlStatus nl_space_leq(const struct NlMatrix *a,
                           const struct NlMatrix *b,
                           enum NlSide side,
                           bool *out);

// Canonical representative of the submodule of `M_{rows×cols}` spanned by a
// generator document.
//
// # Safety
// `json` must be a NUL-terminated string and `out` valid.
enum NlStatus nl_phi(const char *json, size_t rows, size_t cols, enum NlSide side, char **out);

// Tuple, principality and generator of a submodule of a nest module.
//
// # Safety
// `json` and `shape` must be NUL-terminated strings and `out` valid.
enum NlStatus nl_nest_phi(const char *json, const char *shape, enum NlSide side, char **out);

// Descriptor, tuple and generator of the subbimodule spanned by a document.
//
// # Safety
// `json` and `shape` must be NUL-terminated strings and `out` valid.
enum NlStatus nl_classify_bimodule(const char *json, const char *shape, char **out);

// Number of submodules of the given kind (`left`, `right` or `bimodule`)
// over a prime field.
//
// # Safety
// `ring`, `shape` and `kind` must be NUL-terminated strings and `out` valid.
enum NlStatus nl_enumerate_count(const char *ring,
                                 const char *shape,
                                 const char *kind,
                                 size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NESTLAT_H */
