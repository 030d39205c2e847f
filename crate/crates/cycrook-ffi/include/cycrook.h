/* C ABI for the cycrook exact rook-polynomial library. */

#ifndef CYCROOK_H
#define CYCROOK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every FFI entry point.
typedef enum CycrookStatus {
  CYCROOK_STATUS_OK = 0,
  CYCROOK_STATUS_NULL_ARGUMENT = 1,
  CYCROOK_STATUS_PARSE_ERROR = 2,
  CYCROOK_STATUS_CONTRACT_VIOLATION = 3,
  CYCROOK_STATUS_SIZE_LIMIT = 4,
  CYCROOK_STATUS_INTERNAL_ERROR = 5,
} CycrookStatus;

// Evaluation routes selectable over the ABI.
typedef enum CycrookMethod {
  CYCROOK_METHOD_ORACLE = 0,
  CYCROOK_METHOD_EXPAND_LAST_K = 1,
  CYCROOK_METHOD_EXPAND_ROW = 2,
} CycrookMethod;

// Opaque matrix handle.
typedef struct CycrookMatrix CycrookMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Returns the message for the most recent failure on this thread, or
// NULL. The pointer is valid until the next failing call on the same
// thread; do not free it.
const char *cycrook_last_error_message(void);

// Parses `{"rows": m, "cols": n, "entries": [[...]]}` into a handle.
//
// # Safety
// `json` must be a valid NUL-terminated string and `out` a valid
// pointer; the returned handle must be released with
// [`cycrook_matrix_free`].
enum CycrookStatus cycrook_matrix_parse_json(const char *json, struct CycrookMatrix **out);

// Releases a handle returned by [`cycrook_matrix_parse_json`].
//
// # Safety
// `m` must be a handle from this library, not yet freed; NULL is a
// no-op.
void cycrook_matrix_free(struct CycrookMatrix *m);

// Releases a string returned by any function in this library.
//
// # Safety
// `s` must be a string returned by this library, not yet freed; NULL
// is a no-op.
void cycrook_string_free(char *s);

// Computes R(x;z;A) by the requested route and returns it as JSON:
// a list (ascending x power) of lists (ascending z power) of decimal
// strings. `param` carries k for ExpandLastK and the row index for
// ExpandRow; it is ignored for Oracle.
//
// # Safety
// `m` must be a live handle and `out_json` a valid pointer; the
// returned string must be freed with [`cycrook_string_free`].
enum CycrookStatus cycrook_rook_poly_json(const struct CycrookMatrix *m,
                                          enum CycrookMethod method,
                                          int32_t param,
                                          char **out_json);

// Computes per(z;A) and returns its coefficients as a JSON list of
// decimal strings, ascending z power.
//
// # Safety
// Same contract as [`cycrook_rook_poly_json`].
enum CycrookStatus cycrook_per_z_json(const struct CycrookMatrix *m, char **out_json);

// Renders R(x;z;A) as human-readable text, e.g. `1 + (2*z + 3)*x^1`.
//
// # Safety
// Same contract as [`cycrook_rook_poly_json`].
enum CycrookStatus cycrook_rook_poly_text(const struct CycrookMatrix *m, char **out_text);

// Evaluates per(z; ·) of a circulant spec JSON
// (`{"n":,"k":,"r":,"coeffs":[...]}`). With `z_decimal` NULL the
// result is the full polynomial (JSON list of decimal strings);
// otherwise a single decimal value at that integer z.
// `use_closed_form` nonzero selects the two-coefficient closed form
// (requires r = 0), zero selects the banded profile DP.
//
// # Safety
// `spec_json` must be valid NUL-terminated UTF-8; the returned string
// must be freed with [`cycrook_string_free`].
enum CycrookStatus cycrook_circulant_per_z(const char *spec_json,
                                           const char *z_decimal,
                                           int32_t use_closed_form,
                                           char **out);

// Renders per(z;A) as human-readable text, e.g. `z^2 + z`.
//
// # Safety
// Same contract as [`cycrook_per_z_json`].
enum CycrookStatus cycrook_per_z_text(const struct CycrookMatrix *m, char **out_text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCROOK_H */
