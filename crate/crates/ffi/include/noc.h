#ifndef NOC_H
#define NOC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Verdict of one verification check.
typedef enum NocCheckStatus {
  NOC_CHECK_STATUS_PASS = 0,
  NOC_CHECK_STATUS_FAIL = 1,
  NOC_CHECK_STATUS_REPORTED_CONSTANT = 2,
} NocCheckStatus;

// Result codes of every fallible call.
typedef enum NocStatus {
  NOC_STATUS_OK = 0,
  NOC_STATUS_NULL_POINTER = 1,
  NOC_STATUS_INVALID_UTF8 = 2,
  NOC_STATUS_PARSE_ERROR = 3,
  NOC_STATUS_INVALID_INPUT = 4,
  NOC_STATUS_UNKNOWN_ORBIT = 5,
  NOC_STATUS_NOT_UNIQUE = 6,
  NOC_STATUS_CHECK_FAILED = 7,
  NOC_STATUS_INTERNAL = 8,
} NocStatus;

// A net of conics with rational coefficients.
typedef struct NocNet NocNet;

// A polynomial in the Chern generators `u1..u3, v1..v3`.
typedef struct NocPoly NocPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failing call on this thread, or null. The pointer is
// valid until the next failing call on the same thread.
const char *noc_last_error(void);

// Frees a string returned by this library. Null is ignored.
//
// # Safety
// `s` is null or came from this library and was not freed before.
void noc_string_free(char *s);

// Class of an orbit closure by name (`C`, `D*`, `(1^4)`, ...); `A_mu` and
// `A_inf` give the codimension-one classes.
//
// # Safety
// `name` is a NUL-terminated string; `out` is writable.
enum NocStatus noc_class_of(const char *name, struct NocPoly **out);

// # Safety
// `p` is null or a handle from this library not freed before.
void noc_poly_free(struct NocPoly *p);

// Canonical string, with the `v1 - 2*u1` factors pulled out.
//
// # Safety
// `p` is a live handle; `out` is writable.
enum NocStatus noc_poly_to_string(const struct NocPoly *p, char **out);

// Degree of the projectivized subvariety with class `p`, as a fraction.
//
// # Safety
// `p` is a live handle; `num` and `den` are writable.
enum NocStatus noc_poly_degree(const struct NocPoly *p, int64_t *num, int64_t *den);

// Parses three quadrics such as `"y^2 + 2xz"`, `"2yz"`, `"-x^2 + z^2"`.
//
// # Safety
// The three strings are NUL-terminated; `out` is writable.
enum NocStatus noc_net_parse(const char *q1, const char *q2, const char *q3, struct NocNet **out);

// # Safety
// `n` is null or a handle from this library not freed before.
void noc_net_free(struct NocNet *n);

// `J6`, `J12` and the stability verdict of a net, as strings.
//
// # Safety
// `n` is a live handle; the three out-pointers are writable.
enum NocStatus noc_net_invariants(const struct NocNet *n, char **j6, char **j12, char **verdict);

// Schur expansion of the Thom polynomial of a Σ⁰ orbit for `p` target
// roots.
//
// # Safety
// `orbit` is NUL-terminated; `out` is writable.
enum NocStatus noc_thom_schur(const char *orbit, uint32_t p, char **out);

// Runs verification check `id` (1..=15) on the built-in dataset.
//
// # Safety
// `status` is writable; `detail` is null or writable.
enum NocStatus noc_verify_check(uint32_t id, enum NocCheckStatus *status, char **detail);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NOC_H */
