#ifndef LANDAU_WEHRL_H
#define LANDAU_WEHRL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

enum LwStatus
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : int32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  LW_STATUS_OK = 0,
  LW_STATUS_NULL_POINTER = 1,
  LW_STATUS_DOMAIN = 2,
  LW_STATUS_NUMERICAL = 3,
  LW_STATUS_OVERFLOW = 4,
  LW_STATUS_PANIC = 5,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum LwStatus LwStatus;
#else
typedef int32_t LwStatus;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

// Opaque Husimi density.
typedef struct LwDensity LwDensity;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failure on this thread, or null. Valid until the
// next failing call on the same thread.
const char *lw_last_error_message(void);

// Creates the pure-state density `Q_j^{(m)}`; release with [`lw_density_free`].
LwStatus lw_density_pure(uint32_t m, uint32_t j, struct LwDensity **out);

// Creates the thermal density `Q_beta^{(m)}`; release with [`lw_density_free`].
LwStatus lw_density_thermal(uint32_t m, double beta, struct LwDensity **out);

// # Safety
// `d` must come from a constructor above and not have been freed. Null is
// accepted and ignored.
void lw_density_free(struct LwDensity *d);

// # Safety
// `d` must be a live handle and `out` writable.
LwStatus lw_density_eval(const struct LwDensity *d, double lambda, double *out);

// Wehrl entropy of the density by quadrature.
//
// # Safety
// `d` must be a live handle and `out` writable.
LwStatus lw_density_wehrl(const struct LwDensity *d, double *out);

// Number of zeros of the density on `(0, inf)`.
//
// # Safety
// `d` must be a live handle and `out` writable.
LwStatus lw_density_zero_count(const struct LwDensity *d, size_t *out);

// Copies up to `len` zeros into `buf`.
//
// # Safety
// `d` must be a live handle and `buf` valid for `len` writes.
LwStatus lw_density_zeros(const struct LwDensity *d, double *buf, size_t len);

// # Safety
// `out` must be writable.
LwStatus lw_husimi_pure(uint32_t m, uint32_t j, double lambda, double *out);

// # Safety
// `out` must be writable.
LwStatus lw_husimi_thermal(uint32_t m, double beta, double lambda, double *out);

// Closed-form thermal Wehrl entropy `1 - ln(1-e^{-beta}) + m(beta + e^{-beta} - e^{-2beta})`.
//
// # Safety
// `out` must be writable.
LwStatus lw_wehrl_thermal_closed_form(uint32_t m, double beta, double *out);

// # Safety
// `out` must be writable.
LwStatus lw_von_neumann_thermal(double beta, double *out);

// Minimizer of the closed-form thermal entropy over temperature.
//
// # Safety
// All out-pointers must be writable.
LwStatus lw_min_entropy(uint32_t m, double *tau, double *beta_min, double *s_min);

// Thermal large-deviation rate function and its maximizer.
//
// # Safety
// All out-pointers must be writable.
LwStatus lw_rate_thermal(double beta, double xi, double *u_star, double *value);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LANDAU_WEHRL_H */
