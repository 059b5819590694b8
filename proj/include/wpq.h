/*
 * wpq -- quantum invariants and hyperbolic geometry of the manifolds W(p,q)
 * obtained by p/q surgery on one component of the Whitehead link.
 *
 * C ABI of the shared library. All computations run through opaque handles;
 * every call returns a wpq_status and the last failure message is available
 * through wpq_last_error() (thread local).
 */
#ifndef WPQ_H
#define WPQ_H

#include <stdint.h>

#if defined(_WIN32)
#define WPQ_API __declspec(dllexport)
#else
#define WPQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wpq_status {
    WPQ_OK = 0,
    WPQ_ERROR = 1,           /* internal/unexpected */
    WPQ_DOMAIN_ERROR = 2,    /* invalid input or branch failure */
    WPQ_ACCURACY_ERROR = 3,  /* requested accuracy not achieved */
    WPQ_INFEASIBLE = 4       /* computation over budget */
} wpq_status;

typedef enum wpq_precision {
    WPQ_PREC_AUTO = 0,     /* double, escalating to extended on cancellation */
    WPQ_PREC_DOUBLE = 1,
    WPQ_PREC_EXTENDED = 2  /* ~166-bit binary significand */
} wpq_precision;

WPQ_API const char* wpq_version(void);
WPQ_API const char* wpq_last_error(void);

/* ------------------------------------------------------------------ */
/* relative Reshetikhin-Turaev invariants                              */
/* ------------------------------------------------------------------ */

typedef struct wpq_invariants wpq_invariants;

typedef enum wpq_method {
    WPQ_METHOD_REDUCED = 0,  /* Gauss-sum collapsed double sum, O(|q| N^2) per color */
    WPQ_METHOD_BRUTE = 1,    /* direct (r-1)^l chain sum (guarded at 1e8 terms) */
    WPQ_METHOD_BOTH = 2      /* both; residuals become available */
} wpq_method;

/* color = 0 computes all colors 1..N */
WPQ_API wpq_status wpq_invariants_compute(int64_t p, int64_t q, int32_t N, int32_t color,
                                          wpq_method method, wpq_precision prec,
                                          wpq_invariants** out);
WPQ_API int32_t wpq_invariants_rows(const wpq_invariants* h);
/* any output pointer may be NULL; growth = (2 pi / (N + 1/2)) log |J_m| */
WPQ_API wpq_status wpq_invariants_row(const wpq_invariants* h, int32_t idx, int32_t* m,
                                      double* jbar_re, double* jbar_im, double* j_re,
                                      double* j_im, double* growth);
/* relative gap between the two methods; -1.0 unless method was BOTH */
WPQ_API double wpq_invariants_residual(const wpq_invariants* h, int32_t idx);
/* 1 if the extended-precision path ran */
WPQ_API int32_t wpq_invariants_extended(const wpq_invariants* h);
WPQ_API void wpq_invariants_free(wpq_invariants* h);

/* ------------------------------------------------------------------ */
/* Turaev-Viro color sum                                               */
/* ------------------------------------------------------------------ */

typedef struct wpq_tv wpq_tv;

WPQ_API wpq_status wpq_tv_compute(int64_t p, int64_t q, int32_t N, wpq_precision prec,
                                  wpq_tv** out);
WPQ_API int32_t wpq_tv_colors(const wpq_tv* h);
WPQ_API wpq_status wpq_tv_color(const wpq_tv* h, int32_t idx, double* jbar_sq);
WPQ_API wpq_status wpq_tv_totals(const wpq_tv* h, double* mu_r_sq, double* total,
                                 double* growth /* (pi/(N+1/2)) log TV */);
WPQ_API void wpq_tv_free(wpq_tv* h);

/* ------------------------------------------------------------------ */
/* hyperbolic geometry                                                 */
/* ------------------------------------------------------------------ */

typedef struct wpq_geometry wpq_geometry;

WPQ_API wpq_status wpq_geometry_solve(int64_t p, int64_t q, wpq_geometry** out);
/* field names: z0, u, v, gamma, z1, z2 */
WPQ_API wpq_status wpq_geometry_field(const wpq_geometry* h, const char* name, double* re,
                                      double* im);
WPQ_API wpq_status wpq_geometry_vol_cs(const wpq_geometry* h, double* vol,
                                       double* cs /* mod pi^2 in [0, pi^2) */);
WPQ_API void wpq_geometry_free(wpq_geometry* h);

/* slope-level queries that need no solve */
WPQ_API wpq_status wpq_vol_lower_bound(int64_t p, int64_t q, double* bound,
                                       int32_t* vacuous);
WPQ_API wpq_status wpq_in_set_S(int64_t p, int64_t q, int32_t* member);
WPQ_API double wpq_whitehead_volume(void);

/* ------------------------------------------------------------------ */
/* asymptotic expansion data                                           */
/* ------------------------------------------------------------------ */

typedef struct wpq_asymptotics wpq_asymptotics;

WPQ_API wpq_status wpq_asymptotics_solve(int64_t p, int64_t q, wpq_asymptotics** out);
/* field names: theta1, theta2, z1, z2, zeta, omega, H, V11, V12, V22 */
WPQ_API wpq_status wpq_asymptotics_field(const wpq_asymptotics* h, const char* name,
                                         double* re, double* im);
/* norm-1 phase C_N(p,q) of the leading-order expansion at level r = 2N+1 */
WPQ_API wpq_status wpq_asymptotics_cn(const wpq_asymptotics* h, int32_t N, double* re,
                                      double* im);
/* leading-order estimate of J_N */
WPQ_API wpq_status wpq_asymptotics_J(const wpq_asymptotics* h, int32_t N, double* re,
                                     double* im);
/* |sin^2(pi theta1/q - J pi)/(q (1-z2^2) H)|, the N-independent coefficient
 * (ratio / sqrt(Im(1/(1-z2)))), and the full leading estimate */
WPQ_API wpq_status wpq_asymptotics_tv_ratio(const wpq_asymptotics* h, double* ratio);
WPQ_API wpq_status wpq_asymptotics_tv_coeff(const wpq_asymptotics* h, double* coeff);
WPQ_API wpq_status wpq_asymptotics_tv(const wpq_asymptotics* h, int32_t N, double* value);
/* one point of the color-deformed critical family; outside_regime is set
 * when neither p nor q reaches 1000 */
WPQ_API wpq_status wpq_asymptotics_zeta_x(const wpq_asymptotics* h, double x, double* re,
                                          double* im, int32_t* outside_regime);
/* (Re zeta)''(0) = -4 pi Im(1/(1 - z2)) */
WPQ_API wpq_status wpq_asymptotics_zeta_xx0(const wpq_asymptotics* h, double* value);
WPQ_API void wpq_asymptotics_free(wpq_asymptotics* h);

/* ------------------------------------------------------------------ */
/* verification suites                                                 */
/* ------------------------------------------------------------------ */

typedef struct wpq_report wpq_report;

/* suite: oracle | identities | regions | hessian | volume | convergence | all */
WPQ_API wpq_status wpq_verify_run(const char* suite, uint64_t seed, wpq_report** out);
WPQ_API int32_t wpq_report_count(const wpq_report* h);
/* name/detail pointers stay valid until the report is freed */
WPQ_API wpq_status wpq_report_line(const wpq_report* h, int32_t idx, const char** name,
                                   int32_t* passed, double* measured, double* tolerance,
                                   const char** detail);
WPQ_API void wpq_report_free(wpq_report* h);

#ifdef __cplusplus
}
#endif

#endif /* WPQ_H */
