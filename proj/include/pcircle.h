/* pcircle: trigonometry, series, and geometry on the curves |x|^p + |y|^p = 1.
 *
 * C API for the shared library. All functions return pc_status; outputs go
 * through pointers. On failure the thread-local message from pc_last_error()
 * describes what went wrong. Strings returned through char** are owned by the
 * caller and must be released with pc_string_free(). */

#ifndef PCIRCLE_H
#define PCIRCLE_H

#include <stddef.h>

#if defined(__GNUC__)
#define PCIRCLE_API __attribute__((visibility("default")))
#else
#define PCIRCLE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; nonzero values double as CLI exit codes. */
typedef enum pc_status {
    PC_OK = 0,
    PC_ERR_ARGUMENT = 2, /* malformed or out-of-contract arguments */
    PC_ERR_DOMAIN = 3,   /* mathematically invalid input */
    PC_ERR_ACCURACY = 4, /* quadrature/solver did not reach tolerance */
    PC_ERR_POLE = 5      /* vanishing trig denominator */
} pc_status;

PCIRCLE_API const char* pc_version(void);

/* Message for the most recent failure on this thread; empty string if none. */
PCIRCLE_API const char* pc_last_error(void);

PCIRCLE_API void pc_string_free(char* s);

/* Tanh-sinh quadrature controls. target_rel_error must lie in [1e-14, 1e-4]
 * and max_levels in [3, 12]. Functions taking a pc_quad_config pointer accept
 * NULL for the defaults below. */
typedef struct pc_quad_config {
    double target_rel_error;
    int max_levels;
} pc_quad_config;

PCIRCLE_API pc_quad_config pc_quad_config_default(void); /* {1e-12, 10} */

/* ---- pointwise trig evaluation -------------------------------------- */

typedef enum pc_function {
    PC_FN_SIN = 0,
    PC_FN_COS,
    PC_FN_TAN,
    PC_FN_SEC,
    PC_FN_CSC,
    PC_FN_COT,
    PC_FN_ARCSIN, /* argument is the abscissa x in [0,1] */
    PC_FN_ARCCOS
} pc_function;

PCIRCLE_API pc_status pc_eval(pc_function fn, double p, double t, const pc_quad_config* cfg,
                              double* out);

/* Point whose circular sector from (1,0) has the given area. */
PCIRCLE_API pc_status pc_areal_point(double a, double p, const pc_quad_config* cfg, double* x,
                                     double* y);

/* Area of the sector between (1,0) and the arc point with abscissa x. */
PCIRCLE_API pc_status pc_sector_area(double x, double p, const pc_quad_config* cfg, double* out);

/* Endpoint of the fixed-step Runge-Kutta trajectory of the defining system
 * x' = -y^{p-1}, y' = x^{p-1}, x(0)=1, y(0)=0; a cross-check oracle for the
 * quadrature path. t_end must stay within the first-quadrant arc. */
PCIRCLE_API pc_status pc_civp_endpoint(double p, double t_end, double step, double* x_end,
                                       double* y_end);

/* ---- exact Taylor series (integer p >= 2) ---------------------------- */

typedef struct pc_series pc_series; /* opaque */

PCIRCLE_API pc_status pc_series_arcsin(int p, int max_order, pc_series** out);
PCIRCLE_API pc_status pc_series_sin(int p, int max_order, pc_series** out);
/* Compositional inverse; requires f_0 = 0 and f_1 != 0. */
PCIRCLE_API pc_status pc_series_invert(const pc_series* f, pc_series** out);
PCIRCLE_API void pc_series_free(pc_series* s);

PCIRCLE_API int pc_series_order(const pc_series* s);
/* Coefficient of z^k/k! as an exact "numerator/denominator" string. */
PCIRCLE_API pc_status pc_series_coeff(const pc_series* s, int k, char** fraction);
/* Plain Taylor coefficient of z^k. */
PCIRCLE_API pc_status pc_series_ordinary_coeff(const pc_series* s, int k, char** fraction);
/* {"order": N, "coefficients": ["num/den", ...]} */
PCIRCLE_API pc_status pc_series_json(const pc_series* s, char** json);

/* First-order coefficient of the sine series (equals 1 for every p >= 2). */
PCIRCLE_API pc_status pc_sinc_limit(int p, char** fraction);

/* l-th derivative of the inverse sine at 0, exact. Also reported: the
 * equivalent gamma-ratio form and a shifted gamma variant that a telescoping
 * slip produces (NaN when undefined); the two disagree from (n,l) = (2,3). */
PCIRCLE_API pc_status pc_arcsin_derivative(int n, int l, char** exact_fraction,
                                           double* gamma_form, double* gamma_form_shifted);

/* Simultaneous-vanishing report for the series pair, as JSON. */
PCIRCLE_API pc_status pc_rigidity_report(int p, int depth, char** json);

/* ---- generalized pi -------------------------------------------------- */

typedef enum pc_pi_method {
    PC_PI_GAMMA = 0,
    PC_PI_DEFINING_INTEGRAL,
    PC_PI_AREA_INTEGRAL,
    PC_PI_SERIES,
    PC_PI_MONTE_CARLO
} pc_pi_method;

typedef struct pc_estimate {
    double value;
    double error; /* quadrature estimate, last series term, or MC standard error */
    pc_pi_method method;
    unsigned long long count; /* evaluations, terms, or samples */
    int has_seed;
    unsigned long long seed;
} pc_estimate;

PCIRCLE_API pc_status pc_pi_gamma(double p, double* out);
PCIRCLE_API pc_status pc_pi_defining_integral(double p, const pc_quad_config* cfg,
                                              pc_estimate* out);
PCIRCLE_API pc_status pc_pi_area_integral(double p, const pc_quad_config* cfg, pc_estimate* out);
PCIRCLE_API pc_status pc_pi_series(int p, unsigned long long terms, pc_estimate* out);
PCIRCLE_API pc_status pc_pi_monte_carlo(double p, unsigned long long n, unsigned long long seed,
                                        unsigned workers, pc_estimate* out);

/* Closed-form values over an ascending grid; flags any adjacent non-increase
 * and reports the gap to the limit 4 at the grid maximum. */
PCIRCLE_API pc_status pc_pi_monotonicity_scan(const double* grid, size_t count, double* values,
                                              int* strictly_increasing, double* gap_to_limit);

/* ---- geometry --------------------------------------------------------- */

PCIRCLE_API pc_status pc_area(double p, const pc_quad_config* cfg, double* out);
PCIRCLE_API pc_status pc_perimeter(double p, const pc_quad_config* cfg, double* out);
PCIRCLE_API pc_status pc_curvature(double x, double y, double p, double* out);
PCIRCLE_API pc_status pc_curvature_diagonal(double p, double* out);

typedef enum pc_objective { PC_OPT_AREA = 0, PC_OPT_PERIMETER, PC_OPT_CURVATURE } pc_objective;

typedef struct pc_optimal_result {
    double p_star;
    double residual;
    double bracket_lo;
    double bracket_hi;
    int iterations;
    char note[160];
} pc_optimal_result;

/* p at which the p-circle sits halfway between circle and square under the
 * chosen measure. tol >= 1e-10. */
PCIRCLE_API pc_status pc_optimal_p(pc_objective objective, double tol, pc_optimal_result* out);

/* Rational point ((u^2-v^2)/h, 2uv/h), h = u^2+v^2, in lowest terms. */
PCIRCLE_API pc_status pc_pythagorean_point(unsigned long u, unsigned long v, char** x_fraction,
                                           char** y_fraction);

/* Classification of rational points on the p-circle (integer p >= 1), JSON. */
PCIRCLE_API pc_status pc_rational_points(int p, char** json);

/* ---- sampling (plot-ready grids) -------------------------------------- */

/* count >= 2 points on the first-quadrant arc, evenly spaced in sector area;
 * includes (1,0) and (0,1). */
PCIRCLE_API pc_status pc_sample_circle(double p, size_t count, const pc_quad_config* cfg,
                                       double* xs, double* ys);

/* count >= 2 samples of sin_p or cos_p over one full period [0, 2*pi_p]. */
PCIRCLE_API pc_status pc_sample_wave(pc_function fn, double p, size_t count,
                                     const pc_quad_config* cfg, double* ts, double* values);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PCIRCLE_H */
