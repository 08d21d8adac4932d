#ifndef PCAPM_H
#define PCAPM_H

/* C interface to the p-capacitary monotonicity library.
 *
 * All entry points return pcapm_status; PCAPM_OK means the outputs were
 * written. On failure pcapm_last_error() holds a thread-local message until
 * the next failing call on the same thread. Handles are created and released
 * by the matching _free function; strings returned through char** are owned
 * by the caller and released with pcapm_string_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pcapm_status {
    PCAPM_OK = 0,
    PCAPM_ERR_INVALID_ARG = 1,
    PCAPM_ERR_DOMAIN = 2,
    PCAPM_ERR_GUARD = 3,
    PCAPM_ERR_QUADRATURE = 4,
    PCAPM_ERR_NONCONVERGENT = 5,
    PCAPM_ERR_BRACKET = 6,
    PCAPM_ERR_INADMISSIBLE = 7,
    PCAPM_ERR_NOT_MINIMAL = 8,
    PCAPM_ERR_POSITIVITY = 9,
    PCAPM_ERR_CONFIG = 10,
    PCAPM_ERR_IO = 11,
    PCAPM_ERR_NAN = 12,
    PCAPM_ERR_INTERNAL = 13
} pcapm_status;

/* Rotationally symmetric metric w(r)^4 delta on {r >= r0}. */
typedef struct pcapm_metric pcapm_metric;

/* Model background of mass m, boundary radius r0, ratio k = m/(2 r0). */
typedef struct pcapm_model pcapm_model;

/* Solved p-capacitary potential on a metric. */
typedef struct pcapm_solution pcapm_solution;

const char* pcapm_version(void);
const char* pcapm_last_error(void);
void pcapm_string_free(char* s);

/* -- metrics ----------------------------------------------------------- */

pcapm_status pcapm_metric_schwarzschild(double m, double r0, pcapm_metric** out);
pcapm_status pcapm_metric_euclidean(double r0, pcapm_metric** out);
/* w = 1 + A/r - b e^{-r}/r with A >= 0, 0 <= b <= A e^{r0}. */
pcapm_status pcapm_metric_perturbed(double A, double b, double r0, pcapm_metric** out);
/* w = 1 + c r^{-s} with c > 0, 0 < s < 1. */
pcapm_status pcapm_metric_power(double c, double s, double r0, pcapm_metric** out);
void pcapm_metric_free(pcapm_metric* metric);

pcapm_status pcapm_metric_w(const pcapm_metric* metric, double r, double* out);
pcapm_status pcapm_metric_scalar_curvature(const pcapm_metric* metric, double r,
                                           double* out);
pcapm_status pcapm_metric_adm_mass(const pcapm_metric* metric, double* out);

/* -- capacitary potential ---------------------------------------------- */

pcapm_status pcapm_solve(const pcapm_metric* metric, double p, pcapm_solution** out);
void pcapm_solution_free(pcapm_solution* sol);

pcapm_status pcapm_solution_cp(const pcapm_solution* sol, double* out);
pcapm_status pcapm_solution_cap(const pcapm_solution* sol, double* out);
pcapm_status pcapm_solution_u(const pcapm_solution* sol, double r, double* out);
pcapm_status pcapm_solution_u_prime(const pcapm_solution* sol, double r, double* out);
/* Radius of the level set {u = level}, level in [0, 1). */
pcapm_status pcapm_solution_level_radius(const pcapm_solution* sol, double level,
                                         double* out);

/* -- model backgrounds -------------------------------------------------- */

pcapm_status pcapm_model_from_mass(double p, double m, double r0, pcapm_model** out);
pcapm_status pcapm_model_from_capacity(double p, double cp, double k, pcapm_model** out);
void pcapm_model_free(pcapm_model* model);

/* Any output pointer may be NULL to skip that value. */
pcapm_status pcapm_model_params(const pcapm_model* model, double* k, double* m,
                                double* r0, double* cp);
pcapm_status pcapm_model_level(const pcapm_model* model, double t, double* out);
pcapm_status pcapm_model_eta(const pcapm_model* model, double t, double* out);
pcapm_status pcapm_model_xi(const pcapm_model* model, double t, double* out);

/* -- monotone quantity --------------------------------------------------- */

/* Coefficient triple (alpha, beta, gamma) at level parameter t >= r0. */
pcapm_status pcapm_coefficients(const pcapm_model* model, double C1, double C2,
                                double C3, double t, double* alpha, double* beta,
                                double* gamma);
/* 1 when alpha stays nonnegative on [r0, inf) for (C1, C2), else 0. */
pcapm_status pcapm_alpha_nonneg(const pcapm_model* model, double C1, double C2,
                                int* out);
/* F(t) of the solved potential against the model background; the model must
 * carry the solution's capacity constant and (C1, C2) must be admissible. */
pcapm_status pcapm_monotone_F(const pcapm_solution* sol, const pcapm_model* model,
                              double C1, double C2, double C3, double t, double* out);

/* -- batch entry points -------------------------------------------------- */

/* Runs the scan described by a scenario config file, writing the CSV and the
 * JSON report under out_dir (NULL means the current directory). *human gets
 * the printable summary; *pass is 1 when every verdict in the run holds. */
pcapm_status pcapm_run_scan_file(const char* config_path, const char* out_dir,
                                 int threads, double tol_scale,
                                 unsigned long long seed, char** human, int* pass);

/* Boundary inequality battery for a scenario config file. */
pcapm_status pcapm_run_inequalities_file(const char* config_path, const char* out_dir,
                                         int threads, double tol_scale,
                                         unsigned long long seed, char** human,
                                         int* pass);

/* Full acceptance and invariant suite. out_dir may be NULL; when set,
 * verify.json lands there. */
pcapm_status pcapm_verify(unsigned long long seed, double tol_scale, int threads,
                          const char* out_dir, char** text, int* pass);

/* Closed-form background table on a log grid of n radii in
 * [r0, t_max_factor * r0], as CSV text with a commented preamble. */
pcapm_status pcapm_schwarzschild_table(double p, double m, double r0, int n,
                                       double t_max_factor, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* PCAPM_H */
