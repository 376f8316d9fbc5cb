/* qcontract.h — C API for the qcontract library.
 *
 * Opaque handles wrap the C++ core. Every fallible call returns a qc_status;
 * on failure qc_last_error() describes what went wrong (thread-local).
 * Strings returned through char** are heap-allocated and must be released
 * with qc_string_free(); handles with the matching *_free().
 *
 * Monotone functions are named by string: "am", "gm", "hm", "lm",
 * "power:<k>" with k in [0, 1].
 */

#ifndef QCONTRACT_H
#define QCONTRACT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qc_status {
    QC_OK = 0,
    QC_ERR_PARSE = 1,        /* malformed input: JSON, names, files */
    QC_ERR_PRECONDITION = 2, /* dimension/rank/support/band violations */
    QC_ERR_NUMERIC = 3       /* solver failures, residuals out of range */
} qc_status;

typedef struct qc_matrix qc_matrix;
typedef struct qc_channel qc_channel;
typedef struct qc_map qc_map; /* general linear map (not necessarily CP) */

const char* qc_version(void);
const char* qc_last_error(void);
void qc_string_free(char* s);

/* Process-global tolerance table; set before computing. Keys: herm, psd,
 * recon, kraus_trunc, rank, tp, trace_one, support, gs_tol, gs_floor,
 * imag_residual, lambda1, eta_gap, eta_range, fix, degeneracy. */
qc_status qc_set_tolerance(const char* key, double value);

/* ---- matrices ---------------------------------------------------------- */

/* re/im are row-major length rows*cols; im may be NULL. */
qc_status qc_matrix_create(size_t rows, size_t cols, const double* re, const double* im, qc_matrix** out);
qc_status qc_matrix_from_json(const char* text, qc_matrix** out);
qc_status qc_matrix_from_json_file(const char* path, qc_matrix** out);
qc_status qc_matrix_to_json(const qc_matrix* m, char** out_text);
size_t qc_matrix_rows(const qc_matrix* m);
size_t qc_matrix_cols(const qc_matrix* m);
qc_status qc_matrix_get(const qc_matrix* m, size_t row, size_t col, double* re, double* im);
void qc_matrix_free(qc_matrix* m);

/* ---- dense linear algebra --------------------------------------------- */

qc_status qc_spectral_eigenvalues(const qc_matrix* hermitian, double* out, size_t len);
qc_status qc_partial_trace(const qc_matrix* m, int keep_a, size_t dim_a, size_t dim_b, qc_matrix** out);
qc_status qc_tensor(const qc_matrix* a, const qc_matrix* b, qc_matrix** out);

/* ---- channels ---------------------------------------------------------- */

qc_status qc_channel_from_json(const char* text, qc_channel** out);
qc_status qc_channel_from_json_file(const char* path, qc_channel** out);
qc_status qc_channel_from_choi(const qc_matrix* choi, size_t dim_in, size_t dim_out, qc_channel** out);
qc_status qc_channel_to_json(const qc_channel* e, char** out_text);
size_t qc_channel_dim_in(const qc_channel* e);
size_t qc_channel_dim_out(const qc_channel* e);
qc_status qc_channel_apply(const qc_channel* e, const qc_matrix* x, qc_matrix** out);
qc_status qc_channel_fixed_point(const qc_channel* e, qc_matrix** out);
void qc_channel_free(qc_channel* e);

/* Stock constructions used by tests and examples. */
qc_status qc_channel_depolarizing(double lambda, size_t d, qc_channel** out);
qc_status qc_channel_identity(size_t d, qc_channel** out);
qc_status qc_channel_replacer(const qc_matrix* tau, size_t dim_in, qc_channel** out);

/* ---- monotone functions and J operators -------------------------------- */

qc_status qc_monotone_eval(const char* f, double x, double* out);
qc_status qc_perspective(const char* f, double x, double y, double* out);
/* flags bits: 1 normalized, 2 symmetry_inducing, 4 support_restricting,
 * 8 multiplicative */
qc_status qc_monotone_flags(const char* f, unsigned* out);

/* J^p_{f,sigma}(x); p in {-1, -0.5, 0.5, 1}. */
qc_status qc_apply_j(const char* f, double p, const qc_matrix* sigma, const qc_matrix* x, qc_matrix** out);
qc_status qc_inner_product(const char* f, double p, const qc_matrix* sigma, const qc_matrix* x, const qc_matrix* y,
                           double* out_re, double* out_im);
qc_status qc_expectation(const qc_matrix* sigma, const qc_matrix* x, double* out_re, double* out_im);
qc_status qc_variance(const char* f, const qc_matrix* sigma, const qc_matrix* x, double* out);

/* ---- recovery and reversal maps ---------------------------------------- */

qc_status qc_map_petz(const qc_channel* e, const qc_matrix* sigma, qc_map** out);
qc_status qc_map_heisenberg_reversal(const char* f, const qc_channel* e, const qc_matrix* sigma, qc_map** out);
qc_status qc_map_schrodinger_reversal(const char* f, const qc_channel* e, const qc_matrix* sigma, qc_map** out);
qc_status qc_map_apply(const qc_map* m, const qc_matrix* x, qc_matrix** out);
qc_status qc_map_choi(const qc_map* m, qc_matrix** out);
int qc_map_hermitian_preserving(const qc_map* m);
void qc_map_free(qc_map* m);

qc_status qc_canonical_purification(const qc_matrix* rho, qc_matrix** out);
qc_status qc_extract_channel(const qc_matrix* rho_ab, size_t dim_a, size_t dim_b, qc_channel** out);
qc_status qc_f_coupling(const char* f, const qc_channel* e, const qc_matrix* sigma, qc_matrix** out);
qc_status qc_pinching(const qc_matrix* sigma, const qc_matrix* x, qc_matrix** out);

/* ---- divergences -------------------------------------------------------- */

qc_status qc_trace_distance(const qc_matrix* rho, const qc_matrix* sigma, double* out);
/* is_infinite is set when the support condition fails; value is +inf then. */
qc_status qc_relative_entropy(const qc_matrix* rho, const qc_matrix* sigma, double* out, int* is_infinite);
qc_status qc_sandwiched_renyi(double alpha, const qc_matrix* rho, const qc_matrix* sigma, double* out,
                              int* is_infinite);
qc_status qc_d_max(const qc_matrix* rho, const qc_matrix* sigma, double* out, int* is_infinite);
qc_status qc_chi2(const char* f, const qc_matrix* rho, const qc_matrix* sigma, double* out, int* is_infinite);

/* ---- contraction pipeline ----------------------------------------------- */

/* JSON report: {"f", "eta", "lambda1", "spectrum", "onb_condition",
 * "imag_residual"}. */
qc_status qc_contraction_report(const char* f, const qc_channel* e, const qc_matrix* sigma, char** out_json);
qc_status qc_dpi_saturated(const char* f, const qc_channel* e, const qc_matrix* rho, const qc_matrix* sigma,
                           double tol, int* saturated, double* residual);
/* metric: "trace_distance" | "relative_entropy". n_steps = -1 when infinite. */
qc_status qc_mixing_bound(const char* f, const qc_channel* e, const qc_matrix* pi, double delta, const char* metric,
                          double* eta, long long* n_steps);

/* ---- correlation coefficients ------------------------------------------- */

/* JSON report: {"f", "mu", "lambda1", "schmidt_spectrum"[, "gm_spectrum"]}. */
qc_status qc_correlation_report_f(const char* f, const qc_matrix* rho_ab, size_t dim_a, size_t dim_b,
                                  int with_gm_spectrum, char** out_json);
qc_status qc_correlation_report_k(double k, const qc_matrix* rho_ab, size_t dim_a, size_t dim_b, char** out_json);
qc_status qc_classical_mu(const qc_matrix* joint_table, double* out);
/* Same, from a table document {"p": [[...]]}. */
qc_status qc_classical_mu_from_table_json(const char* text, double* out);
qc_status qc_gm_schmidt_spectrum(const qc_matrix* rho_ab, size_t dim_a, size_t dim_b, double* out, size_t len,
                                 size_t* written);
qc_status qc_tensorization_check(double k, const qc_matrix* rho_ab, size_t dim_a, size_t dim_b,
                                 const qc_matrix* sigma_ab, size_t dim_a2, size_t dim_b2, double* lhs, double* rhs,
                                 int* pass);
qc_status qc_verify_decomposition(const qc_matrix* rho_ab, size_t dim_a, size_t dim_b, const qc_matrix* proj_a0,
                                  const qc_matrix* proj_b0, double p, int* ok, double* block_residual);
qc_status qc_correspondence_check(const char* f, const qc_channel* e, const qc_matrix* sigma, double* sqrt_eta,
                                  double* mu_on_coupling, int* pass);

/* ---- property suites ----------------------------------------------------- */

/* JSON summary: {"suite", "seed", "trials", "checks", "failures", "passed",
 * "counterexample"}. Returns QC_OK even when the suite found violations;
 * inspect "passed". Unknown suite names give QC_ERR_PARSE. */
qc_status qc_verify_suite(const char* suite, uint64_t seed, int trials, char** out_json);
/* Comma-separated list of available suites. */
qc_status qc_verify_suite_names(char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* QCONTRACT_H */
