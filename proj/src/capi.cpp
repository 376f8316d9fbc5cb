// capi.cpp — extern "C" layer over the C++ core

#include "qcontract.h"

#include "correlation.hpp"
#include "divergences.hpp"
#include "io_json.hpp"
#include "verify.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>

using namespace qcontract;

struct qc_matrix {
    Matrix m;
};
struct qc_channel {
    ChannelRep e;
};
struct qc_map {
    LinearMapHandle h;
};

namespace {

thread_local std::string g_last_error;

qc_status status_of(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownSuite:
        return QC_ERR_PARSE;
    case ErrorKind::DimensionMismatch:
    case ErrorKind::DomainError:
    case ErrorKind::NotHermitian:
    case ErrorKind::NotPSD:
    case ErrorKind::NotCPTP:
    case ErrorKind::NotADistribution:
    case ErrorKind::RankDeficient:
    case ErrorKind::SupportViolation:
    case ErrorKind::BandViolation:
    case ErrorKind::NotFixedPoint:
    case ErrorKind::NoUniqueFixedPoint:
    case ErrorKind::InvalidProjectors:
        return QC_ERR_PRECONDITION;
    default:
        return QC_ERR_NUMERIC;
    }
}

template <typename Fn> qc_status guarded(Fn&& fn) {
    try {
        fn();
        return QC_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QC_ERR_NUMERIC;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const Matrix& ref(const qc_matrix* m) {
    if (m == nullptr) fail(ErrorKind::DomainError, "null matrix handle");
    return m->m;
}

const ChannelRep& ref(const qc_channel* e) {
    if (e == nullptr) fail(ErrorKind::DomainError, "null channel handle");
    return e->e;
}

DensityOperator density(const qc_matrix* m) { return DensityOperator(ref(m)); }

MixingMetric parse_metric(const char* metric) {
    const std::string name = metric == nullptr ? "" : metric;
    if (name == "trace_distance") return MixingMetric::TraceDistance;
    if (name == "relative_entropy") return MixingMetric::RelativeEntropy;
    fail(ErrorKind::ParseError, "unknown metric '" + name + "' (expected trace_distance|relative_entropy)");
}

} // namespace

extern "C" {

const char* qc_version(void) { return "1.0.0"; }

const char* qc_last_error(void) { return g_last_error.c_str(); }

void qc_string_free(char* s) { std::free(s); }

qc_status qc_set_tolerance(const char* key, double value) {
    return guarded([&] { tols().set(key == nullptr ? "" : key, value); });
}

qc_status qc_matrix_create(size_t rows, size_t cols, const double* re, const double* im, qc_matrix** out) {
    return guarded([&] {
        if (rows == 0 || cols == 0 || re == nullptr || out == nullptr)
            fail(ErrorKind::DomainError, "qc_matrix_create: bad arguments");
        Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                m(static_cast<Index>(i), static_cast<Index>(j)) =
                    Complex(re[i * cols + j], im == nullptr ? 0.0 : im[i * cols + j]);
        *out = new qc_matrix{std::move(m)};
    });
}

qc_status qc_matrix_from_json(const char* text, qc_matrix** out) {
    return guarded([&] {
        if (text == nullptr || out == nullptr) fail(ErrorKind::DomainError, "qc_matrix_from_json: bad arguments");
        *out = new qc_matrix{matrix_from_json_text(text)};
    });
}

qc_status qc_matrix_from_json_file(const char* path, qc_matrix** out) {
    return guarded([&] {
        if (path == nullptr || out == nullptr) fail(ErrorKind::DomainError, "qc_matrix_from_json_file: bad arguments");
        *out = new qc_matrix{matrix_from_json_text(read_file(path))};
    });
}

qc_status qc_matrix_to_json(const qc_matrix* m, char** out_text) {
    return guarded([&] {
        if (out_text == nullptr) fail(ErrorKind::DomainError, "qc_matrix_to_json: bad arguments");
        *out_text = dup_string(matrix_to_json_text(ref(m)));
    });
}

size_t qc_matrix_rows(const qc_matrix* m) { return m == nullptr ? 0 : static_cast<size_t>(m->m.rows()); }

size_t qc_matrix_cols(const qc_matrix* m) { return m == nullptr ? 0 : static_cast<size_t>(m->m.cols()); }

qc_status qc_matrix_get(const qc_matrix* m, size_t row, size_t col, double* re, double* im) {
    return guarded([&] {
        const Matrix& mat = ref(m);
        if (static_cast<Index>(row) >= mat.rows() || static_cast<Index>(col) >= mat.cols())
            fail(ErrorKind::DomainError, "qc_matrix_get: index out of range");
        const Complex v = mat(static_cast<Index>(row), static_cast<Index>(col));
        if (re != nullptr) *re = v.real();
        if (im != nullptr) *im = v.imag();
    });
}

void qc_matrix_free(qc_matrix* m) { delete m; }

qc_status qc_spectral_eigenvalues(const qc_matrix* hermitian, double* out, size_t len) {
    return guarded([&] {
        const SpectralDecomposition s = spectral_decompose(ref(hermitian));
        if (static_cast<size_t>(s.eigenvalues.size()) > len)
            fail(ErrorKind::DomainError, "qc_spectral_eigenvalues: output buffer too small");
        for (Index i = 0; i < s.eigenvalues.size(); ++i) out[i] = s.eigenvalues(i);
    });
}

qc_status qc_partial_trace(const qc_matrix* m, int keep_a, size_t dim_a, size_t dim_b, qc_matrix** out) {
    return guarded([&] {
        *out = new qc_matrix{partial_trace(ref(m), keep_a != 0 ? 0 : 1, static_cast<Index>(dim_a),
                                           static_cast<Index>(dim_b))};
    });
}

qc_status qc_tensor(const qc_matrix* a, const qc_matrix* b, qc_matrix** out) {
    return guarded([&] { *out = new qc_matrix{tensor(ref(a), ref(b))}; });
}

qc_status qc_channel_from_json(const char* text, qc_channel** out) {
    return guarded([&] {
        if (text == nullptr || out == nullptr) fail(ErrorKind::DomainError, "qc_channel_from_json: bad arguments");
        *out = new qc_channel{channel_from_json_text(text)};
    });
}

qc_status qc_channel_from_json_file(const char* path, qc_channel** out) {
    return guarded([&] {
        if (path == nullptr || out == nullptr)
            fail(ErrorKind::DomainError, "qc_channel_from_json_file: bad arguments");
        *out = new qc_channel{channel_from_json_text(read_file(path))};
    });
}

qc_status qc_channel_from_choi(const qc_matrix* choi, size_t dim_in, size_t dim_out, qc_channel** out) {
    return guarded([&] {
        *out = new qc_channel{
            ChannelRep::from_choi(ref(choi), static_cast<Index>(dim_in), static_cast<Index>(dim_out))};
    });
}

qc_status qc_channel_to_json(const qc_channel* e, char** out_text) {
    return guarded([&] { *out_text = dup_string(channel_to_json_text(ref(e))); });
}

size_t qc_channel_dim_in(const qc_channel* e) { return e == nullptr ? 0 : static_cast<size_t>(e->e.dim_in()); }

size_t qc_channel_dim_out(const qc_channel* e) { return e == nullptr ? 0 : static_cast<size_t>(e->e.dim_out()); }

qc_status qc_channel_apply(const qc_channel* e, const qc_matrix* x, qc_matrix** out) {
    return guarded([&] { *out = new qc_matrix{ref(e).apply(ref(x))}; });
}

qc_status qc_channel_fixed_point(const qc_channel* e, qc_matrix** out) {
    return guarded([&] { *out = new qc_matrix{fixed_point(ref(e)).matrix()}; });
}

void qc_channel_free(qc_channel* e) { delete e; }

qc_status qc_channel_depolarizing(double lambda, size_t d, qc_channel** out) {
    return guarded([&] { *out = new qc_channel{depolarizing_channel(lambda, static_cast<Index>(d))}; });
}

qc_status qc_channel_identity(size_t d, qc_channel** out) {
    return guarded([&] { *out = new qc_channel{identity_channel(static_cast<Index>(d))}; });
}

qc_status qc_channel_replacer(const qc_matrix* tau, size_t dim_in, qc_channel** out) {
    return guarded([&] { *out = new qc_channel{replacer_channel(density(tau), static_cast<Index>(dim_in))}; });
}

qc_status qc_monotone_eval(const char* f, double x, double* out) {
    return guarded([&] { *out = MonotoneFn::from_name(f == nullptr ? "" : f).evaluate(x); });
}

qc_status qc_perspective(const char* f, double x, double y, double* out) {
    return guarded([&] { *out = MonotoneFn::from_name(f == nullptr ? "" : f).perspective(x, y); });
}

qc_status qc_monotone_flags(const char* f, unsigned* out) {
    return guarded([&] {
        const MonotoneFlags flags = MonotoneFn::from_name(f == nullptr ? "" : f).flags();
        *out = (flags.normalized ? 1u : 0u) | (flags.symmetry_inducing ? 2u : 0u) |
               (flags.support_restricting ? 4u : 0u) | (flags.multiplicative ? 8u : 0u);
    });
}

qc_status qc_apply_j(const char* f, double p, const qc_matrix* sigma, const qc_matrix* x, qc_matrix** out) {
    return guarded([&] {
        const WeightedSpace space(MonotoneFn::from_name(f == nullptr ? "" : f), density(sigma), p);
        *out = new qc_matrix{space.apply(ref(x))};
    });
}

qc_status qc_inner_product(const char* f, double p, const qc_matrix* sigma, const qc_matrix* x, const qc_matrix* y,
                           double* out_re, double* out_im) {
    return guarded([&] {
        const WeightedSpace space(MonotoneFn::from_name(f == nullptr ? "" : f), density(sigma), p);
        const Complex v = space.inner_product(ref(x), ref(y));
        if (out_re != nullptr) *out_re = v.real();
        if (out_im != nullptr) *out_im = v.imag();
    });
}

qc_status qc_expectation(const qc_matrix* sigma, const qc_matrix* x, double* out_re, double* out_im) {
    return guarded([&] {
        const Complex v = expectation(density(sigma), ref(x));
        if (out_re != nullptr) *out_re = v.real();
        if (out_im != nullptr) *out_im = v.imag();
    });
}

qc_status qc_variance(const char* f, const qc_matrix* sigma, const qc_matrix* x, double* out) {
    return guarded([&] { *out = variance(MonotoneFn::from_name(f == nullptr ? "" : f), density(sigma), ref(x)); });
}

qc_status qc_map_petz(const qc_channel* e, const qc_matrix* sigma, qc_map** out) {
    return guarded([&] { *out = new qc_map{petz_recovery(ref(e), density(sigma))}; });
}

qc_status qc_map_heisenberg_reversal(const char* f, const qc_channel* e, const qc_matrix* sigma, qc_map** out) {
    return guarded([&] {
        *out = new qc_map{heisenberg_reversal(MonotoneFn::from_name(f == nullptr ? "" : f), ref(e), density(sigma))};
    });
}

qc_status qc_map_schrodinger_reversal(const char* f, const qc_channel* e, const qc_matrix* sigma, qc_map** out) {
    return guarded([&] {
        *out = new qc_map{schrodinger_reversal(MonotoneFn::from_name(f == nullptr ? "" : f), ref(e), density(sigma))};
    });
}

qc_status qc_map_apply(const qc_map* m, const qc_matrix* x, qc_matrix** out) {
    return guarded([&] {
        if (m == nullptr) fail(ErrorKind::DomainError, "null map handle");
        *out = new qc_matrix{m->h.apply(ref(x))};
    });
}

qc_status qc_map_choi(const qc_map* m, qc_matrix** out) {
    return guarded([&] {
        if (m == nullptr) fail(ErrorKind::DomainError, "null map handle");
        *out = new qc_matrix{m->h.choi()};
    });
}

int qc_map_hermitian_preserving(const qc_map* m) { return m != nullptr && m->h.hermitian_preserving() ? 1 : 0; }

void qc_map_free(qc_map* m) { delete m; }

qc_status qc_canonical_purification(const qc_matrix* rho, qc_matrix** out) {
    return guarded([&] { *out = new qc_matrix{canonical_purification(density(rho))}; });
}

qc_status qc_extract_channel(const qc_matrix* rho_ab, size_t dim_a, size_t dim_b, qc_channel** out) {
    return guarded([&] {
        *out = new qc_channel{
            extract_channel(density(rho_ab), static_cast<Index>(dim_a), static_cast<Index>(dim_b))};
    });
}

qc_status qc_f_coupling(const char* f, const qc_channel* e, const qc_matrix* sigma, qc_matrix** out) {
    return guarded([&] {
        *out = new qc_matrix{f_coupling(MonotoneFn::from_name(f == nullptr ? "" : f), ref(e), density(sigma))};
    });
}

qc_status qc_pinching(const qc_matrix* sigma, const qc_matrix* x, qc_matrix** out) {
    return guarded([&] { *out = new qc_matrix{pinching(density(sigma), ref(x))}; });
}

qc_status qc_trace_distance(const qc_matrix* rho, const qc_matrix* sigma, double* out) {
    return guarded([&] { *out = trace_distance(density(rho), density(sigma)); });
}

qc_status qc_relative_entropy(const qc_matrix* rho, const qc_matrix* sigma, double* out, int* is_infinite) {
    return guarded([&] {
        const DivergenceValue v = relative_entropy(density(rho), density(sigma));
        if (out != nullptr) *out = v.value;
        if (is_infinite != nullptr) *is_infinite = v.is_infinity() ? 1 : 0;
    });
}

qc_status qc_sandwiched_renyi(double alpha, const qc_matrix* rho, const qc_matrix* sigma, double* out,
                              int* is_infinite) {
    return guarded([&] {
        const DivergenceValue v = sandwiched_renyi(alpha, density(rho), density(sigma));
        if (out != nullptr) *out = v.value;
        if (is_infinite != nullptr) *is_infinite = v.is_infinity() ? 1 : 0;
    });
}

qc_status qc_d_max(const qc_matrix* rho, const qc_matrix* sigma, double* out, int* is_infinite) {
    return guarded([&] {
        const DivergenceValue v = d_max(density(rho), density(sigma));
        if (out != nullptr) *out = v.value;
        if (is_infinite != nullptr) *is_infinite = v.is_infinity() ? 1 : 0;
    });
}

qc_status qc_chi2(const char* f, const qc_matrix* rho, const qc_matrix* sigma, double* out, int* is_infinite) {
    return guarded([&] {
        const Chi2Value v = chi2_f(MonotoneFn::from_name(f == nullptr ? "" : f), density(rho), density(sigma));
        if (out != nullptr) *out = v.value;
        if (is_infinite != nullptr) *is_infinite = v.is_infinity() ? 1 : 0;
    });
}

qc_status qc_contraction_report(const char* f, const qc_channel* e, const qc_matrix* sigma, char** out_json) {
    return guarded([&] {
        const ContractionReport report =
            contraction_coefficient(MonotoneFn::from_name(f == nullptr ? "" : f), ref(e), density(sigma));
        *out_json = dup_string(contraction_report_to_json(report));
    });
}

qc_status qc_dpi_saturated(const char* f, const qc_channel* e, const qc_matrix* rho, const qc_matrix* sigma,
                           double tol, int* saturated, double* residual) {
    return guarded([&] {
        const DpiCertificate cert =
            dpi_saturated(MonotoneFn::from_name(f == nullptr ? "" : f), ref(e), density(rho), density(sigma), tol);
        if (saturated != nullptr) *saturated = cert.saturated ? 1 : 0;
        if (residual != nullptr) *residual = cert.residual;
    });
}

qc_status qc_mixing_bound(const char* f, const qc_channel* e, const qc_matrix* pi, double delta, const char* metric,
                          double* eta, long long* n_steps) {
    return guarded([&] {
        const MixingBound bound = mixing_time_bound(MonotoneFn::from_name(f == nullptr ? "" : f), ref(e),
                                                    density(pi), delta, parse_metric(metric));
        if (eta != nullptr) *eta = bound.eta;
        if (n_steps != nullptr) *n_steps = bound.infinite ? -1 : bound.steps;
    });
}

qc_status qc_correlation_report_f(const char* f, const qc_matrix* rho_ab, size_t dim_a, size_t dim_b,
                                  int with_gm_spectrum, char** out_json) {
    return guarded([&] {
        const Index da = static_cast<Index>(dim_a);
        const Index db = static_cast<Index>(dim_b);
        const CorrelationReport report = mu_f(MonotoneFn::from_name(f == nullptr ? "" : f), ref(rho_ab), da, db);
        if (with_gm_spectrum != 0) {
            const RealVector gm = gm_schmidt_spectrum(ref(rho_ab), da, db);
            *out_json = dup_string(correlation_report_to_json(report, &gm));
        } else {
            *out_json = dup_string(correlation_report_to_json(report, nullptr));
        }
    });
}

qc_status qc_correlation_report_k(double k, const qc_matrix* rho_ab, size_t dim_a, size_t dim_b, char** out_json) {
    return guarded([&] {
        const CorrelationReport report =
            mu_lin_k(k, ref(rho_ab), static_cast<Index>(dim_a), static_cast<Index>(dim_b));
        *out_json = dup_string(correlation_report_to_json(report, nullptr));
    });
}

qc_status qc_classical_mu(const qc_matrix* joint_table, double* out) {
    return guarded([&] {
        const Matrix& m = ref(joint_table);
        if (m.imag().cwiseAbs().maxCoeff() > 0.0)
            fail(ErrorKind::NotADistribution, "qc_classical_mu: table must be real");
        *out = classical_mu(m.real());
    });
}

qc_status qc_classical_mu_from_table_json(const char* text, double* out) {
    return guarded([&] {
        if (text == nullptr || out == nullptr)
            fail(ErrorKind::DomainError, "qc_classical_mu_from_table_json: bad arguments");
        *out = classical_mu(table_from_json_text(text));
    });
}

qc_status qc_gm_schmidt_spectrum(const qc_matrix* rho_ab, size_t dim_a, size_t dim_b, double* out, size_t len,
                                 size_t* written) {
    return guarded([&] {
        const RealVector v = gm_schmidt_spectrum(ref(rho_ab), static_cast<Index>(dim_a), static_cast<Index>(dim_b));
        if (static_cast<size_t>(v.size()) > len)
            fail(ErrorKind::DomainError, "qc_gm_schmidt_spectrum: output buffer too small");
        for (Index i = 0; i < v.size(); ++i) out[i] = v(i);
        if (written != nullptr) *written = static_cast<size_t>(v.size());
    });
}

qc_status qc_tensorization_check(double k, const qc_matrix* rho_ab, size_t dim_a, size_t dim_b,
                                 const qc_matrix* sigma_ab, size_t dim_a2, size_t dim_b2, double* lhs, double* rhs,
                                 int* pass) {
    return guarded([&] {
        const TensorizationCheck c =
            tensorization_check(k, ref(rho_ab), static_cast<Index>(dim_a), static_cast<Index>(dim_b), ref(sigma_ab),
                                static_cast<Index>(dim_a2), static_cast<Index>(dim_b2));
        if (lhs != nullptr) *lhs = c.lhs;
        if (rhs != nullptr) *rhs = c.rhs;
        if (pass != nullptr) *pass = c.pass ? 1 : 0;
    });
}

qc_status qc_verify_decomposition(const qc_matrix* rho_ab, size_t dim_a, size_t dim_b, const qc_matrix* proj_a0,
                                  const qc_matrix* proj_b0, double p, int* ok, double* block_residual) {
    return guarded([&] {
        const DecompositionCheck c = verify_decomposition(ref(rho_ab), static_cast<Index>(dim_a),
                                                          static_cast<Index>(dim_b), ref(proj_a0), ref(proj_b0), p);
        if (ok != nullptr) *ok = c.ok ? 1 : 0;
        if (block_residual != nullptr) *block_residual = c.block_residual;
    });
}

qc_status qc_correspondence_check(const char* f, const qc_channel* e, const qc_matrix* sigma, double* sqrt_eta,
                                  double* mu_on_coupling, int* pass) {
    return guarded([&] {
        const CorrespondenceCheck c =
            correspondence_check(MonotoneFn::from_name(f == nullptr ? "" : f), ref(e), density(sigma));
        if (sqrt_eta != nullptr) *sqrt_eta = c.sqrt_eta;
        if (mu_on_coupling != nullptr) *mu_on_coupling = c.mu_on_coupling;
        if (pass != nullptr) *pass = c.pass ? 1 : 0;
    });
}

qc_status qc_verify_suite(const char* suite, uint64_t seed, int trials, char** out_json) {
    return guarded([&] {
        const SuiteResult result = run_suite(suite == nullptr ? "" : suite, seed, trials);
        *out_json = dup_string(suite_result_to_json(result));
    });
}

qc_status qc_verify_suite_names(char** out_csv) {
    return guarded([&] {
        std::ostringstream csv;
        bool first = true;
        for (const std::string& name : suite_names()) {
            if (!first) csv << ",";
            csv << name;
            first = false;
        }
        *out_csv = dup_string(csv.str());
    });
}

} // extern "C"
