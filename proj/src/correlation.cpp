#include "correlation.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace qcontract {

namespace {

struct Marginals {
    DensityOperator a;
    DensityOperator b;
};

Marginals marginals_of(const Matrix& rho_ab, Index dim_a, Index dim_b) {
    require_dims(rho_ab, dim_a * dim_b, dim_a * dim_b, "correlation");
    return {DensityOperator{partial_trace(rho_ab, 0, dim_a, dim_b)},
            DensityOperator{partial_trace(rho_ab, 1, dim_a, dim_b)}};
}

// Compress onto supp(rho_A) (x) supp(rho_B).
struct Compressed {
    Matrix op;
    DensityOperator a;
    DensityOperator b;
    Index dim_a, dim_b;
};

Compressed compress(const Matrix& rho_ab, Index dim_a, Index dim_b) {
    Marginals m = marginals_of(rho_ab, dim_a, dim_b);
    if (m.a.full_rank() && m.b.full_rank()) return {rho_ab, m.a, m.b, dim_a, dim_b};
    const Matrix va = m.a.support_isometry();
    const Matrix vb = m.b.support_isometry();
    const Matrix iso = tensor(va, vb);
    const Matrix op = iso.adjoint() * rho_ab * iso;
    return {op, DensityOperator{va.adjoint() * m.a.matrix() * va}, DensityOperator{vb.adjoint() * m.b.matrix() * vb},
            va.cols(), vb.cols()};
}

RealVector descending_singular_values(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues();
}

double second_or_zero(const RealVector& spectrum) { return spectrum.size() > 1 ? spectrum(1) : 0.0; }

void check_mu_range(double mu, const char* who) {
    if (mu > 1.0 + 1e-5) fail(ErrorKind::NumericError, std::string(who) + ": mu = " + std::to_string(mu) + " > 1");
}

// Schmidt coefficients of a Hermitian bipartite operator over the real
// Hilbert spaces (Herm, <.,.>_HS): the coefficient matrix in a product
// Hermitian ONB is real, so its singular values carry Hermitian Schmidt
// vectors.
RealVector hermitian_schmidt_spectrum(const Matrix& h, Index dim_a, Index dim_b) {
    const auto basis_a = hermitian_basis(dim_a);
    const auto basis_b = hermitian_basis(dim_b);
    RealMatrix coeff(dim_a * dim_a, dim_b * dim_b);
    const Matrix r = realign(h, dim_a, dim_b);
    Matrix pa(dim_a * dim_a, dim_a * dim_a);
    Matrix pb(dim_b * dim_b, dim_b * dim_b);
    for (Index a = 0; a < dim_a * dim_a; ++a)
        for (Index i = 0; i < dim_a; ++i)
            for (Index j = 0; j < dim_a; ++j) pa(i * dim_a + j, a) = basis_a[static_cast<size_t>(a)](i, j);
    for (Index b = 0; b < dim_b * dim_b; ++b)
        for (Index k = 0; k < dim_b; ++k)
            for (Index l = 0; l < dim_b; ++l) pb(k * dim_b + l, b) = basis_b[static_cast<size_t>(b)](k, l);
    const Matrix c = pa.adjoint() * r * pb.conjugate();
    if (c.imag().cwiseAbs().maxCoeff() > tols().imag_residual * std::max(1.0, c.cwiseAbs().maxCoeff()))
        fail(ErrorKind::ImagResidualTooLarge, "hermitian_schmidt_spectrum: coefficient matrix is not real");
    Eigen::JacobiSVD<RealMatrix> svd(c.real());
    return svd.singularValues();
}

Matrix apply_local_j(const MonotoneFn& f, double p, const DensityOperator& ma, const DensityOperator& mb,
                     const Matrix& op) {
    const WeightedSpace ja(f, ma, p);
    const WeightedSpace jb(f, mb, p);
    const Matrix u = tensor(ma.eigenvectors(), mb.eigenvectors());
    const Matrix coords = (u.adjoint() * op * u).cwiseProduct(tensor(ja.weights(), jb.weights()));
    return u * coords * u.adjoint();
}

CorrelationReport mu_f_impl(const MonotoneFn& f, const Matrix& rho_ab, Index dim_a, Index dim_b) {
    const Compressed c = compress(rho_ab, dim_a, dim_b);
    const Matrix weighted = apply_local_j(f, -0.5, c.a, c.b, c.op);
    CorrelationReport report;
    report.label = f.id();
    report.schmidt_spectrum = hermitian_schmidt_spectrum(weighted, c.dim_a, c.dim_b);
    report.lambda1 = report.schmidt_spectrum.size() > 0 ? report.schmidt_spectrum(0) : 0.0;
    report.mu = second_or_zero(report.schmidt_spectrum);
    check_mu_range(report.mu, "mu_f");
    report.mu = std::clamp(report.mu, 0.0, 1.0);
    return report;
}

} // namespace

Matrix rho_tilde_k(double k, const Matrix& rho_ab, Index dim_a, Index dim_b) {
    if (k < 0.0 || k > 1.0) fail(ErrorKind::DomainError, "rho_tilde_k: k must lie in [0, 1]");
    Marginals m = marginals_of(rho_ab, dim_a, dim_b);
    const Matrix left = tensor(m.a.power(-(1.0 - k) / 2.0), m.b.power(-k / 2.0));
    const Matrix right = tensor(m.a.power(-k / 2.0), m.b.power(-(1.0 - k) / 2.0));
    return left * rho_ab * right;
}

CorrelationReport mu_lin_k(double k, const Matrix& rho_ab, Index dim_a, Index dim_b) {
    if (k < 0.0 || k > 1.0) fail(ErrorKind::DomainError, "mu_lin_k: k must lie in [0, 1]");
    const Compressed c = compress(rho_ab, dim_a, dim_b);
    const Matrix tilde = rho_tilde_k(k, c.op, c.dim_a, c.dim_b);
    CorrelationReport report;
    report.label = "k=" + std::to_string(k);
    report.schmidt_spectrum = descending_singular_values(realign(tilde, c.dim_a, c.dim_b));
    report.lambda1 = report.schmidt_spectrum.size() > 0 ? report.schmidt_spectrum(0) : 0.0;
    report.mu = second_or_zero(report.schmidt_spectrum);
    check_mu_range(report.mu, "mu_lin_k");
    report.mu = std::clamp(report.mu, 0.0, 1.0);
    return report;
}

CorrelationReport mu_f(const MonotoneFn& f, const Matrix& rho_ab, Index dim_a, Index dim_b) {
    if (!f.flags().normalized || !f.flags().symmetry_inducing)
        fail(ErrorKind::BandViolation, "mu_f: f must be normalized and symmetry-inducing, got " + f.id());
    const auto grid = standard_grid();
    if (!ordering_check(MonotoneFn::gm(), f, grid) || !ordering_check(f, MonotoneFn::am(), grid))
        fail(ErrorKind::BandViolation, "mu_f: f must lie in the [gm, am] band, got " + f.id());
    return mu_f_impl(f, rho_ab, dim_a, dim_b);
}

double classical_mu(const RealMatrix& joint_table) {
    const Index rows = joint_table.rows();
    const Index cols = joint_table.cols();
    double total = 0.0;
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) {
            if (joint_table(i, j) < -1e-12)
                fail(ErrorKind::NotADistribution, "classical_mu: negative probability entry");
            total += joint_table(i, j);
        }
    if (std::abs(total - 1.0) > 1e-8) fail(ErrorKind::NotADistribution, "classical_mu: entries do not sum to 1");

    const RealVector px = joint_table.rowwise().sum();
    const RealVector py = joint_table.colwise().sum();
    std::vector<Index> keep_x, keep_y;
    for (Index i = 0; i < rows; ++i)
        if (px(i) > 0.0) keep_x.push_back(i);
    for (Index j = 0; j < cols; ++j)
        if (py(j) > 0.0) keep_y.push_back(j);

    RealMatrix m(static_cast<Index>(keep_x.size()), static_cast<Index>(keep_y.size()));
    for (size_t i = 0; i < keep_x.size(); ++i)
        for (size_t j = 0; j < keep_y.size(); ++j)
            m(static_cast<Index>(i), static_cast<Index>(j)) =
                joint_table(keep_x[i], keep_y[j]) / std::sqrt(px(keep_x[i]) * py(keep_y[j]));
    Eigen::JacobiSVD<RealMatrix> svd(m);
    return svd.singularValues().size() > 1 ? svd.singularValues()(1) : 0.0;
}

RealVector gm_schmidt_spectrum(const Matrix& rho_ab, Index dim_a, Index dim_b) {
    Marginals m = marginals_of(rho_ab, dim_a, dim_b);
    const Matrix half = tensor(m.a.power(-0.25), m.b.power(-0.25));
    RealVector spectrum = hermitian_schmidt_spectrum(half * rho_ab * half, dim_a, dim_b);
    const double cutoff = spectrum.size() > 0 ? 1e-12 * std::max(spectrum(0), 0.0) : 0.0;
    for (Index i = 0; i < spectrum.size(); ++i)
        if (spectrum(i) < cutoff) spectrum(i) = 0.0;
    return spectrum;
}

TensorizationCheck tensorization_check(double k, const Matrix& rho_ab, Index dim_a, Index dim_b,
                                       const Matrix& sigma_ab, Index dim_a2, Index dim_b2) {
    const Matrix product = tensor(rho_ab, sigma_ab); // ordered (A, B, A', B')
    const Matrix joint =
        permute_systems(product, {dim_a, dim_b, dim_a2, dim_b2}, {0, 2, 1, 3}); // -> (A, A', B, B')
    TensorizationCheck out;
    out.lhs = mu_lin_k(k, joint, dim_a * dim_a2, dim_b * dim_b2).mu;
    out.rhs = std::max(mu_lin_k(k, rho_ab, dim_a, dim_b).mu, mu_lin_k(k, sigma_ab, dim_a2, dim_b2).mu);
    out.pass = std::abs(out.lhs - out.rhs) <= 1e-6;
    return out;
}

DecompositionCheck verify_decomposition(const Matrix& rho_ab, Index dim_a, Index dim_b, const Matrix& proj_a0,
                                        const Matrix& proj_b0, double p) {
    require_dims(rho_ab, dim_a * dim_b, dim_a * dim_b, "verify_decomposition");
    require_dims(proj_a0, dim_a, dim_a, "verify_decomposition");
    require_dims(proj_b0, dim_b, dim_b, "verify_decomposition");
    if (!(p > 0.0 && p < 1.0)) fail(ErrorKind::DomainError, "verify_decomposition: p must lie in (0, 1)");
    const auto check_projector = [](const Matrix& q, const char* name) {
        if (hermiticity_defect(q) > 1e-9 || frobenius(q * q - q) > 1e-9)
            fail(ErrorKind::InvalidProjectors, std::string("verify_decomposition: ") + name + " is not a projector");
    };
    check_projector(proj_a0, "Pi_A0");
    check_projector(proj_b0, "Pi_B0");

    const Matrix proj_a1 = Matrix::Identity(dim_a, dim_a) - proj_a0;
    const Matrix proj_b1 = Matrix::Identity(dim_b, dim_b) - proj_b0;
    const Matrix p00 = tensor(proj_a0, proj_b0);
    const Matrix p11 = tensor(proj_a1, proj_b1);
    const Matrix p01 = tensor(proj_a0, proj_b1);
    const Matrix p10 = tensor(proj_a1, proj_b0);

    DecompositionCheck out;
    out.block_residual = frobenius((p01 + p10) * rho_ab);
    const double w00 = (p00 * rho_ab).trace().real();
    const double w11 = (p11 * rho_ab).trace().real();
    out.weight_residual = std::abs(w00 - p);

    // outcome distribution of the induced projective measurement vs chi^{|p}
    const double q01 = (p01 * rho_ab).trace().real();
    const double q10 = (p10 * rho_ab).trace().real();
    out.outcome_residual = std::max({std::abs(w00 - p), std::abs(w11 - (1.0 - p)), std::abs(q01), std::abs(q10)});
    out.ok = out.block_residual <= 1e-9 && out.weight_residual <= 1e-9 && out.outcome_residual <= 1e-9;
    return out;
}

CorrespondenceCheck correspondence_check(const MonotoneFn& f, const ChannelRep& e, const DensityOperator& sigma) {
    CorrespondenceCheck out;
    out.sqrt_eta = std::sqrt(contraction_coefficient(f, e, sigma).eta);
    if (f.id() == "gm") {
        const Matrix psi = canonical_purification(sigma);
        const Matrix state = apply_on_subsystem(e, psi, sigma.dim(), sigma.dim(), 1);
        out.mu_on_coupling = mu_f(f, state, sigma.dim(), e.dim_out()).mu;
    } else {
        const Matrix coupling = f_coupling(f, e, sigma);
        out.mu_on_coupling = mu_f_impl(f, coupling, sigma.dim(), e.dim_out()).mu;
    }
    out.pass = std::abs(out.sqrt_eta - out.mu_on_coupling) <= 1e-6;
    return out;
}

} // namespace qcontract
