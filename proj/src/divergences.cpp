#include "divergences.hpp"

#include <cmath>

namespace qcontract {

namespace {

const double kLog2 = std::log(2.0);

bool support_contained(const DensityOperator& rho, const DensityOperator& sigma) {
    const Matrix kernel = Matrix::Identity(sigma.dim(), sigma.dim()) - sigma.support_projector();
    return (kernel * rho.matrix() * kernel).trace().real() <= tols().support;
}

void require_same_dim(const DensityOperator& rho, const DensityOperator& sigma, const char* who) {
    if (rho.dim() != sigma.dim()) fail(ErrorKind::DimensionMismatch, std::string(who) + ": dimension mismatch");
}

} // namespace

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
    require_same_dim(rho, sigma, "trace_distance");
    const SpectralDecomposition s = spectral_decompose(rho.matrix() - sigma.matrix());
    return s.eigenvalues.cwiseAbs().sum() / 2.0;
}

DivergenceValue relative_entropy(const DensityOperator& rho, const DensityOperator& sigma) {
    require_same_dim(rho, sigma, "relative_entropy");
    DivergenceValue out;
    if (!support_contained(rho, sigma)) {
        out.support_ok = false;
        out.value = std::numeric_limits<double>::infinity();
        return out;
    }
    const RealVector& p = rho.eigenvalues();
    const RealVector& q = sigma.eigenvalues();
    const double p_cut = rho.rank_cutoff();
    const double q_cut = sigma.rank_cutoff();

    double nats = 0.0;
    for (Index i = 0; i < rho.dim(); ++i) {
        if (p(i) <= p_cut) continue;
        nats += p(i) * std::log(p(i));
        for (Index j = 0; j < sigma.dim(); ++j) {
            if (q(j) <= q_cut) continue;
            const double overlap = std::norm(
                (sigma.eigenvectors().col(j).adjoint() * rho.eigenvectors().col(i))(0));
            nats -= p(i) * overlap * std::log(q(j));
        }
    }
    out.value = std::max(0.0, nats / kLog2);
    return out;
}

DivergenceValue sandwiched_renyi(double alpha, const DensityOperator& rho, const DensityOperator& sigma) {
    require_same_dim(rho, sigma, "sandwiched_renyi");
    if (!(alpha > 0.0) || alpha == 1.0)
        fail(ErrorKind::DomainError, "sandwiched_renyi: alpha must lie in (0,1) or (1,inf)");

    DivergenceValue out;
    if (alpha > 1.0) {
        if (!support_contained(rho, sigma)) {
            out.support_ok = false;
            out.value = std::numeric_limits<double>::infinity();
            return out;
        }
    } else {
        if ((rho.matrix() * sigma.matrix()).trace().real() <= tols().support) {
            out.support_ok = false;
            out.value = std::numeric_limits<double>::infinity();
            return out;
        }
    }

    const Matrix sandwich_half = sigma.power((1.0 - alpha) / (2.0 * alpha));
    const Matrix inner = sandwich_half * rho.matrix() * sandwich_half;
    const SpectralDecomposition s = spectral_decompose(inner);
    double q = 0.0;
    for (Index i = 0; i < s.eigenvalues.size(); ++i)
        if (s.eigenvalues(i) > 0.0) q += std::pow(s.eigenvalues(i), alpha);
    out.value = std::log2(q) / (alpha - 1.0);
    return out;
}

DivergenceValue d_max(const DensityOperator& rho, const DensityOperator& sigma) {
    require_same_dim(rho, sigma, "d_max");
    DivergenceValue out;
    if (!support_contained(rho, sigma)) {
        out.support_ok = false;
        out.value = std::numeric_limits<double>::infinity();
        return out;
    }
    const Matrix inv_half = sigma.power(-0.5);
    const SpectralDecomposition s = spectral_decompose(inv_half * rho.matrix() * inv_half);
    out.value = std::log2(std::max(s.eigenvalues(0), 0.0));
    return out;
}

} // namespace qcontract
