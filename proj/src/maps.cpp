#include "maps.hpp"

#include <cmath>

namespace qcontract {

Matrix canonical_purification(const DensityOperator& rho) {
    // Phi+ is taken in rho's eigenbasis, the transpose convention used
    // throughout; both marginals of the result equal rho exactly.
    const Index d = rho.dim();
    const Matrix u = tensor(rho.eigenvectors(), rho.eigenvectors());
    const Matrix half = tensor(rho.eigenvalues().cwiseSqrt().cast<Complex>().asDiagonal().toDenseMatrix(),
                               Matrix::Identity(d, d));
    return u * half * max_entangled(d) * half * u.adjoint();
}

ChannelRep extract_channel(const DensityOperator& rho_ab, Index dim_a, Index dim_b) {
    require_dims(rho_ab.matrix(), dim_a * dim_b, dim_a * dim_b, "extract_channel");
    DensityOperator rho_a{partial_trace(rho_ab.matrix(), 0, dim_a, dim_b)};

    Matrix joint = rho_ab.matrix();
    if (!rho_a.full_rank()) {
        const Matrix v = rho_a.support_isometry();
        const Matrix iso = tensor(v, Matrix::Identity(dim_b, dim_b));
        joint = iso.adjoint() * joint * iso;
        rho_a = DensityOperator(v.adjoint() * rho_a.matrix() * v);
    }
    const Index d_in = rho_a.dim();

    // Omega = rho_A^{-1/2} rho_AB rho_A^{-1/2} in rho_A's eigenbasis; the
    // channel carried back to the stored basis right-multiplies each Kraus
    // operator by U^*.
    const Matrix u = rho_a.eigenvectors();
    const Matrix rotated = tensor(u, Matrix::Identity(dim_b, dim_b)).adjoint() * joint *
                           tensor(u, Matrix::Identity(dim_b, dim_b));
    RealVector inv_sqrt(d_in);
    for (Index i = 0; i < d_in; ++i) inv_sqrt(i) = 1.0 / std::sqrt(rho_a.eigenvalues()(i));
    const Matrix scale = tensor(inv_sqrt.cast<Complex>().asDiagonal().toDenseMatrix(),
                                Matrix::Identity(dim_b, dim_b));
    const Matrix choi = scale * rotated * scale;

    ChannelRep e = [&] {
        try {
            std::vector<Matrix> kraus = kraus_from_choi(choi, d_in, dim_b);
            for (Matrix& k : kraus) k = (k * u.adjoint()).eval();
            return ChannelRep::from_kraus(kraus);
        } catch (const Error& err) {
            fail(ErrorKind::NotCPTP, std::string("extract_channel: malformed joint state (") + err.what() + ")");
        }
    }();

    const Matrix rebuilt = apply_on_subsystem(e, canonical_purification(rho_a), d_in, d_in, 1);
    if (frobenius(rebuilt - joint) > 1e-8 * std::max(1.0, frobenius(joint)))
        fail(ErrorKind::NotCPTP, "extract_channel: reconstruction check failed");
    return e;
}

LinearMapHandle petz_recovery(const ChannelRep& e, const DensityOperator& sigma) {
    require_dims(sigma.matrix(), e.dim_in(), e.dim_in(), "petz_recovery");
    const DensityOperator out{e.apply(sigma.matrix())};
    const Matrix sigma_half = sigma.sqrt();
    const Matrix out_inv_half = out.power(-0.5);
    const auto apply = [&](const Matrix& x) {
        return (sigma_half * e.apply_adjoint(out_inv_half * x * out_inv_half) * sigma_half).eval();
    };
    return LinearMapHandle::from_apply(apply, e.dim_out(), e.dim_in());
}

LinearMapHandle heisenberg_reversal(const MonotoneFn& f, const ChannelRep& e, const DensityOperator& sigma) {
    require_dims(sigma.matrix(), e.dim_in(), e.dim_in(), "heisenberg_reversal");
    const WeightedSpace j_sigma(f, sigma, 1.0);
    const WeightedSpace j_out_inv(f, DensityOperator{e.apply(sigma.matrix())}, -1.0);
    const auto apply = [&](const Matrix& x) { return j_out_inv.apply(e.apply(j_sigma.apply(x))); };
    return LinearMapHandle::from_apply(apply, e.dim_in(), e.dim_out());
}

LinearMapHandle schrodinger_reversal(const MonotoneFn& f, const ChannelRep& e, const DensityOperator& sigma) {
    require_dims(sigma.matrix(), e.dim_in(), e.dim_in(), "schrodinger_reversal");
    const WeightedSpace j_sigma(f, sigma, 1.0);
    const WeightedSpace j_out_inv(f, DensityOperator{e.apply(sigma.matrix())}, -1.0);
    const auto apply = [&](const Matrix& x) { return j_sigma.apply(e.apply_adjoint(j_out_inv.apply(x))); };
    return LinearMapHandle::from_apply(apply, e.dim_out(), e.dim_in());
}

Matrix f_coupling(const MonotoneFn& f, const ChannelRep& e, const DensityOperator& sigma) {
    if (!f.flags().symmetry_inducing)
        fail(ErrorKind::DomainError, "f_coupling: f must be symmetry-inducing");
    require_dims(sigma.matrix(), e.dim_in(), e.dim_in(), "f_coupling");
    const WeightedSpace j_sigma(f, sigma, 1.0);
    const auto apply = [&](const Matrix& x) { return e.apply(j_sigma.apply(x)); };
    return choi_in_basis(apply, sigma.eigenvectors(), e.dim_out());
}

Matrix pinching(const DensityOperator& sigma, const Matrix& x) {
    require_dims(x, sigma.dim(), sigma.dim(), "pinching");
    const Index d = sigma.dim();
    const RealVector& lam = sigma.eigenvalues();
    const double tol = tols().degeneracy_factor * std::max(lam(0), 0.0);

    Matrix coords = sigma.eigenvectors().adjoint() * x * sigma.eigenvectors();
    Index block_start = 0;
    Matrix out = Matrix::Zero(d, d);
    while (block_start < d) {
        Index block_end = block_start + 1;
        while (block_end < d && lam(block_end - 1) - lam(block_end) <= tol) ++block_end;
        out.block(block_start, block_start, block_end - block_start, block_end - block_start) =
            coords.block(block_start, block_start, block_end - block_start, block_end - block_start);
        block_start = block_end;
    }
    return sigma.eigenvectors() * out * sigma.eigenvectors().adjoint();
}

} // namespace qcontract
