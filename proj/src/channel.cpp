#include "channel.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>

namespace qcontract {

namespace {

Matrix unvec(const Vector& v, Index dim_in, Index dim_out) {
    // v indexed (i, b) with i over the input space, b over the output space
    Matrix k(dim_out, dim_in);
    for (Index i = 0; i < dim_in; ++i)
        for (Index b = 0; b < dim_out; ++b) k(b, i) = v(i * dim_out + b);
    return k;
}

Matrix choi_from_kraus(const std::vector<Matrix>& kraus, Index dim_in, Index dim_out) {
    Matrix choi = Matrix::Zero(dim_in * dim_out, dim_in * dim_out);
    for (const Matrix& k : kraus) {
        Vector v(dim_in * dim_out);
        for (Index i = 0; i < dim_in; ++i)
            for (Index b = 0; b < dim_out; ++b) v(i * dim_out + b) = k(b, i);
        choi += v * v.adjoint();
    }
    return choi;
}

} // namespace

std::vector<Matrix> kraus_from_choi(const Matrix& choi, Index dim_in, Index dim_out) {
    require_dims(choi, dim_in * dim_out, dim_in * dim_out, "kraus_from_choi");
    const double scale = std::max(frobenius(choi), 1e-300);
    if (hermiticity_defect(choi) > tols().herm_factor * scale)
        fail(ErrorKind::NotPSD, "kraus_from_choi: Choi operator is not Hermitian");
    SpectralDecomposition s = spectral_decompose(choi);
    if (s.eigenvalues(s.eigenvalues.size() - 1) < -tols().psd_factor * scale)
        fail(ErrorKind::NotPSD, "kraus_from_choi: Choi operator has a negative eigenvalue");

    const double cutoff = tols().kraus_trunc_factor * std::max(s.eigenvalues(0), 0.0);
    std::vector<Matrix> kraus;
    for (Index k = 0; k < s.eigenvalues.size(); ++k) {
        if (s.eigenvalues(k) <= cutoff) break;
        kraus.push_back(std::sqrt(s.eigenvalues(k)) * unvec(s.eigenvectors.col(k), dim_in, dim_out));
    }
    if (kraus.empty()) kraus.push_back(Matrix::Zero(dim_out, dim_in));
    return kraus;
}

ChannelRep ChannelRep::from_choi(const Matrix& choi, Index dim_in, Index dim_out) {
    ChannelRep e;
    e.dim_in_ = dim_in;
    e.dim_out_ = dim_out;
    e.choi_ = choi;
    e.kraus_ = kraus_from_choi(choi, dim_in, dim_out);
    const Matrix marginal = partial_trace(choi, 0, dim_in, dim_out);
    if ((marginal - Matrix::Identity(dim_in, dim_in)).cwiseAbs().maxCoeff() > tols().tp)
        fail(ErrorKind::NotCPTP, "ChannelRep: Choi partial trace over the output is not the identity");
    return e;
}

ChannelRep ChannelRep::from_kraus(const std::vector<Matrix>& kraus) {
    if (kraus.empty()) fail(ErrorKind::DomainError, "ChannelRep: empty Kraus list");
    const Index dim_out = kraus.front().rows();
    const Index dim_in = kraus.front().cols();
    Matrix sum = Matrix::Zero(dim_in, dim_in);
    for (const Matrix& k : kraus) {
        require_dims(k, dim_out, dim_in, "ChannelRep::from_kraus");
        sum += k.adjoint() * k;
    }
    if ((sum - Matrix::Identity(dim_in, dim_in)).cwiseAbs().maxCoeff() > tols().tp)
        fail(ErrorKind::NotCPTP, "ChannelRep: sum_k K^* K is not the identity");
    ChannelRep e;
    e.dim_in_ = dim_in;
    e.dim_out_ = dim_out;
    e.kraus_ = kraus;
    e.choi_ = choi_from_kraus(kraus, dim_in, dim_out);
    return e;
}

Matrix ChannelRep::apply(const Matrix& x) const {
    require_dims(x, dim_in_, dim_in_, "ChannelRep::apply");
    Matrix out = Matrix::Zero(dim_out_, dim_out_);
    for (const Matrix& k : kraus_) out += k * x * k.adjoint();
    return out;
}

Matrix ChannelRep::apply_adjoint(const Matrix& y) const {
    require_dims(y, dim_out_, dim_out_, "ChannelRep::apply_adjoint");
    Matrix out = Matrix::Zero(dim_in_, dim_in_);
    for (const Matrix& k : kraus_) out += k.adjoint() * y * k;
    return out;
}

Matrix ChannelRep::transfer_matrix() const {
    if (dim_in_ != dim_out_) fail(ErrorKind::DimensionMismatch, "transfer_matrix: channel must be an endomorphism");
    Matrix m = Matrix::Zero(dim_in_ * dim_in_, dim_in_ * dim_in_);
    for (const Matrix& k : kraus_) m += Eigen::kroneckerProduct(k, k.conjugate()).eval();
    return m;
}

LinearMapHandle LinearMapHandle::from_choi(const Matrix& choi, Index dim_in, Index dim_out) {
    require_dims(choi, dim_in * dim_out, dim_in * dim_out, "LinearMapHandle");
    LinearMapHandle h;
    h.dim_in_ = dim_in;
    h.dim_out_ = dim_out;
    h.choi_ = choi;
    h.hermitian_preserving_ = hermiticity_defect(choi) <= tols().herm_factor * std::max(frobenius(choi), 1e-300);

    if (h.hermitian_preserving_) {
        // signed pairs from the eigendecomposition: G_k = sqrt|w| Z, L_k = sign(w) sqrt|w| Z
        SpectralDecomposition s = spectral_decompose((choi + choi.adjoint()) / 2.0);
        const double cutoff = tols().kraus_trunc_factor * std::max(std::abs(s.eigenvalues(0)),
                                                                   std::abs(s.eigenvalues(s.eigenvalues.size() - 1)));
        for (Index k = 0; k < s.eigenvalues.size(); ++k) {
            const double w = s.eigenvalues(k);
            if (std::abs(w) <= cutoff) continue;
            const Matrix z = unvec(s.eigenvectors.col(k), dim_in, dim_out);
            h.pairs_.emplace_back(std::sqrt(std::abs(w)) * z, (w < 0 ? -1.0 : 1.0) * std::sqrt(std::abs(w)) * z);
        }
    } else {
        Eigen::JacobiSVD<Matrix> svd(choi, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const double cutoff = tols().kraus_trunc_factor * std::max(svd.singularValues()(0), 0.0);
        for (Index k = 0; k < svd.singularValues().size(); ++k) {
            const double sv = svd.singularValues()(k);
            if (sv <= cutoff) break;
            h.pairs_.emplace_back(std::sqrt(sv) * unvec(svd.matrixU().col(k), dim_in, dim_out),
                                  std::sqrt(sv) * unvec(svd.matrixV().col(k), dim_in, dim_out));
        }
    }
    if (h.pairs_.empty()) h.pairs_.emplace_back(Matrix::Zero(dim_out, dim_in), Matrix::Zero(dim_out, dim_in));
    return h;
}

LinearMapHandle LinearMapHandle::from_apply(const std::function<Matrix(const Matrix&)>& apply, Index dim_in,
                                            Index dim_out) {
    Matrix choi = Matrix::Zero(dim_in * dim_out, dim_in * dim_out);
    for (Index i = 0; i < dim_in; ++i)
        for (Index j = 0; j < dim_in; ++j) {
            const Matrix block = apply(basis_op(dim_in, i, j));
            choi.block(i * dim_out, j * dim_out, dim_out, dim_out) = block;
        }
    return from_choi(choi, dim_in, dim_out);
}

Matrix LinearMapHandle::apply(const Matrix& x) const {
    require_dims(x, dim_in_, dim_in_, "LinearMapHandle::apply");
    Matrix out = Matrix::Zero(dim_out_, dim_out_);
    for (const auto& [g, l] : pairs_) out += g * x * l.adjoint();
    return out;
}

Matrix choi_of_composition(const std::vector<const LinearMapHandle*>& maps) {
    if (maps.empty()) fail(ErrorKind::DomainError, "choi_of_composition: empty map list");
    const Index dim_in = maps.front()->dim_in();
    for (size_t i = 1; i < maps.size(); ++i)
        if (maps[i]->dim_in() != maps[i - 1]->dim_out())
            fail(ErrorKind::DimensionMismatch, "choi_of_composition: dimensions do not chain");
    const Index dim_out = maps.back()->dim_out();

    Matrix choi = Matrix::Zero(dim_in * dim_out, dim_in * dim_out);
    for (Index i = 0; i < dim_in; ++i)
        for (Index j = 0; j < dim_in; ++j) {
            Matrix block = basis_op(dim_in, i, j);
            for (const LinearMapHandle* m : maps) block = m->apply(block);
            choi.block(i * dim_out, j * dim_out, dim_out, dim_out) = block;
        }
    return choi;
}

Matrix choi_in_basis(const std::function<Matrix(const Matrix&)>& apply, const Matrix& basis, Index dim_out) {
    const Index d = basis.rows();
    Matrix choi = Matrix::Zero(d * dim_out, d * dim_out);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) {
            const Matrix e = basis.col(i) * basis.col(j).adjoint();
            const Matrix block = apply(e);
            for (Index a = 0; a < d; ++a)
                for (Index b = 0; b < d; ++b) {
                    const Complex weight = basis(a, i) * std::conj(basis(b, j));
                    choi.block(a * dim_out, b * dim_out, dim_out, dim_out) += weight * block;
                }
        }
    return choi;
}

ChannelRep identity_channel(Index d) {
    return ChannelRep::from_kraus({Matrix::Identity(d, d)});
}

ChannelRep depolarizing_channel(double lambda, Index d) {
    if (lambda < 0.0 || lambda > 1.0) fail(ErrorKind::DomainError, "depolarizing_channel: lambda must lie in [0, 1]");
    const Matrix choi =
        lambda * max_entangled(d) + (1.0 - lambda) / static_cast<double>(d) * Matrix::Identity(d * d, d * d);
    return ChannelRep::from_choi(choi, d, d);
}

ChannelRep replacer_channel(const DensityOperator& tau, Index dim_in) {
    const Matrix choi = tensor(Matrix::Identity(dim_in, dim_in), tau.matrix());
    return ChannelRep::from_choi(choi, dim_in, tau.dim());
}

ChannelRep unitary_channel(const Matrix& u) {
    require_square(u, "unitary_channel");
    const Index d = u.rows();
    if ((u.adjoint() * u - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > tols().tp)
        fail(ErrorKind::DomainError, "unitary_channel: matrix is not unitary");
    return ChannelRep::from_kraus({u});
}

ChannelRep dephasing_channel(double gamma, Index d) {
    if (gamma < 0.0 || gamma > 1.0) fail(ErrorKind::DomainError, "dephasing_channel: gamma must lie in [0, 1]");
    Matrix choi = (1.0 - gamma) * max_entangled(d);
    for (Index i = 0; i < d; ++i) choi(i * d + i, i * d + i) = 1.0;
    return ChannelRep::from_choi(choi, d, d);
}

Matrix apply_on_subsystem(const ChannelRep& e, const Matrix& joint, Index dim_a, Index dim_b, int which) {
    require_dims(joint, dim_a * dim_b, dim_a * dim_b, "apply_on_subsystem");
    if (which != 0 && which != 1) fail(ErrorKind::DomainError, "apply_on_subsystem: which must be 0 or 1");
    const Index local = which == 0 ? dim_a : dim_b;
    if (local != e.dim_in()) fail(ErrorKind::DimensionMismatch, "apply_on_subsystem: factor dimension mismatch");
    const Index out_a = which == 0 ? e.dim_out() : dim_a;
    const Index out_b = which == 0 ? dim_b : e.dim_out();
    Matrix out = Matrix::Zero(out_a * out_b, out_a * out_b);
    for (const Matrix& k : e.kraus()) {
        const Matrix lifted = which == 0 ? tensor(k, Matrix::Identity(dim_b, dim_b))
                                         : tensor(Matrix::Identity(dim_a, dim_a), k);
        out += lifted * joint * lifted.adjoint();
    }
    return out;
}

DensityOperator fixed_point(const ChannelRep& e) {
    const Matrix m = e.transfer_matrix();
    Eigen::ComplexEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success)
        fail(ErrorKind::ConvergenceFailure, "fixed_point: eigensolver did not converge");

    const double gap = tols().eta_gap;
    Index hit = -1;
    int count = 0;
    for (Index k = 0; k < solver.eigenvalues().size(); ++k) {
        if (std::abs(solver.eigenvalues()(k) - Complex(1.0, 0.0)) <= gap) {
            ++count;
            if (hit < 0) hit = k;
        }
    }
    if (count == 0) fail(ErrorKind::NoUniqueFixedPoint, "fixed_point: no eigenvalue-1 eigenvector found");
    if (count > 1) fail(ErrorKind::NoUniqueFixedPoint, "fixed_point: the eigenvalue-1 eigenspace has dimension > 1");

    const Index d = e.dim_in();
    Matrix pi(d, d);
    const Vector v = solver.eigenvectors().col(hit);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) pi(i, j) = v(i * d + j); // row-major vec
    pi = (pi + pi.adjoint()).eval() / 2.0;
    const double tr = pi.trace().real();
    if (std::abs(tr) < 1e-12) fail(ErrorKind::NoUniqueFixedPoint, "fixed_point: fixed operator is traceless");
    pi /= tr;
    return DensityOperator(pi);
}

} // namespace qcontract
