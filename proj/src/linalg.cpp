#include "linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <functional>

namespace qcontract {

double frobenius(const Matrix& m) { return m.norm(); }

double hermiticity_defect(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return hermiticity_defect(m) <= tol;
}

SpectralDecomposition spectral_decompose(const Matrix& h) {
    require_square(h, "spectral_decompose");
    const double scale = frobenius(h);
    if (hermiticity_defect(h) > tols().herm_factor * std::max(scale, 1e-300))
        fail(ErrorKind::NotHermitian, "spectral_decompose: matrix is not Hermitian within tolerance");

    Eigen::SelfAdjointEigenSolver<Matrix> solver((h + h.adjoint()) / 2.0);
    if (solver.info() != Eigen::Success)
        fail(ErrorKind::ConvergenceFailure, "spectral_decompose: eigensolver did not converge");

    const Index d = h.rows();
    SpectralDecomposition out;
    out.eigenvalues = RealVector(d);
    out.eigenvectors = Matrix(d, d);
    for (Index i = 0; i < d; ++i) { // Eigen returns ascending order
        out.eigenvalues(i) = solver.eigenvalues()(d - 1 - i);
        out.eigenvectors.col(i) = solver.eigenvectors().col(d - 1 - i);
    }
    return out;
}

RealVector singular_values(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues();
}

Matrix hermitian_function(const Matrix& h, const std::function<double(double)>& fn) {
    SpectralDecomposition s = spectral_decompose(h);
    RealVector mapped(s.eigenvalues.size());
    for (Index i = 0; i < s.eigenvalues.size(); ++i) mapped(i) = fn(s.eigenvalues(i));
    return s.eigenvectors * mapped.asDiagonal() * s.eigenvectors.adjoint();
}

Matrix pseudo_power(const Matrix& h, double p) {
    SpectralDecomposition s = spectral_decompose(h);
    const double cutoff = tols().rank_factor * std::max(s.eigenvalues(0), 0.0);
    RealVector mapped(s.eigenvalues.size());
    for (Index i = 0; i < s.eigenvalues.size(); ++i) {
        const double lam = s.eigenvalues(i);
        mapped(i) = lam > cutoff ? std::pow(lam, p) : 0.0;
    }
    return s.eigenvectors * mapped.asDiagonal() * s.eigenvectors.adjoint();
}

Matrix tensor(const Matrix& a, const Matrix& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

Matrix partial_trace(const Matrix& m, int keep, Index dim_a, Index dim_b) {
    require_dims(m, dim_a * dim_b, dim_a * dim_b, "partial_trace");
    if (keep == 0) {
        Matrix out = Matrix::Zero(dim_a, dim_a);
        for (Index i = 0; i < dim_a; ++i)
            for (Index j = 0; j < dim_a; ++j)
                for (Index k = 0; k < dim_b; ++k) out(i, j) += m(i * dim_b + k, j * dim_b + k);
        return out;
    }
    if (keep == 1) {
        Matrix out = Matrix::Zero(dim_b, dim_b);
        for (Index k = 0; k < dim_b; ++k)
            for (Index l = 0; l < dim_b; ++l)
                for (Index i = 0; i < dim_a; ++i) out(k, l) += m(i * dim_b + k, i * dim_b + l);
        return out;
    }
    fail(ErrorKind::DomainError, "partial_trace: keep must be 0 (A) or 1 (B)");
}

Matrix permute_systems(const Matrix& m, const std::vector<Index>& dims, const std::vector<Index>& perm) {
    const size_t n = dims.size();
    if (perm.size() != n) fail(ErrorKind::DimensionMismatch, "permute_systems: dims/perm size mismatch");
    Index total = 1;
    for (Index d : dims) total *= d;
    require_dims(m, total, total, "permute_systems");

    std::vector<Index> out_dims(n), in_strides(n), out_strides(n);
    for (size_t k = 0; k < n; ++k) out_dims[k] = dims[perm[k]];
    in_strides[n - 1] = 1;
    for (size_t k = n - 1; k > 0; --k) in_strides[k - 1] = in_strides[k] * dims[k];
    out_strides[n - 1] = 1;
    for (size_t k = n - 1; k > 0; --k) out_strides[k - 1] = out_strides[k] * out_dims[k];

    // map output multi-index (over permuted factors) back to an input flat index
    std::vector<Index> digits(n);
    const auto to_input = [&](Index flat) {
        Index rem = flat;
        for (size_t k = 0; k < n; ++k) {
            digits[k] = rem / out_strides[k];
            rem %= out_strides[k];
        }
        Index idx = 0;
        for (size_t k = 0; k < n; ++k) idx += digits[k] * in_strides[perm[k]];
        return idx;
    };

    std::vector<Index> row_map(total);
    for (Index r = 0; r < total; ++r) row_map[r] = to_input(r);
    Matrix out(total, total);
    for (Index r = 0; r < total; ++r)
        for (Index c = 0; c < total; ++c) out(r, c) = m(row_map[r], row_map[c]);
    return out;
}

Matrix basis_op(Index d, Index i, Index j) {
    if (i < 0 || j < 0 || i >= d || j >= d) fail(ErrorKind::DomainError, "basis_op: index out of range");
    Matrix m = Matrix::Zero(d, d);
    m(i, j) = 1.0;
    return m;
}

Matrix max_entangled(Index d) {
    Matrix m = Matrix::Zero(d * d, d * d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) m(i * d + i, j * d + j) = 1.0;
    return m;
}

std::vector<Matrix> gell_mann_basis(Index d) {
    std::vector<Matrix> basis;
    basis.reserve(static_cast<size_t>(d * d - 1));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (Index n = 0; n < d; ++n)
        for (Index m = n + 1; m < d; ++m) {
            Matrix sym = Matrix::Zero(d, d);
            sym(n, m) = inv_sqrt2;
            sym(m, n) = inv_sqrt2;
            basis.push_back(sym);
            Matrix anti = Matrix::Zero(d, d);
            anti(n, m) = Complex(0.0, -inv_sqrt2);
            anti(m, n) = Complex(0.0, inv_sqrt2);
            basis.push_back(anti);
        }
    for (Index n = 1; n < d; ++n) {
        Matrix diag = Matrix::Zero(d, d);
        const double norm = 1.0 / std::sqrt(static_cast<double>(n * (n + 1)));
        for (Index k = 0; k < n; ++k) diag(k, k) = norm;
        diag(n, n) = -static_cast<double>(n) * norm;
        basis.push_back(diag);
    }
    return basis;
}

std::vector<Matrix> hermitian_basis(Index d) {
    std::vector<Matrix> basis;
    basis.reserve(static_cast<size_t>(d * d));
    basis.push_back(Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
    auto gm = gell_mann_basis(d);
    basis.insert(basis.end(), gm.begin(), gm.end());
    return basis;
}

Matrix realign(const Matrix& m, Index dim_a, Index dim_b) {
    require_dims(m, dim_a * dim_b, dim_a * dim_b, "realign");
    Matrix out(dim_a * dim_a, dim_b * dim_b);
    for (Index i = 0; i < dim_a; ++i)
        for (Index j = 0; j < dim_a; ++j)
            for (Index k = 0; k < dim_b; ++k)
                for (Index l = 0; l < dim_b; ++l)
                    out(i * dim_a + j, k * dim_b + l) = m(i * dim_b + k, j * dim_b + l);
    return out;
}

} // namespace qcontract
