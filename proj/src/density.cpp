#include "density.hpp"

#include <cmath>

namespace qcontract {

DensityOperator::DensityOperator(const Matrix& m) {
    require_square(m, "DensityOperator");
    const double scale = std::max(frobenius(m), 1e-300);
    if (hermiticity_defect(m) > tols().herm_factor * scale)
        fail(ErrorKind::NotHermitian, "DensityOperator: matrix is not Hermitian within tolerance");

    spectral_ = spectral_decompose(m);
    const double floor = -tols().psd_factor * scale;
    const Index d = m.rows();
    for (Index i = 0; i < d; ++i) {
        if (spectral_.eigenvalues(i) < floor)
            fail(ErrorKind::NotPSD, "DensityOperator: negative eigenvalue " + std::to_string(spectral_.eigenvalues(i)));
        if (spectral_.eigenvalues(i) < 0) spectral_.eigenvalues(i) = 0.0;
    }

    const double tr = spectral_.eigenvalues.sum();
    if (std::abs(tr - 1.0) > tols().trace_one)
        fail(ErrorKind::DomainError, "DensityOperator: trace is " + std::to_string(tr) + ", expected 1");
    spectral_.eigenvalues /= tr;
    matrix_ = spectral_.eigenvectors * spectral_.eigenvalues.asDiagonal() * spectral_.eigenvectors.adjoint();
}

Index DensityOperator::rank() const {
    const double cutoff = rank_cutoff();
    Index r = 0;
    while (r < dim() && spectral_.eigenvalues(r) > cutoff) ++r;
    return r;
}

Matrix DensityOperator::support_projector() const {
    const Index r = rank();
    const Matrix v = spectral_.eigenvectors.leftCols(r);
    return v * v.adjoint();
}

Matrix DensityOperator::power(double p) const {
    const double cutoff = rank_cutoff();
    RealVector mapped(dim());
    for (Index i = 0; i < dim(); ++i) {
        const double lam = spectral_.eigenvalues(i);
        mapped(i) = lam > cutoff ? std::pow(lam, p) : 0.0;
    }
    return spectral_.eigenvectors * mapped.asDiagonal() * spectral_.eigenvectors.adjoint();
}

Matrix DensityOperator::support_isometry() const {
    return spectral_.eigenvectors.leftCols(rank());
}

} // namespace qcontract
