#include "rng.hpp"

#include <Eigen/QR>

#include <cmath>

namespace qcontract {

double Rng::uniform() {
    // 53-bit mantissa from the top bits of the engine output
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
}

Complex Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im) / std::sqrt(2.0);
}

Matrix Rng::ginibre(Index rows, Index cols) {
    Matrix g(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) g(i, j) = complex_gaussian();
    return g;
}

Matrix Rng::isometry(Index rows, Index cols) {
    if (rows < cols) fail(ErrorKind::DimensionMismatch, "isometry: rows < cols");
    Eigen::HouseholderQR<Matrix> qr(ginibre(rows, cols));
    Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
    // fix the R-diagonal phases so the distribution is Haar and deterministic
    Matrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
    for (Index j = 0; j < cols; ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

Matrix Rng::unitary(Index d) { return isometry(d, d); }

DensityOperator Rng::state(Index d, Index rank) {
    const Matrix g = ginibre(d, rank);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace();
    return DensityOperator(rho);
}

RealMatrix Rng::joint_table(Index rows, Index cols) {
    RealMatrix p(rows, cols);
    double total = 0.0;
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) {
            const double u = uniform();
            p(i, j) = 0.02 + u; // bounded away from zero
            total += p(i, j);
        }
    p /= total;
    return p;
}

} // namespace qcontract
