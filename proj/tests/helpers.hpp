// helpers.hpp — shared fixtures for the test suites

#pragma once

#include "channel.hpp"
#include "monotone.hpp"
#include "rng.hpp"

#include <doctest.h>

namespace qctest {

using namespace qcontract;

inline Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

inline Matrix pauli_x() { return mat2(0, 1, 1, 0); }
inline Matrix pauli_y() { return mat2(0, Complex(0, -1), Complex(0, 1), 0); }
inline Matrix pauli_z() { return mat2(1, 0, 0, -1); }

inline Matrix diag2(double a, double b) { return mat2(a, 0, 0, b); }

inline DensityOperator maximally_mixed(Index d) {
    return DensityOperator(Matrix::Identity(d, d) / static_cast<double>(d));
}

inline DensityOperator isotropic_state(Index d, double lambda) {
    const Matrix phi = max_entangled(d) / static_cast<double>(d);
    const Matrix pi = Matrix::Identity(d * d, d * d) / static_cast<double>(d * d);
    return DensityOperator(lambda * phi + (1.0 - lambda) * pi);
}

inline ChannelRep random_cptp(Rng& rng, Index dim_in, Index dim_out, Index env = 0) {
    if (env <= 0) env = dim_in;
    const Matrix v = rng.isometry(dim_out * env, dim_in);
    std::vector<Matrix> kraus;
    for (Index e = 0; e < env; ++e) {
        Matrix k(dim_out, dim_in);
        for (Index b = 0; b < dim_out; ++b) k.row(b) = v.row(b * env + e);
        kraus.push_back(k);
    }
    return ChannelRep::from_kraus(kraus);
}

inline Matrix random_hermitian(Rng& rng, Index d) {
    const Matrix g = rng.ginibre(d, d);
    return (g + g.adjoint()) / 2.0;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Classical joint table as a diagonal bipartite state.
inline Matrix embed_table(const RealMatrix& p) {
    const Index rows = p.rows();
    const Index cols = p.cols();
    Matrix rho = Matrix::Zero(rows * cols, rows * cols);
    for (Index x = 0; x < rows; ++x)
        for (Index y = 0; y < cols; ++y) rho(x * cols + y, x * cols + y) = p(x, y);
    return rho;
}

} // namespace qctest
