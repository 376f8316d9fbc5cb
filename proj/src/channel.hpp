// channel.hpp — CPTP channels (Choi + Kraus), general linear-map handles with
// two-sided Kraus pairs, Choi conversions, and stock channel constructions

#pragma once

#include "density.hpp"

namespace qcontract {

// Kraus list from a PSD Choi operator; eigenvalues below
// kraus_trunc_factor * lambda_max are dropped. Choi convention:
// Omega = sum_ij |i><j| (x) E(|i><j|), so K(b, i) = sqrt(w) v[i * dim_out + b].
std::vector<Matrix> kraus_from_choi(const Matrix& choi, Index dim_in, Index dim_out);

class ChannelRep {
public:
    static ChannelRep from_choi(const Matrix& choi, Index dim_in, Index dim_out);
    static ChannelRep from_kraus(const std::vector<Matrix>& kraus);

    Index dim_in() const { return dim_in_; }
    Index dim_out() const { return dim_out_; }
    const Matrix& choi() const { return choi_; }
    const std::vector<Matrix>& kraus() const { return kraus_; }

    Matrix apply(const Matrix& x) const;         // sum_k K x K^*
    Matrix apply_adjoint(const Matrix& y) const; // sum_k K^* y K

    // Channel acting on row-major vectorized operators, a d^2 x d^2 matrix.
    Matrix transfer_matrix() const;

private:
    Index dim_in_ = 0, dim_out_ = 0;
    Matrix choi_;
    std::vector<Matrix> kraus_;
};

// A linear map that need not be CP, stored as its Choi operator plus a
// left/right pair list acting as X -> sum_k G_k X L_k^*.
class LinearMapHandle {
public:
    static LinearMapHandle from_choi(const Matrix& choi, Index dim_in, Index dim_out);
    static LinearMapHandle from_apply(const std::function<Matrix(const Matrix&)>& apply, Index dim_in, Index dim_out);

    Index dim_in() const { return dim_in_; }
    Index dim_out() const { return dim_out_; }
    const Matrix& choi() const { return choi_; }
    bool hermitian_preserving() const { return hermitian_preserving_; }
    Matrix apply(const Matrix& x) const;

private:
    Index dim_in_ = 0, dim_out_ = 0;
    Matrix choi_;
    std::vector<std::pair<Matrix, Matrix>> pairs_;
    bool hermitian_preserving_ = false;
};

// Choi of the composite maps.back() o ... o maps.front(), computed by pushing
// the unnormalized maximally entangled operator through the chain.
Matrix choi_of_composition(const std::vector<const LinearMapHandle*>& maps);

// Choi with the A-factor written in the given orthonormal basis (columns of
// basis): sum_ij |b_i><b_j| (x) apply(|b_i><b_j|).
Matrix choi_in_basis(const std::function<Matrix(const Matrix&)>& apply, const Matrix& basis, Index dim_out);

// Stock channels.
ChannelRep identity_channel(Index d);
ChannelRep depolarizing_channel(double lambda, Index d);
ChannelRep replacer_channel(const DensityOperator& tau, Index dim_in);
ChannelRep unitary_channel(const Matrix& u);
// Keeps the diagonal, scales off-diagonal entries by 1 - gamma.
ChannelRep dephasing_channel(double gamma, Index d);

// Applies E to one factor of an operator on A (x) B: which = 0 acts on A
// (dim_a must equal e.dim_in()), which = 1 acts on B.
Matrix apply_on_subsystem(const ChannelRep& e, const Matrix& joint, Index dim_a, Index dim_b, int which);

// Unique fixed point of a channel with dim_in == dim_out, located as the
// unit-trace eigenvector of the transfer matrix at eigenvalue 1.
// NoUniqueFixedPoint if the eigenvalue-1 eigenspace has dimension > 1.
DensityOperator fixed_point(const ChannelRep& e);

} // namespace qcontract
