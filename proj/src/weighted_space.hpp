// weighted_space.hpp — the J^p operators as Hadamard maps in the eigenbasis
// of the weighting state, the induced inner products, and the
// non-commutative expectation / variance / covariance

#pragma once

#include "density.hpp"
#include "monotone.hpp"

namespace qcontract {

class WeightedSpace {
public:
    // p in {-1, -1/2, 1/2, 1}. Negative powers use the pseudoinverse rule:
    // entries with P_f(lambda_i, lambda_j) = 0 map to 0.
    WeightedSpace(MonotoneFn f, DensityOperator sigma, double p);

    const MonotoneFn& f() const { return f_; }
    const DensityOperator& sigma() const { return sigma_; }
    double power() const { return p_; }
    const Matrix& support_projector() const { return support_projector_; }

    // Set when p < 0, sigma is rank-deficient, and f is not
    // support-restricting: those kernel entries are genuinely inverted and
    // downstream contraction formulas assume full rank.
    bool rank_deficient_warning() const { return rank_deficient_warning_; }

    Matrix apply(const Matrix& x) const;
    Complex inner_product(const Matrix& x, const Matrix& y) const; // Tr[x^* J^p(y)]

    // P_f(lambda_i, lambda_j)^p entries, indexed in sigma's eigenbasis.
    const Matrix& weights() const { return weights_; }

    // Internal-coordinate variants used by the contraction pipeline: operands
    // already written in sigma's eigenbasis.
    Matrix apply_in_basis(const Matrix& x_coords) const { return weights_.cwiseProduct(x_coords); }
    Complex inner_product_in_basis(const Matrix& x_coords, const Matrix& y_coords) const;

    Matrix to_basis(const Matrix& x) const;   // U^* x U
    Matrix from_basis(const Matrix& x) const; // U x U^*

private:
    MonotoneFn f_;
    DensityOperator sigma_;
    double p_;
    RealMatrix weights_real_;
    Matrix weights_;
    Matrix support_projector_;
    bool rank_deficient_warning_ = false;
};

// E_{f,sigma}[X] = <1, X>_{f,sigma} = Tr[sigma X], independent of f.
Complex expectation(const DensityOperator& sigma, const Matrix& x);

// Cov_{f,sigma}(X, Y) with mean subtraction; covariance(X, X) is real >= 0.
Complex covariance(const MonotoneFn& f, const DensityOperator& sigma, const Matrix& x, const Matrix& y);
double variance(const MonotoneFn& f, const DensityOperator& sigma, const Matrix& x);

} // namespace qcontract
