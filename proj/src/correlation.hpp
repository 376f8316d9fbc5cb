// correlation.hpp — maximal correlation coefficients via operator-Schmidt
// decompositions: mu^Lin_{f_k} over linear-operator spaces, mu_f for standard
// monotones in the [gm, am] band, the classical coefficient, the GM Schmidt
// spectrum, tensorization, block-decomposition verification, and the
// contraction <-> correlation correspondence

#pragma once

#include "contraction.hpp"

namespace qcontract {

struct CorrelationReport {
    std::string label; // monotone id, "k=<value>", or "classical"
    double mu = 0.0;
    double lambda1 = 0.0;
    RealVector schmidt_spectrum; // descending
};

// (rho_A^{-(1-k)/2} (x) rho_B^{-k/2}) rho_AB (rho_A^{-k/2} (x) rho_B^{-(1-k)/2})
// with pseudoinverse marginal powers.
Matrix rho_tilde_k(double k, const Matrix& rho_ab, Index dim_a, Index dim_b);

// Second operator-Schmidt coefficient of rho_tilde_k over HS linear spaces,
// computed on the marginal supports via realignment + SVD.
CorrelationReport mu_lin_k(double k, const Matrix& rho_ab, Index dim_a, Index dim_b);

// Second Hermitian-space Schmidt coefficient of
// (J^{-1/2}_{f,rho_A} (x) J^{-1/2}_{f,rho_B})(rho_AB). BandViolation unless f
// is normalized, symmetry-inducing, and gm <= f <= am on the standard grid.
// Accepts any Hermitian bipartite operator with unit-trace PSD marginals
// (states and relaxed couplings alike).
CorrelationReport mu_f(const MonotoneFn& f, const Matrix& rho_ab, Index dim_a, Index dim_b);

// Hirschfeld-Gebelein-Renyi coefficient: second singular value of
// diag(p_X)^{-1/2} P diag(p_Y)^{-1/2} on the supports.
double classical_mu(const RealMatrix& joint_table);

// Hermitian-space Schmidt coefficients of
// (rho_A (x) rho_B)^{-1/4} rho_AB (rho_A (x) rho_B)^{-1/4}, descending.
RealVector gm_schmidt_spectrum(const Matrix& rho_ab, Index dim_a, Index dim_b);

struct TensorizationCheck {
    double lhs = 0.0; // mu on the product state
    double rhs = 0.0; // max of the parts
    bool pass = false;
};
TensorizationCheck tensorization_check(double k, const Matrix& rho_ab, Index dim_a, Index dim_b,
                                       const Matrix& sigma_ab, Index dim_a2, Index dim_b2);

struct DecompositionCheck {
    bool ok = false;
    double block_residual = 0.0;  // mass outside the two diagonal blocks
    double weight_residual = 0.0; // |Tr[P00 rho] - p|
    double outcome_residual = 0.0; // distance of the measurement outcomes from chi^{|p}
};
// Verifies rho = p rho0_{A0 B0} + (1-p) rho1_{A1 B1} + X + X^* for the given
// subspace split, and that the induced projective measurements produce a
// perfectly correlated bit.
DecompositionCheck verify_decomposition(const Matrix& rho_ab, Index dim_a, Index dim_b, const Matrix& proj_a0,
                                        const Matrix& proj_b0, double p);

struct CorrespondenceCheck {
    double sqrt_eta = 0.0;
    double mu_on_coupling = 0.0;
    bool pass = false;
};
// sqrt(eta_{chi^2_f}(E, sigma)) against the correlation coefficient of the
// f-coupling; for f = gm the coupling side is evaluated on the genuinely
// independent state pipeline (id (x) E)(psi^sigma).
CorrespondenceCheck correspondence_check(const MonotoneFn& f, const ChannelRep& e, const DensityOperator& sigma);

} // namespace qcontract
