// maps.hpp — canonical purification, channel extraction from a joint state,
// Petz recovery, the Heisenberg/Schroedinger time-reversal maps, f-couplings,
// and pinching

#pragma once

#include "channel.hpp"
#include "monotone.hpp"
#include "weighted_space.hpp"

namespace qcontract {

// psi^rho = rho^{1/2} Phi+ rho^{1/2} with Phi+ written in rho's eigenbasis
// (the transpose convention used throughout): a pure state on A (x) A whose
// marginals both equal rho.
Matrix canonical_purification(const DensityOperator& rho);

// The unique channel E with (id (x) E)(psi^rho_A) = rho_AB, via the closed
// form Omega = rho_A^{-1/2} rho_AB rho_A^{-1/2} computed in rho_A's
// eigenbasis. A rank-deficient marginal is compressed onto its support
// first, so dim_in of the result equals rank(rho_A). NotCPTP if the
// reconstruction check fails.
ChannelRep extract_channel(const DensityOperator& rho_ab, Index dim_a, Index dim_b);

// P(X) = sigma^{1/2} E^*( E(sigma)^{-1/2} X E(sigma)^{-1/2} ) sigma^{1/2}.
LinearMapHandle petz_recovery(const ChannelRep& e, const DensityOperator& sigma);

// R = J^{-1}_{f,E(sigma)} o E o J_{f,sigma}; unital, expectation-preserving.
LinearMapHandle heisenberg_reversal(const MonotoneFn& f, const ChannelRep& e, const DensityOperator& sigma);

// S = J_{f,sigma} o E^* o J^{-1}_{f,E(sigma)}; sends E(sigma) back to sigma
// and is the HS-adjoint of the Heisenberg reversal.
LinearMapHandle schrodinger_reversal(const MonotoneFn& f, const ChannelRep& e, const DensityOperator& sigma);

// H = Omega_{E o J_{f,sigma}} with the Choi written in sigma's eigenbasis:
// a relaxed coupling with marginals (sigma, E(sigma)). Requires f
// symmetry-inducing so the result is Hermitian.
Matrix f_coupling(const MonotoneFn& f, const ChannelRep& e, const DensityOperator& sigma);

// Block-diagonal projection of X onto sigma's eigenspaces (eigenvalues are
// clustered at degeneracy_factor * lambda_max).
Matrix pinching(const DensityOperator& sigma, const Matrix& x);

} // namespace qcontract
