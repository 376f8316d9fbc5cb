// divergences.hpp — trace distance, relative entropy, sandwiched Renyi
// divergences, and max-divergence. All logarithms are base 2.

#pragma once

#include "density.hpp"

namespace qcontract {

struct DivergenceValue {
    double value = 0.0;
    bool support_ok = true; // rho << sigma held (or the alpha < 1 overlap condition)
    bool is_infinity() const { return !support_ok; }
};

// (1/2) ||rho - sigma||_1, in [0, 1].
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);

// Tr[rho (log2 rho - log2 sigma)] on the supports; infinity when the support
// condition fails.
DivergenceValue relative_entropy(const DensityOperator& rho, const DensityOperator& sigma);

// Sandwiched Renyi divergence of order alpha in (0,1) u (1,inf).
DivergenceValue sandwiched_renyi(double alpha, const DensityOperator& rho, const DensityOperator& sigma);

// log2 || sigma^{-1/2} rho sigma^{-1/2} ||_inf on the supports.
DivergenceValue d_max(const DensityOperator& rho, const DensityOperator& sigma);

} // namespace qcontract
