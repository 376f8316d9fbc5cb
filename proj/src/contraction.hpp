// contraction.hpp — chi^2_f divergences, the contraction-coefficient pipeline
// (weighted Gram-Schmidt ONB, standard matrix, second eigenvalue),
// DPI-saturation certification, and mixing-time bounds

#pragma once

#include "maps.hpp"

#include <optional>

namespace qcontract {

// <rho - sigma, J^{-1}_{f,sigma}(rho - sigma)>. Returns +inf with
// support_ok = false when rho is not carried by supp(sigma).
struct Chi2Value {
    double value = 0.0;
    bool support_ok = true;
    bool is_infinity() const { return !support_ok; }
};
Chi2Value chi2_f(const MonotoneFn& f, const DensityOperator& rho, const DensityOperator& sigma);

struct OnbResult {
    std::vector<Matrix> elements;          // Hermitian, in the computational basis
    std::vector<Matrix> elements_coords;   // the same, in sigma's eigenbasis
    double onb_condition = 0.0;            // max |Gram - 1| entry
};

// ONB of Herm(A) under <.,.>^*_{f,sigma}; seed = {sigma^{1/2}} + Gell-Mann
// basis, modified Gram-Schmidt with one re-orthogonalization pass.
OnbResult get_onb(const MonotoneFn& f, const DensityOperator& sigma);

struct ContractionReport {
    std::string f_id;
    double eta = 0.0;
    double lambda1 = 0.0;
    RealVector spectrum;      // descending eigenvalues of the standard matrix
    double onb_condition = 0.0;
    double imag_residual = 0.0;
    // operators reconstructed from the top two eigenvectors, computational basis
    Matrix lambda1_operator;
    Matrix lambda2_operator;
};

// eta_{chi^2_f}(E, sigma) via the standard matrix of S_{f,E,sigma} o E on the
// ONB. Preconditions: sigma full rank, and E(sigma) full rank or f
// support-restricting.
ContractionReport contraction_coefficient(const MonotoneFn& f, const ChannelRep& e, const DensityOperator& sigma);

struct DpiCertificate {
    bool saturated = false;
    double residual = 0.0; // ||(S o E)(rho) - rho||_F
};

// DPI saturation for chi^2_f: equality holds iff the Schroedinger reversal
// composed with E fixes rho.
DpiCertificate dpi_saturated(const MonotoneFn& f, const ChannelRep& e, const DensityOperator& rho,
                             const DensityOperator& sigma, double tol);

enum class ExtremeClass { Zero, One, Interior };

struct ExtremeReport {
    ExtremeClass cls = ExtremeClass::Interior;
    ContractionReport report;
    std::optional<Matrix> unity_witness; // traceless Hermitian X with (S o E)(X) = X
};

ExtremeReport contraction_extreme_check(const MonotoneFn& f, const ChannelRep& e, const DensityOperator& sigma);

enum class MixingMetric { TraceDistance, RelativeEntropy };

struct MixingBound {
    std::string f_id;
    double eta = 0.0;
    bool infinite = false;
    long long steps = 0;
};

// Smallest n with eta^{n/2} sqrt(2/lambda_min(pi)) <= delta (trace distance)
// or (2/lambda_min(pi)) eta^n <= delta (relative entropy; f must lie in the
// [HM, LM] band). Infinite when eta >= 1 - eta_gap.
MixingBound mixing_time_bound(const MonotoneFn& f, const ChannelRep& e, const DensityOperator& pi, double delta,
                              MixingMetric metric);

} // namespace qcontract
