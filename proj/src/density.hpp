// density.hpp — density operators with a cached spectral decomposition

#pragma once

#include "linalg.hpp"

namespace qcontract {

class DensityOperator {
public:
    // Validates PSD (smallest eigenvalue >= -psd_factor * ||m||_F, then
    // clipped to 0) and unit trace; renormalizes the trace exactly.
    explicit DensityOperator(const Matrix& m);

    const Matrix& matrix() const { return matrix_; }
    Index dim() const { return matrix_.rows(); }

    const RealVector& eigenvalues() const { return spectral_.eigenvalues; } // descending, clipped
    const Matrix& eigenvectors() const { return spectral_.eigenvectors; }

    double lambda_max() const { return spectral_.eigenvalues(0); }
    double lambda_min() const { return spectral_.eigenvalues(dim() - 1); }
    double rank_cutoff() const { return tols().rank_factor * lambda_max(); }
    Index rank() const;
    bool full_rank() const { return rank() == dim(); }

    Matrix support_projector() const;
    // Pseudo power in the cached eigenbasis; eigenvalues at or below the rank
    // cutoff map to 0 for any p.
    Matrix power(double p) const;
    Matrix sqrt() const { return power(0.5); }

    // Columns: eigenvectors spanning the support (descending eigenvalues).
    Matrix support_isometry() const;

private:
    Matrix matrix_;
    SpectralDecomposition spectral_;
};

} // namespace qcontract
