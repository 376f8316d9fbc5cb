// linalg.hpp — dense complex linear algebra: spectral/SVD decompositions,
// tensor products, partial traces, system permutations, operator bases

#pragma once

#include "types.hpp"

#include <functional>

namespace qcontract {

struct SpectralDecomposition {
    RealVector eigenvalues; // sorted descending
    Matrix eigenvectors;    // columns, unitary
};

double frobenius(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol);
double hermiticity_defect(const Matrix& m); // max |m(i,j) - conj(m(j,i))|

// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
// Throws NotHermitian / ConvergenceFailure.
SpectralDecomposition spectral_decompose(const Matrix& h);

// Singular values of an arbitrary matrix, descending.
RealVector singular_values(const Matrix& m);

// Entrywise function of a Hermitian matrix through its spectrum.
Matrix hermitian_function(const Matrix& h, const std::function<double(double)>& fn);

// Pseudo power: eigenvalues below rank_factor * lambda_max are treated as 0
// (0^p := 0, including p <= 0).
Matrix pseudo_power(const Matrix& h, double p);

Matrix tensor(const Matrix& a, const Matrix& b);

// Partial trace of a square matrix on A (x) B; keep = 0 keeps A, 1 keeps B.
Matrix partial_trace(const Matrix& m, int keep, Index dim_a, Index dim_b);

// Reorders tensor factors: out = M with subsystems permuted so that factor
// perm[k] of the input sits at slot k of the output.
Matrix permute_systems(const Matrix& m, const std::vector<Index>& dims, const std::vector<Index>& perm);

// |i><j| on C^d.
Matrix basis_op(Index d, Index i, Index j);

// Unnormalized maximally entangled operator sum_ij |ii><jj| on C^d (x) C^d.
Matrix max_entangled(Index d);

// Generalized Gell-Mann matrices: HS-orthonormal basis of the traceless
// Hermitian operators on C^d (d^2 - 1 elements).
std::vector<Matrix> gell_mann_basis(Index d);

// Gell-Mann basis plus 1/sqrt(d): HS-orthonormal basis of Herm(C^d).
std::vector<Matrix> hermitian_basis(Index d);

// Row-reshuffle of an operator on A (x) B into a d_A^2 x d_B^2 matrix whose
// singular values are the operator-Schmidt coefficients over HS spaces.
Matrix realign(const Matrix& m, Index dim_a, Index dim_b);

inline void require_square(const Matrix& m, const char* who) {
    if (m.rows() != m.cols()) fail(ErrorKind::DimensionMismatch, std::string(who) + ": matrix must be square");
}

inline void require_dims(const Matrix& m, Index rows, Index cols, const char* who) {
    if (m.rows() != rows || m.cols() != cols)
        fail(ErrorKind::DimensionMismatch,
             std::string(who) + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                 std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

} // namespace qcontract
