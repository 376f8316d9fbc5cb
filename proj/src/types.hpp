// types.hpp — shared aliases, error taxonomy, and the tolerance registry

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcontract {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Complex = std::complex<double>;
using Index = Eigen::Index;

enum class ErrorKind {
    ParseError,
    DimensionMismatch,
    DomainError,
    NotHermitian,
    NotPSD,
    NotCPTP,
    NotADistribution,
    RankDeficient,
    SupportViolation,
    ConvergenceFailure,
    LinearDependence,
    ImagResidualTooLarge,
    BandViolation,
    NotFixedPoint,
    NoUniqueFixedPoint,
    InvalidProjectors,
    UnknownSuite,
    NumericError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

// Scale-relative factors are multiplied by a norm of the operand at the point
// of use; absolute entries are used as-is.
struct Tolerances {
    double herm_factor = 1e-9;         // x ||M||_F
    double psd_factor = 1e-9;          // x ||M||_F, smallest eigenvalue floor
    double recon_factor = 1e-10;       // x ||M||_F, decomposition reconstruction
    double kraus_trunc_factor = 1e-10; // x largest Choi eigenvalue
    double rank_factor = 1e-10;        // x largest eigenvalue of the state
    double tp = 1e-8;                  // trace preservation, absolute
    double trace_one = 1e-9;           // |Tr(rho) - 1|
    double support = 1e-9;             // mass allowed outside supp(sigma)
    double gs_tol = 1e-9;              // pairwise ONB inner products
    double gs_floor_factor = 1e-12;    // x seed norm, Gram-Schmidt breakdown
    double imag_residual = 1e-6;       // standard-matrix imaginary parts
    double lambda1 = 1e-7;             // |lambda_1 - 1| on standard matrices
    double eta_gap = 1e-7;             // eta within this of 1 counts as 1
    double eta_range = 1e-7;           // allowed overshoot outside [0,1]
    double fix = 1e-7;                 // ||E(pi) - pi||_F for mixing bounds
    double degeneracy_factor = 1e-10;  // x lambda_max, eigenvalue clustering

    // Named lookup used by the CLI --tol-override flag.
    void set(const std::string& key, double value);
};

Tolerances& tols();

} // namespace qcontract
