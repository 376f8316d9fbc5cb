// rng.hpp — deterministic random matrices for property suites and tests.
// Gaussians are produced by an explicit Box-Muller transform so streams are
// bit-identical across standard libraries.

#pragma once

#include "density.hpp"

#include <cstdint>
#include <random>

namespace qcontract {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(); // [0, 1)
    double gaussian();
    Complex complex_gaussian();

    Matrix ginibre(Index rows, Index cols);
    Matrix unitary(Index d);
    Matrix isometry(Index rows, Index cols); // rows >= cols, V^* V = 1

    // GG^*/Tr with G of shape d x rank; rank = d gives a full-rank state.
    DensityOperator state(Index d, Index rank);
    DensityOperator full_rank_state(Index d) { return state(d, d); }

    // Joint probability table with positive entries summing to 1.
    RealMatrix joint_table(Index rows, Index cols);

private:
    std::mt19937_64 engine_;
};

} // namespace qcontract
