#include "helpers.hpp"

#include "weighted_space.hpp"

using namespace qctest;

TEST_CASE("apply_J fixed cases") {
    SUBCASE("J(1) = sigma for any normalized f") {
        Rng rng(31);
        const DensityOperator sigma = rng.full_rank_state(3);
        for (const MonotoneFn& f : catalog()) {
            const WeightedSpace space(f, sigma, 1.0);
            CHECK(max_abs_diff(space.apply(Matrix::Identity(3, 3)), sigma.matrix()) < 1e-12);
        }
    }
    SUBCASE("scalar sigma acts as multiplication by 1/d") {
        Rng rng(32);
        const Matrix x = rng.ginibre(2, 2);
        const WeightedSpace space(MonotoneFn::gm(), maximally_mixed(2), 1.0);
        CHECK(max_abs_diff(space.apply(x), x / 2.0) < 1e-13);
    }
    SUBCASE("off-diagonal weight is the perspective value") {
        const WeightedSpace space(MonotoneFn::gm(), DensityOperator{diag2(0.75, 0.25)}, 1.0);
        const Matrix out = space.apply(basis_op(2, 0, 1));
        CHECK(out(0, 1).real() == doctest::Approx(std::sqrt(3.0) / 4.0)); // sqrt(3/16)
        CHECK(std::abs(out(1, 0)) < 1e-15);
    }
    SUBCASE("hermitian preserving for symmetry-inducing f") {
        Rng rng(33);
        const DensityOperator sigma = rng.full_rank_state(3);
        const Matrix h = random_hermitian(rng, 3);
        for (double p : {-1.0, -0.5, 0.5, 1.0})
            CHECK(hermiticity_defect(WeightedSpace(MonotoneFn::lm(), sigma, p).apply(h)) < 1e-12);
    }
}

TEST_CASE("inner product identities") {
    Rng rng(34);
    const DensityOperator sigma = rng.full_rank_state(2);
    const Matrix x = random_hermitian(rng, 2);
    SUBCASE("<1, X> = Tr[sigma X]") {
        for (const MonotoneFn& f : catalog()) {
            const WeightedSpace space(f, sigma, 1.0);
            const Complex lhs = space.inner_product(Matrix::Identity(2, 2), x);
            CHECK(std::abs(lhs - (sigma.matrix() * x).trace()) < 1e-12);
        }
    }
    SUBCASE("<1, 1>* = Tr[sigma^{-1}]") {
        const WeightedSpace star(MonotoneFn::hm(), sigma, -1.0);
        const Complex lhs = star.inner_product(Matrix::Identity(2, 2), Matrix::Identity(2, 2));
        const double rhs = sigma.power(-1.0).trace().real();
        CHECK(lhs.real() == doctest::Approx(rhs).epsilon(1e-10));
    }
    SUBCASE("<Z, Z> at the maximally mixed state is 1") {
        for (const MonotoneFn& f : catalog()) {
            const WeightedSpace space(f, maximally_mixed(2), 1.0);
            CHECK(space.inner_product(pauli_z(), pauli_z()).real() == doctest::Approx(1.0));
        }
    }
    SUBCASE("real on hermitian pairs for symmetry-inducing f") {
        const Matrix y = random_hermitian(rng, 2);
        for (const MonotoneFn& f : catalog())
            CHECK(std::abs(WeightedSpace(f, sigma, 1.0).inner_product(x, y).imag()) < 1e-12);
    }
}

TEST_CASE("expectation") {
    const DensityOperator sigma{diag2(0.75, 0.25)};
    CHECK(expectation(sigma, Matrix::Identity(2, 2)).real() == doctest::Approx(1.0));
    CHECK(expectation(sigma, pauli_z()).real() == doctest::Approx(0.5));
    CHECK(std::abs(expectation(maximally_mixed(2), pauli_x())) < 1e-15);
}

TEST_CASE("variance and covariance") {
    Rng rng(35);
    const DensityOperator sigma = rng.full_rank_state(3);
    SUBCASE("constant observables have zero variance") {
        for (const MonotoneFn& f : catalog())
            CHECK(std::abs(variance(f, sigma, Matrix::Identity(3, 3))) < 1e-12);
    }
    SUBCASE("centered observables: variance equals the squared norm") {
        Matrix x = random_hermitian(rng, 3);
        x -= expectation(sigma, x) * Matrix::Identity(3, 3); // now Tr[sigma x] = 0
        for (const MonotoneFn& f : catalog()) {
            const WeightedSpace space(f, sigma, 1.0);
            CHECK(variance(f, sigma, x) == doctest::Approx(space.inner_product(x, x).real()).epsilon(1e-10));
        }
    }
    SUBCASE("classical +-1 outcome variance") {
        for (const MonotoneFn& f : catalog())
            CHECK(variance(f, maximally_mixed(2), pauli_z()) == doctest::Approx(1.0));
    }
    SUBCASE("variance is nonnegative, even for non-hermitian inputs") {
        const Matrix g = rng.ginibre(3, 3);
        for (const MonotoneFn& f : catalog()) CHECK(variance(f, sigma, g) >= -1e-12);
    }
    SUBCASE("covariance specializations") {
        const Matrix y = random_hermitian(rng, 3);
        const MonotoneFn f = MonotoneFn::lm();
        CHECK(std::abs(covariance(f, sigma, Matrix::Identity(3, 3), y)) < 1e-12);
        CHECK(covariance(f, sigma, y, y).real() == doctest::Approx(variance(f, sigma, y)));
    }
    SUBCASE("commuting diagonal case reduces to classical covariance") {
        const DensityOperator d{diag2(0.6, 0.4)};
        const Matrix x = diag2(2.0, -1.0);
        const Matrix y = diag2(0.5, 3.0);
        const double ex = 0.6 * 2.0 - 0.4;
        const double ey = 0.6 * 0.5 + 0.4 * 3.0;
        const double classical = 0.6 * (2.0 - ex) * (0.5 - ey) + 0.4 * (-1.0 - ex) * (3.0 - ey);
        for (const MonotoneFn& f : catalog())
            CHECK(covariance(f, d, x, y).real() == doctest::Approx(classical).epsilon(1e-10));
    }
}

TEST_CASE("J^p is self-adjoint for the HS inner product") {
    Rng rng(36);
    const DensityOperator sigma = rng.full_rank_state(3);
    for (double p : {-1.0, -0.5, 0.5, 1.0})
        for (const MonotoneFn& f : catalog()) {
            const WeightedSpace space(f, sigma, p);
            const Matrix x = rng.ginibre(3, 3);
            const Matrix y = rng.ginibre(3, 3);
            const Complex lhs = (space.apply(x).adjoint() * y).trace();
            const Complex rhs = (x.adjoint() * space.apply(y)).trace();
            CHECK(std::abs(lhs - rhs) < 1e-10);
        }
}

TEST_CASE("inverse round trip projects onto the support") {
    SUBCASE("full rank: identity") {
        Rng rng(37);
        const DensityOperator sigma = rng.full_rank_state(3);
        const Matrix x = rng.ginibre(3, 3);
        const WeightedSpace fwd(MonotoneFn::gm(), sigma, 1.0);
        const WeightedSpace bwd(MonotoneFn::gm(), sigma, -1.0);
        CHECK(max_abs_diff(bwd.apply(fwd.apply(x)), x) < 1e-12);
    }
    SUBCASE("rank deficient: support block survives, kernel block dies") {
        Matrix m = Matrix::Zero(3, 3);
        m(0, 0) = 0.7;
        m(1, 1) = 0.3; // eigenvalue 0 in slot 2
        const DensityOperator sigma{m};
        Rng rng(38);
        const Matrix x = rng.ginibre(3, 3);
        const WeightedSpace fwd(MonotoneFn::gm(), sigma, 1.0);
        const WeightedSpace bwd(MonotoneFn::gm(), sigma, -1.0);
        const Matrix round = bwd.apply(fwd.apply(x));
        const Matrix proj = sigma.support_projector();
        CHECK(max_abs_diff(round, proj * x * proj) < 1e-12);
    }
}

TEST_CASE("monotone ordering of the quadratic forms") {
    Rng rng(39);
    const DensityOperator sigma = rng.full_rank_state(4);
    const Matrix x = random_hermitian(rng, 4);
    const auto quad = [&](const MonotoneFn& f) {
        return WeightedSpace(f, sigma, 1.0).inner_product(x, x).real();
    };
    CHECK(quad(MonotoneFn::hm()) <= quad(MonotoneFn::gm()) + 1e-10);
    CHECK(quad(MonotoneFn::gm()) <= quad(MonotoneFn::lm()) + 1e-10);
    CHECK(quad(MonotoneFn::lm()) <= quad(MonotoneFn::am()) + 1e-10);
}

TEST_CASE("multiplicativity over tensor products holds exactly for powers") {
    Rng rng(40);
    const DensityOperator rho = rng.full_rank_state(2);
    const DensityOperator sigma = rng.full_rank_state(2);
    const DensityOperator joint{tensor(rho.matrix(), sigma.matrix())};
    const Matrix x = rng.ginibre(4, 4);

    const auto product_apply = [&](const MonotoneFn& f) {
        const WeightedSpace ja(f, rho, 1.0);
        const WeightedSpace jb(f, sigma, 1.0);
        const Matrix u = tensor(rho.eigenvectors(), sigma.eigenvectors());
        const Matrix coords = (u.adjoint() * x * u).cwiseProduct(tensor(ja.weights(), jb.weights()));
        return (u * coords * u.adjoint()).eval();
    };

    for (double k : {0.3, 0.5, 1.0}) {
        const MonotoneFn f = MonotoneFn::power(k);
        CHECK(max_abs_diff(WeightedSpace(f, joint, 1.0).apply(x), product_apply(f)) < 1e-10);
    }
    for (const char* name : {"am", "hm", "lm"}) {
        const MonotoneFn f = MonotoneFn::from_name(name);
        CHECK(max_abs_diff(WeightedSpace(f, joint, 1.0).apply(x), product_apply(f)) > 1e-6);
    }
}

TEST_CASE("variance data processing") {
    Rng rng(41);
    for (int t = 0; t < 10; ++t) {
        const DensityOperator sigma = rng.full_rank_state(3);
        const ChannelRep e = random_cptp(rng, 3, 3);
        const DensityOperator esigma{e.apply(sigma.matrix())};
        const Matrix x = random_hermitian(rng, 3);
        for (const MonotoneFn& f : catalog())
            CHECK(variance(f, sigma, e.apply_adjoint(x)) <= variance(f, esigma, x) + 1e-9);
    }
}

TEST_CASE("choi of the GM multiplication operator is the canonical purification") {
    Rng rng(43);
    const DensityOperator rho = rng.full_rank_state(3);
    const WeightedSpace j(MonotoneFn::gm(), rho, 1.0);
    const Matrix choi_in_eigenbasis = choi_in_basis([&](const Matrix& x) { return j.apply(x); },
                                                    rho.eigenvectors(), 3);
    // in eigenbasis coordinates this is diag(lam)^{1/2} Phi+ diag(lam)^{1/2}
    Matrix expected = Matrix::Zero(9, 9);
    for (Index i = 0; i < 3; ++i)
        for (Index k = 0; k < 3; ++k)
            expected(i * 3 + i, k * 3 + k) = std::sqrt(rho.eigenvalues()(i) * rho.eigenvalues()(k));
    const Matrix u = tensor(rho.eigenvectors(), rho.eigenvectors());
    CHECK(max_abs_diff(choi_in_eigenbasis, u * expected * u.adjoint()) < 1e-10);
}

TEST_CASE("rank-deficient warning fires only for inverted kernel entries") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    const DensityOperator pure{m};
    CHECK(WeightedSpace(MonotoneFn::am(), pure, -1.0).rank_deficient_warning());     // am keeps kernel entries
    CHECK_FALSE(WeightedSpace(MonotoneFn::gm(), pure, -1.0).rank_deficient_warning()); // gm restricts support
    CHECK_FALSE(WeightedSpace(MonotoneFn::am(), pure, 1.0).rank_deficient_warning());  // positive power
    Rng rng(44);
    CHECK_FALSE(WeightedSpace(MonotoneFn::am(), rng.full_rank_state(2), -1.0).rank_deficient_warning());
}

TEST_CASE("weighted space rejects unsupported powers") {
    Rng rng(45);
    CHECK_THROWS_AS(WeightedSpace(MonotoneFn::gm(), rng.full_rank_state(2), 0.25), Error);
}
