#include "helpers.hpp"

#include "maps.hpp"

using namespace qctest;

TEST_CASE("canonical purification") {
    SUBCASE("maximally mixed input gives the maximally entangled state") {
        CHECK(max_abs_diff(canonical_purification(maximally_mixed(2)), max_entangled(2) / 2.0) < 1e-14);
    }
    SUBCASE("pure input stays product") {
        Matrix m = Matrix::Zero(2, 2);
        m(0, 0) = 1.0;
        Matrix expected = Matrix::Zero(4, 4);
        expected(0, 0) = 1.0; // |00><00|
        CHECK(max_abs_diff(canonical_purification(DensityOperator{m}), expected) < 1e-13);
    }
    SUBCASE("schmidt coefficients are the square roots of the spectrum") {
        const Matrix psi = canonical_purification(DensityOperator{diag2(0.75, 0.25)});
        const SpectralDecomposition s = spectral_decompose(partial_trace(psi, 0, 2, 2));
        CHECK(std::sqrt(s.eigenvalues(0)) == doctest::Approx(std::sqrt(0.75)));
        CHECK(std::sqrt(s.eigenvalues(1)) == doctest::Approx(std::sqrt(0.25)));
    }
    SUBCASE("pure with both marginals equal to rho") {
        Rng rng(47);
        const DensityOperator rho = rng.full_rank_state(3);
        const Matrix psi = canonical_purification(rho);
        CHECK(frobenius(psi * psi - psi) < 1e-10); // projector => pure
        CHECK(std::abs(psi.trace() - 1.0) < 1e-12);
        CHECK(max_abs_diff(partial_trace(psi, 0, 3, 3), rho.matrix()) < 1e-12);
        CHECK(max_abs_diff(partial_trace(psi, 1, 3, 3), rho.matrix()) < 1e-12);
    }
}

TEST_CASE("channel extraction from a joint state") {
    Rng rng(48);
    SUBCASE("canonical purification extracts the identity") {
        const DensityOperator sigma = rng.full_rank_state(2);
        const ChannelRep e = extract_channel(DensityOperator{canonical_purification(sigma)}, 2, 2);
        CHECK(max_abs_diff(e.choi(), max_entangled(2)) < 1e-9);
    }
    SUBCASE("product state extracts the replacer") {
        const DensityOperator a = rng.full_rank_state(2);
        const DensityOperator b = rng.full_rank_state(3);
        const ChannelRep e = extract_channel(DensityOperator{tensor(a.matrix(), b.matrix())}, 2, 3);
        CHECK(max_abs_diff(e.choi(), tensor(Matrix::Identity(2, 2), b.matrix())) < 1e-9);
    }
    SUBCASE("round trip recovers a random channel") {
        for (int t = 0; t < 10; ++t) {
            const Index d = 2 + static_cast<Index>(rng.uniform() * 3.0); // 2..4
            const DensityOperator sigma = rng.full_rank_state(d);
            const ChannelRep e = random_cptp(rng, d, d);
            const Matrix joint = apply_on_subsystem(e, canonical_purification(sigma), d, d, 1);
            const ChannelRep recovered = extract_channel(DensityOperator{joint}, d, d);
            CHECK(frobenius(recovered.choi() - e.choi()) < 1e-8);
        }
    }
    SUBCASE("rank-deficient marginal is compressed to its support") {
        Matrix m = Matrix::Zero(4, 4);
        m(0, 0) = 1.0; // |00><00|, rho_A = |0><0|
        const ChannelRep e = extract_channel(DensityOperator{m}, 2, 2);
        CHECK(e.dim_in() == 1);
        CHECK(e.dim_out() == 2);
        Matrix one = Matrix::Identity(1, 1);
        CHECK(max_abs_diff(e.apply(one), diag2(1, 0)) < 1e-10);
    }
}

TEST_CASE("petz recovery map") {
    Rng rng(49);
    const DensityOperator sigma = rng.full_rank_state(3);
    SUBCASE("unitary dynamics invert exactly") {
        const Matrix u = rng.unitary(3);
        const LinearMapHandle p = petz_recovery(unitary_channel(u), sigma);
        CHECK(max_abs_diff(p.choi(), unitary_channel(u.adjoint()).choi()) < 1e-9);
    }
    SUBCASE("identity channel recovers with the identity") {
        const LinearMapHandle p = petz_recovery(identity_channel(3), sigma);
        CHECK(max_abs_diff(p.choi(), max_entangled(3)) < 1e-9);
    }
    SUBCASE("replacer recovers with the replacer to sigma") {
        const DensityOperator tau = rng.full_rank_state(2);
        const LinearMapHandle p = petz_recovery(replacer_channel(tau, 3), sigma);
        CHECK(max_abs_diff(p.choi(), tensor(Matrix::Identity(2, 2), sigma.matrix())) < 1e-9);
    }
    SUBCASE("P(E(sigma)) = sigma") {
        const ChannelRep e = random_cptp(rng, 3, 3);
        const LinearMapHandle p = petz_recovery(e, sigma);
        CHECK(frobenius(p.apply(e.apply(sigma.matrix())) - sigma.matrix()) < 1e-9);
    }
}

TEST_CASE("heisenberg time reversal") {
    Rng rng(50);
    const DensityOperator sigma = rng.full_rank_state(3);
    const ChannelRep e = random_cptp(rng, 3, 3);
    SUBCASE("gm reversal is the adjoint of the petz map") {
        const LinearMapHandle r = heisenberg_reversal(MonotoneFn::gm(), e, sigma);
        const LinearMapHandle p = petz_recovery(e, sigma);
        for (int t = 0; t < 5; ++t) {
            const Matrix x = rng.ginibre(3, 3);
            const Matrix y = rng.ginibre(3, 3);
            const Complex lhs = (r.apply(x).adjoint() * y).trace(); // <R(x), y>
            const Complex rhs = (x.adjoint() * p.apply(y)).trace(); // <x, P(y)>
            CHECK(std::abs(lhs - rhs) < 1e-9);
        }
    }
    SUBCASE("identity channel gives the identity map") {
        const LinearMapHandle r = heisenberg_reversal(MonotoneFn::lm(), identity_channel(3), sigma);
        CHECK(max_abs_diff(r.choi(), max_entangled(3)) < 1e-9);
    }
    SUBCASE("unitality and expectation preservation") {
        for (const MonotoneFn& f : catalog()) {
            const LinearMapHandle r = heisenberg_reversal(f, e, sigma);
            CHECK(max_abs_diff(r.apply(Matrix::Identity(3, 3)), Matrix::Identity(3, 3)) < 1e-9);
            const Matrix x = random_hermitian(rng, 3);
            const Complex lhs = (e.apply(sigma.matrix()) * r.apply(x)).trace();
            const Complex rhs = (sigma.matrix() * x).trace();
            CHECK(std::abs(lhs - rhs) < 1e-9);
        }
    }
}

TEST_CASE("schrodinger time reversal") {
    Rng rng(51);
    const DensityOperator sigma = rng.full_rank_state(3);
    const ChannelRep e = random_cptp(rng, 3, 3);
    SUBCASE("gm reversal is the petz recovery map") {
        const LinearMapHandle s = schrodinger_reversal(MonotoneFn::gm(), e, sigma);
        const LinearMapHandle p = petz_recovery(e, sigma);
        CHECK(max_abs_diff(s.choi(), p.choi()) < 1e-9);
    }
    SUBCASE("sends the evolved state back") {
        for (const MonotoneFn& f : catalog()) {
            const LinearMapHandle s = schrodinger_reversal(f, e, sigma);
            CHECK(frobenius(s.apply(e.apply(sigma.matrix())) - sigma.matrix()) < 1e-9);
        }
    }
    SUBCASE("unitary dynamics reverse with the inverse unitary for any f") {
        const Matrix u = rng.unitary(3);
        for (const MonotoneFn& f : catalog()) {
            const LinearMapHandle s = schrodinger_reversal(f, unitary_channel(u), sigma);
            CHECK(max_abs_diff(s.choi(), unitary_channel(u.adjoint()).choi()) < 1e-8);
        }
    }
    SUBCASE("trace preserving") {
        const LinearMapHandle s = schrodinger_reversal(MonotoneFn::hm(), e, sigma);
        const Matrix x = random_hermitian(rng, 3);
        CHECK(std::abs(s.apply(x).trace() - x.trace()) < 1e-9);
    }
    SUBCASE("mutual adjointness with the heisenberg reversal") {
        for (const MonotoneFn& f : catalog()) {
            const LinearMapHandle s = schrodinger_reversal(f, e, sigma);
            const LinearMapHandle r = heisenberg_reversal(f, e, sigma);
            for (int t = 0; t < 3; ++t) {
                const Matrix x = rng.ginibre(3, 3);
                const Matrix y = rng.ginibre(3, 3);
                const Complex lhs = (x.adjoint() * s.apply(y)).trace();
                const Complex rhs = (r.apply(x).adjoint() * y).trace();
                CHECK(std::abs(lhs - rhs) < 1e-9);
            }
        }
    }
}

TEST_CASE("petz adjoint is a contraction in the gm norm") {
    Rng rng(52);
    for (int t = 0; t < 10; ++t) {
        const DensityOperator sigma = rng.full_rank_state(3);
        const ChannelRep e = random_cptp(rng, 3, 3);
        const LinearMapHandle r = heisenberg_reversal(MonotoneFn::gm(), e, sigma);
        const DensityOperator esigma{e.apply(sigma.matrix())};
        const WeightedSpace in(MonotoneFn::gm(), sigma, 1.0);
        const WeightedSpace out(MonotoneFn::gm(), esigma, 1.0);
        const Matrix x = random_hermitian(rng, 3);
        const double lhs = std::sqrt(out.inner_product(r.apply(x), r.apply(x)).real());
        const double rhs = std::sqrt(in.inner_product(x, x).real());
        CHECK(lhs <= rhs + 1e-9);
    }
}

TEST_CASE("f-couplings") {
    Rng rng(53);
    SUBCASE("marginals are sigma and E(sigma) for every catalog f") {
        for (int t = 0; t < 5; ++t) {
            const DensityOperator sigma = rng.full_rank_state(3);
            const ChannelRep e = random_cptp(rng, 3, 2);
            for (const MonotoneFn& f : catalog()) {
                const Matrix h = f_coupling(f, e, sigma);
                CHECK(hermiticity_defect(h) < 1e-10);
                CHECK(max_abs_diff(partial_trace(h, 0, 3, 2), sigma.matrix()) < 1e-9);
                CHECK(max_abs_diff(partial_trace(h, 1, 3, 2), e.apply(sigma.matrix())) < 1e-9);
            }
        }
    }
    SUBCASE("gm coupling is the pushed-through canonical purification") {
        const DensityOperator sigma = rng.full_rank_state(2);
        const ChannelRep e = random_cptp(rng, 2, 2);
        const Matrix h = f_coupling(MonotoneFn::gm(), e, sigma);
        const Matrix pushed = apply_on_subsystem(e, canonical_purification(sigma), 2, 2, 1);
        CHECK(max_abs_diff(h, pushed) < 1e-10);
    }
    SUBCASE("gm and hm couplings are genuine states") {
        const DensityOperator sigma = rng.full_rank_state(2);
        const ChannelRep e = random_cptp(rng, 2, 2);
        for (const char* name : {"gm", "hm"}) {
            const Matrix h = f_coupling(MonotoneFn::from_name(name), e, sigma);
            const SpectralDecomposition s = spectral_decompose(h);
            CHECK(s.eigenvalues(s.eigenvalues.size() - 1) > -1e-10);
        }
    }
    SUBCASE("identity channel gives the J choi with equal marginals") {
        const DensityOperator sigma = rng.full_rank_state(2);
        const Matrix h = f_coupling(MonotoneFn::am(), identity_channel(2), sigma);
        CHECK(max_abs_diff(partial_trace(h, 0, 2, 2), sigma.matrix()) < 1e-10);
        CHECK(max_abs_diff(partial_trace(h, 1, 2, 2), sigma.matrix()) < 1e-10);
    }
    SUBCASE("rejects non-symmetry-inducing f") {
        const DensityOperator sigma = rng.full_rank_state(2);
        CHECK_THROWS_AS(f_coupling(MonotoneFn::power(0.3), identity_channel(2), sigma), Error);
    }
}

TEST_CASE("pinching") {
    Rng rng(54);
    SUBCASE("commuting input is untouched") {
        const DensityOperator sigma{diag2(0.75, 0.25)};
        const Matrix x = diag2(2.0, -3.0);
        CHECK(max_abs_diff(pinching(sigma, x), x) < 1e-13);
    }
    SUBCASE("single eigenspace passes everything through") {
        const Matrix x = random_hermitian(rng, 2);
        CHECK(max_abs_diff(pinching(maximally_mixed(2), x), x) < 1e-13);
    }
    SUBCASE("off-diagonal blocks die") {
        const DensityOperator sigma{diag2(0.75, 0.25)};
        CHECK(frobenius(pinching(sigma, pauli_x())) < 1e-13);
    }
    SUBCASE("output commutes with sigma") {
        const DensityOperator sigma = rng.full_rank_state(4);
        const Matrix x = random_hermitian(rng, 4);
        const Matrix out = pinching(sigma, x);
        CHECK(frobenius(sigma.matrix() * out - out * sigma.matrix()) < 1e-11);
    }
}

TEST_CASE("linear map handle stores choi plus kraus pairs") {
    Rng rng(55);
    const DensityOperator sigma = rng.full_rank_state(2);
    const ChannelRep e = random_cptp(rng, 2, 2);
    const LinearMapHandle s = schrodinger_reversal(MonotoneFn::hm(), e, sigma);
    CHECK(s.hermitian_preserving());
    // the pairs-based application agrees with the choi contraction
    const Matrix x = rng.ginibre(2, 2);
    Matrix via_choi = Matrix::Zero(2, 2);
    for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j) via_choi += x(i, j) * s.choi().block(i * 2, j * 2, 2, 2);
    CHECK(max_abs_diff(via_choi, s.apply(x)) < 1e-10);
}
