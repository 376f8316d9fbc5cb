#include "helpers.hpp"

using namespace qctest;

TEST_CASE("catalog evaluation") {
    CHECK(MonotoneFn::lm().evaluate(1.0) == doctest::Approx(1.0)); // continuous extension
    CHECK(MonotoneFn::gm().evaluate(4.0) == doctest::Approx(2.0));
    CHECK(MonotoneFn::hm().evaluate(3.0) == doctest::Approx(1.5));
    CHECK(MonotoneFn::am().evaluate(3.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(MonotoneFn::gm().evaluate(0.0), Error);
    CHECK_THROWS_AS(MonotoneFn::gm().evaluate(-1.0), Error);
}

TEST_CASE("lm series region is smooth") {
    const MonotoneFn lm = MonotoneFn::lm();
    // compare series against the quotient just outside the crossover
    for (double t : {-9e-5, -5e-5, 5e-5, 9e-5}) {
        const double direct = t / std::log1p(t);
        CHECK(lm.evaluate(1.0 + t) == doctest::Approx(direct).epsilon(1e-12));
    }
    CHECK(lm.evaluate(1.0 + 1e-13) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("perspective boundary conventions") {
    CHECK(MonotoneFn::gm().perspective(4.0, 1.0) == doctest::Approx(2.0));
    CHECK(MonotoneFn::am().perspective(0.0, 2.0) == doctest::Approx(1.0)); // y f(0+) = 2 * 1/2
    CHECK(MonotoneFn::gm().perspective(0.0, 5.0) == doctest::Approx(0.0));
    CHECK(MonotoneFn::am().perspective(3.0, 0.0) == doctest::Approx(1.5)); // x f'(inf)
    CHECK(MonotoneFn::gm().perspective(0.0, 0.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(MonotoneFn::gm().perspective(-1.0, 1.0), Error);
}

TEST_CASE("ordering checks") {
    const auto grid = standard_grid();
    CHECK(ordering_check(MonotoneFn::hm(), MonotoneFn::gm(), grid));
    CHECK_FALSE(ordering_check(MonotoneFn::am(), MonotoneFn::hm(), grid));
    CHECK(ordering_check(MonotoneFn::gm(), MonotoneFn::gm(), grid));
    // full chain hm <= gm <= lm <= am
    CHECK(ordering_check(MonotoneFn::gm(), MonotoneFn::lm(), grid));
    CHECK(ordering_check(MonotoneFn::lm(), MonotoneFn::am(), grid));
}

TEST_CASE("catalog flags") {
    for (const MonotoneFn& f : catalog()) {
        CHECK(f.flags().normalized);
        CHECK(f.flags().symmetry_inducing);
        CHECK(std::abs(f.evaluate(1.0) - 1.0) < 1e-12);
    }
    CHECK(MonotoneFn::gm().flags().support_restricting);
    CHECK(MonotoneFn::lm().flags().support_restricting);
    CHECK(MonotoneFn::hm().flags().support_restricting);
    CHECK_FALSE(MonotoneFn::am().flags().support_restricting);
    CHECK_FALSE(MonotoneFn::am().flags().multiplicative);
    CHECK(MonotoneFn::gm().flags().multiplicative);

    CHECK(MonotoneFn::power(0.5).flags().symmetry_inducing);
    CHECK_FALSE(MonotoneFn::power(0.3).flags().symmetry_inducing);
    CHECK_FALSE(MonotoneFn::power(1.0).flags().symmetry_inducing);
    CHECK(MonotoneFn::power(0.3).flags().multiplicative);
    CHECK(MonotoneFn::power(0.3).flags().support_restricting);
    CHECK_FALSE(MonotoneFn::power(0.0).flags().support_restricting); // f(0+) = 1
    CHECK_FALSE(MonotoneFn::power(1.0).flags().support_restricting); // f'(inf) = 1
}

TEST_CASE("symmetry-inducing perspective is symmetric on a random grid") {
    Rng rng(23);
    for (const MonotoneFn& f : catalog())
        for (int t = 0; t < 40; ++t) {
            const double x = rng.uniform() * 4.0;
            const double y = rng.uniform() * 4.0;
            CHECK(f.perspective(x, y) == doctest::Approx(f.perspective(y, x)).epsilon(1e-12));
        }
}

TEST_CASE("power perspective closed form") {
    Rng rng(29);
    for (double k : {0.0, 0.25, 0.5, 0.9, 1.0}) {
        const MonotoneFn f = MonotoneFn::power(k);
        for (int t = 0; t < 20; ++t) {
            const double x = 0.05 + rng.uniform() * 4.0;
            const double y = 0.05 + rng.uniform() * 4.0;
            CHECK(f.perspective(x, y) == doctest::Approx(std::pow(x, k) * std::pow(y, 1.0 - k)).epsilon(1e-12));
        }
    }
}

TEST_CASE("name parsing") {
    CHECK(MonotoneFn::from_name("power:0.5").flags().symmetry_inducing);
    CHECK(MonotoneFn::from_name("lm").id() == "lm");
    CHECK_THROWS_AS(MonotoneFn::from_name("median"), Error);
    CHECK_THROWS_AS(MonotoneFn::from_name("power:nope"), Error);
    CHECK_THROWS_AS(MonotoneFn::from_name("power:1.5"), Error);
}

TEST_CASE("user-defined functions are flagged unverified") {
    const MonotoneFn f = MonotoneFn::custom("sqrt-clone", [](double x) { return std::sqrt(x); }, 0.0, 0.0);
    CHECK(f.flags().unverified);
    CHECK(f.flags().normalized);
    CHECK(f.flags().symmetry_inducing);
    CHECK(f.flags().support_restricting);
}
