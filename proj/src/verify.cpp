#include "verify.hpp"

#include "correlation.hpp"
#include "divergences.hpp"
#include "io_json.hpp"
#include "rng.hpp"

#include <json.hpp>

#include <cmath>
#include <functional>

namespace qcontract {

namespace {

using nlohmann::json;

struct Harness {
    SuiteResult result;

    void check(bool ok, const std::function<json()>& describe) {
        ++result.checks;
        if (ok) return;
        ++result.failures;
        if (result.first_counterexample.empty()) result.first_counterexample = describe().dump();
    }
};

ChannelRep random_cptp(Rng& rng, Index dim_in, Index dim_out, Index env = 0) {
    if (env <= 0) env = dim_in;
    const Matrix v = rng.isometry(dim_out * env, dim_in);
    std::vector<Matrix> kraus;
    kraus.reserve(static_cast<size_t>(env));
    for (Index e = 0; e < env; ++e) {
        Matrix k(dim_out, dim_in);
        for (Index b = 0; b < dim_out; ++b) k.row(b) = v.row(b * env + e);
        kraus.push_back(k);
    }
    return ChannelRep::from_kraus(kraus);
}

Matrix random_hermitian(Rng& rng, Index d) {
    const Matrix g = rng.ginibre(d, d);
    return (g + g.adjoint()) / 2.0;
}

json state_json(const char* key, const Matrix& m) { return json{{key, json::parse(matrix_to_json_text(m))}}; }

void suite_dpi(Harness& h, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const Index d = 2 + static_cast<Index>(rng.uniform() * 2.0); // 2 or 3
        const DensityOperator rho = rng.full_rank_state(d);
        const DensityOperator sigma = rng.full_rank_state(d);
        const ChannelRep e = random_cptp(rng, d, d);
        const DensityOperator erho{e.apply(rho.matrix())};
        const DensityOperator esigma{e.apply(sigma.matrix())};

        for (const MonotoneFn& f : catalog()) {
            const double before = chi2_f(f, rho, sigma).value;
            const double after = chi2_f(f, erho, esigma).value;
            h.check(after <= before * (1.0 + 1e-8) + 1e-12, [&] {
                return json{{"property", "chi2 DPI"}, {"f", f.id()}, {"trial", t}, {"before", before},
                            {"after", after}};
            });
        }

        const Matrix x = random_hermitian(rng, d);
        for (const MonotoneFn& f : catalog()) {
            const double lhs = variance(f, sigma, e.apply_adjoint(x));
            const double rhs = variance(f, esigma, x);
            h.check(lhs <= rhs + 1e-9, [&] {
                return json{{"property", "variance DPI"}, {"f", f.id()}, {"trial", t}, {"lhs", lhs}, {"rhs", rhs}};
            });
        }

        // local data processing and spectrum majorization on two qubits
        const DensityOperator rho_ab = rng.full_rank_state(4);
        const ChannelRep ea = random_cptp(rng, 2, 2);
        const ChannelRep eb = random_cptp(rng, 2, 2);
        const Matrix processed =
            apply_on_subsystem(eb, apply_on_subsystem(ea, rho_ab.matrix(), 2, 2, 0), 2, 2, 1);
        for (double k : {0.0, 0.5, 1.0}) {
            const double before = mu_lin_k(k, rho_ab.matrix(), 2, 2).mu;
            const double after = mu_lin_k(k, processed, 2, 2).mu;
            h.check(after <= before + 1e-8, [&] {
                return json{{"property", "mu local DPI"}, {"k", k}, {"trial", t}, {"before", before},
                            {"after", after}, state_json("rho_ab", rho_ab.matrix())};
            });
        }
        const double mu_before = mu_f(MonotoneFn::gm(), rho_ab.matrix(), 2, 2).mu;
        const double mu_after = mu_f(MonotoneFn::gm(), processed, 2, 2).mu;
        h.check(mu_after <= mu_before + 1e-8, [&] {
            return json{{"property", "mu_gm local DPI"}, {"trial", t}, {"before", mu_before}, {"after", mu_after}};
        });

        const RealVector spec_before = gm_schmidt_spectrum(rho_ab.matrix(), 2, 2);
        const RealVector spec_after =
            gm_schmidt_spectrum(apply_on_subsystem(eb, rho_ab.matrix(), 2, 2, 1), 2, 2);
        for (Index i = 0; i < std::min(spec_before.size(), spec_after.size()); ++i)
            h.check(spec_after(i) <= spec_before(i) + 1e-8, [&] {
                return json{{"property", "gm spectrum majorization"}, {"trial", t}, {"index", i},
                            {"before", spec_before(i)}, {"after", spec_after(i)}};
            });
    }
}

void suite_ordering(Harness& h, Rng& rng, int trials) {
    const MonotoneFn am = MonotoneFn::am(), lm = MonotoneFn::lm(), gm = MonotoneFn::gm(), hm = MonotoneFn::hm();
    for (int t = 0; t < trials; ++t) {
        const Index d = 2 + static_cast<Index>(rng.uniform() * 3.0); // 2..4
        const DensityOperator rho = rng.full_rank_state(d);
        const DensityOperator sigma = rng.full_rank_state(d);
        const double c_am = chi2_f(am, rho, sigma).value;
        const double c_lm = chi2_f(lm, rho, sigma).value;
        const double c_gm = chi2_f(gm, rho, sigma).value;
        const double c_hm = chi2_f(hm, rho, sigma).value;
        h.check(c_am <= c_lm + 1e-9 && c_lm <= c_gm + 1e-9 && c_gm <= c_hm + 1e-9, [&] {
            return json{{"property", "chi2 ordering"}, {"trial", t}, {"am", c_am}, {"lm", c_lm},
                        {"gm", c_gm}, {"hm", c_hm}, state_json("rho", rho.matrix())};
        });

        const DensityOperator rho_ab = rng.full_rank_state(4);
        const double m_am = mu_f(am, rho_ab.matrix(), 2, 2).mu;
        const double m_lm = mu_f(lm, rho_ab.matrix(), 2, 2).mu;
        const double m_gm = mu_f(gm, rho_ab.matrix(), 2, 2).mu;
        h.check(m_am <= m_lm + 1e-9 && m_lm <= m_gm + 1e-9, [&] {
            return json{{"property", "mu ordering"}, {"trial", t}, {"am", m_am}, {"lm", m_lm}, {"gm", m_gm}};
        });
    }
}

void suite_identities(Harness& h, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const Index d = 2 + static_cast<Index>(rng.uniform() * 3.0);
        const DensityOperator rho = rng.full_rank_state(d);
        const DensityOperator sigma = rng.full_rank_state(d);

        const double chi_gm = chi2_f(MonotoneFn::gm(), rho, sigma).value;
        const double renyi2 = sandwiched_renyi(2.0, rho, sigma).value;
        const double from_renyi = std::exp2(renyi2) - 1.0;
        h.check(std::abs(chi_gm - from_renyi) <= 1e-9 * (1.0 + chi_gm), [&] {
            return json{{"property", "chi2_gm = 2^D2 - 1"}, {"trial", t}, {"chi2_gm", chi_gm},
                        {"from_renyi", from_renyi}};
        });

        for (const MonotoneFn& f : catalog()) {
            const WeightedSpace star(f, sigma, -1.0);
            const double via_var = variance(f, sigma, star.apply(rho.matrix()));
            const double direct = chi2_f(f, rho, sigma).value;
            h.check(std::abs(via_var - direct) <= 1e-9 * (1.0 + direct), [&] {
                return json{{"property", "chi2 variance identity"}, {"f", f.id()}, {"trial", t},
                            {"via_variance", via_var}, {"direct", direct}};
            });
        }

        const Matrix x = random_hermitian(rng, d);
        const Complex lhs = WeightedSpace(MonotoneFn::lm(), sigma, 1.0)
                                .inner_product(Matrix::Identity(d, d), x);
        const Complex rhs = expectation(sigma, x);
        h.check(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)), [&] {
            return json{{"property", "expectation identity"}, {"trial", t}};
        });
    }
}

void suite_tensorization(Harness& h, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const DensityOperator rho = rng.full_rank_state(4);
        const DensityOperator sigma = rng.full_rank_state(4);
        for (double k : {0.0, 0.25, 0.5, 1.0}) {
            const TensorizationCheck c = tensorization_check(k, rho.matrix(), 2, 2, sigma.matrix(), 2, 2);
            h.check(c.pass, [&] {
                return json{{"property", "tensorization"}, {"k", k}, {"trial", t}, {"lhs", c.lhs}, {"rhs", c.rhs},
                            state_json("rho_ab", rho.matrix())};
            });
        }
    }
}

void suite_eigenstructure(Harness& h, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const Index d = 2 + static_cast<Index>(rng.uniform() * 2.0);
        const DensityOperator sigma = rng.full_rank_state(d);
        const ChannelRep e = random_cptp(rng, d, d);
        for (const MonotoneFn& f : catalog()) {
            const ContractionReport report = contraction_coefficient(f, e, sigma);
            const double overlap = std::abs(report.lambda1_operator.trace());
            h.check(std::abs(report.lambda1 - 1.0) <= 1e-7 && overlap >= 1.0 - 1e-6, [&] {
                return json{{"property", "standard matrix eigenstructure"}, {"f", f.id()}, {"trial", t},
                            {"lambda1", report.lambda1}, {"overlap", overlap}};
            });
        }
        const DensityOperator rho_ab = rng.full_rank_state(4);
        const CorrelationReport corr = mu_lin_k(0.5, rho_ab.matrix(), 2, 2);
        h.check(std::abs(corr.lambda1 - 1.0) <= 1e-7, [&] {
            return json{{"property", "schmidt lambda1"}, {"trial", t}, {"lambda1", corr.lambda1}};
        });
    }
}

void suite_divergences(Harness& h, Rng& rng, int trials) {
    const double ln2 = std::log(2.0);
    for (int t = 0; t < trials; ++t) {
        const Index d = 2 + static_cast<Index>(rng.uniform() * 3.0);
        const DensityOperator rho = rng.full_rank_state(d);
        const DensityOperator sigma = rng.full_rank_state(d);
        const double td = trace_distance(rho, sigma);
        const double dmax = d_max(rho, sigma).value;
        const double lam_min = sigma.lambda_min();

        h.check((2.0 / ln2) * td * td <= dmax + 1e-9 && dmax <= td / (ln2 * lam_min) + 1e-9, [&] {
            return json{{"property", "reverse Pinsker band"}, {"trial", t}, {"td", td}, {"d_max", dmax},
                        {"lambda_min", lam_min}};
        });

        const double op_norm = singular_values(rho.matrix() - sigma.matrix())(0);
        h.check(op_norm <= td + 1e-12, [&] {
            return json{{"property", "spectral vs trace norm"}, {"trial", t}, {"inf_norm", op_norm}, {"td", td}};
        });

        const double chi_hm = chi2_f(MonotoneFn::hm(), rho, sigma).value;
        h.check(chi_hm <= 2.0 * td * td / lam_min + 1e-9, [&] {
            return json{{"property", "chi2_hm upper bound"}, {"trial", t}, {"chi2_hm", chi_hm}, {"td", td}};
        });

        // D <= chi2_lm holds for D in nats; the bit-normalized form carries ln 2
        const double rel = relative_entropy(rho, sigma).value;
        const double chi_lm = chi2_f(MonotoneFn::lm(), rho, sigma).value;
        const double chi_gm = chi2_f(MonotoneFn::gm(), rho, sigma).value;
        h.check(rel * ln2 <= chi_lm + 1e-9 && chi_lm <= chi_gm + 1e-9 && chi_gm <= chi_hm + 1e-9 &&
                    chi_hm <= 2.0 * td * td / lam_min + 1e-9,
                [&] {
                    return json{{"property", "pinsker chain"}, {"trial", t}, {"rel_ent", rel}, {"chi2_lm", chi_lm},
                                {"chi2_gm", chi_gm}, {"chi2_hm", chi_hm}};
                });

        double previous = -std::numeric_limits<double>::infinity();
        for (double alpha : {0.5, 0.9, 1.5, 2.0, 3.0}) {
            if (alpha == 1.0) continue;
            const double val = sandwiched_renyi(alpha, rho, sigma).value;
            h.check(val >= previous - 1e-10, [&] {
                return json{{"property", "renyi monotone in alpha"}, {"trial", t}, {"alpha", alpha}, {"value", val},
                            {"previous", previous}};
            });
            previous = val;
            if (alpha >= 0.5) {
                h.check(val >= lam_min / 2.0 * chi_hm - 1e-9, [&] {
                    return json{{"property", "renyi lower bound"}, {"trial", t}, {"alpha", alpha}, {"value", val},
                                {"bound", lam_min / 2.0 * chi_hm}};
                });
            }
        }

        const double renyi2 = sandwiched_renyi(2.0, rho, sigma).value;
        h.check(renyi2 <= 2.0 / ln2 * chi_gm + 1e-9, [&] {
            return json{{"property", "renyi2 pinching bound"}, {"trial", t}, {"renyi2", renyi2}, {"chi2_gm", chi_gm}};
        });
    }
}

} // namespace

std::vector<std::string> suite_names() {
    return {"dpi", "ordering", "identities", "tensorization", "eigenstructure", "divergences"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int trials) {
    if (trials <= 0) fail(ErrorKind::DomainError, "run_suite: trials must be positive");
    Harness h;
    h.result.suite = name;
    h.result.seed = seed;
    h.result.trials = trials;
    Rng rng(seed);
    if (name == "dpi") suite_dpi(h, rng, trials);
    else if (name == "ordering") suite_ordering(h, rng, trials);
    else if (name == "identities") suite_identities(h, rng, trials);
    else if (name == "tensorization") suite_tensorization(h, rng, trials);
    else if (name == "eigenstructure") suite_eigenstructure(h, rng, trials);
    else if (name == "divergences") suite_divergences(h, rng, trials);
    else fail(ErrorKind::UnknownSuite, "unknown suite '" + name + "'");
    return h.result;
}

std::string suite_result_to_json(const SuiteResult& result) {
    json j{{"suite", result.suite}, {"seed", result.seed}, {"trials", result.trials},
           {"checks", result.checks}, {"failures", result.failures}, {"passed", result.passed()}};
    j["counterexample"] =
        result.first_counterexample.empty() ? json(nullptr) : json::parse(result.first_counterexample);
    return j.dump();
}

} // namespace qcontract
