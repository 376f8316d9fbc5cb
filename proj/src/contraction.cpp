#include "contraction.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace qcontract {

namespace {

int thread_budget(Index jobs) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("QCONTRACT_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return static_cast<int>(std::min<Index>(n, jobs));
}

// Deterministic: each job index writes only its own slots.
void parallel_for(Index jobs, const std::function<void(Index)>& body) {
    const int workers = thread_budget(jobs);
    if (workers <= 1) {
        for (Index j = 0; j < jobs; ++j) body(j);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (Index j = w; j < jobs; j += workers) body(j);
        });
    for (auto& t : pool) t.join();
}

void require_full_rank(const DensityOperator& sigma, const char* who) {
    if (!sigma.full_rank())
        fail(ErrorKind::RankDeficient, std::string(who) + ": state is rank-deficient (rank " +
                                           std::to_string(sigma.rank()) + " of " + std::to_string(sigma.dim()) + ")");
}

double support_leak(const DensityOperator& rho, const DensityOperator& sigma) {
    const Matrix kernel = Matrix::Identity(sigma.dim(), sigma.dim()) - sigma.support_projector();
    return (kernel * rho.matrix() * kernel).trace().real();
}

} // namespace

Chi2Value chi2_f(const MonotoneFn& f, const DensityOperator& rho, const DensityOperator& sigma) {
    if (rho.dim() != sigma.dim()) fail(ErrorKind::DimensionMismatch, "chi2_f: dimension mismatch");
    Chi2Value out;
    if (support_leak(rho, sigma) > tols().support) {
        out.support_ok = false;
        out.value = std::numeric_limits<double>::infinity();
        return out;
    }
    const WeightedSpace star(f, sigma, -1.0);
    const Matrix delta = rho.matrix() - sigma.matrix();
    out.value = std::max(0.0, star.inner_product(delta, delta).real());
    return out;
}

OnbResult get_onb(const MonotoneFn& f, const DensityOperator& sigma) {
    require_full_rank(sigma, "get_onb");
    const Index d = sigma.dim();
    const WeightedSpace star(f, sigma, -1.0);

    // Work in sigma's eigenbasis throughout; the seed operators are rewritten
    // into coordinates once up front.
    std::vector<Matrix> seeds;
    seeds.reserve(static_cast<size_t>(d * d));
    seeds.push_back(sigma.eigenvalues().cwiseSqrt().cast<Complex>().asDiagonal());
    for (const Matrix& g : gell_mann_basis(d)) seeds.push_back(star.to_basis(g));

    const double seed_norm = std::sqrt(star.inner_product_in_basis(seeds[0], seeds[0]).real());
    const double floor = tols().gs_floor_factor * seed_norm;

    OnbResult out;
    out.elements_coords.reserve(seeds.size());
    for (size_t j = 0; j < seeds.size(); ++j) {
        Matrix w = seeds[j];
        for (int pass = 0; pass < 2; ++pass)
            for (size_t i = 0; i < j; ++i)
                w -= star.inner_product_in_basis(out.elements_coords[i], w) * out.elements_coords[i];
        const double norm = std::sqrt(std::max(0.0, star.inner_product_in_basis(w, w).real()));
        if (norm <= floor)
            fail(ErrorKind::LinearDependence, "get_onb: Gram-Schmidt norm underflow at seed " + std::to_string(j));
        out.elements_coords.push_back(w / norm);
    }

    double cond = 0.0;
    for (size_t i = 0; i < out.elements_coords.size(); ++i)
        for (size_t j = i; j < out.elements_coords.size(); ++j) {
            const Complex g = star.inner_product_in_basis(out.elements_coords[i], out.elements_coords[j]);
            cond = std::max(cond, std::abs(g - (i == j ? Complex(1.0) : Complex(0.0))));
        }
    out.onb_condition = cond;

    out.elements.reserve(out.elements_coords.size());
    for (const Matrix& c : out.elements_coords) out.elements.push_back(star.from_basis(c));
    return out;
}

ContractionReport contraction_coefficient(const MonotoneFn& f, const ChannelRep& e, const DensityOperator& sigma) {
    require_dims(sigma.matrix(), e.dim_in(), e.dim_in(), "contraction_coefficient");
    require_full_rank(sigma, "contraction_coefficient");
    const DensityOperator out_state{e.apply(sigma.matrix())};
    if (!out_state.full_rank() && !f.flags().support_restricting)
        fail(ErrorKind::RankDeficient,
             "contraction_coefficient: E(sigma) is rank-deficient and f is not support-restricting");

    OnbResult onb = get_onb(f, sigma);
    const Index n = static_cast<Index>(onb.elements.size());
    const WeightedSpace star_out(f, out_state, -1.0);

    // T_ij = <e_i, (S o E)(e_j)>^*_{f,sigma} = <E(e_i), J^{-1}_{f,E(sigma)} E(e_j)>
    // since J_{f,sigma} and J^{-1}_{f,sigma} cancel inside the star product on a
    // full-rank sigma. Columns are independent; evaluate them in parallel.
    std::vector<Matrix> pushed(static_cast<size_t>(n));
    parallel_for(n, [&](Index j) { pushed[static_cast<size_t>(j)] = star_out.to_basis(e.apply(onb.elements[static_cast<size_t>(j)])); });

    Matrix t(n, n);
    parallel_for(n, [&](Index j) {
        for (Index i = 0; i < n; ++i)
            t(i, j) = star_out.inner_product_in_basis(pushed[static_cast<size_t>(i)], pushed[static_cast<size_t>(j)]);
    });

    ContractionReport report;
    report.f_id = f.id();
    report.onb_condition = onb.onb_condition;
    report.imag_residual = t.imag().cwiseAbs().maxCoeff();
    const double asym = (t.real() - t.real().transpose()).cwiseAbs().maxCoeff() / 2.0;
    report.imag_residual = std::max(report.imag_residual, asym);
    if (report.imag_residual > tols().imag_residual)
        fail(ErrorKind::ImagResidualTooLarge,
             "contraction_coefficient: standard matrix residual " + std::to_string(report.imag_residual) +
                 " (is f symmetry-inducing?)");

    const RealMatrix sym = (t.real() + t.real().transpose()) / 2.0;
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(sym);
    if (solver.info() != Eigen::Success)
        fail(ErrorKind::ConvergenceFailure, "contraction_coefficient: eigensolver did not converge");

    report.spectrum = RealVector(n);
    for (Index i = 0; i < n; ++i) report.spectrum(i) = solver.eigenvalues()(n - 1 - i);
    report.lambda1 = report.spectrum(0);
    if (std::abs(report.lambda1 - 1.0) > tols().lambda1)
        fail(ErrorKind::NumericError,
             "contraction_coefficient: lambda_1 = " + std::to_string(report.lambda1) + ", expected 1");

    double eta = n > 1 ? report.spectrum(1) : 0.0;
    if (eta < -tols().eta_range || eta > 1.0 + tols().eta_range)
        fail(ErrorKind::NumericError, "contraction_coefficient: eta = " + std::to_string(eta) + " outside [0, 1]");
    report.eta = std::clamp(eta, 0.0, 1.0);

    const auto operator_from_coords = [&](Index col) {
        Matrix op = Matrix::Zero(sigma.dim(), sigma.dim());
        for (Index i = 0; i < n; ++i)
            op += Complex(solver.eigenvectors()(i, n - 1 - col), 0.0) * onb.elements[static_cast<size_t>(i)];
        return op;
    };
    report.lambda1_operator = operator_from_coords(0);
    if (n > 1) report.lambda2_operator = operator_from_coords(1);
    return report;
}

DpiCertificate dpi_saturated(const MonotoneFn& f, const ChannelRep& e, const DensityOperator& rho,
                             const DensityOperator& sigma, double tol) {
    if (!f.flags().symmetry_inducing) fail(ErrorKind::DomainError, "dpi_saturated: f must be symmetry-inducing");
    if (support_leak(rho, sigma) > tols().support)
        fail(ErrorKind::SupportViolation, "dpi_saturated: rho is not carried by supp(sigma)");
    const LinearMapHandle s = schrodinger_reversal(f, e, sigma);
    const Matrix reversed = s.apply(e.apply(rho.matrix()));
    DpiCertificate cert;
    cert.residual = frobenius(reversed - rho.matrix());
    cert.saturated = cert.residual <= tol;
    return cert;
}

ExtremeReport contraction_extreme_check(const MonotoneFn& f, const ChannelRep& e, const DensityOperator& sigma) {
    ExtremeReport out;
    out.report = contraction_coefficient(f, e, sigma);
    const double gap = tols().eta_gap;
    if (out.report.eta <= gap) {
        out.cls = ExtremeClass::Zero;
    } else if (out.report.eta >= 1.0 - gap) {
        out.cls = ExtremeClass::One;
        Matrix witness = out.report.lambda2_operator;
        witness = (witness + witness.adjoint()).eval() / 2.0;
        witness -= (witness.trace() / static_cast<double>(sigma.dim())) * Matrix::Identity(sigma.dim(), sigma.dim());
        out.unity_witness = witness;
    } else {
        out.cls = ExtremeClass::Interior;
    }
    return out;
}

MixingBound mixing_time_bound(const MonotoneFn& f, const ChannelRep& e, const DensityOperator& pi, double delta,
                              MixingMetric metric) {
    if (!(delta > 0.0)) fail(ErrorKind::DomainError, "mixing_time_bound: delta must be positive");
    if (e.dim_in() != e.dim_out()) fail(ErrorKind::DimensionMismatch, "mixing_time_bound: channel must be an endomorphism");
    if (frobenius(e.apply(pi.matrix()) - pi.matrix()) > tols().fix)
        fail(ErrorKind::NotFixedPoint, "mixing_time_bound: pi is not a fixed point of the channel");
    require_full_rank(pi, "mixing_time_bound");
    if (metric == MixingMetric::RelativeEntropy) {
        const auto grid = standard_grid();
        if (!ordering_check(MonotoneFn::hm(), f, grid) || !ordering_check(f, MonotoneFn::lm(), grid))
            fail(ErrorKind::BandViolation,
                 "mixing_time_bound: relative-entropy bound needs f in the [hm, lm] band, got " + f.id());
    }

    MixingBound bound;
    bound.f_id = f.id();
    bound.eta = contraction_coefficient(f, e, pi).eta;
    if (bound.eta >= 1.0 - tols().eta_gap) {
        bound.infinite = true;
        return bound;
    }

    const double lam_min = pi.lambda_min();
    const double budget = metric == MixingMetric::TraceDistance ? 2.0 / (delta * delta * lam_min)
                                                                : 2.0 / (delta * lam_min);
    if (budget <= 1.0) {
        bound.steps = 0;
        return bound;
    }
    if (bound.eta <= 0.0) {
        bound.steps = 1;
        return bound;
    }
    const double target = 1.0 / budget; // need eta^n <= target
    long long n =
        std::max<long long>(0, static_cast<long long>(std::ceil(std::log(target) / std::log(bound.eta))));
    while (n > 0 && std::pow(bound.eta, static_cast<double>(n - 1)) <= target) --n;
    while (std::pow(bound.eta, static_cast<double>(n)) > target) ++n;
    bound.steps = n;
    return bound;
}

} // namespace qcontract
