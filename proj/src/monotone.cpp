#include "monotone.hpp"

#include <cmath>

namespace qcontract {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// (x-1)/log(x) with a series for |x-1| < 1e-4; the direct quotient loses
// precision to 0/0 cancellation there.
double log_mean(double x) {
    const double t = x - 1.0;
    if (std::abs(t) < 1e-4)
        return 1.0 + t / 2.0 - t * t / 12.0 + t * t * t / 24.0 - 19.0 * t * t * t * t / 720.0;
    return t / std::log(x);
}

bool measure_symmetry(const std::function<double(double)>& f) {
    for (double x : standard_grid())
        if (std::abs(f(x) - x * f(1.0 / x)) > 1e-12 * std::max(1.0, std::abs(f(x)))) return false;
    return true;
}

} // namespace

std::vector<double> standard_grid() {
    std::vector<double> grid;
    for (int j = -8; j <= 8; ++j) grid.push_back(std::ldexp(1.0, j));
    return grid;
}

MonotoneFn MonotoneFn::am() {
    MonotoneFn f;
    f.id_ = "am";
    f.eval_ = [](double x) { return (x + 1.0) / 2.0; };
    f.f_zero_plus_ = 0.5;
    f.f_prime_inf_ = 0.5;
    f.flags_ = {true, true, false, false, false};
    return f;
}

MonotoneFn MonotoneFn::gm() {
    MonotoneFn f;
    f.id_ = "gm";
    f.eval_ = [](double x) { return std::sqrt(x); };
    f.f_zero_plus_ = 0.0;
    f.f_prime_inf_ = 0.0;
    f.flags_ = {true, true, true, true, false};
    return f;
}

MonotoneFn MonotoneFn::hm() {
    MonotoneFn f;
    f.id_ = "hm";
    f.eval_ = [](double x) { return 2.0 * x / (x + 1.0); };
    f.f_zero_plus_ = 0.0;
    f.f_prime_inf_ = 0.0;
    f.flags_ = {true, true, true, false, false};
    return f;
}

MonotoneFn MonotoneFn::lm() {
    MonotoneFn f;
    f.id_ = "lm";
    f.eval_ = [](double x) { return log_mean(x); };
    f.f_zero_plus_ = 0.0;
    f.f_prime_inf_ = 0.0;
    f.flags_ = {true, true, true, false, false};
    return f;
}

MonotoneFn MonotoneFn::power(double k) {
    if (k < 0.0 || k > 1.0) fail(ErrorKind::DomainError, "power: k must lie in [0, 1]");
    MonotoneFn f;
    f.id_ = "power:" + std::to_string(k);
    f.eval_ = [k](double x) { return std::pow(x, k); };
    f.f_zero_plus_ = k > 0.0 ? 0.0 : 1.0;
    f.f_prime_inf_ = k < 1.0 ? 0.0 : 1.0;
    f.flags_.normalized = true;
    f.flags_.symmetry_inducing = std::abs(k - 0.5) <= 1e-12;
    f.flags_.support_restricting = k > 0.0 && k < 1.0;
    f.flags_.multiplicative = true;
    return f;
}

MonotoneFn MonotoneFn::from_name(const std::string& name) {
    if (name == "am") return am();
    if (name == "gm") return gm();
    if (name == "hm") return hm();
    if (name == "lm") return lm();
    if (name.rfind("power:", 0) == 0) {
        try {
            size_t used = 0;
            const double k = std::stod(name.substr(6), &used);
            if (used != name.size() - 6) fail(ErrorKind::ParseError, "bad power exponent in '" + name + "'");
            return power(k);
        } catch (const std::invalid_argument&) {
            fail(ErrorKind::ParseError, "bad power exponent in '" + name + "'");
        } catch (const std::out_of_range&) {
            fail(ErrorKind::ParseError, "bad power exponent in '" + name + "'");
        }
    }
    fail(ErrorKind::ParseError, "unknown monotone function '" + name + "' (expected am|gm|hm|lm|power:<k>)");
}

MonotoneFn MonotoneFn::custom(std::string id, std::function<double(double)> eval, double f_zero_plus,
                              double f_prime_inf) {
    MonotoneFn f;
    f.id_ = std::move(id);
    f.eval_ = std::move(eval);
    f.f_zero_plus_ = f_zero_plus;
    f.f_prime_inf_ = f_prime_inf;
    f.flags_.normalized = std::abs(f.eval_(1.0) - 1.0) <= 1e-12;
    f.flags_.symmetry_inducing = measure_symmetry(f.eval_);
    f.flags_.support_restricting = f_zero_plus == 0.0 && f_prime_inf == 0.0;
    f.flags_.multiplicative = false;
    f.flags_.unverified = true;
    return f;
}

double MonotoneFn::evaluate(double x) const {
    if (!(x > 0.0)) fail(ErrorKind::DomainError, id_ + ": argument must be positive, got " + std::to_string(x));
    return eval_(x);
}

double MonotoneFn::perspective(double x, double y) const {
    if (x < 0.0 || y < 0.0) fail(ErrorKind::DomainError, id_ + ": perspective needs nonnegative arguments");
    if (x == 0.0) {
        if (y == 0.0) return 0.0;
        return std::isinf(f_zero_plus_) ? kInf : y * f_zero_plus_; // 0 * inf := 0 handled by y > 0 here
    }
    if (y == 0.0) return std::isinf(f_prime_inf_) ? kInf : x * f_prime_inf_;
    return y * eval_(x / y);
}

bool ordering_check(const MonotoneFn& f1, const MonotoneFn& f2, const std::vector<double>& grid) {
    for (double x : grid) {
        if (!(x > 0.0)) fail(ErrorKind::DomainError, "ordering_check: grid must be positive");
        if (f1.evaluate(x) > f2.evaluate(x) + 1e-12) return false;
    }
    return true;
}

std::vector<MonotoneFn> catalog() {
    return {MonotoneFn::am(), MonotoneFn::gm(), MonotoneFn::hm(), MonotoneFn::lm()};
}

} // namespace qcontract
