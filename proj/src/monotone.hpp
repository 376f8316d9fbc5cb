// monotone.hpp — operator monotone function catalog and perspective function

#pragma once

#include "types.hpp"

#include <functional>
#include <limits>

namespace qcontract {

struct MonotoneFlags {
    bool normalized = false;
    bool symmetry_inducing = false;
    bool support_restricting = false;
    bool multiplicative = false;
    bool unverified = false; // user-supplied evaluator, monotonicity not checkable
};

class MonotoneFn {
public:
    // Catalog constructors. Names: "am", "gm", "hm", "lm", "power:<k>".
    static MonotoneFn am();
    static MonotoneFn gm();
    static MonotoneFn hm();
    static MonotoneFn lm();
    static MonotoneFn power(double k);
    static MonotoneFn from_name(const std::string& name);

    // User-defined function: flags are measured on the standard grid where
    // possible and the result is marked unverified.
    static MonotoneFn custom(std::string id, std::function<double(double)> eval, double f_zero_plus,
                             double f_prime_inf);

    const std::string& id() const { return id_; }
    const MonotoneFlags& flags() const { return flags_; }
    double f_zero_plus() const { return f_zero_plus_; }   // may be +inf
    double f_prime_inf() const { return f_prime_inf_; }   // may be +inf

    // f(x) for x > 0; DomainError otherwise.
    double evaluate(double x) const;

    // P_f(x, y) on the closed nonnegative quadrant with the boundary
    // conventions y f(0+), x f'(+inf), and 0 * inf := 0.
    double perspective(double x, double y) const;

    bool operator==(const MonotoneFn& other) const { return id_ == other.id_; }

private:
    std::string id_;
    std::function<double(double)> eval_;
    double f_zero_plus_ = 0.0;
    double f_prime_inf_ = 0.0;
    MonotoneFlags flags_;
};

// f1 <= f2 pointwise on the grid, slack 1e-12.
bool ordering_check(const MonotoneFn& f1, const MonotoneFn& f2, const std::vector<double>& grid);

// x in {2^-8, ..., 2^8}, the grid used for flag measurement and band checks.
std::vector<double> standard_grid();

// The four named means; power functions are reachable via from_name.
std::vector<MonotoneFn> catalog();

} // namespace qcontract
