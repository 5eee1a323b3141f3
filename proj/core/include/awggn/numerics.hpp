#pragma once

// Special functions and adaptive quadrature shared by the rest of the library.
// Anything that can overflow (gamma ratios, densities with large exponents) is
// evaluated in log-space by the callers; the helpers here keep that possible.

#include <functional>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace awggn {

/// Raised when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Tolerances for adaptive integration.
struct QuadratureSpec {
    double relative_tolerance = 1e-8;
    double absolute_tolerance = 1e-12;
    int max_subdivisions = 200;

    /// Throws DomainError unless rtol > 0, atol >= 0 and max_subdivisions >= 1.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
};

/// Adaptive integration did not reach the requested tolerance. Carries the
/// best estimate obtained so the caller can decide what to do with it.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double best_estimate, double error_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

using Integrand = std::function<double(double)>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// ln Γ(x) for x > 0.
double log_gamma(double x);

/// Exponential integral E₁(x) = ∫ₓ^∞ e^{-t}/t dt for x > 0.
double exp_integral_e1(double x);

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 − P(a, x), accurate in the
/// far tail where 1 − P would cancel.
double gamma_q(double a, double x);

/// Smallest x with Q(a, x) <= q, found by bisection in log x. q in (0, 1).
double gamma_q_inverse(double a, double q);

/// Standard normal upper tail Φ̄(z).
double normal_upper_tail(double z);

/// Adaptive Gauss–Kronrod (10/21) integration over [a, b]. Either endpoint may
/// be infinite; half-infinite ranges are mapped onto a unit interval with
/// t = a + u/(1−u). Throws QuadratureError if the error indicator does not
/// meet the tolerance within spec.max_subdivisions bisections.
QuadratureResult integrate_detailed(const Integrand& f, double a, double b,
                                    const QuadratureSpec& spec = {});

/// Same as integrate_detailed, with interior breakpoints where f has kinks or
/// integrable singularities. Breakpoints outside (a, b) are ignored.
QuadratureResult integrate_detailed(const Integrand& f, double a, double b,
                                    std::span<const double> breakpoints,
                                    const QuadratureSpec& spec = {});

inline double integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec = {}) {
    return integrate_detailed(f, a, b, spec).value;
}

inline double integrate(const Integrand& f, double a, double b,
                        std::initializer_list<double> breakpoints,
                        const QuadratureSpec& spec = {}) {
    return integrate_detailed(f, a, b, std::span<const double>(breakpoints.begin(), breakpoints.size()),
                              spec)
        .value;
}

}  // namespace awggn
