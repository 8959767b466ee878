#pragma once

// Normalized integrals (1/2pi) \int_0^{2pi} f(theta) d theta of periodic
// integrands, the unit-circle form of the Hadamard product at z = 1.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qwalk {

enum class QuadratureMethod {
    /// Trapezoid rule with point doubling. Spectrally accurate for integrands
    /// analytic in a strip around the real axis.
    PeriodicTrapezoid,
    /// Tanh-sinh on each arc between caller-supplied breakpoints. Node density
    /// grows doubly exponentially toward each breakpoint, which absorbs
    /// square-root type singularities there.
    SplitTanhSinh,
};

struct QuadratureSpec {
    QuadratureMethod method = QuadratureMethod::PeriodicTrapezoid;
    double abs_tol = 1e-13;
    std::size_t max_points = std::size_t{1} << 22;
    /// Angles (any real values, taken mod 2pi) where SplitTanhSinh splits.
    std::vector<double> breakpoints;

    /// Throws std::invalid_argument for abs_tol <= 0, max_points == 0 or a non-finite breakpoint.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    /// |difference| between the last two refinement levels.
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const QuadratureResult& partial);
    const QuadratureResult& partial() const { return partial_; }

private:
    QuadratureResult partial_;
};

using PeriodicIntegrand = std::function<double(double)>;

/// (1/2pi) \int_0^{2pi} f. Never throws for non-convergence; the result's
/// `converged` flag is false when abs_tol was not reached within max_points.
QuadratureResult integrate_periodic(const PeriodicIntegrand& f, const QuadratureSpec& spec = {});

/// As integrate_periodic, but throws QuadratureError on non-convergence.
QuadratureResult integrate_periodic_or_throw(const PeriodicIntegrand& f, const QuadratureSpec& spec = {});

}  // namespace qwalk
