#include "qwalk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qwalk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Grid shifted by an irrational fraction of the first step, so no refinement
// level ever samples theta = 0 (z = 1 is a removable 0/0 for the two-boundary
// generating functions).
QuadratureResult trapezoid_doubling(const PeriodicIntegrand& f, const QuadratureSpec& spec) {
    QuadratureResult res;
    std::size_t n = 32;
    const double shift = kTwoPi / static_cast<double>(n) * (std::numbers::phi - 1.0);
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) sum += f(shift + kTwoPi * static_cast<double>(k) / static_cast<double>(n));
    res.evaluations = n;
    double estimate = sum / static_cast<double>(n);

    while (2 * n <= spec.max_points) {
        double odd = 0.0;
        const double step = kTwoPi / static_cast<double>(2 * n);
        for (std::size_t k = 1; k < 2 * n; k += 2) odd += f(shift + step * static_cast<double>(k));
        res.evaluations += n;
        sum += odd;
        n *= 2;
        const double refined = sum / static_cast<double>(n);
        res.error_estimate = std::abs(refined - estimate);
        estimate = refined;
        if (res.error_estimate <= spec.abs_tol) {
            res.converged = true;
            break;
        }
    }
    res.value = estimate;
    return res;
}

// Tanh-sinh on [a, b]. Nodes are placed from their distance to the nearer
// endpoint so that points close to a singular endpoint keep full precision.
struct ArcResult {
    double integral = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

ArcResult tanh_sinh_arc(const PeriodicIntegrand& f, double a, double b, double tol, std::size_t budget) {
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    constexpr double kTMax = 3.5;
    const double half = 0.5 * (b - a);
    ArcResult res;

    auto term = [&](double t) {
        const double u = kHalfPi * std::sinh(std::abs(t));
        const double cu = std::cosh(u);
        const double w = kHalfPi * std::cosh(t) / (cu * cu);
        const double gap = (b - a) / (std::exp(2.0 * u) + 1.0);  // distance to the nearer endpoint
        const double theta = t < 0.0 ? a + gap : (t > 0.0 ? b - gap : 0.5 * (a + b));
        ++res.evaluations;
        return w * f(theta);
    };

    double h = 0.5;
    double sum = term(0.0);
    for (int k = 1; k * h <= kTMax; ++k) sum += term(k * h) + term(-k * h);
    double estimate = half * h * sum;

    for (int level = 1; res.evaluations < budget; ++level) {
        h *= 0.5;
        double odd = 0.0;
        for (int k = 1; k * h <= kTMax; k += 2) odd += term(k * h) + term(-k * h);
        sum += odd;
        const double refined = half * h * sum;
        res.error = std::abs(refined - estimate);
        estimate = refined;
        if (level >= 2 && res.error <= tol) {
            res.converged = true;
            break;
        }
    }
    res.integral = estimate;
    return res;
}

QuadratureResult split_tanh_sinh(const PeriodicIntegrand& f, const QuadratureSpec& spec) {
    std::vector<double> cuts;
    for (double bp : spec.breakpoints) {
        double t = std::fmod(bp, kTwoPi);
        if (t < 0.0) t += kTwoPi;
        cuts.push_back(t);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    if (cuts.empty()) cuts.push_back(0.0);

    QuadratureResult res;
    res.converged = true;
    const std::size_t arcs = cuts.size();
    // The integral is normalized by 2pi; each arc gets an equal share of the budget and tolerance.
    const double arc_tol = spec.abs_tol * kTwoPi / static_cast<double>(arcs);
    const std::size_t arc_budget = std::max<std::size_t>(spec.max_points / arcs, 1);
    double total = 0.0;
    double err = 0.0;
    for (std::size_t i = 0; i < arcs; ++i) {
        const double a = cuts[i];
        const double b = i + 1 < arcs ? cuts[i + 1] : cuts[0] + kTwoPi;
        const ArcResult arc = tanh_sinh_arc(f, a, b, arc_tol, arc_budget);
        total += arc.integral;
        err += arc.error;
        res.evaluations += arc.evaluations;
        res.converged = res.converged && arc.converged;
    }
    res.value = total / kTwoPi;
    res.error_estimate = err / kTwoPi;
    return res;
}

std::string describe(const QuadratureResult& r) {
    return "quadrature did not reach tolerance: value " + std::to_string(r.value) + ", error estimate " +
           std::to_string(r.error_estimate) + " after " + std::to_string(r.evaluations) + " evaluations";
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("quadrature abs_tol must be > 0");
    if (max_points == 0) throw std::invalid_argument("quadrature max_points must be > 0");
    for (double b : breakpoints)
        if (!std::isfinite(b)) throw std::invalid_argument("quadrature breakpoints must be finite");
}

QuadratureError::QuadratureError(const QuadratureResult& partial)
    : std::runtime_error(describe(partial)), partial_(partial) {}

QuadratureResult integrate_periodic(const PeriodicIntegrand& f, const QuadratureSpec& spec) {
    spec.validate();
    switch (spec.method) {
        case QuadratureMethod::PeriodicTrapezoid: return trapezoid_doubling(f, spec);
        case QuadratureMethod::SplitTanhSinh: return split_tanh_sinh(f, spec);
    }
    return {};
}

QuadratureResult integrate_periodic_or_throw(const PeriodicIntegrand& f, const QuadratureSpec& spec) {
    QuadratureResult r = integrate_periodic(f, spec);
    if (!r.converged) throw QuadratureError(r);
    return r;
}

}  // namespace qwalk
