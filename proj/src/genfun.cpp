#include "qwalk/genfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qwalk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Delta(z) = 3 sqrt(1 - z conj(b)) sqrt(1 - z b) with b the upper branch
// point. Since |b| = 1, 1 - z conj(b) has nonnegative real part on the
// closed disk and the principal roots are continuous there.
Complex delta_raw(Complex z) {
    const Complex b = delta_branch_points().first;
    return 3.0 * std::sqrt(1.0 - z * std::conj(b)) * std::sqrt(1.0 - z * b);
}

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

}  // namespace

std::pair<Complex, Complex> delta_branch_points() {
    const double im = 2.0 * std::numbers::sqrt2 / 3.0;
    return {Complex(-1.0 / 3.0, im), Complex(-1.0 / 3.0, -im)};
}

double delta_branch_angle() { return std::acos(-1.0 / 3.0); }

Complex delta(Complex z) {
    if (std::abs(z) > 1.0 + 1e-12) throw std::domain_error("delta: |z| > 1 is outside the supported disk");
    const auto [b1, b2] = delta_branch_points();
    if (std::abs(z - b1) < kBranchPointGuard || std::abs(z - b2) < kBranchPointGuard)
        throw SingularPointError("delta: evaluation point is on a branch point of sqrt(9+6z+9z^2)");
    return delta_raw(z);
}

BranchTrace BranchTrace::around_circle(std::size_t n) {
    if (n == 0) throw std::invalid_argument("BranchTrace needs at least one sample");
    std::vector<double> thetas(n);
    for (std::size_t k = 0; k < n; ++k) thetas[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    return along(std::move(thetas));
}

BranchTrace BranchTrace::along(std::vector<double> thetas) {
    const double phi = delta_branch_angle();
    for (double& t : thetas) t = wrap_angle(t);
    thetas.push_back(0.0);
    thetas.push_back(phi);
    thetas.push_back(kTwoPi - phi);
    std::sort(thetas.begin(), thetas.end());
    thetas.erase(std::unique(thetas.begin(), thetas.end(), [](double a, double b) { return std::abs(a - b) < 1e-15; }),
                 thetas.end());

    BranchTrace tr;
    tr.theta_ = std::move(thetas);
    tr.values_.resize(tr.theta_.size());
    tr.split_.assign(tr.theta_.size(), false);

    tr.values_[0] = Complex(std::sqrt(24.0), 0.0);
    bool after_split = false;
    for (std::size_t k = 1; k < tr.theta_.size(); ++k) {
        const double t = tr.theta_[k];
        const Complex z = std::polar(1.0, t);
        if (std::abs(t - phi) < 1e-15 || std::abs(t - (kTwoPi - phi)) < 1e-15) {
            tr.split_[k] = true;
            tr.values_[k] = Complex{};
            after_split = true;
            continue;
        }
        const Complex w = std::sqrt(9.0 + 6.0 * z + 9.0 * z * z);
        Complex reference = tr.values_[k - 1];
        if (after_split) {
            reference = delta_raw((1.0 - 1e-8) * z);
            after_split = false;
        }
        tr.values_[k] = std::abs(w - reference) < std::abs(w + reference) ? w : -w;
    }
    return tr;
}

Complex BranchTrace::at(double theta) const {
    const double t = wrap_angle(theta);
    auto it = std::lower_bound(theta_.begin(), theta_.end(), t - 1e-13);
    if (it == theta_.end() || std::abs(*it - t) > 1e-13)
        throw std::out_of_range("BranchTrace::at: angle " + std::to_string(theta) + " is not on the grid");
    return values_[static_cast<std::size_t>(it - theta_.begin())];
}

Complex delta(Complex z, const BranchTrace& trace) { return trace.at(std::arg(z)); }

Complex l_closed(Complex z) {
    const Complex d = delta_raw(z);
    return -2.0 * z / (3.0 + 4.0 * z + 3.0 * z * z + (1.0 + z) * d);
}

Complex s_closed(Complex z) {
    const Complex d = delta_raw(z);
    return 4.0 * z / (3.0 + z + d);
}

Complex r_closed(Complex z) {
    const Complex d = delta_raw(z);
    return 4.0 * z / (3.0 - 2.0 * z + 3.0 * z * z + (1.0 - z) * d);
}

Complex closed_form(Coin c, Complex z) {
    switch (c) {
        case Coin::Left: return l_closed(z);
        case Coin::Stay: return s_closed(z);
        case Coin::Right: break;
    }
    return r_closed(z);
}

Complex GenFunValues::operator[](Coin c) const {
    switch (c) {
        case Coin::Left: return l;
        case Coin::Stay: return s;
        case Coin::Right: break;
    }
    return r;
}

std::vector<GenFunValues> two_boundary_ladder(int N, Complex z) {
    if (N < 0) throw std::invalid_argument("two_boundary_eval: N must be >= 0");
    std::vector<GenFunValues> out;
    out.reserve(static_cast<std::size_t>(N) + 1);
    out.push_back({});
    const Complex z2 = z * z;
    const Complex a = 2.0 * z + 2.0 * z2;          // 2z + 2z^2
    const Complex c = z2 + 3.0 * z2 * z;           // z^2 + 3z^3
    for (int k = 1; k <= N; ++k) {
        const Complex rho = out.back().r;
        const Complex den = 3.0 + z - a * rho;
        if (std::abs(den) < kPoleGuard)
            throw SingularPointError("two_boundary_eval: pole of r(" + std::to_string(k) + ", z) on the path");
        out.push_back({(-z + z2) / den, (2.0 * z - 2.0 * z2 * rho) / den, (a - c * rho) / den});
    }
    return out;
}

GenFunValues two_boundary_eval(int N, Complex z) { return two_boundary_ladder(N, z).back(); }

std::pair<Complex, Complex> lambda_pm(Complex z) {
    const Complex z2 = z * z;
    const Complex z3 = z2 * z;
    const Complex trace = (3.0 + z) - (z2 + 3.0 * z3);
    const Complex u = 3.0 + z + z2 + 3.0 * z3;
    const Complex v = 2.0 * z + 2.0 * z2;
    const Complex root = std::sqrt(u * u - 4.0 * v * v);
    return {0.5 * (trace + root), 0.5 * (trace - root)};
}

Complex r_closed_two_boundary(int n, Complex z) {
    if (n < 0) throw std::invalid_argument("r_closed_two_boundary: n must be >= 0");
    if (n == 0) return {};
    const auto [lp, lm] = lambda_pm(z);
    Complex pp = 1.0;
    Complex pm = 1.0;
    for (int k = 0; k < n; ++k) {
        pp *= lp;
        pm *= lm;
    }
    const Complex Rn = pp - pm;
    const Complex Rn1 = pp * lp - pm * lm;
    const Complex den = Rn1 + z * z * (1.0 + 3.0 * z) * Rn;
    if (std::abs(den) < kPoleGuard * std::max(1.0, std::abs(Rn1)))
        throw SingularPointError("r_closed_two_boundary: denominator vanishes");
    return 2.0 * z * (z + 1.0) * Rn / den;
}

double check_prop8(int n, Complex z) {
    const Complex a = two_boundary_eval(n, z).r;
    const Complex b = two_boundary_eval(n, 1.0 / z).r;
    const Complex lhs = a * b / z;
    const Complex rhs = 2.0 / (3.0 * z * z - 2.0 * z + 3.0) * (a + b);
    return std::abs(lhs - rhs);
}

Complex omega() { return {1.0 / 3.0, 2.0 * std::numbers::sqrt2 / 3.0}; }

OmegaCheck check_prop10(int n) {
    if (n < 0) throw std::invalid_argument("check_prop10: n must be >= 0");
    const Complex r = two_boundary_eval(n, omega()).r;
    const Complex p = Complex(0.0, -1.0 / std::numbers::sqrt2) * r;
    return {r.real(), p.real(), p.imag()};
}

double check_contraction(Complex w, Complex z) {
    const Complex num = 2.0 * z * (z + 1.0) - z * z * (1.0 + 3.0 * z) * w;
    const Complex den = (z + 3.0) - 2.0 * z * (z + 1.0) * w;
    return std::abs(num / den);
}

}  // namespace qwalk
