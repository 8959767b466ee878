#pragma once

// Pointwise evaluation of the first-passage generating functions on the
// closed unit disk: the one-boundary closed forms built on
// Delta(z) = sqrt(9 + 6z + 9z^2), the two-boundary rational recursion, the
// transfer-matrix closed form, and the identities those functions satisfy.

#include <stdexcept>
#include <utility>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

/// Raised when an evaluation lands on a branch point or a pole.
class SingularPointError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Zeros of 9 + 6z + 9z^2, both on the unit circle: (-1 +/- 2 sqrt(2) i)/3.
std::pair<Complex, Complex> delta_branch_points();
/// Polar angle in (0, pi) of the upper branch point; the lower one is at -angle.
double delta_branch_angle();

inline constexpr double kBranchPointGuard = 1e-12;

/// Delta(z) on the branch analytic in |z| < 1 with Delta(0) = 3, extended
/// continuously to |z| = 1 (so Delta(1) = +sqrt(24)). Throws
/// SingularPointError within kBranchPointGuard of a branch point, and
/// std::domain_error for |z| > 1.
Complex delta(Complex z);

/// Continuity-tracked samples of Delta around the unit circle.
///
/// Samples start at theta = 0 with +sqrt(24). Each subsequent sample takes
/// the square root closer to its predecessor. The branch points are inserted
/// as grid split points; the sign on the arc after a branch point is pinned
/// to the disk-interior branch just inside the circle, since continuity alone
/// is ambiguous where Delta passes through zero.
class BranchTrace {
public:
    /// n uniform samples on [0, 2 pi) plus the two branch-point angles.
    static BranchTrace around_circle(std::size_t n);
    /// Samples at the given angles (sorted, in [0, 2 pi)), plus the split points.
    static BranchTrace along(std::vector<double> thetas);

    const std::vector<double>& theta() const { return theta_; }
    const std::vector<Complex>& values() const { return values_; }
    /// True if sample k sits on a branch point (Delta = 0 there).
    bool is_split_point(std::size_t k) const { return split_[k]; }

    /// The tracked value at an existing grid angle; throws std::out_of_range
    /// if theta is not on the grid.
    Complex at(double theta) const;

private:
    std::vector<double> theta_;
    std::vector<Complex> values_;
    std::vector<bool> split_;
};

/// Delta at z = e^{i theta} read from a trace.
Complex delta(Complex z, const BranchTrace& trace);

/// One boundary at -1. These are the closed forms
///   l = (-3 - 4z - 3z^2 + (1+z) Delta) / (2z)
///   s = (-3 - z + Delta) / (2z)
///   r = ( 3 - 2z + 3z^2 + (z-1) Delta) / (4z)
/// evaluated in the algebraically equivalent rationalized shape
///   l = -2z / (3 + 4z + 3z^2 + (1+z) Delta)
///   s =  4z / (3 + z + Delta)
///   r =  4z / (3 - 2z + 3z^2 + (1-z) Delta)
/// whose denominators never vanish on the closed disk, so z = 0 returns the
/// series value 0 and there is no cancellation for small |z|.
Complex l_closed(Complex z);
Complex s_closed(Complex z);
Complex r_closed(Complex z);
Complex closed_form(Coin c, Complex z);

struct GenFunValues {
    Complex l{};
    Complex s{};
    Complex r{};

    Complex operator[](Coin c) const;
};

inline constexpr double kPoleGuard = 1e-14;

/// Left boundary at -1, right boundary at N: iterates
///   r(k) = (2z + 2z^2 - (z^2 + 3z^3) r(k-1)) / (3 + z - (2z + 2z^2) r(k-1))
/// from r(0) = 0 and forms l(N), s(N) from r(N-1). Throws SingularPointError
/// if a denominator drops below kPoleGuard in magnitude.
GenFunValues two_boundary_eval(int N, Complex z);

/// Every level k = 0..N at one point.
std::vector<GenFunValues> two_boundary_ladder(int N, Complex z);

/// Eigenvalues of the transfer matrix [[-z^2(1+3z), 2z(z+1)], [-2z(z+1), z+3]].
std::pair<Complex, Complex> lambda_pm(Complex z);

/// r_n(z) = 2z(z+1) R_n / (R_{n+1} + z^2(1+3z) R_n) with R_n = lambda_+^n - lambda_-^n.
/// Intended as a test oracle for two_boundary_eval; powers overflow for large n.
Complex r_closed_two_boundary(int n, Complex z);

/// |(1/z) r_n(z) r_n(1/z) - 2/(3z^2 - 2z + 3) (r_n(z) + r_n(1/z))|.
double check_prop8(int n, Complex z);

/// omega = 1/3 + (2 sqrt 2/3) i, a root of 3z^2 - 2z + 3.
Complex omega();

struct OmegaCheck {
    double real_part = 0.0;      ///< Re r_n(omega); vanishes in exact arithmetic.
    double p_from_omega = 0.0;   ///< -(i/sqrt 2) r_n(omega), read as a real number.
    double imag_residue = 0.0;   ///< Imaginary part discarded in that reading.
};

OmegaCheck check_prop10(int n);

/// |f(w, z)| for f(w, z) = (2z(z+1) - z^2(1+3z) w) / ((z+3) - 2z(z+1) w).
double check_contraction(Complex w, Complex z);

}  // namespace qwalk
