#pragma once

// Absorption probabilities as unit-circle integrals of the generating
// functions, the scalar recurrence for the left probability with the left
// boundary at -1, and the fixed-left-boundary table pipeline.

#include <optional>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/quadrature.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// A probability together with the quadrature error estimate behind it.
struct Estimate {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
};

/// Quadrature defaults for one-boundary integrands: tanh-sinh split at the
/// two angles where Delta vanishes.
QuadratureSpec one_boundary_quadrature(double abs_tol = 1e-12);
/// Quadrature defaults for two-boundary integrands: plain trapezoid doubling
/// (the integrands are rational with every pole off the unit circle).
QuadratureSpec two_boundary_quadrature(double abs_tol = 1e-13);

/// Left boundary at -M only:
///   (1/2pi) \int |a L + b S + c R|^2 |L|^{2M-2} d theta.
/// Requires M >= 1. The spinor need not be normalized; the result is the
/// squared-norm-weighted absorption.
Estimate prob_one_boundary(int M, const CoinSpinor& spinor, const QuadratureSpec& spec = one_boundary_quadrature());

/// Right boundary at +M only, via reflection: prob_one_boundary(M, (c, b, a)).
Estimate prob_one_boundary_right(int M, const CoinSpinor& spinor,
                                 const QuadratureSpec& spec = one_boundary_quadrature());

struct AbsorptionQuery {
    CoinSpinor spinor;
    BoundarySpec bounds;

    /// Throws std::invalid_argument if no boundary is present, a boundary is
    /// < 1, or the spinor is not normalized.
    void validate() const;
    AbsorptionQuery mirrored() const { return {spinor.mirrored(), bounds.mirrored()}; }
};

struct AbsorptionAnswer {
    double p_left = 0.0;
    double p_right = 0.0;
    double sum = 0.0;
    /// 1 - p_left - p_right: mass that is never absorbed.
    double deficit = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
};

/// Left probability with both boundaries (-M, N):
///   (1/2pi) \int |a l(N) + b s(N) + c r(N)|^2 prod_{k=1}^{M-1} |l(N+k)|^2 d theta.
Estimate prob_two_boundary_left(int M, int N, const CoinSpinor& spinor,
                                const QuadratureSpec& spec = two_boundary_quadrature());

/// Both probabilities; the right one is the left probability of the
/// reflected walk (-N, M) with spinor (c, b, a). Requires both boundaries.
AbsorptionAnswer prob_two_boundary(const AbsorptionQuery& query, const QuadratureSpec& spec = two_boundary_quadrature());

/// Dispatches on which boundaries are present. `tol` overrides the default
/// absolute tolerance of whichever quadrature is used.
AbsorptionAnswer absorb(const AbsorptionQuery& query, std::optional<double> tol = std::nullopt);

/// p_0 = 0, p_{N+1} = (2 + 3 p_N) / (3 + 4 p_N): the left probability from
/// |0,R> with boundaries (-1, N). Entries 0..maxN.
std::vector<double> theorem4_sequence(int maxN);

/// |quadrature pLeft(M=1, N, (0,0,1)) - theorem4_sequence(N)[N]|.
double theorem4_crosscheck(int N, const QuadratureSpec& spec = two_boundary_quadrature());

/// One row of the table for left boundary -2, walker starting in |0,R>.
struct Table1Row {
    int n = 0;
    double left = 0.0;   ///< absorbed at -2
    double right = 0.0;  ///< absorbed at N
    double sum = 0.0;
    double error_estimate = 0.0;
    /// s(N) - s(N+1); absent for the last row.
    std::optional<double> localization;
    /// localization * 1e12 and log2 of that scaled value.
    std::optional<double> localization_scaled;
    std::optional<double> log2_scaled;
    /// False when either sum entering the difference has error > 1e-12.
    bool precise = true;
};

inline constexpr double kTable1Scale = 1e12;
inline constexpr double kTable1PrecisionLimit = 1e-12;

/// Rows N = 1..maxN. Requires maxN >= 2.
std::vector<Table1Row> table1(int maxN, const QuadratureSpec& spec = two_boundary_quadrature());

}  // namespace qwalk
