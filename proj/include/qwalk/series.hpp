#pragma once

// Truncated complex power series and the coefficient-level solutions of the
// first-passage generating-function recurrences.

#include <initializer_list>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

/// Maclaurin coefficients c_0..c_T of a power series, exact through order T.
/// Binary operations require equal orders and throw std::invalid_argument
/// otherwise.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    /// The zero series of order T.
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::initializer_list<Complex> leading);
    TruncatedSeries(int order, const std::vector<Complex>& leading);

    /// c * z^k truncated to order T.
    static TruncatedSeries monomial(int order, int k, Complex c = 1.0);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    Complex operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    Complex& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<Complex>& coeffs() const { return c_; }

    /// Same coefficients at a different order (zero-padded or cut).
    TruncatedSeries truncated(int order) const;

    TruncatedSeries& operator+=(const TruncatedSeries& b);
    TruncatedSeries& operator-=(const TruncatedSeries& b);
    TruncatedSeries& operator*=(Complex k);

    /// Horner evaluation of the truncated polynomial.
    Complex eval(Complex z) const;

private:
    std::vector<Complex> c_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator*(Complex k, TruncatedSeries a);
/// Cauchy product truncated at the common order; direct O(T^2).
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, Complex k);

/// Long division a / b. Throws std::domain_error if b has a zero constant term.
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);

/// Series square root s with s*s = a and s(0) = branch_constant, by Newton
/// iteration with doubling order. Throws std::domain_error if a(0) == 0 or
/// branch_constant^2 differs from a(0) by more than 1e-12 (relative to
/// max(1, |a(0)|)).
TruncatedSeries series_sqrt(const TruncatedSeries& a, Complex branch_constant);

/// Generating functions of first-hit amplitudes for the three basis coins.
struct SeriesTriple {
    TruncatedSeries l;
    TruncatedSeries s;
    TruncatedSeries r;

    const TruncatedSeries& operator[](Coin c) const;
};

inline constexpr int kDefaultSeriesOrder = 1000;

/// Single boundary at -1. Solves
///   l = -z/3 + (2z/3) s + (2z/3) l r
///   s =  2z/3 - (z/3) s + (2z/3) l r
///   r =  2z/3 + (2z/3) s - (z/3) l r
/// in one forward sweep: every right-hand term carries a factor z, so
/// coefficient t depends only on coefficients below t.
SeriesTriple one_boundary_series(int T = kDefaultSeriesOrder);

/// Left boundary at -1, right boundary at N. Iterates the same system with
/// the l*r term replaced by l(k)*r(k-1), from l(0)=s(0)=r(0)=0 up to k = N.
SeriesTriple two_boundary_series(int N, int T = kDefaultSeriesOrder);

/// All levels k = 0..N of the two-boundary recursion.
std::vector<SeriesTriple> two_boundary_series_ladder(int N, int T = kDefaultSeriesOrder);

/// sum_{t>=1} |c_t|^2 over the stored coefficients: a lower bound on the
/// absorption probability encoded by f.
double partial_absorption(const TruncatedSeries& f);

}  // namespace qwalk
