#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qwalk/genfun.hpp"
#include "qwalk/series.hpp"
#include "qwalk/walk.hpp"

using namespace qwalk;

namespace {

void expect_coeffs(const TruncatedSeries& s, std::initializer_list<Complex> want, double tol = 1e-15) {
    int k = 0;
    for (const Complex& w : want) {
        EXPECT_NEAR(std::abs(s[k] - w), 0.0, tol) << "coefficient " << k;
        ++k;
    }
}

TruncatedSeries random_series(int T, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1, 1);
    TruncatedSeries s(T);
    for (int k = 0; k <= T; ++k) s[k] = {u(rng), u(rng)};
    return s;
}

}  // namespace

TEST(Series, ProductOfBinomials) {
    const TruncatedSeries a(2, {1, 1});
    const TruncatedSeries b(2, {1, -1});
    expect_coeffs(series_mul(a, b), {1, 0, -1});
}

TEST(Series, ProductTruncates) {
    const TruncatedSeries z = TruncatedSeries::monomial(1, 1);
    expect_coeffs(z * z, {0, 0});
}

TEST(Series, AddAndScale) {
    const TruncatedSeries a(2, {1, 2, 3});
    const TruncatedSeries b(2, {0, 1, -3});
    expect_coeffs(series_add(a, b), {1, 3, 0});
    expect_coeffs(series_scale(a, Complex(0, 2)), {Complex(0, 2), Complex(0, 4), Complex(0, 6)});
}

TEST(Series, OrderMismatchThrows) {
    EXPECT_THROW(series_add(TruncatedSeries(2), TruncatedSeries(3)), std::invalid_argument);
    EXPECT_THROW(series_mul(TruncatedSeries(2), TruncatedSeries(3)), std::invalid_argument);
    EXPECT_THROW(series_div(TruncatedSeries(2, {1}), TruncatedSeries(3, {1})), std::invalid_argument);
}

TEST(Series, GeometricDivision) {
    expect_coeffs(series_div(TruncatedSeries(3, {1}), TruncatedSeries(3, {1, 1})), {1, -1, 1, -1});
}

TEST(Series, DivisionByZeroConstantThrows) {
    EXPECT_THROW(series_div(TruncatedSeries(3, {1}), TruncatedSeries(3, {0, 1})), std::domain_error);
}

TEST(Series, RationalR1) {
    // 2z(1+z)/(3+z): the two-boundary r with N = 1.
    const TruncatedSeries num(4, {0, 2, 2});
    const TruncatedSeries den(4, {3, 1});
    expect_coeffs(series_div(num, den), {0, 2.0 / 3, 4.0 / 9, -4.0 / 27, 4.0 / 81});
}

TEST(Series, DivideThenMultiplyRoundTrip) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 10; ++trial) {
        const TruncatedSeries a = random_series(40, rng);
        TruncatedSeries b = random_series(40, rng);
        b[0] += 3.0;  // keep the divisor well conditioned
        const TruncatedSeries back = series_div(a, b) * b;
        for (int k = 0; k <= 40; ++k) EXPECT_NEAR(std::abs(back[k] - a[k]), 0.0, 1e-12);
    }
}

TEST(Series, SqrtOfDeltaSquared) {
    const TruncatedSeries a(3, {9, 6, 9});
    expect_coeffs(series_sqrt(a, 3.0), {3, 1, 4.0 / 3, -4.0 / 9}, 1e-14);
}

TEST(Series, SqrtOfOne) { expect_coeffs(series_sqrt(TruncatedSeries(5, {1}), 1.0), {1, 0, 0, 0, 0, 0}); }

TEST(Series, SqrtSquaresBack) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedSeries a = random_series(50, rng);
        a[0] = Complex(4.0, 1.0);
        const Complex root = std::sqrt(a[0]);
        for (Complex branch : {root, -root}) {
            const TruncatedSeries s = series_sqrt(a, branch);
            EXPECT_LT(std::abs(s[0] - branch), 1e-15);
            const TruncatedSeries sq = s * s;
            for (int k = 0; k <= 50; ++k) EXPECT_NEAR(std::abs(sq[k] - a[k]), 0.0, 1e-12);
        }
    }
}

TEST(Series, SqrtBadBranchThrows) {
    EXPECT_THROW(series_sqrt(TruncatedSeries(3, {9, 6, 9}), 2.0), std::domain_error);
    EXPECT_THROW(series_sqrt(TruncatedSeries(3, {0, 1}), 0.0), std::domain_error);
}

TEST(OneBoundarySeries, LeadingCoefficients) {
    const SeriesTriple g = one_boundary_series(10);
    expect_coeffs(g.l, {0, -1.0 / 3, 4.0 / 9});
    expect_coeffs(g.s, {0, 2.0 / 3, -2.0 / 9});
    expect_coeffs(g.r, {0, 2.0 / 3, 4.0 / 9});
}

TEST(OneBoundarySeries, MatchesSimulator) {
    const SeriesTriple g = one_boundary_series(30);
    for (Coin c : {Coin::Left, Coin::Stay, Coin::Right}) {
        const auto hits = first_hit_amplitudes(c, BoundarySpec::left_only(1), 30);
        for (int t = 0; t <= 30; ++t) EXPECT_NEAR(std::abs(g[c][t] - hits[t]), 0.0, 1e-12) << t;
    }
}

TEST(OneBoundarySeries, RecurrenceResidualVanishes) {
    const int T = 80;
    const SeriesTriple g = one_boundary_series(T);
    const TruncatedSeries z = TruncatedSeries::monomial(T, 1);
    const TruncatedSeries lr = g.l * g.r;
    const TruncatedSeries rl = (-1.0 / 3) * z + (2.0 / 3) * (z * g.s) + (2.0 / 3) * (z * lr) - g.l;
    const TruncatedSeries rs = (2.0 / 3) * z - (1.0 / 3) * (z * g.s) + (2.0 / 3) * (z * lr) - g.s;
    const TruncatedSeries rr = (2.0 / 3) * z + (2.0 / 3) * (z * g.s) - (1.0 / 3) * (z * lr) - g.r;
    for (int k = 0; k <= T; ++k) {
        EXPECT_LT(std::abs(rl[k]), 1e-12);
        EXPECT_LT(std::abs(rs[k]), 1e-12);
        EXPECT_LT(std::abs(rr[k]), 1e-12);
    }
}

TEST(OneBoundarySeries, SeriesSqrtRouteAgrees) {
    // s = (-3 - z + Delta)/(2z) with Delta from series_sqrt; shift out the z.
    const int T = 40;
    const TruncatedSeries delta = series_sqrt(TruncatedSeries(T + 1, {9, 6, 9}), 3.0);
    const TruncatedSeries num = delta - TruncatedSeries(T + 1, {3, 1});
    const SeriesTriple g = one_boundary_series(T);
    for (int t = 1; t <= T; ++t) EXPECT_NEAR(std::abs(num[t + 1] / 2.0 - g.s[t]), 0.0, 1e-12) << t;
}

TEST(TwoBoundarySeries, ZeroLevelIsZero) {
    const auto ladder = two_boundary_series_ladder(0, 10);
    ASSERT_EQ(ladder.size(), 1u);
    for (int k = 0; k <= 10; ++k) {
        EXPECT_EQ(ladder[0].l[k], Complex{});
        EXPECT_EQ(ladder[0].s[k], Complex{});
        EXPECT_EQ(ladder[0].r[k], Complex{});
    }
}

TEST(TwoBoundarySeries, LevelOneIsRational) {
    const SeriesTriple g = two_boundary_series(1, 40);
    for (int t = 0; t <= 40; ++t) EXPECT_NEAR(g.r[t].real(), oracle::r1_coefficient(t), 1e-15) << t;
}

TEST(TwoBoundarySeries, MatchesSimulator) {
    for (int N = 1; N <= 5; ++N) {
        const SeriesTriple g = two_boundary_series(N, 30);
        for (Coin c : {Coin::Left, Coin::Stay, Coin::Right}) {
            const auto hits = first_hit_amplitudes(c, BoundarySpec::both(1, N), 30);
            for (int t = 0; t <= 30; ++t) EXPECT_NEAR(std::abs(g[c][t] - hits[t]), 0.0, 1e-12) << N << " " << t;
        }
    }
}

TEST(TwoBoundarySeries, FarBoundaryIsInvisibleEarly) {
    const SeriesTriple one = one_boundary_series(40);
    for (int N = 1; N <= 8; ++N) {
        const SeriesTriple g = two_boundary_series(N, 40);
        for (int t = 1; t <= 2 * N - 1; ++t) EXPECT_NEAR(std::abs(g.r[t] - one.r[t]), 0.0, 1e-14) << N << " " << t;
    }
}

TEST(TwoBoundarySeries, InvalidArguments) {
    EXPECT_THROW(two_boundary_series(0, 10), std::invalid_argument);
    EXPECT_THROW(two_boundary_series(1, 0), std::invalid_argument);
    EXPECT_THROW(one_boundary_series(0), std::invalid_argument);
}

TEST(PartialAbsorption, Basics) {
    EXPECT_EQ(partial_absorption(TruncatedSeries(10)), 0.0);
    // Geometric tail: 16 * sum_{t>40} 9^{-t} is far below 1e-15.
    EXPECT_NEAR(partial_absorption(two_boundary_series(1, 40).r), 2.0 / 3.0, 1e-15);
}

TEST(PartialAbsorption, ConvergesTowardQuadratureValue) {
    const SeriesTriple g = one_boundary_series(200);
    const double p = partial_absorption(g.r);
    EXPECT_NEAR(p, 0.6693, 5e-3);
    EXPECT_LE(partial_absorption(one_boundary_series(100).r), p);
}

TEST(Series, ConvolutionMatchesClosedFormProduct) {
    const int T = 120;
    const SeriesTriple g = one_boundary_series(T);
    const Complex z = 0.3;
    EXPECT_NEAR(std::abs((g.l * g.r).eval(z) - l_closed(z) * r_closed(z)), 0.0, 1e-10);
}
