#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "qwalk/absorb.hpp"
#include "qwalk/localize.hpp"

using namespace qwalk;

TEST(Oscillation, FirstStep) {
    const OscillationTrace tr = oscillation_trace(3);
    ASSERT_EQ(tr.t.size(), 3u);
    EXPECT_EQ(tr.t[0], 1);
    // G|R> = (2/3, 2/3, -1/3): L lands on -1, S stays at 0.
    EXPECT_NEAR(tr.p_minus1[0], 4.0 / 9.0, 1e-15);
    EXPECT_NEAR(tr.p_zero[0], 4.0 / 9.0, 1e-15);
    EXPECT_NEAR(tr.sum[0], 8.0 / 9.0, 1e-15);
}

TEST(Oscillation, LongTimeAverages) {
    const OscillationTrace tr = oscillation_trace(500);
    const auto [from, to] = default_average_window(500);
    EXPECT_EQ(from, 250);
    const OscillationAverages avg = time_average(tr, from, to);
    EXPECT_NEAR(avg.p_minus1, 0.2026, 2e-3);
    EXPECT_NEAR(avg.p_zero, 0.2027, 2e-3);
    EXPECT_NEAR(avg.sum, 0.4053, 2e-3);
    EXPECT_THROW(time_average(tr, 0, 10), std::invalid_argument);
    EXPECT_THROW(time_average(tr, 20, 10), std::invalid_argument);
}

TEST(Oscillation, ProfileHasTwoPeaks) {
    const auto prof = two_peak_profile(400);
    double total = 0.0;
    Position best = 0, second = 0;
    double best_p = -1, second_p = -1;
    for (const auto& [m, p] : prof) {
        total += p;
        if (p > best_p) {
            second = best;
            second_p = best_p;
            best = m;
            best_p = p;
        } else if (p > second_p) {
            second = m;
            second_p = p;
        }
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
    EXPECT_EQ(std::min(best, second), -1);
    EXPECT_EQ(std::max(best, second), 0);
}

TEST(Oscillation, PlainAverageHasBallisticFloor) {
    // beyond |m| = 2 the plain average is flat at ~1/T, not geometric
    const auto prof = two_peak_profile(500);
    EXPECT_NEAR(prof.at(-4) / prof.at(-3), 1.0, 0.1);
    EXPECT_GT(prof.at(-3), 3e-4);
}

TEST(Oscillation, ProfileTailDecaysGeometrically) {
    const auto prof = localized_profile(500);
    std::vector<std::pair<double, double>> pts;
    for (int m = -1; m >= -4; --m) pts.emplace_back(m, std::log(prof.at(m)));
    const LineFit left = fit_line(pts);
    EXPECT_GT(left.slope, 0.0);
    EXPECT_LT(left.max_residual, 0.2);
    pts.clear();
    for (int m = 1; m <= 4; ++m) pts.emplace_back(m, std::log(prof.at(m)));
    const LineFit right = fit_line(pts);
    EXPECT_LT(right.slope, 0.0);
    EXPECT_LT(right.max_residual, 0.2);
    // per-site ratio (5 - 2 sqrt 6)^2 on both sides
    const double rate = 2.0 * std::log(5.0 - 2.0 * std::sqrt(6.0));
    EXPECT_NEAR(left.slope, -rate, 0.02);
    EXPECT_NEAR(right.slope, rate, 0.02);
}

TEST(Oscillation, LocalizedPeaksMatchAverages) {
    const auto loc = localized_profile(500);
    EXPECT_NEAR(loc.at(-1), 0.202, 0.005);
    EXPECT_NEAR(loc.at(0), 0.202, 0.005);
    EXPECT_THROW(localized_profile(0), std::invalid_argument);
}

TEST(Fit, SyntheticLine) {
    std::vector<std::pair<double, double>> pts;
    for (int n = 1; n <= 5; ++n) pts.emplace_back(n, 40.0 - 7.0 * n);
    EXPECT_NEAR(decay_slope(pts), -7.0, 1e-12);
    EXPECT_NEAR(fit_line(pts).max_residual, 0.0, 1e-12);
    for (auto& p : pts) p.second = 3.0;
    EXPECT_NEAR(decay_slope(pts), 0.0, 1e-15);
}

TEST(Fit, SkipsNonFinitePoints) {
    std::vector<std::pair<double, double>> pts{{1, 2}, {2, 4}, {3, -std::numeric_limits<double>::infinity()}, {4, 8}};
    EXPECT_NEAR(decay_slope(pts), 2.0, 1e-12);
    pts.resize(2);
    EXPECT_THROW(decay_slope(pts), std::invalid_argument);
}

TEST(Fit, PublishedLogColumn) {
    const std::vector<std::pair<double, double>> pts{
        {1, 31.9119}, {2, 25.2971}, {3, 18.6826}, {4, 12.0674}, {5, 3.4594}};
    const LineFit fit = fit_line(pts);
    // least squares gives -7.01; the endpoint slope is -7.11
    EXPECT_NEAR(fit.slope, -7.11, 0.15);
    EXPECT_LT(fit.max_residual, 0.5);
}

TEST(Fit, ComputedTableSlope) {
    const auto rows = table1(6);
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : rows)
        if (r.log2_scaled) pts.emplace_back(r.n, *r.log2_scaled);
    ASSERT_EQ(pts.size(), 5u);
    const LineFit fit = fit_line(pts);
    EXPECT_NEAR(fit.slope, 4.0 * std::log2(5.0 - 2.0 * std::sqrt(6.0)) / 2.0, 0.01);
    EXPECT_LT(fit.max_residual, 0.05);
}

TEST(Residual, BoundaryDistanceMatters) {
    EXPECT_LT(residual_near_origin(1, 2000), 0.01);
    EXPECT_GT(residual_near_origin(2, 2000), 0.3);
    EXPECT_THROW(residual_near_origin(1, -1), std::invalid_argument);
}
