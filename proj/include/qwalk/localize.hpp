#pragma once

// Measurements of the trapped mass of the |0,R> walk: the oscillation
// between sites -1 and 0 on the free line, the time-averaged two-peak
// profile, and exponential fits to localization data.

#include <map>
#include <utility>
#include <vector>

#include "qwalk/walk.hpp"

namespace qwalk {

/// P(t,-1) and P(t,0) for t = 1..T, free walk from |0,R>.
struct OscillationTrace {
    std::vector<int> t;
    std::vector<double> p_minus1;
    std::vector<double> p_zero;
    std::vector<double> sum;
};

OscillationTrace oscillation_trace(int T);

/// Averages of the trace over t in [from, to], inclusive.
struct OscillationAverages {
    double p_minus1 = 0.0;
    double p_zero = 0.0;
    double sum = 0.0;
};

OscillationAverages time_average(const OscillationTrace& trace, int from, int to);

/// Window over which "localization probability" is estimated: the second
/// half of the run, [T/2, T].
std::pair<int, int> default_average_window(int T);

/// Time-averaged P(t, m) over t in [from, to] for the free |0,R> walk run to
/// T = to. `from` defaults to T/2.
std::map<Position, double> two_peak_profile(int T, int from = -1);

/// Trapped part of the |0,R> free walk: squared norms of the Hann-weighted
/// time averages of (+1)^t psi_t and (-1)^t psi_t, summed per site. The
/// ballistic part of the plain average leaves a ~1/T floor at every site;
/// here it leaks in only at O(T^-4), so the geometric tails stay visible.
std::map<Position, double> localized_profile(int T);

/// Probability left within distance `radius` of the origin after T steps of
/// the |0,R> walk with a single left boundary at -M.
double residual_near_origin(int M, int T, int radius = 5);

/// Least-squares slope of y against x. Points with non-finite y are dropped;
/// throws std::invalid_argument if fewer than 3 remain.
double decay_slope(const std::vector<std::pair<double, double>>& points);

/// Slope and worst absolute residual of the fit.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;
};

LineFit fit_line(const std::vector<std::pair<double, double>>& points);

}  // namespace qwalk
