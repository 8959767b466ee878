#include "qwalk/localize.hpp"

#include <cmath>
#include <numbers>
#include <vector>
#include <stdexcept>

namespace qwalk {

OscillationTrace oscillation_trace(int T) {
    if (T < 1) throw std::invalid_argument("oscillation_trace: T must be >= 1");
    OscillationTrace tr;
    tr.t.reserve(static_cast<std::size_t>(T));
    Walker walker(WalkState::at_origin(CoinSpinor::basis(Coin::Right)), BoundarySpec::none());
    for (int t = 1; t <= T; ++t) {
        walker.step();
        const double a = walker.state().amplitude(-1).norm2();
        const double b = walker.state().amplitude(0).norm2();
        tr.t.push_back(t);
        tr.p_minus1.push_back(a);
        tr.p_zero.push_back(b);
        tr.sum.push_back(a + b);
    }
    return tr;
}

OscillationAverages time_average(const OscillationTrace& trace, int from, int to) {
    if (trace.t.empty() || from < trace.t.front() || to > trace.t.back() || from > to)
        throw std::invalid_argument("time_average: window outside the trace");
    OscillationAverages avg;
    const auto first = static_cast<std::size_t>(from - trace.t.front());
    const auto last = static_cast<std::size_t>(to - trace.t.front());
    for (std::size_t i = first; i <= last; ++i) {
        avg.p_minus1 += trace.p_minus1[i];
        avg.p_zero += trace.p_zero[i];
        avg.sum += trace.sum[i];
    }
    const double n = static_cast<double>(last - first + 1);
    avg.p_minus1 /= n;
    avg.p_zero /= n;
    avg.sum /= n;
    return avg;
}

std::pair<int, int> default_average_window(int T) { return {T / 2, T}; }

std::map<Position, double> two_peak_profile(int T, int from) {
    if (T < 1) throw std::invalid_argument("two_peak_profile: T must be >= 1");
    if (from < 0) from = default_average_window(T).first;
    if (from < 1 || from > T) throw std::invalid_argument("two_peak_profile: window start outside [1, T]");

    std::map<Position, double> acc;
    Walker walker(WalkState::at_origin(CoinSpinor::basis(Coin::Right)), BoundarySpec::none());
    for (int t = 1; t <= T; ++t) {
        walker.step();
        if (t < from) continue;
        walker.state().for_each([&](Position m, const CoinSpinor& v) {
            const double p = v.norm2();
            if (p > 0.0) acc[m] += p;
        });
    }
    const double n = static_cast<double>(T - from + 1);
    for (auto& [m, p] : acc) p /= n;
    return acc;
}

std::map<Position, double> localized_profile(int T) {
    if (T < 1) throw std::invalid_argument("localized_profile: T must be >= 1");
    const auto width = static_cast<std::size_t>(2 * T + 1);
    std::vector<CoinSpinor> even(width), odd(width);
    Walker walker(WalkState::at_origin(CoinSpinor::basis(Coin::Right)), BoundarySpec::none());
    double wsum = 0.0;
    for (int t = 1; t <= T; ++t) {
        walker.step();
        const double s = std::sin(std::numbers::pi * t / (T + 1.0));
        const double w = s * s;
        wsum += w;
        const double sign = t % 2 == 0 ? 1.0 : -1.0;
        walker.state().for_each([&](Position m, const CoinSpinor& v) {
            const auto i = static_cast<std::size_t>(m + T);
            even[i] += Complex(w) * v;
            odd[i] += Complex(w * sign) * v;
        });
    }
    std::map<Position, double> out;
    for (std::size_t i = 0; i < width; ++i) {
        const double p = (even[i].norm2() + odd[i].norm2()) / (wsum * wsum);
        if (p > 0.0) out[static_cast<Position>(i) - T] = p;
    }
    return out;
}

double residual_near_origin(int M, int T, int radius) {
    if (T < 0 || radius < 0) throw std::invalid_argument("residual_near_origin: negative argument");
    const AbsorptionReport rep = run_walk(CoinSpinor::basis(Coin::Right), BoundarySpec::left_only(M), T);
    double mass = 0.0;
    for (Position m = -radius; m <= radius; ++m) mass += rep.final_state.amplitude(m).norm2();
    return mass;
}

LineFit fit_line(const std::vector<std::pair<double, double>>& points) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : points)
        if (std::isfinite(p.first) && std::isfinite(p.second)) pts.push_back(p);
    if (pts.size() < 3) throw std::invalid_argument("decay fit needs at least 3 finite points");

    const double n = static_cast<double>(pts.size());
    double sx = 0.0, sy = 0.0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("decay fit needs distinct x values");

    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    for (const auto& [x, y] : pts)
        fit.max_residual = std::max(fit.max_residual, std::abs(y - (fit.intercept + fit.slope * x)));
    return fit;
}

double decay_slope(const std::vector<std::pair<double, double>>& points) { return fit_line(points).slope; }

}  // namespace qwalk
