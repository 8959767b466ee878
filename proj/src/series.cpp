#include "qwalk/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()) + ")");
}

void require_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
    require_order(order);
    c_.assign(static_cast<std::size_t>(order) + 1, Complex{});
}

TruncatedSeries::TruncatedSeries(int order, std::initializer_list<Complex> leading)
    : TruncatedSeries(order, std::vector<Complex>(leading)) {}

TruncatedSeries::TruncatedSeries(int order, const std::vector<Complex>& leading) : TruncatedSeries(order) {
    const std::size_t n = std::min(leading.size(), c_.size());
    std::copy_n(leading.begin(), n, c_.begin());
}

TruncatedSeries TruncatedSeries::monomial(int order, int k, Complex c) {
    TruncatedSeries s(order);
    if (k >= 0 && k <= order) s[k] = c;
    return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const { return TruncatedSeries(order, c_); }

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& b) {
    require_same_order(*this, b, "series_add");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += b.c_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& b) {
    require_same_order(*this, b, "series_sub");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= b.c_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(Complex k) {
    for (auto& c : c_) c *= k;
    return *this;
}

Complex TruncatedSeries::eval(Complex z) const {
    Complex acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
TruncatedSeries operator*(Complex k, TruncatedSeries a) { return a *= k; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "series_mul");
    const int T = a.order();
    TruncatedSeries out(T);
    for (int i = 0; i <= T; ++i) {
        const Complex ai = a[i];
        if (ai == Complex{}) continue;
        for (int j = 0; i + j <= T; ++j) out[i + j] += ai * b[j];
    }
    return out;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }
TruncatedSeries series_scale(const TruncatedSeries& a, Complex k) { return k * a; }

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "series_div");
    if (b[0] == Complex{}) throw std::domain_error("series_div: divisor has zero constant term");
    const int T = a.order();
    TruncatedSeries q(T);
    const Complex inv_b0 = 1.0 / b[0];
    for (int k = 0; k <= T; ++k) {
        Complex acc = a[k];
        for (int j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
        q[k] = acc * inv_b0;
    }
    return q;
}

TruncatedSeries series_sqrt(const TruncatedSeries& a, Complex branch_constant) {
    const Complex a0 = a[0];
    if (a0 == Complex{}) throw std::domain_error("series_sqrt: zero constant term");
    if (std::abs(branch_constant * branch_constant - a0) > 1e-12 * std::max(1.0, std::abs(a0)))
        throw std::domain_error("series_sqrt: branch constant does not square to the constant term");

    const int T = a.order();
    TruncatedSeries s(0, {branch_constant});
    // Newton s <- (s + a/s)/2 doubles the number of correct coefficients.
    for (int known = 0; known < T;) {
        const int next = std::min(2 * known + 1, T);
        const TruncatedSeries ext = s.truncated(next);
        s = 0.5 * (ext + series_div(a.truncated(next), ext));
        known = next;
    }
    return s.truncated(T);
}

const TruncatedSeries& SeriesTriple::operator[](Coin c) const {
    switch (c) {
        case Coin::Left: return l;
        case Coin::Stay: return s;
        case Coin::Right: break;
    }
    return r;
}

namespace {

// One level of the recurrence system with coupling series `rho`:
//   l = -z/3 + (2z/3) s + (2z/3) l rho
//   s =  2z/3 - (z/3) s + (2z/3) l rho
//   r =  2z/3 + (2z/3) s - (z/3) l rho
// When `self_coupled` is set, rho is the r being solved for (single boundary).
SeriesTriple solve_level(int T, const TruncatedSeries* rho, bool self_coupled) {
    SeriesTriple out{TruncatedSeries(T), TruncatedSeries(T), TruncatedSeries(T)};
    constexpr double third = 1.0 / 3.0;
    constexpr double two_thirds = 2.0 / 3.0;
    for (int t = 1; t <= T; ++t) {
        // Coefficient t-1 of l * rho, using only coefficients < t.
        Complex lr{};
        const TruncatedSeries& coupling = self_coupled ? out.r : *rho;
        for (int i = 0; i <= t - 1; ++i) lr += out.l[i] * coupling[t - 1 - i];
        const Complex prev_s = out.s[t - 1];
        const double seed = t == 1 ? 1.0 : 0.0;
        out.l[t] = -third * seed + two_thirds * prev_s + two_thirds * lr;
        out.s[t] = two_thirds * seed - third * prev_s + two_thirds * lr;
        out.r[t] = two_thirds * seed + two_thirds * prev_s - third * lr;
    }
    return out;
}

void require_positive(int v, const char* what) {
    if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

}  // namespace

SeriesTriple one_boundary_series(int T) {
    require_positive(T, "series order T");
    return solve_level(T, nullptr, true);
}

std::vector<SeriesTriple> two_boundary_series_ladder(int N, int T) {
    if (N < 0) throw std::invalid_argument("right boundary N must be >= 0");
    require_positive(T, "series order T");
    std::vector<SeriesTriple> ladder;
    ladder.reserve(static_cast<std::size_t>(N) + 1);
    ladder.push_back({TruncatedSeries(T), TruncatedSeries(T), TruncatedSeries(T)});
    for (int k = 1; k <= N; ++k) ladder.push_back(solve_level(T, &ladder.back().r, false));
    return ladder;
}

SeriesTriple two_boundary_series(int N, int T) {
    require_positive(N, "right boundary N");
    return two_boundary_series_ladder(N, T).back();
}

double partial_absorption(const TruncatedSeries& f) {
    double acc = 0.0;
    for (int t = 1; t <= f.order(); ++t) acc += std::norm(f[t]);
    return acc;
}

}  // namespace qwalk
