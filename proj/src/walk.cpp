#include "qwalk/walk.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace qwalk {

void BoundarySpec::validate() const {
    if (left && *left < 1) throw std::invalid_argument("left boundary must be >= 1, got " + std::to_string(*left));
    if (right && *right < 1) throw std::invalid_argument("right boundary must be >= 1, got " + std::to_string(*right));
}

WalkState WalkState::at_origin(const CoinSpinor& spinor) { return at(0, spinor); }

WalkState WalkState::at(Position m, const CoinSpinor& spinor) {
    WalkState s;
    s.lo_ = m;
    s.amps_.assign(1, spinor);
    s.trim();
    return s;
}

CoinSpinor WalkState::amplitude(Position m) const {
    if (amps_.empty() || m < lo_ || m > window_hi()) return {};
    return amps_[static_cast<std::size_t>(m - lo_)];
}

void WalkState::ensure_covers(Position m) {
    if (amps_.empty()) {
        lo_ = m;
        amps_.assign(1, CoinSpinor{});
        return;
    }
    if (m < lo_) {
        amps_.insert(amps_.begin(), static_cast<std::size_t>(lo_ - m), CoinSpinor{});
        lo_ = m;
    } else if (m > window_hi()) {
        amps_.resize(static_cast<std::size_t>(m - lo_ + 1));
    }
}

void WalkState::set_amplitude(Position m, const CoinSpinor& v) {
    ensure_covers(m);
    amps_[static_cast<std::size_t>(m - lo_)] = v;
    trim();
}

void WalkState::add_amplitude(Position m, const CoinSpinor& v) {
    ensure_covers(m);
    amps_[static_cast<std::size_t>(m - lo_)] += v;
    trim();
}

void WalkState::trim() {
    std::size_t first = 0;
    while (first < amps_.size() && amps_[first].is_zero()) ++first;
    if (first == amps_.size()) {
        amps_.clear();
        lo_ = 0;
        return;
    }
    std::size_t last = amps_.size();
    while (amps_[last - 1].is_zero()) --last;
    amps_.erase(amps_.begin() + static_cast<std::ptrdiff_t>(last), amps_.end());
    amps_.erase(amps_.begin(), amps_.begin() + static_cast<std::ptrdiff_t>(first));
    lo_ += static_cast<Position>(first);
}

double WalkState::norm2() const {
    double acc = 0.0;
    for (const auto& v : amps_) acc += v.norm2();
    return acc;
}

std::size_t WalkState::support_size() const {
    std::size_t n = 0;
    for (const auto& v : amps_) n += v.is_zero() ? 0 : 1;
    return n;
}

std::optional<std::pair<Position, Position>> WalkState::support() const {
    if (amps_.empty()) return std::nullopt;
    return std::pair{lo_, window_hi()};
}

double WalkState::total_absorbed() const {
    return std::accumulate(absorbed_left_.begin(), absorbed_left_.end(), 0.0) +
           std::accumulate(absorbed_right_.begin(), absorbed_right_.end(), 0.0);
}

double WalkState::take(Position m) {
    if (amps_.empty() || m < lo_ || m > window_hi()) return 0.0;
    auto& v = amps_[static_cast<std::size_t>(m - lo_)];
    const double mass = v.norm2();
    v = CoinSpinor{};
    trim();
    return mass;
}

WalkState WalkState::mirrored() const {
    WalkState out;
    out.t_ = t_;
    out.absorbed_left_ = absorbed_right_;
    out.absorbed_right_ = absorbed_left_;
    if (amps_.empty()) return out;
    out.lo_ = -window_hi();
    out.amps_.reserve(amps_.size());
    for (auto it = amps_.rbegin(); it != amps_.rend(); ++it) out.amps_.push_back(it->mirrored());
    return out;
}

WalkState apply_evolution(const WalkState& state, const CoinMatrix& coin) {
    WalkState out;
    out.t_ = state.t_ + 1;
    out.absorbed_left_ = state.absorbed_left_;
    out.absorbed_right_ = state.absorbed_right_;
    if (state.amps_.empty()) return out;

    // New window [lo - 1, hi + 1]; index shift of one relative to the input.
    const std::size_t n = state.amps_.size();
    out.lo_ = state.lo_ - 1;
    out.amps_.assign(n + 2, CoinSpinor{});
    for (std::size_t i = 0; i < n; ++i) {
        const CoinSpinor c = coin.apply(state.amps_[i]);
        out.amps_[i].left += c.left;
        out.amps_[i + 1].stay += c.stay;
        out.amps_[i + 2].right += c.right;
    }
    out.trim();
    return out;
}

Projection project_is_at(const WalkState& state, Position n, bool renormalize) {
    Projection p;
    p.no = state;
    const double removed = p.no.take(n);
    p.yes = WalkState::at(n, state.amplitude(n));
    p.yes.t_ = state.steps();
    const double total = state.norm2();
    p.prob_yes = total > 0.0 ? removed / total : 0.0;
    if (renormalize) {
        // Rebuild each branch with unit norm, leaving zero branches as they are.
        auto rescale = [](WalkState& s) {
            const double nn = s.norm2();
            if (nn <= 0.0) return;
            const double k = 1.0 / std::sqrt(nn);
            WalkState r;
            s.for_each([&](Position m, const CoinSpinor& v) {
                if (!v.is_zero()) r.set_amplitude(m, k * v);
            });
            r.t_ = s.t_;
            r.absorbed_left_ = s.absorbed_left_;
            r.absorbed_right_ = s.absorbed_right_;
            s = std::move(r);
        };
        rescale(p.yes);
        rescale(p.no);
    }
    return p;
}

std::map<Position, double> position_distribution(const WalkState& state) {
    std::map<Position, double> dist;
    state.for_each([&](Position m, const CoinSpinor& v) {
        const double p = v.norm2();
        if (p > 0.0) dist.emplace(m, p);
    });
    return dist;
}

double AbsorptionReport::cumulative_left() const { return cumulative_left(steps()); }
double AbsorptionReport::cumulative_right() const { return cumulative_right(steps()); }

double AbsorptionReport::cumulative_left(int t) const {
    return std::accumulate(left_mass.begin(), left_mass.begin() + t + 1, 0.0);
}

double AbsorptionReport::cumulative_right(int t) const {
    return std::accumulate(right_mass.begin(), right_mass.begin() + t + 1, 0.0);
}

Walker::Walker(const WalkState& initial, BoundarySpec bounds, CoinMatrix coin)
    : state_(initial), bounds_(bounds), coin_(coin) {
    bounds_.validate();
}

std::pair<double, double> Walker::step() {
    state_ = apply_evolution(state_, coin_);
    double left = 0.0;
    double right = 0.0;
    if (bounds_.left) left = state_.take(-static_cast<Position>(*bounds_.left));
    if (bounds_.right) right = state_.take(static_cast<Position>(*bounds_.right));
    state_.absorbed_left_.push_back(left);
    state_.absorbed_right_.push_back(right);
    return {left, right};
}

void require_normalized(const CoinSpinor& init) {
    const double n = init.norm2();
    if (!(std::abs(n - 1.0) <= kSpinorNormTolerance))
        throw std::invalid_argument("initial spinor is not normalized: |a|^2+|b|^2+|c|^2 = " +
                                    std::to_string(n));
}

AbsorptionReport run_walk(const CoinSpinor& init, const BoundarySpec& bounds, int steps,
                          const CoinMatrix& coin) {
    if (steps < 0) throw std::invalid_argument("steps must be non-negative");
    require_normalized(init);
    Walker walker(WalkState::at_origin(init), bounds, coin);

    AbsorptionReport rep;
    rep.left_mass.reserve(static_cast<std::size_t>(steps) + 1);
    rep.right_mass.reserve(static_cast<std::size_t>(steps) + 1);
    rep.remaining.reserve(static_cast<std::size_t>(steps) + 1);
    rep.left_mass.push_back(0.0);
    rep.right_mass.push_back(0.0);
    rep.remaining.push_back(walker.state().norm2());
    for (int t = 1; t <= steps; ++t) {
        const auto [l, r] = walker.step();
        rep.left_mass.push_back(l);
        rep.right_mass.push_back(r);
        rep.remaining.push_back(walker.state().norm2());
    }
    rep.final_state = walker.state();
    return rep;
}

std::vector<Complex> first_hit_amplitudes(Coin init, const BoundarySpec& bounds, int T,
                                          const CoinMatrix& coin) {
    if (!bounds.left) throw std::invalid_argument("first_hit_amplitudes needs a left boundary");
    if (T < 1) throw std::invalid_argument("first_hit_amplitudes needs T >= 1");
    bounds.validate();

    const Position target = -static_cast<Position>(*bounds.left);
    std::vector<Complex> out(static_cast<std::size_t>(T) + 1, Complex{});
    WalkState s = WalkState::at_origin(CoinSpinor::basis(init));
    for (int t = 1; t <= T; ++t) {
        s = apply_evolution(s, coin);
        out[static_cast<std::size_t>(t)] = s.amplitude(target).left;
        s.take(target);
        if (bounds.right) s.take(static_cast<Position>(*bounds.right));
    }
    return out;
}

}  // namespace qwalk
