#pragma once

// State-vector evolution of the three-state walk on Z with projective
// absorbing measurements. This is the ground truth every analytic route in
// the library is checked against.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

using Position = std::int64_t;

/// Absorbing sites: left boundary at -left, right boundary at +right.
struct BoundarySpec {
    std::optional<int> left;
    std::optional<int> right;

    static BoundarySpec none() { return {}; }
    static BoundarySpec left_only(int m) { return {m, std::nullopt}; }
    static BoundarySpec right_only(int n) { return {std::nullopt, n}; }
    static BoundarySpec both(int m, int n) { return {m, n}; }

    /// Throws std::invalid_argument if a present boundary is < 1.
    void validate() const;
    bool empty() const { return !left && !right; }
    /// Left and right exchanged.
    BoundarySpec mirrored() const { return {right, left}; }
};

struct Projection;

/// Amplitudes over the occupied window of the lattice, plus the step count
/// and the absorbed-mass ledger. Amplitudes are stored unnormalized; mass
/// removed by a boundary measurement is recorded rather than renormalized.
///
/// Storage covers the contiguous window [lo, lo + size) of positions that can
/// be occupied. Positions outside the window have zero amplitude.
class WalkState {
public:
    WalkState() = default;

    /// Walker at the origin with the given coin spinor, t = 0.
    static WalkState at_origin(const CoinSpinor& spinor);
    static WalkState at(Position m, const CoinSpinor& spinor);

    CoinSpinor amplitude(Position m) const;
    void set_amplitude(Position m, const CoinSpinor& v);
    void add_amplitude(Position m, const CoinSpinor& v);

    /// Squared norm of the amplitudes still on the lattice.
    double norm2() const;
    /// Number of positions with a nonzero spinor.
    std::size_t support_size() const;
    /// Smallest and largest occupied positions; nullopt for the zero state.
    std::optional<std::pair<Position, Position>> support() const;
    bool is_zero() const { return !support().has_value(); }

    int steps() const { return t_; }
    const std::vector<double>& absorbed_left() const { return absorbed_left_; }
    const std::vector<double>& absorbed_right() const { return absorbed_right_; }
    double total_absorbed() const;

    /// Removes every amplitude at m and returns the removed squared norm.
    double take(Position m);

    /// Reflection m -> -m with L and R exchanged; ledgers are swapped.
    WalkState mirrored() const;

    /// Calls f(position, spinor) for every position in the stored window in
    /// increasing order, zero spinors included.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < amps_.size(); ++i) f(lo_ + static_cast<Position>(i), amps_[i]);
    }

    Position window_lo() const { return lo_; }
    Position window_hi() const { return lo_ + static_cast<Position>(amps_.size()) - 1; }

private:
    friend WalkState apply_evolution(const WalkState&, const CoinMatrix&);
    friend Projection project_is_at(const WalkState&, Position, bool);
    friend class Walker;

    void ensure_covers(Position m);
    void trim();

    Position lo_ = 0;
    std::vector<CoinSpinor> amps_;
    int t_ = 0;
    std::vector<double> absorbed_left_;
    std::vector<double> absorbed_right_;
};

/// One step U = S (I (x) C): apply the coin at every site, then move the L
/// component one site left, keep S, and move R one site right.
WalkState apply_evolution(const WalkState& state, const CoinMatrix& coin);

struct Projection {
    double prob_yes = 0.0;
    WalkState yes;
    WalkState no;
};

/// Measurement "is the walker at n?". prob_yes is relative to the state's
/// own norm. The branches are raw projections unless renormalize is set.
Projection project_is_at(const WalkState& state, Position n, bool renormalize = false);

/// Probability of each occupied position; zero positions are omitted.
std::map<Position, double> position_distribution(const WalkState& state);

struct AbsorptionReport {
    /// Index t holds the mass absorbed at step t; index 0 is always 0.
    std::vector<double> left_mass;
    std::vector<double> right_mass;
    /// Squared norm still on the lattice after step t (index 0 is the input).
    std::vector<double> remaining;
    WalkState final_state;

    int steps() const { return static_cast<int>(left_mass.size()) - 1; }
    double cumulative_left() const;
    double cumulative_right() const;
    double cumulative_left(int t) const;
    double cumulative_right(int t) const;
    double final_remaining() const { return remaining.back(); }
};

/// Steps a walk with the boundary measurements applied after each U, left
/// boundary first. Used when per-step access to the state is needed.
class Walker {
public:
    Walker(const WalkState& initial, BoundarySpec bounds, CoinMatrix coin = grover_coin());

    /// Evolve, then measure left, then right. Returns the masses absorbed.
    std::pair<double, double> step();
    const WalkState& state() const { return state_; }

private:
    WalkState state_;
    BoundarySpec bounds_;
    CoinMatrix coin_;
};

/// Initial spinors must be normalized to within this tolerance.
inline constexpr double kSpinorNormTolerance = 1e-9;

/// Throws std::invalid_argument unless |norm2 - 1| <= kSpinorNormTolerance.
void require_normalized(const CoinSpinor& init);

/// Runs `steps` steps from init at the origin. Empty bounds gives the free walk.
AbsorptionReport run_walk(const CoinSpinor& init, const BoundarySpec& bounds, int steps,
                          const CoinMatrix& coin = grover_coin());

/// Entry t (1..T) is the amplitude <-M, L| U (Pi_no U)^{t-1} |0, c>, with
/// Pi_no covering every present boundary. Entry 0 is 0. Only the L component
/// can arrive at a left boundary, so one scalar per step is complete.
std::vector<Complex> first_hit_amplitudes(Coin init, const BoundarySpec& bounds, int T,
                                          const CoinMatrix& coin = grover_coin());

}  // namespace qwalk
