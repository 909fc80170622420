#pragma once

// Two distinguishable walkers with an optional on-site interaction.
//
// One step is shift_both(controlled_coin(psi, mode)): a coin operation that
// is block diagonal in the positions (l1, l2), followed by the product of
// the two walkers' shifts. For mode hpp the block is the collision
// permutation when l1 == l2 and Grover (x) Grover otherwise; for mode phase
// it is Grover (x) Grover with an extra factor -1 when l1 == l2; for mode
// none it is always Grover (x) Grover.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "qwalk/lattice.hpp"

namespace qwalk {

enum class InteractionMode { none, hpp, phase };
enum class InitialStateId { sep1, sep2, grov, ent };

std::string_view to_string(InteractionMode mode);
std::string_view to_string(InitialStateId id);
/// Throw std::invalid_argument on unknown names.
InteractionMode parse_mode(std::string_view text);
InitialStateId parse_initial(std::string_view text);

/// One computational basis term |c1, l1>|c2, l2> with its amplitude.
struct Term {
    CoinState c1;
    CoinState c2;
    Node l1;
    Node l2;
    Amplitude amplitude;
};

/// Coordinates lo, lo + 2, ..., lo + 2 (count - 1) along one axis.
struct Axis {
    int lo = 0;
    int count = 0;

    int value(int index) const { return lo + 2 * index; }
    int hi() const { return lo + 2 * (count - 1); }
    /// Index of coordinate v, or -1 if v is not on this axis.
    int index_of(int v) const {
        const int d = v - lo;
        if (d < 0 || (d & 1) != 0 || d / 2 >= count) {
            return -1;
        }
        return d / 2;
    }
    bool operator==(const Axis&) const = default;
};

enum AxisId : int { kX1 = 0, kY1 = 1, kX2 = 2, kY2 = 3 };

/// Amplitudes psi_{c1 c2}(l1, l2) on a box of nodes.
///
/// Every coordinate of a walker changes by +-1 per step, so at any time the
/// support along each of x1, y1, x2, y2 lies on a single parity class. The
/// state stores only that class: four Axis ranges and 16 coin-pair planes
/// (index c1 * 4 + c2) of cells ordered (x1, y1, x2, y2) with y2 fastest.
/// The box grows by one coordinate on each side per step, which is exactly
/// the light cone.
class TwoWalkerState {
  public:
    /// Builds a state from terms; repeated terms add. Throws
    /// std::invalid_argument if the list is empty or any coordinate mixes
    /// parities across terms.
    static TwoWalkerState from_terms(std::span<const Term> terms);

    /// All-zero state over the given box.
    static TwoWalkerState zeros(const std::array<Axis, 4>& axes, int step_count);

    const std::array<Axis, 4>& axes() const { return axes_; }
    int step_count() const { return step_count_; }

    /// Number of (x1, y1) cells; rows of the Schmidt coefficient matrix per coin.
    std::size_t cells_first() const { return static_cast<std::size_t>(axes_[kX1].count) * axes_[kY1].count; }
    std::size_t cells_second() const { return static_cast<std::size_t>(axes_[kX2].count) * axes_[kY2].count; }
    std::size_t cells() const { return cells_first() * cells_second(); }
    std::size_t stored_amplitudes() const { return amps_.size(); }

    Node first_node(std::size_t i1) const;
    Node second_node(std::size_t i2) const;

    Amplitude amplitude(CoinState c1, CoinState c2, Node l1, Node l2) const;
    void add_amplitude(CoinState c1, CoinState c2, Node l1, Node l2, Amplitude value);

    double norm_squared() const;
    std::size_t nonzero_count() const;

    /// Visits nonzero terms in storage order.
    void for_each_nonzero(const std::function<void(const Term&)>& fn) const;

    std::span<const Amplitude> plane(int pair) const { return {amps_.data() + pair * cells(), cells()}; }
    std::span<Amplitude> plane(int pair) { return {amps_.data() + pair * cells(), cells()}; }

    /// Largest |coordinate| over the box.
    int max_abs_coordinate() const;

    bool operator==(const TwoWalkerState&) const = default;

  private:
    friend class TwoWalkerKernels;

    TwoWalkerState(const std::array<Axis, 4>& axes, int step_count);
    std::size_t cell_index(Node l1, Node l2) const;  // npos if outside

    std::array<Axis, 4> axes_{};
    int step_count_ = 0;
    std::vector<Amplitude> amps_;
};

TwoWalkerState make_initial(InitialStateId id);

/// The position-controlled coin. Positions are unchanged.
TwoWalkerState controlled_coin(const TwoWalkerState& state, InteractionMode mode);

/// Moves l1 by step_vector(c1) and l2 by step_vector(c2); with reverse set,
/// by the negated vectors. Amplitudes are unchanged. step_count is unchanged.
TwoWalkerState shift_both(const TwoWalkerState& state, bool reverse = false);

/// shift_both(controlled_coin(state, mode)) in one fused pass; step_count
/// advances by one. Throws StateCorruption if the input norm is off by more
/// than 1e-6.
TwoWalkerState step(const TwoWalkerState& state, InteractionMode mode);

/// Applies the coin block for one position pair in place; `pairs` is indexed
/// by c1 * 4 + c2.
void apply_controlled_coin_block(std::array<Amplitude, 16>& pairs, bool coincident, InteractionMode mode);

inline constexpr std::size_t kDefaultAmplitudeBudget = std::size_t{1} << 27;

struct RunOptions {
    /// Maximum stored amplitudes (16 per cell of the box).
    std::size_t budget = kDefaultAmplitudeBudget;
};

/// Amplitudes stored by the state after one more step.
std::size_t next_step_footprint(const TwoWalkerState& state);

using Observer = std::function<void(const TwoWalkerState&)>;

/// Applies step `steps` times, calling observer (if set) after each step.
/// Throws BudgetExceeded before a step whose result would exceed the budget.
TwoWalkerState run(TwoWalkerState initial, InteractionMode mode, int steps, const Observer& observer = {},
                   const RunOptions& options = {});

}  // namespace qwalk
