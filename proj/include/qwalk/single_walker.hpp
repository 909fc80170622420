#pragma once

// One coined walker on the square lattice with diagonal moves.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qwalk/lattice.hpp"
#include "qwalk/probability_grid.hpp"

namespace qwalk {

/// Dense amplitudes psi_c(x, y) over a fixed square of nodes, stored as four
/// coin planes of extent x extent cells (x-major).
///
/// A window state covers [-R, R]^2 and emulates the infinite lattice: its
/// boundary ring must stay empty. A torus state covers [0, N)^2 with
/// periodic coordinates.
class SingleWalkerState {
  public:
    static SingleWalkerState window(int half_width);
    static SingleWalkerState torus(int size);

    bool is_torus() const { return torus_; }
    int extent() const { return extent_; }
    /// Window half-width R; meaningless for torus states.
    int half_width() const { return torus_ ? -1 : (extent_ - 1) / 2; }
    int step_count() const { return step_count_; }

    bool contains(Node node) const;
    Amplitude amplitude(CoinState coin, Node node) const;
    void set_amplitude(CoinState coin, Node node, Amplitude value);

    double norm_squared() const;

    /// Visits every nonzero amplitude in (coin, x, y) order.
    void for_each_nonzero(const std::function<void(CoinState, Node, Amplitude)>& fn) const;

    std::span<const Amplitude> plane(CoinState coin) const;
    std::span<Amplitude> plane(CoinState coin);

    Node node_at(std::size_t cell) const;
    std::size_t cell_of(Node node) const;

  private:
    friend SingleWalkerState evolve_single(const SingleWalkerState& state);

    SingleWalkerState(int extent, bool torus);

    int extent_ = 0;
    bool torus_ = false;
    int step_count_ = 0;
    std::vector<Amplitude> amps_;
};

/// One step S (C (x) I) with the Grover coin. Throws StateCorruption if the
/// input norm is off by more than 1e-6 and WindowOverflow if a window state
/// has amplitude on its boundary ring.
SingleWalkerState evolve_single(const SingleWalkerState& state);

/// P(x, y) = sum_c |psi_c(x, y)|^2 over nodes with nonzero probability.
ProbabilityGrid single_probability(const SingleWalkerState& state);

/// (|00> - |01> - |10> + |11>)/2 at `origin`, in a window large enough for
/// `max_steps` steps.
SingleWalkerState make_max_spread_initial(int max_steps, Node origin = {0, 0});

/// |coin>|origin> in a window large enough for `max_steps` steps.
SingleWalkerState make_localized_single(CoinState coin, int max_steps, Node origin = {0, 0});

}  // namespace qwalk
