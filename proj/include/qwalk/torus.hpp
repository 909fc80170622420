#pragma once

// Two walkers on an N x N torus with a dense amplitude vector. Small sizes
// only (dimension 16 N^4); used to check the infinite-lattice engine and to
// build the one-step operator column by column.

#include <cstddef>
#include <vector>

#include "qwalk/lattice.hpp"
#include "qwalk/two_walker.hpp"

namespace qwalk {

class TorusTwoWalkerState {
  public:
    explicit TorusTwoWalkerState(int size);

    /// The computational basis vector with the given flat index.
    static TorusTwoWalkerState basis(int size, std::size_t index);

    int size() const { return size_; }
    std::size_t dimension() const { return amps_.size(); }

    /// Flat index of |c1, l1>|c2, l2>; coordinates are reduced mod N.
    std::size_t index_of(CoinState c1, CoinState c2, Node l1, Node l2) const;
    /// Inverse of index_of with coordinates in [0, N).
    Term term_at(std::size_t index) const;

    Amplitude& operator[](std::size_t i) { return amps_[i]; }
    const Amplitude& operator[](std::size_t i) const { return amps_[i]; }
    const std::vector<Amplitude>& amplitudes() const { return amps_; }

  private:
    int size_;
    std::vector<Amplitude> amps_;
};

TorusTwoWalkerState torus_controlled_coin(const TorusTwoWalkerState& state, InteractionMode mode);
TorusTwoWalkerState torus_shift_both(const TorusTwoWalkerState& state);

/// torus_shift_both(torus_controlled_coin(state, mode)).
TorusTwoWalkerState torus_step(const TorusTwoWalkerState& state, InteractionMode mode);

}  // namespace qwalk
