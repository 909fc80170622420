#include "qwalk/torus.hpp"

#include <stdexcept>

namespace qwalk {

namespace {
int wrap(int v, int n) { return ((v % n) + n) % n; }
}  // namespace

TorusTwoWalkerState::TorusTwoWalkerState(int size) : size_(size) {
    if (size < 1) {
        throw std::invalid_argument("torus size must be positive");
    }
    const std::size_t n = static_cast<std::size_t>(size);
    amps_.assign(16 * n * n * n * n, Amplitude{});
}

TorusTwoWalkerState TorusTwoWalkerState::basis(int size, std::size_t index) {
    TorusTwoWalkerState state(size);
    state.amps_.at(index) = 1.0;
    return state;
}

std::size_t TorusTwoWalkerState::index_of(CoinState c1, CoinState c2, Node l1, Node l2) const {
    const std::size_t n = static_cast<std::size_t>(size_);
    const std::size_t cell = ((wrap(l1.x, size_) * n + wrap(l1.y, size_)) * n + wrap(l2.x, size_)) * n +
                             wrap(l2.y, size_);
    return pair_index(c1, c2) * n * n * n * n + cell;
}

Term TorusTwoWalkerState::term_at(std::size_t index) const {
    const std::size_t n = static_cast<std::size_t>(size_);
    const std::size_t cells = n * n * n * n;
    const int pair = static_cast<int>(index / cells);
    std::size_t cell = index % cells;
    const int y2 = static_cast<int>(cell % n);
    cell /= n;
    const int x2 = static_cast<int>(cell % n);
    cell /= n;
    const int y1 = static_cast<int>(cell % n);
    const int x1 = static_cast<int>(cell / n);
    return {CoinState::from_index(pair >> 2), CoinState::from_index(pair & 3), {x1, y1}, {x2, y2}, amps_[index]};
}

TorusTwoWalkerState torus_controlled_coin(const TorusTwoWalkerState& state, InteractionMode mode) {
    const int n = state.size();
    const std::size_t cells = state.dimension() / 16;
    TorusTwoWalkerState out(n);
    std::array<Amplitude, 16> block{};
    for (std::size_t cell = 0; cell < cells; ++cell) {
        for (int k = 0; k < 16; ++k) {
            block[k] = state[k * cells + cell];
        }
        const Term where = state.term_at(cell);
        apply_controlled_coin_block(block, where.l1 == where.l2, mode);
        for (int k = 0; k < 16; ++k) {
            out[k * cells + cell] = block[k];
        }
    }
    return out;
}

TorusTwoWalkerState torus_shift_both(const TorusTwoWalkerState& state) {
    TorusTwoWalkerState out(state.size());
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        if (state[i] == Amplitude{}) {
            continue;
        }
        const Term t = state.term_at(i);
        out[out.index_of(t.c1, t.c2, t.l1 + step_vector(t.c1), t.l2 + step_vector(t.c2))] = t.amplitude;
    }
    return out;
}

TorusTwoWalkerState torus_step(const TorusTwoWalkerState& state, InteractionMode mode) {
    return torus_shift_both(torus_controlled_coin(state, mode));
}

}  // namespace qwalk
