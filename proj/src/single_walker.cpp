#include "qwalk/single_walker.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/simd/kernels.hpp"

namespace qwalk {

SingleWalkerState::SingleWalkerState(int extent, bool torus)
    : extent_(extent), torus_(torus), amps_(4 * static_cast<std::size_t>(extent) * extent) {}

SingleWalkerState SingleWalkerState::window(int half_width) {
    if (half_width < 1) {
        throw std::invalid_argument("window half-width must be at least 1");
    }
    return SingleWalkerState(2 * half_width + 1, false);
}

SingleWalkerState SingleWalkerState::torus(int size) {
    if (size < 1) {
        throw std::invalid_argument("torus size must be positive");
    }
    return SingleWalkerState(size, true);
}

bool SingleWalkerState::contains(Node node) const {
    if (torus_) {
        return true;
    }
    const int r = half_width();
    return std::abs(node.x) <= r && std::abs(node.y) <= r;
}

std::size_t SingleWalkerState::cell_of(Node node) const {
    int ix = 0;
    int iy = 0;
    if (torus_) {
        ix = ((node.x % extent_) + extent_) % extent_;
        iy = ((node.y % extent_) + extent_) % extent_;
    } else {
        ix = node.x + half_width();
        iy = node.y + half_width();
    }
    return static_cast<std::size_t>(ix) * extent_ + iy;
}

Node SingleWalkerState::node_at(std::size_t cell) const {
    const int ix = static_cast<int>(cell / extent_);
    const int iy = static_cast<int>(cell % extent_);
    if (torus_) {
        return {ix, iy};
    }
    return {ix - half_width(), iy - half_width()};
}

Amplitude SingleWalkerState::amplitude(CoinState coin, Node node) const {
    if (!contains(node)) {
        return {};
    }
    return plane(coin)[cell_of(node)];
}

void SingleWalkerState::set_amplitude(CoinState coin, Node node, Amplitude value) {
    if (!contains(node)) {
        throw std::out_of_range("node (" + std::to_string(node.x) + "," + std::to_string(node.y) +
                                ") outside the single-walker window");
    }
    plane(coin)[cell_of(node)] = value;
}

std::span<const Amplitude> SingleWalkerState::plane(CoinState coin) const {
    const std::size_t cells = static_cast<std::size_t>(extent_) * extent_;
    return {amps_.data() + coin.index() * cells, cells};
}

std::span<Amplitude> SingleWalkerState::plane(CoinState coin) {
    const std::size_t cells = static_cast<std::size_t>(extent_) * extent_;
    return {amps_.data() + coin.index() * cells, cells};
}

double SingleWalkerState::norm_squared() const {
    return simd::active_kernels().sum_squares(reinterpret_cast<const double*>(amps_.data()), 2 * amps_.size());
}

void SingleWalkerState::for_each_nonzero(const std::function<void(CoinState, Node, Amplitude)>& fn) const {
    for (CoinState coin : kAllCoins) {
        auto p = plane(coin);
        for (std::size_t cell = 0; cell < p.size(); ++cell) {
            if (p[cell] != Amplitude{}) {
                fn(coin, node_at(cell), p[cell]);
            }
        }
    }
}

namespace {

void check_norm(double norm_sq) {
    const double norm = std::sqrt(norm_sq);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kCorruptionTolerance) {
        throw StateCorruption("single-walker state norm " + std::to_string(norm) + " deviates from 1");
    }
}

void check_boundary_ring(const SingleWalkerState& state) {
    const int r = state.half_width();
    for (CoinState coin : kAllCoins) {
        for (int k = -r; k <= r; ++k) {
            if (state.amplitude(coin, {-r, k}) != Amplitude{} || state.amplitude(coin, {r, k}) != Amplitude{} ||
                state.amplitude(coin, {k, -r}) != Amplitude{} || state.amplitude(coin, {k, r}) != Amplitude{}) {
                throw WindowOverflow("single-walker amplitude reached the window edge at step " +
                                     std::to_string(state.step_count()) + " (half-width " + std::to_string(r) + ")");
            }
        }
    }
}

}  // namespace

SingleWalkerState evolve_single(const SingleWalkerState& state) {
    check_norm(state.norm_squared());
    const auto& kernels = simd::active_kernels();
    const int extent = state.extent_;
    const std::size_t cells = static_cast<std::size_t>(extent) * extent;

    SingleWalkerState next(extent, state.torus_);
    next.step_count_ = state.step_count_ + 1;

    if (state.torus_) {
        std::vector<Amplitude> coined(4 * cells);
        const double* in[4];
        double* out[4];
        for (int c = 0; c < 4; ++c) {
            in[c] = reinterpret_cast<const double*>(state.amps_.data() + c * cells);
            out[c] = reinterpret_cast<double*>(coined.data() + c * cells);
        }
        kernels.grover4(in, out, 2 * cells);
        for (CoinState coin : kAllCoins) {
            const LatticeOffset d = step_vector(coin);
            auto dst = next.plane(coin);
            for (std::size_t cell = 0; cell < cells; ++cell) {
                dst[next.cell_of(state.node_at(cell) + d)] = coined[coin.index() * cells + cell];
            }
        }
        return next;
    }

    check_boundary_ring(state);
    // Interior rows ix in [1, extent-2]; each coin plane lands shifted by its
    // step vector, so every destination cell is written exactly once.
    const std::size_t row = static_cast<std::size_t>(extent - 2);
    parallel_for(extent - 2, [&](std::int64_t r) {
        const std::size_t ix = static_cast<std::size_t>(r) + 1;
        const double* in[4];
        double* out[4];
        for (int c = 0; c < 4; ++c) {
            const LatticeOffset d = step_vector(CoinState::from_index(c));
            in[c] = reinterpret_cast<const double*>(state.amps_.data() + c * cells + ix * extent + 1);
            out[c] = reinterpret_cast<double*>(next.amps_.data() + c * cells + (ix + d.dx) * extent + 1 + d.dy);
        }
        kernels.grover4(in, out, 2 * row);
    });
    return next;
}

ProbabilityGrid single_probability(const SingleWalkerState& state) {
    ProbabilityGrid grid;
    const std::size_t cells = static_cast<std::size_t>(state.extent()) * state.extent();
    for (std::size_t cell = 0; cell < cells; ++cell) {
        double p = 0.0;
        for (CoinState coin : kAllCoins) {
            p += std::norm(state.plane(coin)[cell]);
        }
        if (p != 0.0) {
            grid.set(state.node_at(cell), p);
        }
    }
    return grid;
}

namespace {
int window_for(int max_steps, Node origin) {
    return max_steps + 1 + std::max(std::abs(origin.x), std::abs(origin.y));
}
}  // namespace

SingleWalkerState make_max_spread_initial(int max_steps, Node origin) {
    SingleWalkerState state = SingleWalkerState::window(window_for(max_steps, origin));
    state.set_amplitude(kNorthEast, origin, 0.5);
    state.set_amplitude(kSouthEast, origin, -0.5);
    state.set_amplitude(kNorthWest, origin, -0.5);
    state.set_amplitude(kSouthWest, origin, 0.5);
    return state;
}

SingleWalkerState make_localized_single(CoinState coin, int max_steps, Node origin) {
    SingleWalkerState state = SingleWalkerState::window(window_for(max_steps, origin));
    state.set_amplitude(coin, origin, 1.0);
    return state;
}

}  // namespace qwalk
