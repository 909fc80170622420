#include "qwalk/two_walker.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/simd/kernels.hpp"

namespace qwalk {

std::string_view to_string(InteractionMode mode) {
    switch (mode) {
        case InteractionMode::none:
            return "none";
        case InteractionMode::hpp:
            return "hpp";
        case InteractionMode::phase:
            return "phase";
    }
    return "?";
}

std::string_view to_string(InitialStateId id) {
    switch (id) {
        case InitialStateId::sep1:
            return "sep1";
        case InitialStateId::sep2:
            return "sep2";
        case InitialStateId::grov:
            return "grov";
        case InitialStateId::ent:
            return "ent";
    }
    return "?";
}

InteractionMode parse_mode(std::string_view text) {
    for (auto mode : {InteractionMode::none, InteractionMode::hpp, InteractionMode::phase}) {
        if (text == to_string(mode)) {
            return mode;
        }
    }
    throw std::invalid_argument("unknown interaction mode '" + std::string(text) + "' (expected none, hpp, phase)");
}

InitialStateId parse_initial(std::string_view text) {
    for (auto id : {InitialStateId::sep1, InitialStateId::sep2, InitialStateId::grov, InitialStateId::ent}) {
        if (text == to_string(id)) {
            return id;
        }
    }
    throw std::invalid_argument("unknown initial state '" + std::string(text) +
                                "' (expected sep1, sep2, grov, ent)");
}

// ---------------------------------------------------------------------------
// TwoWalkerState

namespace {
constexpr std::size_t kNoCell = std::numeric_limits<std::size_t>::max();
}

TwoWalkerState::TwoWalkerState(const std::array<Axis, 4>& axes, int step_count)
    : axes_(axes), step_count_(step_count) {
    for (const Axis& a : axes_) {
        if (a.count < 1) {
            throw std::invalid_argument("two-walker axis must hold at least one coordinate");
        }
    }
    amps_.assign(16 * cells(), Amplitude{});
}

TwoWalkerState TwoWalkerState::zeros(const std::array<Axis, 4>& axes, int step_count) {
    return TwoWalkerState(axes, step_count);
}

TwoWalkerState TwoWalkerState::from_terms(std::span<const Term> terms) {
    if (terms.empty()) {
        throw std::invalid_argument("two-walker state needs at least one term");
    }
    static constexpr const char* kAxisNames[4] = {"x1", "y1", "x2", "y2"};
    std::array<int, 4> lo{};
    std::array<int, 4> hi{};
    for (int a = 0; a < 4; ++a) {
        lo[a] = std::numeric_limits<int>::max();
        hi[a] = std::numeric_limits<int>::min();
    }
    auto coords = [](const Term& t) { return std::array<int, 4>{t.l1.x, t.l1.y, t.l2.x, t.l2.y}; };
    const auto first = coords(terms.front());
    for (const Term& t : terms) {
        const auto c = coords(t);
        for (int a = 0; a < 4; ++a) {
            if (((c[a] - first[a]) & 1) != 0) {
                throw std::invalid_argument(std::string("coordinate ") + kAxisNames[a] +
                                            " mixes parities; each walker coordinate must keep one parity");
            }
            lo[a] = std::min(lo[a], c[a]);
            hi[a] = std::max(hi[a], c[a]);
        }
    }
    std::array<Axis, 4> axes{};
    for (int a = 0; a < 4; ++a) {
        axes[a] = Axis{lo[a], (hi[a] - lo[a]) / 2 + 1};
    }
    TwoWalkerState state(axes, 0);
    for (const Term& t : terms) {
        state.add_amplitude(t.c1, t.c2, t.l1, t.l2, t.amplitude);
    }
    return state;
}

std::size_t TwoWalkerState::cell_index(Node l1, Node l2) const {
    const int ix1 = axes_[kX1].index_of(l1.x);
    const int iy1 = axes_[kY1].index_of(l1.y);
    const int ix2 = axes_[kX2].index_of(l2.x);
    const int iy2 = axes_[kY2].index_of(l2.y);
    if (ix1 < 0 || iy1 < 0 || ix2 < 0 || iy2 < 0) {
        return kNoCell;
    }
    const std::size_t i1 = static_cast<std::size_t>(ix1) * axes_[kY1].count + iy1;
    const std::size_t i2 = static_cast<std::size_t>(ix2) * axes_[kY2].count + iy2;
    return i1 * cells_second() + i2;
}

Node TwoWalkerState::first_node(std::size_t i1) const {
    const int ny = axes_[kY1].count;
    return {axes_[kX1].value(static_cast<int>(i1 / ny)), axes_[kY1].value(static_cast<int>(i1 % ny))};
}

Node TwoWalkerState::second_node(std::size_t i2) const {
    const int ny = axes_[kY2].count;
    return {axes_[kX2].value(static_cast<int>(i2 / ny)), axes_[kY2].value(static_cast<int>(i2 % ny))};
}

Amplitude TwoWalkerState::amplitude(CoinState c1, CoinState c2, Node l1, Node l2) const {
    const std::size_t cell = cell_index(l1, l2);
    if (cell == kNoCell) {
        return {};
    }
    return amps_[pair_index(c1, c2) * cells() + cell];
}

void TwoWalkerState::add_amplitude(CoinState c1, CoinState c2, Node l1, Node l2, Amplitude value) {
    const std::size_t cell = cell_index(l1, l2);
    if (cell == kNoCell) {
        throw std::out_of_range("position pair outside the two-walker box");
    }
    amps_[pair_index(c1, c2) * cells() + cell] += value;
}

double TwoWalkerState::norm_squared() const {
    return simd::active_kernels().sum_squares(reinterpret_cast<const double*>(amps_.data()), 2 * amps_.size());
}

std::size_t TwoWalkerState::nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(amps_.begin(), amps_.end(), [](const Amplitude& a) { return a != Amplitude{}; }));
}

void TwoWalkerState::for_each_nonzero(const std::function<void(const Term&)>& fn) const {
    const std::size_t n = cells();
    const std::size_t n2 = cells_second();
    for (int k = 0; k < 16; ++k) {
        for (std::size_t cell = 0; cell < n; ++cell) {
            const Amplitude a = amps_[k * n + cell];
            if (a != Amplitude{}) {
                fn(Term{CoinState::from_index(k >> 2), CoinState::from_index(k & 3), first_node(cell / n2),
                        second_node(cell % n2), a});
            }
        }
    }
}

int TwoWalkerState::max_abs_coordinate() const {
    int m = 0;
    for (const Axis& a : axes_) {
        m = std::max({m, std::abs(a.lo), std::abs(a.hi())});
    }
    return m;
}

// ---------------------------------------------------------------------------
// Coin blocks

void apply_controlled_coin_block(std::array<Amplitude, 16>& pairs, bool coincident, InteractionMode mode) {
    if (coincident && mode == InteractionMode::hpp) {
        std::array<Amplitude, 16> out{};
        for (int k = 0; k < 16; ++k) {
            out[kCollisionTable[k]] = pairs[k];
        }
        pairs = out;
        return;
    }
    std::array<Amplitude, 16> out{};
    const double* in[16];
    double* dst[16];
    for (int k = 0; k < 16; ++k) {
        in[k] = reinterpret_cast<const double*>(&pairs[k]);
        dst[k] = reinterpret_cast<double*>(&out[k]);
    }
    simd::scalar_kernels().grover16(in, dst, 2);
    if (coincident && mode == InteractionMode::phase) {
        for (auto& a : out) {
            a = -a;
        }
    }
    pairs = out;
}

// ---------------------------------------------------------------------------
// Row kernels

class TwoWalkerKernels {
  public:
    // Destination offsets (in axis indices) of plane `pair` for a forward
    // shift: coordinate moves by +1 -> index +1 in a box grown by one on each
    // side, by -1 -> index +0.
    static std::array<int, 4> forward_offsets(int pair) {
        const CoinState c1 = CoinState::from_index(pair >> 2);
        const CoinState c2 = CoinState::from_index(pair & 3);
        return {1 - c1.cx(), 1 - c1.cy(), 1 - c2.cx(), 1 - c2.cy()};
    }

    static std::array<Axis, 4> grown(const std::array<Axis, 4>& axes) {
        std::array<Axis, 4> g = axes;
        for (Axis& a : g) {
            a.lo -= 1;
            a.count += 1;
        }
        return g;
    }

    // Index of the cell in `dst` reached from source row (ix1, iy1, ix2) and
    // column 0 after adding per-axis offsets.
    static std::size_t dest_row_start(const TwoWalkerState& dst, int ix1, int iy1, int ix2,
                                      const std::array<int, 4>& off) {
        const auto& ax = dst.axes_;
        return ((static_cast<std::size_t>(ix1 + off[0]) * ax[kY1].count + (iy1 + off[1])) * ax[kX2].count +
                (ix2 + off[2])) *
                   ax[kY2].count +
               off[3];
    }

    // Coin pass with optional fused shift. Every destination element is
    // written by exactly one source row, so rows run in parallel.
    static void coin_pass(const TwoWalkerState& src, TwoWalkerState& dst, InteractionMode mode, bool shift) {
        const auto& kernels = simd::active_kernels();
        const auto& ax = src.axes_;
        const int nx1 = ax[kX1].count;
        const int ny1 = ax[kY1].count;
        const int nx2 = ax[kX2].count;
        const int ny2 = ax[kY2].count;
        const std::size_t src_cells = src.cells();
        const std::size_t dst_cells = dst.cells();

        std::array<std::array<int, 4>, 16> offsets{};
        for (int k = 0; k < 16; ++k) {
            offsets[k] = shift ? forward_offsets(k) : std::array<int, 4>{0, 0, 0, 0};
        }

        // Coincident positions exist only when both walkers share the
        // coordinate parity on each axis.
        const bool may_meet = mode != InteractionMode::none && ((ax[kX1].lo - ax[kX2].lo) & 1) == 0 &&
                              ((ax[kY1].lo - ax[kY2].lo) & 1) == 0;

        const Amplitude* in_base = src.amps_.data();
        Amplitude* out_base = dst.amps_.data();
        const std::int64_t rows = static_cast<std::int64_t>(nx1) * ny1 * nx2;

        parallel_for(rows, [&](std::int64_t r) {
            const int ix2 = static_cast<int>(r % nx2);
            const int iy1 = static_cast<int>((r / nx2) % ny1);
            const int ix1 = static_cast<int>(r / (static_cast<std::int64_t>(nx2) * ny1));
            const std::size_t src_row = static_cast<std::size_t>(r) * ny2;

            const double* in[16];
            double* out[16];
            std::array<std::size_t, 16> dst_row{};
            for (int k = 0; k < 16; ++k) {
                dst_row[k] = k * dst_cells + dest_row_start(dst, ix1, iy1, ix2, offsets[k]);
                in[k] = reinterpret_cast<const double*>(in_base + k * src_cells + src_row);
                out[k] = reinterpret_cast<double*>(out_base + dst_row[k]);
            }
            kernels.grover16(in, out, 2 * static_cast<std::size_t>(ny2));

            if (!may_meet || ax[kX1].value(ix1) != ax[kX2].value(ix2)) {
                return;
            }
            const int iy2 = ax[kY2].index_of(ax[kY1].value(iy1));
            if (iy2 < 0) {
                return;
            }
            if (mode == InteractionMode::hpp) {
                for (int k = 0; k < 16; ++k) {
                    const int target = kCollisionTable[k];
                    out_base[dst_row[target] + iy2] = in_base[k * src_cells + src_row + iy2];
                }
            } else {
                for (int k = 0; k < 16; ++k) {
                    out_base[dst_row[k] + iy2] = -out_base[dst_row[k] + iy2];
                }
            }
        });
    }

    static void shift_pass(const TwoWalkerState& src, TwoWalkerState& dst, bool reverse) {
        const auto& ax = src.axes_;
        const int nx1 = ax[kX1].count;
        const int ny1 = ax[kY1].count;
        const int nx2 = ax[kX2].count;
        const int ny2 = ax[kY2].count;
        const std::size_t src_cells = src.cells();
        const std::size_t dst_cells = dst.cells();
        const std::int64_t rows = static_cast<std::int64_t>(nx1) * ny1 * nx2;

        std::array<std::array<int, 4>, 16> offsets{};
        for (int k = 0; k < 16; ++k) {
            offsets[k] = forward_offsets(k);
            if (reverse) {
                for (int& o : offsets[k]) {
                    o = 1 - o;
                }
            }
        }
        parallel_for(rows, [&](std::int64_t r) {
            const int ix2 = static_cast<int>(r % nx2);
            const int iy1 = static_cast<int>((r / nx2) % ny1);
            const int ix1 = static_cast<int>(r / (static_cast<std::int64_t>(nx2) * ny1));
            for (int k = 0; k < 16; ++k) {
                const Amplitude* from = src.amps_.data() + k * src_cells + static_cast<std::size_t>(r) * ny2;
                Amplitude* to = dst.amps_.data() + k * dst_cells + dest_row_start(dst, ix1, iy1, ix2, offsets[k]);
                std::memcpy(static_cast<void*>(to), from, sizeof(Amplitude) * ny2);
            }
        });
    }
};

namespace {

void check_norm(const TwoWalkerState& state) {
    const double norm = std::sqrt(state.norm_squared());
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kCorruptionTolerance) {
        throw StateCorruption("two-walker state norm " + std::to_string(norm) + " deviates from 1 at step " +
                              std::to_string(state.step_count()));
    }
}

void ensure_table_valid() {
    static const bool ok = validate_collision_table();
    if (!ok) {
        throw std::logic_error("collision lookup table disagrees with the collision formula");
    }
}

}  // namespace

TwoWalkerState controlled_coin(const TwoWalkerState& state, InteractionMode mode) {
    ensure_table_valid();
    TwoWalkerState out = TwoWalkerState::zeros(state.axes(), state.step_count());
    TwoWalkerKernels::coin_pass(state, out, mode, false);
    return out;
}

TwoWalkerState shift_both(const TwoWalkerState& state, bool reverse) {
    TwoWalkerState out = TwoWalkerState::zeros(TwoWalkerKernels::grown(state.axes()), state.step_count());
    TwoWalkerKernels::shift_pass(state, out, reverse);
    return out;
}

TwoWalkerState step(const TwoWalkerState& state, InteractionMode mode) {
    ensure_table_valid();
    check_norm(state);
    TwoWalkerState out = TwoWalkerState::zeros(TwoWalkerKernels::grown(state.axes()), state.step_count() + 1);
    TwoWalkerKernels::coin_pass(state, out, mode, true);
    return out;
}

std::size_t next_step_footprint(const TwoWalkerState& state) {
    std::size_t n = 16;
    for (const Axis& a : state.axes()) {
        n *= static_cast<std::size_t>(a.count) + 1;
    }
    return n;
}

TwoWalkerState run(TwoWalkerState initial, InteractionMode mode, int steps, const Observer& observer,
                   const RunOptions& options) {
    if (steps < 0) {
        throw std::invalid_argument("step count must be nonnegative");
    }
    TwoWalkerState state = std::move(initial);
    for (int t = 0; t < steps; ++t) {
        const std::size_t needed = next_step_footprint(state);
        if (needed > options.budget) {
            throw BudgetExceeded(needed, options.budget);
        }
        state = step(state, mode);
        if (observer) {
            observer(state);
        }
    }
    return state;
}

// ---------------------------------------------------------------------------
// Initial states

TwoWalkerState make_initial(InitialStateId id) {
    static constexpr double kSpread[4] = {0.5, -0.5, -0.5, 0.5};
    std::vector<Term> terms;
    auto product = [&](Node l1, Node l2) {
        for (CoinState c1 : kAllCoins) {
            for (CoinState c2 : kAllCoins) {
                terms.push_back({c1, c2, l1, l2, kSpread[c1.index()] * kSpread[c2.index()]});
            }
        }
    };
    switch (id) {
        case InitialStateId::sep1:
            product({0, 0}, {0, 0});
            break;
        case InitialStateId::sep2:
            product({-1, -1}, {1, 1});
            break;
        case InitialStateId::grov:
            product({0, 0}, {-1, -1});
            break;
        case InitialStateId::ent: {
            const Amplitude i{0.0, 1.0};
            terms = {
                {kNorthEast, kNorthWest, {0, 0}, {0, 0}, 0.5},
                {kSouthEast, kSouthWest, {0, 0}, {0, 0}, 0.5 * i},
                {kNorthWest, kNorthEast, {0, 0}, {0, 0}, -0.5},
                {kSouthWest, kSouthEast, {0, 0}, {0, 0}, 0.5 * i},
            };
            break;
        }
    }
    return TwoWalkerState::from_terms(terms);
}

}  // namespace qwalk
