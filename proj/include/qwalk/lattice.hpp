#pragma once

// Coin states, diagonal step vectors, the Grover coin and the head-on
// collision map on coin pairs. Everything here is constexpr or pure.

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace qwalk {

using Amplitude = std::complex<double>;

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kMatrixTolerance = 1e-12;
inline constexpr double kCorruptionTolerance = 1e-6;

/// Two coin bits (c_x, c_y). Index order is 00, 01, 10, 11.
class CoinState {
  public:
    constexpr CoinState() = default;
    constexpr CoinState(int cx, int cy) : bits_(static_cast<std::uint8_t>(((cx & 1) << 1) | (cy & 1))) {}

    static constexpr CoinState from_index(int index) { return CoinState((index >> 1) & 1, index & 1); }

    constexpr int cx() const { return (bits_ >> 1) & 1; }
    constexpr int cy() const { return bits_ & 1; }
    constexpr int index() const { return bits_; }

    /// The opposite direction (both bits flipped).
    constexpr CoinState flipped() const { return CoinState(1 - cx(), 1 - cy()); }

    constexpr auto operator<=>(const CoinState&) const = default;

    std::string str() const { return {static_cast<char>('0' + cx()), static_cast<char>('0' + cy())}; }

  private:
    std::uint8_t bits_ = 0;
};

inline constexpr CoinState kNorthEast{0, 0};
inline constexpr CoinState kSouthEast{0, 1};
inline constexpr CoinState kNorthWest{1, 0};
inline constexpr CoinState kSouthWest{1, 1};

inline constexpr std::array<CoinState, 4> kAllCoins{kNorthEast, kSouthEast, kNorthWest, kSouthWest};

/// Parses "00", "01", "10" or "11". Throws std::invalid_argument otherwise.
CoinState parse_coin(std::string_view text);

struct LatticeOffset {
    int dx = 0;
    int dy = 0;
    constexpr auto operator<=>(const LatticeOffset&) const = default;
};

struct Node {
    int x = 0;
    int y = 0;
    constexpr auto operator<=>(const Node&) const = default;
};

constexpr Node operator+(Node n, LatticeOffset d) { return {n.x + d.dx, n.y + d.dy}; }

/// ((-1)^c_x, (-1)^c_y).
constexpr LatticeOffset step_vector(CoinState coin) { return {1 - 2 * coin.cx(), 1 - 2 * coin.cy()}; }

constexpr double grover_entry(CoinState row, CoinState col) { return row == col ? -0.5 : 0.5; }

using CoinPair = std::pair<CoinState, CoinState>;

constexpr bool is_head_on(CoinState c1, CoinState c2) { return c2 == c1.flipped(); }

/// Collision rule for two walkers on the same node. A head-on pair
/// (c2 == flip(c1)) becomes (|flip(c2)_y, c2_x>, |flip(c1)_y, c1_x>);
/// all other pairs pass through unchanged.
constexpr CoinPair hpp_coin_pair_formula(CoinState c1, CoinState c2) {
    if (!is_head_on(c1, c2)) {
        return {c1, c2};
    }
    return {CoinState(1 - c2.cy(), c2.cx()), CoinState(1 - c1.cy(), c1.cx())};
}

/// Pair index c1 * 4 + c2, the layout used by every two-walker buffer.
constexpr int pair_index(CoinState c1, CoinState c2) { return c1.index() * 4 + c2.index(); }

/// Lookup table form of hpp_coin_pair_formula, keyed by pair_index.
inline constexpr std::array<std::uint8_t, 16> kCollisionTable = [] {
    std::array<std::uint8_t, 16> table{};
    for (int k = 0; k < 16; ++k) {
        auto [a, b] = hpp_coin_pair_formula(CoinState::from_index(k >> 2), CoinState::from_index(k & 3));
        table[k] = static_cast<std::uint8_t>(pair_index(a, b));
    }
    return table;
}();

constexpr CoinPair hpp_coin_pair_map(CoinState c1, CoinState c2) {
    int k = kCollisionTable[pair_index(c1, c2)];
    return {CoinState::from_index(k >> 2), CoinState::from_index(k & 3)};
}

/// Re-derives the table from the formula. Called once by the engine at
/// first use; returns false on mismatch.
bool validate_collision_table();

}  // namespace qwalk
