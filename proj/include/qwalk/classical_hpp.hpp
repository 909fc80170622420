#pragma once

// Classical HPP lattice gas on an even-sized torus in node-channel form:
// four occupation bits per node, one per diagonal direction (same indexing
// as CoinState), bit-packed 64 nodes per word along x.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qwalk/lattice.hpp"

namespace qwalk {

class GasGrid {
  public:
    /// Throws std::invalid_argument unless width and height are positive and even.
    GasGrid(int width, int height);

    /// Independent Bernoulli(density) occupation of every (node, channel),
    /// drawn from std::mt19937_64 seeded with `seed` in (channel, y, x) order.
    static GasGrid random(int width, int height, double density, std::uint64_t seed);

    int width() const { return width_; }
    int height() const { return height_; }
    int words_per_row() const { return words_; }

    bool occupied(Node node, CoinState direction) const;
    void set(Node node, CoinState direction, bool value);
    /// Occupation bits of one node; bit c.index() is set when channel c is full.
    unsigned mask(Node node) const;
    /// Particles on one node, 0..4.
    int count(Node node) const;

    std::span<std::uint64_t> row(CoinState direction, int y);
    std::span<const std::uint64_t> row(CoinState direction, int y) const;

    bool operator==(const GasGrid&) const = default;

  private:
    std::size_t row_offset(int channel, int y) const;

    int width_;
    int height_;
    int words_;
    std::vector<std::uint64_t> bits_;  // [channel][y][word]
};

/// Swaps {NE, SW} <-> {SE, NW} on nodes holding exactly one of those pairs.
GasGrid collide_classical(const GasGrid& grid);
/// Moves every particle one node along its direction, wrapping around.
GasGrid stream_classical(const GasGrid& grid);
/// stream_classical(collide_classical(grid)).
GasGrid step_classical(const GasGrid& grid);
/// Reverses every particle's direction.
GasGrid reverse(const GasGrid& grid);

/// Recovers `initial` from step_classical^t(initial):
/// reverse, then t rounds of (stream, collide), then reverse.
GasGrid undo_steps(const GasGrid& evolved, int steps);

struct Momentum {
    long long px = 0;
    long long py = 0;
    bool operator==(const Momentum&) const = default;
};

Momentum momentum(const GasGrid& grid);
long long particle_count(const GasGrid& grid);

/// Binary PGM (P5), one pixel per node, intensity = particle count, maxval 4.
/// Row 0 of the image is y = height - 1.
void write_pgm(const GasGrid& grid, std::ostream& out);
/// Header "x,y,mask" then one row per nonempty node, sorted by (x, y).
void write_gas_csv(const GasGrid& grid, std::ostream& out);

}  // namespace qwalk
