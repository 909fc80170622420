#include "qwalk/classical_hpp.hpp"

#include <bit>
#include <ostream>
#include <random>
#include <stdexcept>

namespace qwalk {

GasGrid::GasGrid(int width, int height) : width_(width), height_(height), words_((width + 63) / 64) {
    if (width <= 0 || height <= 0 || width % 2 != 0 || height % 2 != 0) {
        throw std::invalid_argument("gas grid dimensions must be positive and even");
    }
    bits_.assign(4 * static_cast<std::size_t>(height) * words_, 0);
}

std::size_t GasGrid::row_offset(int channel, int y) const {
    return (static_cast<std::size_t>(channel) * height_ + y) * words_;
}

std::span<std::uint64_t> GasGrid::row(CoinState direction, int y) {
    return {bits_.data() + row_offset(direction.index(), y), static_cast<std::size_t>(words_)};
}

std::span<const std::uint64_t> GasGrid::row(CoinState direction, int y) const {
    return {bits_.data() + row_offset(direction.index(), y), static_cast<std::size_t>(words_)};
}

bool GasGrid::occupied(Node node, CoinState direction) const {
    const auto r = row(direction, node.y);
    return ((r[node.x / 64] >> (node.x % 64)) & 1U) != 0;
}

void GasGrid::set(Node node, CoinState direction, bool value) {
    if (node.x < 0 || node.x >= width_ || node.y < 0 || node.y >= height_) {
        throw std::out_of_range("node outside the gas grid");
    }
    auto r = row(direction, node.y);
    const std::uint64_t bit = std::uint64_t{1} << (node.x % 64);
    if (value) {
        r[node.x / 64] |= bit;
    } else {
        r[node.x / 64] &= ~bit;
    }
}

unsigned GasGrid::mask(Node node) const {
    unsigned m = 0;
    for (CoinState c : kAllCoins) {
        if (occupied(node, c)) {
            m |= 1U << c.index();
        }
    }
    return m;
}

int GasGrid::count(Node node) const { return std::popcount(mask(node)); }

GasGrid GasGrid::random(int width, int height, double density, std::uint64_t seed) {
    if (!(density >= 0.0 && density <= 1.0)) {
        throw std::invalid_argument("fill density must lie in [0, 1]");
    }
    GasGrid grid(width, height);
    std::mt19937_64 rng(seed);
    for (CoinState c : kAllCoins) {
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                // 53 random bits -> uniform double in [0, 1), independent of
                // the standard library's distribution implementation.
                const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (u < density) {
                    grid.set({x, y}, c, true);
                }
            }
        }
    }
    return grid;
}

GasGrid collide_classical(const GasGrid& grid) {
    GasGrid out = grid;
    for (int y = 0; y < grid.height(); ++y) {
        auto ne = out.row(kNorthEast, y);
        auto se = out.row(kSouthEast, y);
        auto nw = out.row(kNorthWest, y);
        auto sw = out.row(kSouthWest, y);
        for (int w = 0; w < grid.words_per_row(); ++w) {
            const std::uint64_t main_pair = ne[w] & sw[w] & ~se[w] & ~nw[w];
            const std::uint64_t cross_pair = se[w] & nw[w] & ~ne[w] & ~sw[w];
            const std::uint64_t flip = main_pair | cross_pair;
            ne[w] ^= flip;
            sw[w] ^= flip;
            se[w] ^= flip;
            nw[w] ^= flip;
        }
    }
    return out;
}

namespace {

// dst = src rotated by dx in {-1, +1} along a ring of `width` bits.
void rotate_row(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst, int width, int dx) {
    const int words = static_cast<int>(src.size());
    const int last_bits = width - 64 * (words - 1);
    const std::uint64_t last_mask = last_bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << last_bits) - 1);
    if (dx > 0) {
        const std::uint64_t wrapped = (src[words - 1] >> (last_bits - 1)) & 1U;
        for (int w = words - 1; w > 0; --w) {
            dst[w] = (src[w] << 1) | (src[w - 1] >> 63);
        }
        dst[0] = (src[0] << 1) | wrapped;
    } else {
        const std::uint64_t wrapped = src[0] & 1U;
        for (int w = 0; w < words - 1; ++w) {
            dst[w] = (src[w] >> 1) | (src[w + 1] << 63);
        }
        dst[words - 1] = (src[words - 1] >> 1) | (wrapped << (last_bits - 1));
    }
    dst[words - 1] &= last_mask;
}

}  // namespace

GasGrid stream_classical(const GasGrid& grid) {
    GasGrid out(grid.width(), grid.height());
    const int h = grid.height();
    for (CoinState c : kAllCoins) {
        const LatticeOffset d = step_vector(c);
        for (int y = 0; y < h; ++y) {
            const int ty = ((y + d.dy) % h + h) % h;
            rotate_row(grid.row(c, y), out.row(c, ty), grid.width(), d.dx);
        }
    }
    return out;
}

GasGrid step_classical(const GasGrid& grid) { return stream_classical(collide_classical(grid)); }

GasGrid reverse(const GasGrid& grid) {
    GasGrid out(grid.width(), grid.height());
    for (CoinState c : kAllCoins) {
        for (int y = 0; y < grid.height(); ++y) {
            auto src = grid.row(c, y);
            auto dst = out.row(c.flipped(), y);
            std::copy(src.begin(), src.end(), dst.begin());
        }
    }
    return out;
}

GasGrid undo_steps(const GasGrid& evolved, int steps) {
    GasGrid g = reverse(evolved);
    for (int t = 0; t < steps; ++t) {
        g = collide_classical(stream_classical(g));
    }
    return reverse(g);
}

Momentum momentum(const GasGrid& grid) {
    Momentum m;
    for (CoinState c : kAllCoins) {
        long long n = 0;
        for (int y = 0; y < grid.height(); ++y) {
            for (std::uint64_t w : grid.row(c, y)) {
                n += std::popcount(w);
            }
        }
        const LatticeOffset d = step_vector(c);
        m.px += n * d.dx;
        m.py += n * d.dy;
    }
    return m;
}

long long particle_count(const GasGrid& grid) {
    long long n = 0;
    for (CoinState c : kAllCoins) {
        for (int y = 0; y < grid.height(); ++y) {
            for (std::uint64_t w : grid.row(c, y)) {
                n += std::popcount(w);
            }
        }
    }
    return n;
}

void write_pgm(const GasGrid& grid, std::ostream& out) {
    out << "P5\n" << grid.width() << ' ' << grid.height() << "\n4\n";
    for (int y = grid.height() - 1; y >= 0; --y) {
        for (int x = 0; x < grid.width(); ++x) {
            out.put(static_cast<char>(grid.count({x, y})));
        }
    }
}

void write_gas_csv(const GasGrid& grid, std::ostream& out) {
    out << "x,y,mask\n";
    for (int x = 0; x < grid.width(); ++x) {
        for (int y = 0; y < grid.height(); ++y) {
            const unsigned m = grid.mask({x, y});
            if (m != 0) {
                out << x << ',' << y << ',' << m << '\n';
            }
        }
    }
}

}  // namespace qwalk
