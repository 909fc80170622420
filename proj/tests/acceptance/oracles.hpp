#pragma once

// Reference implementations written directly from the update rules, with
// their own data layouts. They share nothing with the engines beyond the
// basic value types.

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// Coin bits (cx, cy) packed as 2 * cx + cy; move is ((-1)^cx, (-1)^cy).
inline int dx(int coin) { return (coin >> 1) ? -1 : 1; }
inline int dy(int coin) { return (coin & 1) ? -1 : 1; }
inline double grover(int row, int col) { return row == col ? -0.5 : 0.5; }

enum class Mode { none, hpp, phase };

/// Basis index on an N x N torus: (((((c1 * 4 + c2) * N + x1) * N + y1) * N + x2) * N + y2).
struct TorusBasis {
    int n;
    std::size_t dimension() const { return 16u * n * n * n * n; }
    std::size_t index(int c1, int c2, int x1, int y1, int x2, int y2) const;
    void decode(std::size_t i, int& c1, int& c2, int& x1, int& y1, int& x2, int& y2) const;
};

struct Entry {
    std::size_t row;
    cplx value;
};

/// Image of one basis vector under the two-walker step, from the piecewise
/// definition: when the walkers share a node the interacting operator acts
/// (collision then shifts for hpp, -(G x G) then shifts for phase); apart,
/// each walker takes its own Grover step.
std::vector<Entry> piecewise_step_column(const TorusBasis& basis, Mode mode, std::size_t column);

/// Dense single walker on a side x side grid centred on the origin, no wrap.
class DenseWalker {
  public:
    explicit DenseWalker(int side);
    int side() const { return side_; }
    cplx& at(int coin, int x, int y);
    cplx at(int coin, int x, int y) const;
    void step();  // throws std::runtime_error if anything would leave the grid

  private:
    int side_;
    int half_;
    std::vector<cplx> psi_;
};

/// Classical HPP gas stored as one 4-bit mask per node.
class NaiveGas {
  public:
    NaiveGas(int width, int height) : w_(width), h_(height), m_(static_cast<std::size_t>(width) * height, 0) {}
    int width() const { return w_; }
    int height() const { return h_; }
    std::uint8_t& at(int x, int y) { return m_[static_cast<std::size_t>(y) * w_ + x]; }
    std::uint8_t at(int x, int y) const { return m_[static_cast<std::size_t>(y) * w_ + x]; }
    void step();  // collide then stream
    long long particles() const;
    std::array<long long, 2> momentum() const;

  private:
    int w_;
    int h_;
    std::vector<std::uint8_t> m_;
};

}  // namespace oracle
