#include "oracles.hpp"

#include <stdexcept>

namespace oracle {

namespace {
int wrap(int v, int n) { return ((v % n) + n) % n; }
}  // namespace

std::size_t TorusBasis::index(int c1, int c2, int x1, int y1, int x2, int y2) const {
    std::size_t i = static_cast<std::size_t>(c1 * 4 + c2);
    for (int v : {x1, y1, x2, y2}) {
        i = i * n + wrap(v, n);
    }
    return i;
}

void TorusBasis::decode(std::size_t i, int& c1, int& c2, int& x1, int& y1, int& x2, int& y2) const {
    y2 = static_cast<int>(i % n);
    i /= n;
    x2 = static_cast<int>(i % n);
    i /= n;
    y1 = static_cast<int>(i % n);
    i /= n;
    x1 = static_cast<int>(i % n);
    i /= n;
    c2 = static_cast<int>(i % 4);
    c1 = static_cast<int>(i / 4);
}

std::vector<Entry> piecewise_step_column(const TorusBasis& basis, Mode mode, std::size_t column) {
    int c1, c2, x1, y1, x2, y2;
    basis.decode(column, c1, c2, x1, y1, x2, y2);
    std::vector<Entry> out;
    const bool together = x1 == x2 && y1 == y2;

    if (together && mode == Mode::hpp) {
        int a = c1;
        int b = c2;
        if (c2 == (c1 ^ 3)) {
            // head-on: |c1>|c2> -> |flip(c2_y), c2_x>|flip(c1_y), c1_x>
            a = 2 * (1 - (c2 & 1)) + (c2 >> 1);
            b = 2 * (1 - (c1 & 1)) + (c1 >> 1);
        }
        out.push_back({basis.index(a, b, x1 + dx(a), y1 + dy(a), x2 + dx(b), y2 + dy(b)), 1.0});
        return out;
    }
    const double sign = together && mode == Mode::phase ? -1.0 : 1.0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const double v = sign * grover(a, c1) * grover(b, c2);
            out.push_back({basis.index(a, b, x1 + dx(a), y1 + dy(a), x2 + dx(b), y2 + dy(b)), v});
        }
    }
    return out;
}

DenseWalker::DenseWalker(int side) : side_(side), half_(side / 2), psi_(4u * side * side) {}

cplx& DenseWalker::at(int coin, int x, int y) {
    return psi_[(static_cast<std::size_t>(coin) * side_ + (x + half_)) * side_ + (y + half_)];
}

cplx DenseWalker::at(int coin, int x, int y) const {
    return psi_[(static_cast<std::size_t>(coin) * side_ + (x + half_)) * side_ + (y + half_)];
}

void DenseWalker::step() {
    std::vector<cplx> next(psi_.size());
    for (int x = -half_; x < side_ - half_; ++x) {
        for (int y = -half_; y < side_ - half_; ++y) {
            for (int out = 0; out < 4; ++out) {
                cplx v = 0.0;
                for (int in = 0; in < 4; ++in) {
                    v += grover(out, in) * at(in, x, y);
                }
                if (v == cplx{}) {
                    continue;
                }
                const int nx = x + dx(out);
                const int ny = y + dy(out);
                if (nx < -half_ || nx >= side_ - half_ || ny < -half_ || ny >= side_ - half_) {
                    throw std::runtime_error("dense walker left its grid");
                }
                next[(static_cast<std::size_t>(out) * side_ + (nx + half_)) * side_ + (ny + half_)] = v;
            }
        }
    }
    psi_ = std::move(next);
}

void NaiveGas::step() {
    std::vector<std::uint8_t> next(m_.size(), 0);
    for (int y = 0; y < h_; ++y) {
        for (int x = 0; x < w_; ++x) {
            std::uint8_t m = at(x, y);
            // bits: 0 = NE, 1 = SE, 2 = NW, 3 = SW
            if (m == 0b1001) {
                m = 0b0110;
            } else if (m == 0b0110) {
                m = 0b1001;
            }
            for (int c = 0; c < 4; ++c) {
                if (m & (1 << c)) {
                    const int nx = wrap(x + dx(c), w_);
                    const int ny = wrap(y + dy(c), h_);
                    next[static_cast<std::size_t>(ny) * w_ + nx] |= static_cast<std::uint8_t>(1 << c);
                }
            }
        }
    }
    m_ = std::move(next);
}

long long NaiveGas::particles() const {
    long long n = 0;
    for (std::uint8_t m : m_) {
        for (int c = 0; c < 4; ++c) {
            n += (m >> c) & 1;
        }
    }
    return n;
}

std::array<long long, 2> NaiveGas::momentum() const {
    std::array<long long, 2> p{0, 0};
    for (std::uint8_t m : m_) {
        for (int c = 0; c < 4; ++c) {
            if ((m >> c) & 1) {
                p[0] += dx(c);
                p[1] += dy(c);
            }
        }
    }
    return p;
}

}  // namespace oracle
