#include "qwalk/simd/kernels.hpp"

namespace qwalk::simd {
namespace {

void grover4_scalar(const double* const* in, double* const* out, std::size_t n) {
    const double* a0 = in[0];
    const double* a1 = in[1];
    const double* a2 = in[2];
    const double* a3 = in[3];
    for (std::size_t i = 0; i < n; ++i) {
        double h = 0.5 * ((a0[i] + a1[i]) + (a2[i] + a3[i]));
        double v0 = a0[i], v1 = a1[i], v2 = a2[i], v3 = a3[i];
        out[0][i] = h - v0;
        out[1][i] = h - v1;
        out[2][i] = h - v2;
        out[3][i] = h - v3;
    }
}

void grover16_scalar(const double* const* in, double* const* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double b[16];
        // coin of walker 2 (inner index)
        for (int c1 = 0; c1 < 4; ++c1) {
            const double a0 = in[c1 * 4 + 0][i];
            const double a1 = in[c1 * 4 + 1][i];
            const double a2 = in[c1 * 4 + 2][i];
            const double a3 = in[c1 * 4 + 3][i];
            const double h = 0.5 * ((a0 + a1) + (a2 + a3));
            b[c1 * 4 + 0] = h - a0;
            b[c1 * 4 + 1] = h - a1;
            b[c1 * 4 + 2] = h - a2;
            b[c1 * 4 + 3] = h - a3;
        }
        // coin of walker 1 (outer index)
        for (int c2 = 0; c2 < 4; ++c2) {
            const double h = 0.5 * ((b[c2] + b[4 + c2]) + (b[8 + c2] + b[12 + c2]));
            out[c2][i] = h - b[c2];
            out[4 + c2][i] = h - b[4 + c2];
            out[8 + c2][i] = h - b[8 + c2];
            out[12 + c2][i] = h - b[12 + c2];
        }
    }
}

double sum_squares_scalar(const double* x, std::size_t n) {
    double s[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        for (int j = 0; j < 4; ++j) {
            s[j] += x[i + j] * x[i + j];
        }
    }
    double total = (s[0] + s[1]) + (s[2] + s[3]);
    for (; i < n; ++i) {
        total += x[i] * x[i];
    }
    return total;
}

}  // namespace

const KernelSet& scalar_kernels() {
    static const KernelSet set{"scalar", grover4_scalar, grover16_scalar, sum_squares_scalar};
    return set;
}

}  // namespace qwalk::simd
