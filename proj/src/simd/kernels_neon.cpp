// Built only on AArch64 targets.

#include "qwalk/simd/kernels.hpp"

#if defined(__ARM_NEON) && defined(__aarch64__)

#include <arm_neon.h>

namespace qwalk::simd::detail {
namespace {

inline void grover4_neon_block(float64x2_t& a0, float64x2_t& a1, float64x2_t& a2, float64x2_t& a3,
                               float64x2_t half) {
    const float64x2_t h = vmulq_f64(half, vaddq_f64(vaddq_f64(a0, a1), vaddq_f64(a2, a3)));
    a0 = vsubq_f64(h, a0);
    a1 = vsubq_f64(h, a1);
    a2 = vsubq_f64(h, a2);
    a3 = vsubq_f64(h, a3);
}

void grover4_neon(const double* const* in, double* const* out, std::size_t n) {
    const float64x2_t half = vdupq_n_f64(0.5);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t a0 = vld1q_f64(in[0] + i);
        float64x2_t a1 = vld1q_f64(in[1] + i);
        float64x2_t a2 = vld1q_f64(in[2] + i);
        float64x2_t a3 = vld1q_f64(in[3] + i);
        grover4_neon_block(a0, a1, a2, a3, half);
        vst1q_f64(out[0] + i, a0);
        vst1q_f64(out[1] + i, a1);
        vst1q_f64(out[2] + i, a2);
        vst1q_f64(out[3] + i, a3);
    }
    if (i < n) {
        const double* tail_in[4] = {in[0] + i, in[1] + i, in[2] + i, in[3] + i};
        double* tail_out[4] = {out[0] + i, out[1] + i, out[2] + i, out[3] + i};
        scalar_kernels().grover4(tail_in, tail_out, n - i);
    }
}

void grover16_neon(const double* const* in, double* const* out, std::size_t n) {
    const float64x2_t half = vdupq_n_f64(0.5);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t v[16];
        for (int k = 0; k < 16; ++k) {
            v[k] = vld1q_f64(in[k] + i);
        }
        for (int c1 = 0; c1 < 4; ++c1) {
            grover4_neon_block(v[c1 * 4], v[c1 * 4 + 1], v[c1 * 4 + 2], v[c1 * 4 + 3], half);
        }
        for (int c2 = 0; c2 < 4; ++c2) {
            grover4_neon_block(v[c2], v[4 + c2], v[8 + c2], v[12 + c2], half);
        }
        for (int k = 0; k < 16; ++k) {
            vst1q_f64(out[k] + i, v[k]);
        }
    }
    if (i < n) {
        const double* tail_in[16];
        double* tail_out[16];
        for (int k = 0; k < 16; ++k) {
            tail_in[k] = in[k] + i;
            tail_out[k] = out[k] + i;
        }
        scalar_kernels().grover16(tail_in, tail_out, n - i);
    }
}

// Two 2-lane accumulators reproduce the scalar four-way partial sums.
double sum_squares_neon(const double* x, std::size_t n) {
    float64x2_t lo = vdupq_n_f64(0.0);
    float64x2_t hi = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const float64x2_t a = vld1q_f64(x + i);
        const float64x2_t b = vld1q_f64(x + i + 2);
        lo = vaddq_f64(lo, vmulq_f64(a, a));
        hi = vaddq_f64(hi, vmulq_f64(b, b));
    }
    double total = (vgetq_lane_f64(lo, 0) + vgetq_lane_f64(lo, 1)) + (vgetq_lane_f64(hi, 0) + vgetq_lane_f64(hi, 1));
    for (; i < n; ++i) {
        total += x[i] * x[i];
    }
    return total;
}

}  // namespace

const KernelSet& neon_kernel_table() {
    static const KernelSet set{"neon", grover4_neon, grover16_neon, sum_squares_neon};
    return set;
}

}  // namespace qwalk::simd::detail

#endif
