// Compiled with -mavx2 only; entry points are reached through avx2_kernels()
// after a runtime CPU check.

#include "qwalk/simd/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace qwalk::simd::detail {
namespace {

inline void grover4_avx2_block(__m256d& a0, __m256d& a1, __m256d& a2, __m256d& a3, __m256d half) {
    const __m256d h = _mm256_mul_pd(half, _mm256_add_pd(_mm256_add_pd(a0, a1), _mm256_add_pd(a2, a3)));
    a0 = _mm256_sub_pd(h, a0);
    a1 = _mm256_sub_pd(h, a1);
    a2 = _mm256_sub_pd(h, a2);
    a3 = _mm256_sub_pd(h, a3);
}

void grover4_avx2(const double* const* in, double* const* out, std::size_t n) {
    const __m256d half = _mm256_set1_pd(0.5);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d a0 = _mm256_loadu_pd(in[0] + i);
        __m256d a1 = _mm256_loadu_pd(in[1] + i);
        __m256d a2 = _mm256_loadu_pd(in[2] + i);
        __m256d a3 = _mm256_loadu_pd(in[3] + i);
        grover4_avx2_block(a0, a1, a2, a3, half);
        _mm256_storeu_pd(out[0] + i, a0);
        _mm256_storeu_pd(out[1] + i, a1);
        _mm256_storeu_pd(out[2] + i, a2);
        _mm256_storeu_pd(out[3] + i, a3);
    }
    for (; i < n; ++i) {
        double h = 0.5 * ((in[0][i] + in[1][i]) + (in[2][i] + in[3][i]));
        double v0 = in[0][i], v1 = in[1][i], v2 = in[2][i], v3 = in[3][i];
        out[0][i] = h - v0;
        out[1][i] = h - v1;
        out[2][i] = h - v2;
        out[3][i] = h - v3;
    }
}

void grover16_avx2(const double* const* in, double* const* out, std::size_t n) {
    const __m256d half = _mm256_set1_pd(0.5);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v[16];
        for (int k = 0; k < 16; ++k) {
            v[k] = _mm256_loadu_pd(in[k] + i);
        }
        for (int c1 = 0; c1 < 4; ++c1) {
            grover4_avx2_block(v[c1 * 4], v[c1 * 4 + 1], v[c1 * 4 + 2], v[c1 * 4 + 3], half);
        }
        for (int c2 = 0; c2 < 4; ++c2) {
            grover4_avx2_block(v[c2], v[4 + c2], v[8 + c2], v[12 + c2], half);
        }
        for (int k = 0; k < 16; ++k) {
            _mm256_storeu_pd(out[k] + i, v[k]);
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

double sum_squares_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    alignas(32) double s[4];
    _mm256_store_pd(s, acc);
    double total = (s[0] + s[1]) + (s[2] + s[3]);
    for (; i < n; ++i) {
        total += x[i] * x[i];
    }
    return total;
}

}  // namespace

const KernelSet& avx2_kernel_table() {
    static const KernelSet set{"avx2", grover4_avx2, grover16_avx2, sum_squares_avx2};
    return set;
}

}  // namespace qwalk::simd::detail

#endif
