#pragma once

// Inner-loop kernels for the state-vector engines.
//
// Every kernel operates on rows of doubles. The Grover coin is real, so a
// row of complex amplitudes is processed as 2n interleaved doubles with the
// same arithmetic applied to real and imaginary parts.
//
// All variants perform the same IEEE operations in the same order (no FMA
// contraction, fixed four-lane reduction tree) and are therefore
// bit-identical to the scalar reference.

#include <cstddef>
#include <string_view>
#include <vector>

namespace qwalk::simd {

/// out[c] = G in[c] for the 4x4 Grover coin, elementwise over n doubles.
/// out rows must not alias in rows.
using Grover4Fn = void (*)(const double* const* in, double* const* out, std::size_t n);

/// out[c1*4+c2] = (G (x) G) in, elementwise over n doubles.
using Grover16Fn = void (*)(const double* const* in, double* const* out, std::size_t n);

/// Sum of x[i]^2 using four interleaved partial sums
/// ((s0 + s1) + (s2 + s3)) + tail.
using SumSquaresFn = double (*)(const double* x, std::size_t n);

struct KernelSet {
    std::string_view name;
    Grover4Fn grover4;
    Grover16Fn grover16;
    SumSquaresFn sum_squares;
};

const KernelSet& scalar_kernels();

/// nullptr when the variant was not compiled in or the CPU lacks support.
const KernelSet* avx2_kernels();
const KernelSet* neon_kernels();

/// All variants usable on this machine, scalar first.
std::vector<const KernelSet*> available_kernels();

/// The kernel set used by the engines. Chosen on first call: the
/// QWALK_SIMD environment variable ("scalar", "avx2", "neon") if set and
/// available, otherwise the widest available variant.
const KernelSet& active_kernels();

/// Overrides the active set. Returns false if the name is unavailable.
bool select_kernels(std::string_view name);

}  // namespace qwalk::simd
