#include <atomic>
#include <cstdlib>

#include "qwalk/simd/kernels.hpp"

namespace qwalk::simd {

namespace detail {
#if defined(QWALK_HAVE_AVX2)
const KernelSet& avx2_kernel_table();
#endif
#if defined(QWALK_HAVE_NEON)
const KernelSet& neon_kernel_table();
#endif
}  // namespace detail

const KernelSet* avx2_kernels() {
#if defined(QWALK_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &detail::avx2_kernel_table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelSet* neon_kernels() {
#if defined(QWALK_HAVE_NEON)
    // NEON is mandatory on AArch64.
    return &detail::neon_kernel_table();
#else
    return nullptr;
#endif
}

std::vector<const KernelSet*> available_kernels() {
    std::vector<const KernelSet*> sets{&scalar_kernels()};
    if (const KernelSet* k = avx2_kernels()) {
        sets.push_back(k);
    }
    if (const KernelSet* k = neon_kernels()) {
        sets.push_back(k);
    }
    return sets;
}

namespace {

const KernelSet* find_kernels(std::string_view name) {
    for (const KernelSet* k : available_kernels()) {
        if (k->name == name) {
            return k;
        }
    }
    return nullptr;
}

const KernelSet* initial_choice() {
    if (const char* env = std::getenv("QWALK_SIMD"); env != nullptr && *env != '\0') {
        if (const KernelSet* k = find_kernels(env)) {
            return k;
        }
    }
    return available_kernels().back();
}

std::atomic<const KernelSet*>& active_slot() {
    static std::atomic<const KernelSet*> slot{initial_choice()};
    return slot;
}

}  // namespace

const KernelSet& active_kernels() { return *active_slot().load(std::memory_order_acquire); }

bool select_kernels(std::string_view name) {
    const KernelSet* k = find_kernels(name);
    if (k == nullptr) {
        return false;
    }
    active_slot().store(k, std::memory_order_release);
    return true;
}

}  // namespace qwalk::simd
