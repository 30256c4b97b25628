#pragma once

#include <cstdint>
#include <span>

// Data-parallel inner loops. Each kernel has a portable scalar reference and,
// on x86-64 builds, an AVX2 variant; the variant is chosen at runtime from the
// CPU's feature flags. All variants must produce identical results.

namespace hyperforman::kernels {

struct KernelSet {
    const char* name;

    /// True iff every bit set in `a` is also set in `b`. Equal lengths.
    bool (*is_subset)(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

    /// out[i] = 3*triangles[i] + 4 - deg_u[i] - deg_v[i]. Equal lengths.
    void (*ricci_closed)(std::span<const std::int32_t> triangles,
                         std::span<const std::int32_t> deg_u,
                         std::span<const std::int32_t> deg_v, std::span<std::int32_t> out);

    /// Sum over d of 2*(1 + (3/2)d - d^2) = 2 + 3d - 2d^2, i.e. twice the
    /// total vertex curvature for the given degrees.
    std::int64_t (*r0_twice_sum)(std::span<const std::int32_t> degrees);

    std::int64_t (*sum)(std::span<const std::int32_t> values);
};

const KernelSet& scalar();

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelSet* avx2();

/// Best available set. HYPERFORMAN_KERNELS=scalar forces the reference path.
const KernelSet& active();

} // namespace hyperforman::kernels
