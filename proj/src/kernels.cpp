#include "hyperforman/kernels.hpp"

#include "kernels_impl.hpp"

#include <cstdlib>
#include <string_view>

namespace hyperforman::kernels {

const KernelSet& scalar()
{
    static const KernelSet set{"scalar", &detail::is_subset_scalar, &detail::ricci_closed_scalar,
                               &detail::r0_twice_sum_scalar, &detail::sum_scalar};
    return set;
}

const KernelSet* avx2()
{
#if defined(HYPERFORMAN_HAVE_AVX2)
    static const KernelSet set{"avx2", &detail::is_subset_avx2, &detail::ricci_closed_avx2,
                               &detail::r0_twice_sum_avx2, &detail::sum_avx2};
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") != 0;
    }();
    return supported ? &set : nullptr;
#else
    return nullptr;
#endif
}

const KernelSet& active()
{
    static const KernelSet* chosen = [] {
        if (const char* forced = std::getenv("HYPERFORMAN_KERNELS");
            forced != nullptr && std::string_view(forced) == "scalar")
            return &scalar();
        if (const KernelSet* fast = avx2())
            return fast;
        return &scalar();
    }();
    return *chosen;
}

} // namespace hyperforman::kernels
