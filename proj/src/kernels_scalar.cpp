#include "kernels_impl.hpp"

namespace hyperforman::kernels::detail {

bool is_subset_scalar(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] & ~b[i]) != 0)
            return false;
    return true;
}

void ricci_closed_scalar(std::span<const std::int32_t> triangles, std::span<const std::int32_t> deg_u,
                         std::span<const std::int32_t> deg_v, std::span<std::int32_t> out)
{
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = 3 * triangles[i] + 4 - deg_u[i] - deg_v[i];
}

std::int64_t r0_twice_sum_scalar(std::span<const std::int32_t> degrees)
{
    std::int64_t total = 0;
    for (const std::int32_t d32 : degrees) {
        const std::int64_t d = d32;
        total += 2 + 3 * d - 2 * d * d;
    }
    return total;
}

std::int64_t sum_scalar(std::span<const std::int32_t> values)
{
    std::int64_t total = 0;
    for (const std::int32_t v : values)
        total += v;
    return total;
}

} // namespace hyperforman::kernels::detail
