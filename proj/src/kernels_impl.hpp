#pragma once

#include <cstdint>
#include <span>

namespace hyperforman::kernels::detail {

bool is_subset_scalar(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
void ricci_closed_scalar(std::span<const std::int32_t> triangles, std::span<const std::int32_t> deg_u,
                         std::span<const std::int32_t> deg_v, std::span<std::int32_t> out);
std::int64_t r0_twice_sum_scalar(std::span<const std::int32_t> degrees);
std::int64_t sum_scalar(std::span<const std::int32_t> values);

#if defined(HYPERFORMAN_HAVE_AVX2)
bool is_subset_avx2(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
void ricci_closed_avx2(std::span<const std::int32_t> triangles, std::span<const std::int32_t> deg_u,
                       std::span<const std::int32_t> deg_v, std::span<std::int32_t> out);
std::int64_t r0_twice_sum_avx2(std::span<const std::int32_t> degrees);
std::int64_t sum_avx2(std::span<const std::int32_t> values);
#endif

} // namespace hyperforman::kernels::detail
