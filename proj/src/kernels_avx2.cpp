// Compiled with -mavx2; only reached after a runtime CPU check.
#include "kernels_impl.hpp"

#include <immintrin.h>

namespace hyperforman::kernels::detail {

namespace {

std::int64_t horizontal_sum_epi64(__m256i v)
{
    alignas(32) std::int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

} // namespace

bool is_subset_avx2(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b)
{
    const std::size_t n = a.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
        // testc(vb, va) is set iff (~vb & va) == 0
        if (!_mm256_testc_si256(vb, va))
            return false;
    }
    for (; i < n; ++i)
        if ((a[i] & ~b[i]) != 0)
            return false;
    return true;
}

void ricci_closed_avx2(std::span<const std::int32_t> triangles, std::span<const std::int32_t> deg_u,
                       std::span<const std::int32_t> deg_v, std::span<std::int32_t> out)
{
    const std::size_t n = out.size();
    const __m256i four = _mm256_set1_epi32(4);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i t = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(triangles.data() + i));
        const __m256i du = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(deg_u.data() + i));
        const __m256i dv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(deg_v.data() + i));
        __m256i r = _mm256_add_epi32(_mm256_add_epi32(t, _mm256_add_epi32(t, t)), four);
        r = _mm256_sub_epi32(_mm256_sub_epi32(r, du), dv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), r);
    }
    for (; i < n; ++i)
        out[i] = 3 * triangles[i] + 4 - deg_u[i] - deg_v[i];
}

std::int64_t r0_twice_sum_avx2(std::span<const std::int32_t> degrees)
{
    const std::size_t n = degrees.size();
    const __m256i two = _mm256_set1_epi64x(2);
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m128i d32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(degrees.data() + i));
        const __m256i d = _mm256_cvtepi32_epi64(d32);
        // _mm256_mul_epi32 multiplies the low signed 32 bits of each 64-bit lane
        const __m256i sq = _mm256_mul_epi32(d, d);
        const __m256i three_d = _mm256_add_epi64(d, _mm256_add_epi64(d, d));
        const __m256i term = _mm256_sub_epi64(_mm256_add_epi64(two, three_d), _mm256_add_epi64(sq, sq));
        acc = _mm256_add_epi64(acc, term);
    }
    std::int64_t total = horizontal_sum_epi64(acc);
    for (; i < n; ++i) {
        const std::int64_t d = degrees[i];
        total += 2 + 3 * d - 2 * d * d;
    }
    return total;
}

std::int64_t sum_avx2(std::span<const std::int32_t> values)
{
    const std::size_t n = values.size();
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m128i v32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(values.data() + i));
        acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(v32));
    }
    std::int64_t total = horizontal_sum_epi64(acc);
    for (; i < n; ++i)
        total += values[i];
    return total;
}

} // namespace hyperforman::kernels::detail
