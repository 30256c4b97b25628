#include "hyperforman/kernels.hpp"

#include "doctest.h"

#include <random>
#include <vector>

namespace kernels = hyperforman::kernels;

namespace {

std::vector<std::int32_t> random_ints(std::mt19937_64& rng, std::size_t n, std::int32_t lo, std::int32_t hi)
{
    std::uniform_int_distribution<std::int32_t> dist(lo, hi);
    std::vector<std::int32_t> v(n);
    for (auto& x : v)
        x = dist(rng);
    return v;
}

} // namespace

TEST_CASE("scalar kernels on hand values")
{
    const auto& k = kernels::scalar();
    const std::vector<std::int32_t> tri{0, 2, 1}, du{1, 3, 2}, dv{1, 3, 3};
    std::vector<std::int32_t> out(3);
    k.ricci_closed(tri, du, dv, out);
    CHECK(out == std::vector<std::int32_t>{2, 4, 2});

    const std::vector<std::int32_t> degrees{0, 1, 2, 3};
    // 2*R0 per degree: 2, 3, 0, -7
    CHECK(k.r0_twice_sum(degrees) == -2);
    CHECK(k.sum(degrees) == 6);

    const std::vector<std::uint64_t> a{0b0101, 0}, b{0b0111, 1}, c{0b0011, 1};
    CHECK(k.is_subset(a, b));
    CHECK_FALSE(k.is_subset(a, c));
    CHECK(k.is_subset(std::vector<std::uint64_t>{}, std::vector<std::uint64_t>{}));
}

TEST_CASE("avx2 kernels agree with the scalar reference")
{
    const kernels::KernelSet* fast = kernels::avx2();
    if (fast == nullptr) {
        MESSAGE("AVX2 not available; equivalence not exercised");
        return;
    }
    const auto& ref = kernels::scalar();
    std::mt19937_64 rng(2024);

    // lengths straddle the vector width so the scalar tails are covered
    for (std::size_t n = 0; n < 70; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            const auto tri = random_ints(rng, n, 0, 50);
            const auto du = random_ints(rng, n, 0, 100000);
            const auto dv = random_ints(rng, n, 0, 100000);
            std::vector<std::int32_t> o1(n), o2(n);
            ref.ricci_closed(tri, du, dv, o1);
            fast->ricci_closed(tri, du, dv, o2);
            REQUIRE(o1 == o2);

            const auto deg = random_ints(rng, n, 0, 1'000'000);
            REQUIRE(ref.r0_twice_sum(deg) == fast->r0_twice_sum(deg));
            const auto vals = random_ints(rng, n, -2'000'000'000, 2'000'000'000);
            REQUIRE(ref.sum(vals) == fast->sum(vals));

            std::uniform_int_distribution<std::uint64_t> bits;
            std::vector<std::uint64_t> a(n), b(n);
            for (std::size_t i = 0; i < n; ++i) {
                b[i] = bits(rng);
                a[i] = b[i] & bits(rng);
            }
            REQUIRE(fast->is_subset(a, b));
            REQUIRE(ref.is_subset(a, b));
            if (n > 0) {
                const std::size_t flip = rng() % n;
                a[flip] |= ~b[flip] & (std::uint64_t{1} << (rng() % 64));
                REQUIRE(ref.is_subset(a, b) == fast->is_subset(a, b));
            }
        }
    }
}

TEST_CASE("active kernel set is one of the variants")
{
    const auto& a = kernels::active();
    CHECK((&a == &kernels::scalar() || &a == kernels::avx2()));
}
