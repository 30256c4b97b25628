#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace hyperforman {

/// Exact rational with denominator 2, stored as twice its value.
///
/// Curvature terms such as 1 + (3/2)deg - deg^2 are half-integers; keeping
/// them exact lets the Gauss-Bonnet sum close to zero with no tolerance.
class HalfInteger {
public:
    constexpr HalfInteger() = default;
    constexpr HalfInteger(std::int64_t value) : twice_(2 * value) {}

    static constexpr HalfInteger from_twice(std::int64_t twice)
    {
        HalfInteger h;
        h.twice_ = twice;
        return h;
    }

    constexpr std::int64_t twice_value() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    constexpr HalfInteger operator-() const { return from_twice(-twice_); }
    constexpr HalfInteger& operator+=(HalfInteger o)
    {
        twice_ += o.twice_;
        return *this;
    }
    constexpr HalfInteger& operator-=(HalfInteger o)
    {
        twice_ -= o.twice_;
        return *this;
    }
    constexpr HalfInteger& operator*=(std::int64_t k)
    {
        twice_ *= k;
        return *this;
    }

    friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return a += b; }
    friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) { return a -= b; }
    friend constexpr HalfInteger operator*(HalfInteger a, std::int64_t k) { return a *= k; }
    friend constexpr HalfInteger operator*(std::int64_t k, HalfInteger a) { return a *= k; }

    friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
    friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

    /// "3/2", "-7/2" or a plain integer such as "4".
    std::string to_exact_string() const;
    /// "1.5", "-3.5" or a plain integer such as "4".
    std::string to_decimal_string() const;

private:
    std::int64_t twice_ = 0;
};

std::ostream& operator<<(std::ostream& os, HalfInteger h);

} // namespace hyperforman
