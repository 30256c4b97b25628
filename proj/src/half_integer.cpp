#include "hyperforman/half_integer.hpp"

#include <cstdlib>

namespace hyperforman {

std::string HalfInteger::to_exact_string() const
{
    if (is_integer())
        return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

std::string HalfInteger::to_decimal_string() const
{
    if (is_integer())
        return std::to_string(twice_ / 2);
    // twice_ is odd, so the magnitude is (|twice_| - 1) / 2 + 0.5
    const std::int64_t whole = (std::llabs(twice_) - 1) / 2;
    return std::string(twice_ < 0 ? "-" : "") + std::to_string(whole) + ".5";
}

std::ostream& operator<<(std::ostream& os, HalfInteger h) { return os << h.to_exact_string(); }

} // namespace hyperforman
