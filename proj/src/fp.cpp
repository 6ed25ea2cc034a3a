#include "polylog/fp.hpp"

namespace polylog {

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_odd_prime(std::uint32_t p) {
    if (!is_prime(p) || p % 2 == 0 || p < 3)
        throw BadArgument(std::to_string(p) + " is not an odd prime");
}

PrimeModulus::PrimeModulus(std::uint32_t p, std::uint32_t bound) : p_(p) {
    if (!is_prime(p) || p % 2 == 0)
        throw BadArgument(std::to_string(p) + " is not an odd prime");
    if (p < 3 || p > bound)
        throw BadArgument("prime " + std::to_string(p) + " is outside the allowed range [3, " +
                          std::to_string(bound) + "]");
}

}  // namespace polylog
