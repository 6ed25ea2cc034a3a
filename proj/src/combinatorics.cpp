#include "polylog/combinatorics.hpp"

#include <algorithm>

namespace polylog {

Fp fp_factorial(std::uint32_t n, std::uint32_t p) {
    if (n >= p) throw BadArgument("fp_factorial: need 0 <= n < p");
    std::uint64_t acc = 1;
    for (std::uint32_t i = 2; i <= n; ++i) acc = acc * i % p;
    return Fp(acc, p);
}

namespace {

// binomial(n, k) mod p for n, k < p, via factorials.
Fp small_binom(std::uint32_t n, std::uint32_t k, std::uint32_t p) {
    if (k > n) return Fp(0, p);
    return fp_factorial(n, p) * fp_factorial(k, p).inv() * fp_factorial(n - k, p).inv();
}

}  // namespace

Fp lucas_binom(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
    Fp acc(1, p);
    while (n > 0 || k > 0) {
        std::uint32_t nd = static_cast<std::uint32_t>(n % p);
        std::uint32_t kd = static_cast<std::uint32_t>(k % p);
        if (kd > nd) return Fp(0, p);
        acc *= small_binom(nd, kd, p);
        n /= p;
        k /= p;
    }
    return acc;
}

std::uint32_t valuation_e(std::uint32_t k, std::uint32_t a, std::uint32_t p) {
    if (k == 0 || k >= p || a == 0 || a >= p)
        throw BadArgument("valuation_e: need 0 < k < p and 0 < a < p");
    std::uint32_t count = 0;
    for (std::uint32_t s = 1; s <= k; ++s) {
        std::uint32_t r = static_cast<std::uint32_t>(static_cast<std::uint64_t>(s - 1) * a % p);
        if (r >= p - a) ++count;
    }
    return count;
}

Fp stirling1(std::uint32_t n, std::uint32_t k, std::uint32_t p) {
    if (n >= p || k > n) throw BadArgument("stirling1: need 0 <= k <= n < p");
    // Row-by-row recurrence [m+1, j] = [m, j-1] + m*[m, j]; rows are short (n < p).
    std::vector<std::uint64_t> row(n + 1, 0);
    row[0] = 1;  // [0, 0] = 1
    for (std::uint32_t m = 0; m < n; ++m) {
        for (std::uint32_t j = std::min(n, m + 1); j >= 1; --j)
            row[j] = (row[j - 1] + static_cast<std::uint64_t>(m % p) * row[j]) % p;
        row[0] = row[0] * (m % p) % p;  // [m+1, 0] = m*[m, 0], i.e. 0 from m = 0 on
    }
    return Fp(row[k], p);
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
    std::uint32_t order = p - 1;
    std::vector<std::uint32_t> prime_factors;
    std::uint32_t m = order;
    for (std::uint32_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) prime_factors.push_back(m);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool generates = true;
        for (std::uint32_t q : prime_factors) {
            if (Fp(g, p).pow(order / q).value() == 1) {
                generates = false;
                break;
            }
        }
        if (generates) return g;
    }
    throw InternalInconsistency("smallest_primitive_root: no generator found for p=" +
                                std::to_string(p));
}

Fp root_of_unity(std::uint32_t h, std::uint32_t p) {
    if (h == 0 || (p - 1) % h != 0)
        throw UnsupportedOrder("root_of_unity: order " + std::to_string(h) + " does not divide " +
                               std::to_string(p - 1));
    Fp g(smallest_primitive_root(p), p);
    return g.pow((p - 1) / h);
}

std::vector<std::uint32_t> divisors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

std::vector<std::uint32_t> odd_primes_in(std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t n = std::max<std::uint32_t>(lo, 3); n <= hi; ++n)
        if (n % 2 == 1 && is_prime(n)) out.push_back(n);
    return out;
}

}  // namespace polylog
