#pragma once

#include <cstdint>
#include <vector>

#include "polylog/fp.hpp"

namespace polylog {

/// n! mod p for 0 <= n < p.
Fp fp_factorial(std::uint32_t n, std::uint32_t p);

/// binomial(n, k) mod p by Lucas' theorem (digit-wise in base p). Zero as
/// soon as some base-p digit of k exceeds the corresponding digit of n.
Fp lucas_binom(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// e(k, a): the p-adic valuation of prod_{s=1..k} binomial(s*a, a), computed
/// in carry-count form as #{1 <= s <= k : ((s-1)a mod p) >= p-a}.
/// Requires 0 < k < p and 0 < a < p.
std::uint32_t valuation_e(std::uint32_t k, std::uint32_t a, std::uint32_t p);

/// Unsigned Stirling number of the first kind [n, k] mod p, via the
/// recurrence [n+1, k] = [n, k-1] + n*[n, k]. Requires 0 <= k <= n < p.
Fp stirling1(std::uint32_t n, std::uint32_t k, std::uint32_t p);

/// Smallest generator of the multiplicative group of F_p.
std::uint32_t smallest_primitive_root(std::uint32_t p);

/// Element of multiplicative order exactly h, derived deterministically from
/// the smallest primitive root. Requires h >= 1 and h | p-1.
Fp root_of_unity(std::uint32_t h, std::uint32_t p);

/// Divisors of n in ascending order.
std::vector<std::uint32_t> divisors(std::uint32_t n);

/// Odd primes in [lo, hi], ascending.
std::vector<std::uint32_t> odd_primes_in(std::uint32_t lo, std::uint32_t hi);

}  // namespace polylog
