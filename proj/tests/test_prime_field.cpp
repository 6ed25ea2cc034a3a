#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "polylog/combinatorics.hpp"
#include "polylog/fp.hpp"
#include "polylog/poly.hpp"
#include "test_util.hpp"

using namespace polylog;
using boost::multiprecision::cpp_int;

namespace {

const std::vector<std::uint32_t> kPrimes{3, 5, 7, 11, 13};

// Extended-Euclid inverse, independent of the Fermat-power implementation.
std::uint32_t inv_oracle(std::uint32_t a, std::uint32_t p) {
    long long r0 = p, r1 = a, x0 = 0, x1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        std::swap(r0 -= q * r1, r1);
        std::swap(x0 -= q * x1, x1);
    }
    x0 %= p;
    return static_cast<std::uint32_t>(x0 < 0 ? x0 + p : x0);
}

// v_p(n!) by Legendre's formula (exact integer arithmetic).
std::uint64_t vp_factorial(std::uint64_t n, std::uint32_t p) {
    std::uint64_t total = 0;
    for (std::uint64_t q = p; q <= n; q *= p) {
        total += n / q;
        if (q > n / p) break;
    }
    return total;
}

// Exact-integer oracle for the valuation of prod_{s=1..k} C(s*a, a).
std::uint64_t valuation_oracle(std::uint32_t k, std::uint32_t a, std::uint32_t p) {
    std::uint64_t total = 0;
    for (std::uint32_t s = 1; s <= k; ++s)
        total += vp_factorial(static_cast<std::uint64_t>(s) * a, p) - vp_factorial(a, p) -
                 vp_factorial(static_cast<std::uint64_t>(s - 1) * a, p);
    return total;
}

cpp_int exact_binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) return 0;
    cpp_int acc = 1;
    for (std::uint32_t i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return acc;
}

}  // namespace

TEST_CASE("PrimeModulus accepts odd primes and rejects the rest") {
    for (std::uint32_t p : kPrimes) CHECK(PrimeModulus(p).value() == p);
    CHECK(PrimeModulus(101).value() == 101);
    // p = 2 is rejected: every polylogarithm degenerates to X there.
    CHECK_THROWS_AS(PrimeModulus(2), BadArgument);
    CHECK_THROWS_AS(PrimeModulus(4), BadArgument);
    CHECK_THROWS_AS(PrimeModulus(1), BadArgument);
    CHECK_THROWS_AS(PrimeModulus(0), BadArgument);
    CHECK_THROWS_AS(PrimeModulus(9), BadArgument);
    CHECK_THROWS_AS(PrimeModulus(103), BadArgument);  // default bound 101
    CHECK(PrimeModulus(103, 200).value() == 103);
    CHECK_THROWS_WITH(PrimeModulus(4), "4 is not an odd prime");
}

TEST_CASE("Fp arithmetic and the detached zero") {
    Fp a(2, 5), b(4, 5);
    CHECK((a + b).value() == 1);
    CHECK((a - b).value() == 3);
    CHECK((a * b).value() == 3);
    CHECK((-a).value() == 3);
    CHECK(a.pow(3).value() == 3);
    CHECK(a.pow(0).value() == 1);
    CHECK(a.pow(-1).value() == 3);

    Fp z;  // detached
    CHECK(z.is_zero());
    CHECK((z + a) == a);
    CHECK((a + z) == a);
    CHECK((z * a).is_zero());
    CHECK(z == Fp(0, 7));
    CHECK_THROWS_AS(Fp(1, 3) + Fp(1, 5), BadArgument);
    CHECK_THROWS_AS(z.one(), BadArgument);
}

TEST_CASE("fp_inv: identity, frozen case, zero, and the Euclid oracle") {
    for (std::uint32_t p : kPrimes) CHECK(Fp(1, p).inv().value() == 1);
    CHECK(Fp(2, 5).inv().value() == 3);
    CHECK_THROWS_AS(Fp(0, 5).inv(), DivisionByZero);
    for (std::uint32_t p : kPrimes)
        for (std::uint32_t a = 1; a < p; ++a) CHECK(Fp(a, p).inv().value() == inv_oracle(a, p));
}

TEST_CASE("fp_factorial: empty product, Wilson, reduction, range") {
    for (std::uint32_t p : kPrimes) {
        CHECK(fp_factorial(0, p).value() == 1);
        CHECK(fp_factorial(p - 1, p).value() == p - 1);  // (p-1)! = -1
    }
    CHECK(fp_factorial(3, 5).value() == 1);  // 6 mod 5
    CHECK_THROWS_AS(fp_factorial(5, 5), BadArgument);
}

TEST_CASE("lucas_binom: frozen cases and the exact-integer oracle") {
    for (std::uint32_t p : kPrimes) {
        CHECK(lucas_binom(12345, 0, p).value() == 1);
        CHECK(lucas_binom(7, 7, p).value() == 1);
    }
    CHECK(lucas_binom(4, 2, 3).value() == 0);  // C(4,2) = 6
    CHECK(lucas_binom(4, 2, 5).value() == 1);
    for (std::uint32_t p : kPrimes) {
        for (std::uint32_t n = 0; n <= p * p; ++n)
            for (std::uint32_t k = 0; k <= p * p; ++k) {
                cpp_int expected = exact_binomial(n, k) % p;
                CHECK(lucas_binom(n, k, p).value() == expected.convert_to<std::uint32_t>());
            }
    }
}

TEST_CASE("valuation_e: frozen cases, edge rows, and the Legendre oracle") {
    for (std::uint32_t p : kPrimes)
        for (std::uint32_t a = 1; a < p; ++a) {
            CHECK(valuation_e(1, a, p) == 0);           // product is C(a,a) = 1
            CHECK(valuation_e(p - 1, a, p) == a - 1);   // exactly a-1 carries
        }
    CHECK(valuation_e(2, 2, 3) == 1);  // v_3(C(2,2) C(4,2)) = v_3(6)
    CHECK_THROWS_AS(valuation_e(0, 1, 5), BadArgument);
    CHECK_THROWS_AS(valuation_e(5, 1, 5), BadArgument);
    CHECK_THROWS_AS(valuation_e(1, 0, 5), BadArgument);
    for (std::uint32_t p : kPrimes)
        for (std::uint32_t k = 1; k < p; ++k)
            for (std::uint32_t a = 1; a < p; ++a)
                CHECK(valuation_e(k, a, p) == valuation_oracle(k, a, p));
}

TEST_CASE("stirling1: boundary columns and the rising-product expansion") {
    for (std::uint32_t p : kPrimes) {
        for (std::uint32_t n = 0; n < p; ++n) CHECK(stirling1(n, n, p).value() == 1);
        for (std::uint32_t d = 1; d < p; ++d)
            CHECK(stirling1(d, 1, p) == fp_factorial(d - 1, p));
        for (std::uint32_t k = 1; k < p; ++k) CHECK(stirling1(p - 1, k, p).value() == 1);
    }
    CHECK(stirling1(4, 2, 5).value() == 1);  // 11 mod 5
    CHECK_THROWS_AS(stirling1(5, 1, 5), BadArgument);
    CHECK_THROWS_AS(stirling1(3, 4, 5), BadArgument);
    // sum_k [n,k] X^k equals the expanded product (X+n-1)(X+n-2)...X.
    for (std::uint32_t p : kPrimes)
        for (std::uint32_t n = 1; n < p; ++n) {
            PolyFp base = testutil::make_poly(p, {static_cast<long long>(n) - 1, 1});
            PolyFp rising = falling_factorial(base, n);
            for (std::uint32_t k = 0; k <= n; ++k) CHECK(rising.coeff(k) == stirling1(n, k, p));
        }
}

TEST_CASE("power sums vanish below the top exponent") {
    for (std::uint32_t p : kPrimes) {
        for (std::uint32_t r = 1; r + 1 < p; ++r) {
            Fp sum(0, p);
            for (std::uint32_t k = 1; k < p; ++k) sum += Fp(k, p).inv().pow(r);
            CHECK(sum.is_zero());
        }
        Fp top(0, p);
        for (std::uint32_t k = 1; k < p; ++k) top += Fp(k, p).inv().pow(p - 1);
        CHECK(top.value() == p - 1);  // each term is 1
    }
}

TEST_CASE("root_of_unity: determinism and exact order") {
    CHECK(root_of_unity(4, 5).value() == 2);  // smallest primitive root of F_5 is 2
    CHECK(smallest_primitive_root(3) == 2);
    CHECK(smallest_primitive_root(5) == 2);
    CHECK(smallest_primitive_root(7) == 3);
    CHECK(smallest_primitive_root(11) == 2);
    CHECK(smallest_primitive_root(13) == 2);
    for (std::uint32_t p : kPrimes) {
        CHECK(root_of_unity(1, p).value() == 1);
        CHECK(root_of_unity(2, p).value() == p - 1);
        for (std::uint32_t h : divisors(p - 1)) {
            Fp w = root_of_unity(h, p);
            CHECK(w.pow(h).value() == 1);
            for (std::uint32_t m = 1; m < h; ++m) CHECK(w.pow(m).value() != 1);
        }
    }
    CHECK_THROWS_AS(root_of_unity(3, 5), UnsupportedOrder);
    CHECK_THROWS_AS(root_of_unity(0, 5), UnsupportedOrder);
    CHECK_THROWS_AS(root_of_unity(5, 7), UnsupportedOrder);
}
