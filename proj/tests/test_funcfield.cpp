#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polylog/bifrac.hpp"
#include "polylog/combinatorics.hpp"
#include "polylog/ratfunc.hpp"
#include "test_util.hpp"

using namespace polylog;
using testutil::make_poly;
using testutil::random_poly;

namespace {

RatFunc random_ratfunc(std::mt19937& rng, std::uint32_t p, int max_deg) {
    return RatFunc(random_poly(rng, p, max_deg), random_poly(rng, p, max_deg, true));
}

BiFrac random_bifrac(std::mt19937& rng, std::uint32_t p, int max_deg) {
    auto random_bipoly = [&](bool nonzero) {
        std::uniform_int_distribution<int> deg_d(0, max_deg);
        for (;;) {
            std::vector<PolyFp> c(deg_d(rng) + 1);
            for (auto& slice : c) slice = random_poly(rng, p, max_deg);
            BiPoly f(std::move(c));
            if (!nonzero || !f.is_zero()) return f;
        }
    };
    return BiFrac(random_bipoly(false), random_bipoly(true));
}

}  // namespace

TEST_CASE("RatFunc normalization is canonical") {
    // (1 - alpha^2)/(1 + alpha) over F_3 reduces to 1 - alpha.
    RatFunc f(make_poly(3, {1, 0, -1}), make_poly(3, {1, 1}));
    CHECK(f == RatFunc(make_poly(3, {1, 2})));
    CHECK(f.den().degree() == 0);
    // Same value through different routes gives identical parts.
    RatFunc g(make_poly(3, {2, 1}), make_poly(3, {1, 2}));
    RatFunc h(make_poly(3, {4, 2}), make_poly(3, {2, 4}));
    CHECK(g.num() == h.num());
    CHECK(g.den() == h.den());
    // Monic denominator invariant.
    std::mt19937 rng(3);
    for (int rep = 0; rep < 40; ++rep) {
        RatFunc r = random_ratfunc(rng, 5, 5);
        if (!r.is_zero()) CHECK(r.den().leading().value() == 1);
    }
}

TEST_CASE("RatFunc field operations") {
    std::mt19937 rng(5);
    for (std::uint32_t p : {3u, 5u}) {
        for (int rep = 0; rep < 30; ++rep) {
            RatFunc a = random_ratfunc(rng, p, 4);
            CHECK(a + RatFunc(p) == a);
            CHECK(a + RatFunc() == a);
            if (!a.is_zero()) CHECK(a * a.inv() == RatFunc(Fp(1, p)));
            CHECK((a - a).is_zero());
        }
    }
    CHECK_THROWS_AS(RatFunc(Fp(0, 5)).inv(), DivisionByZero);
    CHECK_THROWS_AS(RatFunc(make_poly(3, {1}), PolyFp()), DivisionByZero);
}

TEST_CASE("rf_substitute: frozen cases and the homomorphism property") {
    const std::uint32_t p = 3;
    PolyFp id = make_poly(p, {0, 1});
    RatFunc f(make_poly(p, {1}), make_poly(p, {1, 2}));  // 1/(1+2a)
    CHECK(f.substitute(id) == f);
    // a -> 2a turns it into 1/(1+4a) = 1/(1+a).
    CHECK(f.substitute(make_poly(p, {0, 2})) == RatFunc(make_poly(p, {1}), make_poly(p, {1, 1})));
    // Polynomial case: a -> a^p.
    RatFunc alpha(make_poly(p, {0, 1}));
    CHECK(alpha.substitute(PolyFp::monomial(Fp(1, p), p)) ==
          RatFunc(PolyFp::monomial(Fp(1, p), p)));
    // Constant substitution hitting a denominator root is a pole.
    RatFunc pole(make_poly(p, {1}), make_poly(p, {0, 1}));  // 1/a
    CHECK_THROWS_AS(pole.substitute(PolyFp()), PoleError);

    std::mt19937 rng(17);
    for (int rep = 0; rep < 25; ++rep) {
        RatFunc a = random_ratfunc(rng, 5, 3), b = random_ratfunc(rng, 5, 3);
        PolyFp g = random_poly(rng, 5, 3);
        if (g.degree() < 1) continue;  // keep substitution pole-free
        CHECK((a + b).substitute(g) == a.substitute(g) + b.substitute(g));
        CHECK((a * b).substitute(g) == a.substitute(g) * b.substitute(g));
    }
}

TEST_CASE("rf_specialize") {
    const std::uint32_t p = 3;
    RatFunc alpha(make_poly(p, {0, 1}));
    CHECK(alpha.specialize(Fp(2, p)) == Fp(2, p));
    RatFunc f(make_poly(p, {1}), make_poly(p, {1, 2}));
    CHECK_THROWS_AS(f.specialize(Fp(1, p)), PoleError);
    CHECK_THROWS_WITH(f.specialize(Fp(1, p)), "RatFunc: pole at alpha = 1");
    RatFunc c(Fp(2, p));
    for (std::uint32_t v = 0; v < p; ++v) CHECK(c.specialize(Fp(v, p)) == Fp(2, p));
}

TEST_CASE("falling_factorial: frozen cases and the Stirling characterization") {
    CHECK(falling_factorial(make_poly(5, {2, 1}), 0) == make_poly(5, {1}));
    CHECK(falling_factorial(make_poly(5, {2, 1}), 2) == make_poly(5, {2, 3, 1}));
    for (std::uint32_t p : {5u, 7u})
        for (std::uint32_t k = 1; k < p; ++k) {
            PolyFp f = falling_factorial(make_poly(p, {static_cast<long long>(k), 1}), k);
            CHECK(f.eval(Fp(0, p)) == fp_factorial(k, p));
        }
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
        for (std::uint32_t n = 1; n < p; ++n) {
            PolyFp f = falling_factorial(make_poly(p, {static_cast<long long>(n) - 1, 1}), n);
            for (std::uint32_t k = 0; k <= n; ++k) CHECK(f.coeff(k) == stirling1(n, k, p));
        }
}

TEST_CASE("BiFrac: equality, arithmetic, and the equivalence relation") {
    const std::uint32_t p = 5;
    std::mt19937 rng(29);
    for (int rep = 0; rep < 25; ++rep) {
        BiFrac a = random_bifrac(rng, p, 2);
        CHECK(a == a);
        if (!a.is_zero()) CHECK(a * a.inv() == BiFrac(p).from_int(1));
        CHECK((a + (-a)).is_zero());
        BiFrac b = random_bifrac(rng, p, 2), c = random_bifrac(rng, p, 2);
        CHECK((a == b) == (b == a));
        if (a == b && b == c) CHECK(a == c);
        if (a == b) {
            CHECK(a + c == b + c);
            CHECK(a * c == b * c);
        }
        // A scaled copy is the same value with a different representation.
        BiFrac scaled = BiFrac(a.num() * lift_alpha(make_poly(p, {0, 3})),
                               a.den() * lift_alpha(make_poly(p, {0, 3})));
        CHECK(a == scaled);
    }
    CHECK_THROWS_AS(BiFrac(p).inv(), DivisionByZero);
}

TEST_CASE("BiFrac degree guard trips under a tiny limit") {
    const std::uint32_t p = 5;
    BiFrac::GuardOverride tiny(0);
    std::vector<PolyFp> c(2);
    c[0] = make_poly(p, {1});
    c[1] = make_poly(p, {1});
    BiPoly nonconstant(std::move(c));
    CHECK_THROWS_AS(BiFrac(nonconstant, lift_alpha(make_poly(p, {1}))), DegreeGuardExceeded);
}
