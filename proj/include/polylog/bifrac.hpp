#pragma once

#include <cstdint>

#include "polylog/poly.hpp"
#include "polylog/ratfunc.hpp"

namespace polylog {

/// Bivariate polynomial in (alpha, beta) over F_p, stored as a polynomial in
/// beta whose coefficients are polynomials in alpha.
using BiPoly = Poly<PolyFp>;

/// Total degree (alpha exponent + beta exponent) of the largest term.
int bipoly_total_degree(const BiPoly& f);

/// Lift a univariate polynomial to a BiPoly: as a polynomial in alpha
/// (constant in beta) or as the same expression read in beta.
BiPoly lift_alpha(const PolyFp& f);
BiPoly lift_beta(const PolyFp& f);

/// f(point) where f is univariate over F_p and point is a BiPoly (used for
/// parameter substitutions such as alpha -> alpha + beta).
BiPoly bipoly_substitute(const PolyFp& f, const BiPoly& point, std::uint32_t p);

/// Element of F_p(alpha, beta) as an unnormalized fraction of bivariate
/// polynomials. No canonical form is maintained: bivariate gcd is avoided.
/// Equality is decided by cross-multiplication; growth is capped by a
/// content-stripping pass plus a configurable total-degree guard (default
/// 4p^2), which aborts with DegreeGuardExceeded instead of thrashing.
class BiFrac {
public:
    BiFrac() = default;  // detached zero

    /// Attached zero 0/1 over F_p.
    explicit BiFrac(std::uint32_t p);

    BiFrac(BiPoly num, BiPoly den);

    static BiFrac from_alpha(const PolyFp& f, std::uint32_t p);
    static BiFrac from_beta(const PolyFp& f, std::uint32_t p);

    const BiPoly& num() const noexcept { return num_; }
    const BiPoly& den() const noexcept { return den_; }

    bool attached() const noexcept { return !den_.is_zero(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    std::uint32_t prime() const;

    BiFrac one() const;
    BiFrac from_int(std::int64_t n) const;

    BiFrac inv() const;

    friend BiFrac operator+(const BiFrac& a, const BiFrac& b);
    friend BiFrac operator-(const BiFrac& a, const BiFrac& b);
    friend BiFrac operator*(const BiFrac& a, const BiFrac& b);
    BiFrac operator-() const;
    BiFrac& operator+=(const BiFrac& o) { return *this = *this + o; }
    BiFrac& operator*=(const BiFrac& o) { return *this = *this * o; }

    /// Value equality by cross-multiplication.
    friend bool operator==(const BiFrac& a, const BiFrac& b);
    friend bool operator!=(const BiFrac& a, const BiFrac& b) { return !(a == b); }

    /// Evaluate at (alpha, beta) = (a, b). Throws PoleError on a vanishing
    /// denominator.
    Fp specialize(Fp a, Fp b) const;

    /// Current guard limit for a given prime: guard_factor * p^2.
    static int degree_limit(std::uint32_t p);

    /// RAII override of the guard factor (tests use a tiny factor to force
    /// the guard to trip).
    class GuardOverride {
    public:
        explicit GuardOverride(int factor);
        ~GuardOverride();
        GuardOverride(const GuardOverride&) = delete;
        GuardOverride& operator=(const GuardOverride&) = delete;

    private:
        int saved_;
    };

private:
    void normalize();

    BiPoly num_;
    BiPoly den_;  // empty only in the detached state
};

}  // namespace polylog
