#pragma once

#include <cstdint>

#include "polylog/fp.hpp"
#include "polylog/poly.hpp"

namespace polylog {

using PolyFp = Poly<Fp>;

/// Element of F_p(alpha): a fully normalized fraction of polynomials in
/// alpha over F_p. Canonical form: monic denominator, gcd(num, den) = 1,
/// zero stored as 0/1. Equal values therefore have identical parts, so
/// equality is syntactic.
///
/// A default-constructed RatFunc is a detached zero, mirroring Fp.
class RatFunc {
public:
    RatFunc() = default;

    /// Attached zero 0/1 over F_p.
    explicit RatFunc(std::uint32_t p) : den_(Fp(1, p)) {}

    explicit RatFunc(Fp scalar);
    explicit RatFunc(PolyFp num);
    RatFunc(PolyFp num, PolyFp den);

    /// Bypasses normalization; for mutation tooling and tests only.
    static RatFunc unchecked(PolyFp num, PolyFp den);

    const PolyFp& num() const noexcept { return num_; }
    const PolyFp& den() const noexcept { return den_; }

    bool attached() const noexcept { return !den_.is_zero(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    std::uint32_t prime() const;

    RatFunc one() const;
    RatFunc from_int(std::int64_t n) const;

    RatFunc inv() const;
    RatFunc pow(std::int64_t e) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// alpha -> g(alpha). Throws PoleError if the substituted denominator
    /// vanishes identically (only possible when g is constant).
    RatFunc substitute(const PolyFp& g) const;

    /// Evaluate at alpha = c. Throws PoleError naming c when den(c) = 0.
    Fp specialize(Fp c) const;

private:
    void normalize();

    PolyFp num_;
    PolyFp den_;  // empty only in the detached state
};

}  // namespace polylog
