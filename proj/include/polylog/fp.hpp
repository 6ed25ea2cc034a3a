#pragma once

#include <cstdint>
#include <string>

#include "polylog/errors.hpp"

namespace polylog {

inline constexpr std::uint32_t kDefaultMaxPrime = 101;

/// Deterministic trial-division primality test (exact for the small moduli
/// this library accepts).
bool is_prime(std::uint32_t n) noexcept;

/// Throws BadArgument unless p is an odd prime >= 3. Library constructors use
/// this; the bound policy of PrimeModulus belongs to the interface edges.
void require_odd_prime(std::uint32_t p);

/// A validated odd prime in [3, bound].
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint32_t p, std::uint32_t bound = kDefaultMaxPrime);
    std::uint32_t value() const noexcept { return p_; }

private:
    std::uint32_t p_;
};

/// Residue in [0, p) carrying its modulus.
///
/// A default-constructed Fp is a *detached* zero: it acts as the additive
/// identity for every modulus and compares equal to any other zero. Trimmed
/// polynomial coefficient access relies on this, so no field handle has to
/// be threaded through generic code.
class Fp {
public:
    Fp() = default;

    Fp(std::uint64_t value, std::uint32_t p) : v_(static_cast<std::uint32_t>(value % p)), p_(p) {
        if (p == 0) throw BadArgument("Fp: modulus must be nonzero");
    }

    static Fp from_signed(std::int64_t value, std::uint32_t p) {
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    std::uint32_t value() const noexcept { return v_; }
    std::uint32_t prime() const noexcept { return p_; }
    bool attached() const noexcept { return p_ != 0; }
    bool is_zero() const noexcept { return v_ == 0; }

    /// 1 in the same field. Requires an attached element.
    Fp one() const {
        require_attached();
        return Fp(1, p_);
    }

    /// n*1 in the same field. Requires an attached element.
    Fp from_int(std::int64_t n) const {
        require_attached();
        return from_signed(n, p_);
    }

    Fp inv() const {
        require_attached();
        if (v_ == 0) throw DivisionByZero("Fp: inverse of zero");
        return pow(static_cast<std::int64_t>(p_) - 2);
    }

    /// a^e with e any integer; negative exponents go through inv().
    Fp pow(std::int64_t e) const {
        require_attached();
        if (e < 0) return inv().pow(-e);
        std::uint64_t base = v_, acc = 1;
        std::uint64_t ee = static_cast<std::uint64_t>(e);
        while (ee > 0) {
            if (ee & 1) acc = acc * base % p_;
            base = base * base % p_;
            ee >>= 1;
        }
        return Fp(acc, p_);
    }

    friend Fp operator+(Fp a, Fp b) {
        if (!a.attached()) return b;
        if (!b.attached()) return a;
        std::uint32_t p = require_same(a, b);
        std::uint32_t s = a.v_ + b.v_;
        if (s >= p) s -= p;
        return Fp(s, p);
    }

    friend Fp operator-(Fp a, Fp b) { return a + (-b); }

    friend Fp operator*(Fp a, Fp b) {
        if (!a.attached() || !b.attached()) {
            // Zero times anything is zero; keep a modulus when one is known.
            if (a.attached()) return Fp(0, a.p_);
            if (b.attached()) return Fp(0, b.p_);
            return Fp();
        }
        std::uint32_t p = require_same(a, b);
        return Fp(static_cast<std::uint64_t>(a.v_) * b.v_ % p, p);
    }

    Fp operator-() const {
        if (!attached() || v_ == 0) return *this;
        return Fp(p_ - v_, p_);
    }

    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }

    friend bool operator==(Fp a, Fp b) {
        if (a.is_zero() && b.is_zero()) return true;
        if (a.attached() && b.attached() && a.p_ != b.p_)
            throw BadArgument("Fp: comparing elements of different fields");
        return a.v_ == b.v_ && a.p_ == b.p_;
    }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

private:
    void require_attached() const {
        if (!attached()) throw BadArgument("Fp: operation requires an attached element");
    }

    static std::uint32_t require_same(Fp a, Fp b) {
        if (a.p_ != b.p_) throw BadArgument("Fp: mixed moduli");
        return a.p_;
    }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

}  // namespace polylog
