#pragma once

#include <cstddef>
#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include "polylog/errors.hpp"
#include "polylog/fp.hpp"

namespace polylog {

/// Dense univariate polynomial over an abstract coefficient field K.
///
/// Coefficients are stored by exponent with trailing zeros trimmed, so the
/// zero polynomial is the empty sequence and degree() is size()-1 otherwise.
/// K must provide: default construction (a zero usable with any field
/// instance), is_zero(), ==, + - * and unary -, plus instance methods one(),
/// from_int() and inv() on attached elements.
template <class K>
class Poly {
public:
    Poly() = default;

    explicit Poly(K constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }

    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(K coeff, std::size_t exp) {
        if (coeff.is_zero()) return Poly();
        std::vector<K> c(exp + 1);
        c[exp] = std::move(coeff);
        return Poly(std::move(c));
    }

    const std::vector<K>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of X^i; a (detached) zero beyond the degree.
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(); }

    const K& leading() const {
        if (c_.empty()) throw BadArgument("Poly: zero polynomial has no leading coefficient");
        return c_.back();
    }

    /// Multiplicative identity of the same coefficient field; requires a
    /// nonzero polynomial to borrow the field from.
    Poly one() const { return Poly(leading().one()); }

    /// Constant polynomial n*1 over the same field.
    Poly from_int(std::int64_t n) const { return Poly(leading().from_int(n)); }

    /// Inverse of a constant polynomial (used by generic division code).
    Poly inv() const {
        if (degree() != 0) throw DivisionByZero("Poly: inverse requires a nonzero constant");
        return Poly(c_[0].inv());
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(out));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    Poly operator-() const {
        std::vector<K> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
        return Poly(std::move(out));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        if constexpr (std::is_same_v<K, Fp>) return mul_fp(a, b);
        std::vector<K> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }

    /// Multiply by a scalar of the coefficient field.
    Poly scaled(const K& s) const {
        if (s.is_zero()) return Poly();
        std::vector<K> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
        return Poly(std::move(out));
    }

    /// Multiply by X^n.
    Poly shifted(std::size_t n) const {
        if (is_zero() || n == 0) return *this;
        std::vector<K> out(c_.size() + n);
        for (std::size_t i = 0; i < c_.size(); ++i) out[i + n] = c_[i];
        return Poly(std::move(out));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(std::uint64_t e) const {
        if (e == 0) return one();
        Poly base = *this, acc;
        bool acc_set = false;
        while (e > 0) {
            if (e & 1) {
                acc = acc_set ? acc * base : base;
                acc_set = true;
            }
            e >>= 1;
            if (e) base = base * base;
        }
        return acc;
    }

    /// Horner evaluation at a point of the coefficient field.
    K eval(const K& x) const {
        K acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// dst += src * scale * X^shift, in place.
    static void add_scaled_shifted(Poly& dst, const Poly& src, const K& scale, std::size_t shift) {
        if (src.is_zero() || scale.is_zero()) return;
        if (dst.c_.size() < src.c_.size() + shift) dst.c_.resize(src.c_.size() + shift);
        for (std::size_t i = 0; i < src.c_.size(); ++i)
            dst.c_[i + shift] = dst.c_[i + shift] + src.c_[i] * scale;
        dst.trim();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    // Schoolbook product over F_p with lazy reduction: accumulate cross terms
    // in 64-bit and reduce once per output coefficient.
    static Poly mul_fp(const Poly& a, const Poly& b) {
        std::uint32_t p = 0;
        for (const K& c : a.c_)
            if (c.attached()) {
                p = c.prime();
                break;
            }
        if (p == 0)
            for (const K& c : b.c_)
                if (c.attached()) {
                    p = c.prime();
                    break;
                }
        if (p == 0) return Poly();  // all-zero coefficients
        std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            std::uint64_t av = a.c_[i].value();
            if (av == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += av * b.c_[j].value();
        }
        std::vector<K> out(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i) out[i] = Fp(acc[i] % p, p);
        return Poly(std::move(out));
    }

    std::vector<K> c_;
};

/// Formal derivative d/dX.
template <class K>
Poly<K> derivative(const Poly<K>& f) {
    const auto& c = f.coeffs();
    if (c.size() <= 1) return Poly<K>();
    std::vector<K> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        out[i - 1] = c[i].is_zero() ? K() : c[i] * c[i].from_int(static_cast<std::int64_t>(i));
    return Poly<K>(std::move(out));
}

/// The theta operator X d/dX: coefficient of X^k multiplied by k.
template <class K>
Poly<K> theta(const Poly<K>& f) {
    const auto& c = f.coeffs();
    std::vector<K> out(c.size());
    for (std::size_t i = 1; i < c.size(); ++i)
        out[i] = c[i].is_zero() ? K() : c[i] * c[i].from_int(static_cast<std::int64_t>(i));
    return Poly<K>(std::move(out));
}

/// Quotient and remainder of num by den (den nonzero; K a field).
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& num, const Poly<K>& den) {
    if (den.is_zero()) throw DivisionByZero("Poly: division by the zero polynomial");
    if (num.degree() < den.degree()) return {Poly<K>(), num};
    K lead_inv = den.leading().inv();
    std::vector<K> rem(num.coeffs());
    std::vector<K> quot(rem.size() - den.coeffs().size() + 1);
    const auto& d = den.coeffs();
    for (std::size_t i = rem.size(); i-- > d.size() - 1;) {
        if (rem[i].is_zero()) continue;
        K q = rem[i] * lead_inv;
        quot[i - d.size() + 1] = q;
        for (std::size_t j = 0; j < d.size(); ++j)
            rem[i - d.size() + 1 + j] = rem[i - d.size() + 1 + j] - q * d[j];
    }
    return {Poly<K>(std::move(quot)), Poly<K>(std::move(rem))};
}

/// Exact quotient; throws InternalInconsistency if the division leaves a
/// remainder (callers rely on divisibility they have already established).
template <class K>
Poly<K> exact_div(const Poly<K>& num, const Poly<K>& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw InternalInconsistency("Poly: exact_div left a remainder");
    return q;
}

/// Monic gcd by the Euclidean algorithm (K a field).
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading().inv());
}

/// prod_{j=0..n-1} (base - j), expanded. Base must be nonzero.
template <class K>
Poly<K> falling_factorial(const Poly<K>& base, std::uint32_t n) {
    K unit = base.leading().one();
    Poly<K> acc(unit);
    for (std::uint32_t j = 0; j < n; ++j)
        acc *= base - Poly<K>(unit.from_int(static_cast<std::int64_t>(j)));
    return acc;
}

/// Reduction context for congruences: either the special modulus X^p - c
/// (reduced by the substitution X^{qp+r} -> c^q X^r) or a general monic
/// modulus handled by polynomial division.
template <class K>
class QuotientContext {
public:
    static QuotientContext special_xp(std::uint32_t p, K c) {
        QuotientContext ctx;
        ctx.p_ = p;
        ctx.c_ = std::move(c);
        return ctx;
    }

    static QuotientContext general_monic(Poly<K> m) {
        if (m.is_zero() || m.degree() < 1)
            throw BadArgument("QuotientContext: modulus must be nonconstant");
        if (m.leading() != m.leading().one())
            throw BadArgument("QuotientContext: modulus must be monic");
        QuotientContext ctx;
        ctx.m_ = std::move(m);
        return ctx;
    }

    bool is_special() const noexcept { return p_ != 0; }
    std::uint32_t special_p() const noexcept { return p_; }
    const K& special_c() const noexcept { return c_; }

    /// Degree bound of reduced representatives.
    std::size_t bound() const { return is_special() ? p_ : static_cast<std::size_t>(m_.degree()); }

    Poly<K> reduce(const Poly<K>& f) const {
        if (!is_special()) return divmod(f, m_).second;
        if (f.degree() < static_cast<int>(p_)) return f;
        const auto& c = f.coeffs();
        std::vector<K> out(p_);
        std::vector<K> cpow;  // c^0, c^1, ... as needed
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            std::size_t q = i / p_, r = i % p_;
            if (q == 0) {
                out[r] = out[r] + c[i];
                continue;
            }
            while (cpow.size() <= q) {
                if (cpow.empty()) {
                    cpow.push_back(c_);  // c^1
                } else {
                    cpow.push_back(cpow.back() * c_);
                }
            }
            out[r] = out[r] + c[i] * cpow[q - 1];
        }
        return Poly<K>(std::move(out));
    }

private:
    QuotientContext() = default;
    std::uint32_t p_ = 0;
    K c_;
    Poly<K> m_;
};

/// outer(inner) by Horner's scheme, reducing by ctx after each step when one
/// is supplied (keeps intermediate degree below 2p for special contexts).
template <class K>
Poly<K> compose(const Poly<K>& outer, const Poly<K>& inner, const QuotientContext<K>* ctx = nullptr) {
    Poly<K> acc;
    const auto& c = outer.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * inner + Poly<K>(c[i]);
        if (ctx) acc = ctx->reduce(acc);
    }
    return acc;
}

/// X^p * f(u/X) for f with zero constant term and deg f <= p-1:
/// sum_k f_k u^k X^{p-k}.
template <class K>
Poly<K> reverse_scale(const Poly<K>& f, const K& u, std::uint32_t p) {
    if (!f.coeff(0).is_zero())
        throw BadArgument("reverse_scale: nonzero constant term");
    if (f.degree() > static_cast<int>(p) - 1)
        throw BadArgument("reverse_scale: degree exceeds p-1");
    std::vector<K> out(p);
    if (f.is_zero()) return Poly<K>();
    K upow = f.leading().one();
    for (std::size_t k = 1; k < f.coeffs().size(); ++k) {
        upow = upow * u;  // u^k
        if (!f.coeffs()[k].is_zero()) out[p - k] = f.coeffs()[k] * upow;
    }
    return Poly<K>(std::move(out));
}

/// base^e reduced by ctx after every multiplication.
template <class K>
Poly<K> pow_mod(const Poly<K>& base, std::uint64_t e, const QuotientContext<K>& ctx) {
    if (e == 0) return base.one();
    Poly<K> b = ctx.reduce(base), acc;
    bool acc_set = false;
    while (e > 0) {
        if (e & 1) {
            acc = acc_set ? ctx.reduce(acc * b) : b;
            acc_set = true;
        }
        e >>= 1;
        if (e) b = ctx.reduce(b * b);
    }
    return acc;
}

/// f(c*X): coefficient of X^k multiplied by c^k.
template <class K>
Poly<K> scale_argument(const Poly<K>& f, const K& c) {
    if (f.is_zero()) return f;
    std::vector<K> out(f.coeffs().size());
    K cpow = f.leading().one();
    out[0] = f.coeffs()[0];
    for (std::size_t k = 1; k < out.size(); ++k) {
        cpow = cpow * c;
        out[k] = f.coeffs()[k] * cpow;
    }
    return Poly<K>(std::move(out));
}

/// f(X^h): exponent map k -> h*k.
template <class K>
Poly<K> substitute_power(const Poly<K>& f, std::uint32_t h) {
    if (h == 0) throw BadArgument("substitute_power: h must be positive");
    if (f.is_zero()) return f;
    std::vector<K> out(static_cast<std::size_t>(f.degree()) * h + 1);
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) out[k * h] = f.coeffs()[k];
    return Poly<K>(std::move(out));
}

}  // namespace polylog
