#include "polylog/ratfunc.hpp"

namespace polylog {

RatFunc::RatFunc(Fp scalar) {
    if (!scalar.attached()) return;  // detached zero stays detached
    num_ = PolyFp(scalar);
    den_ = PolyFp(scalar.one());
}

RatFunc::RatFunc(PolyFp num) : num_(std::move(num)) {
    if (num_.is_zero()) return;
    den_ = PolyFp(num_.leading().one());
}

RatFunc::RatFunc(PolyFp num, PolyFp den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

RatFunc RatFunc::unchecked(PolyFp num, PolyFp den) {
    RatFunc f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    return f;
}

std::uint32_t RatFunc::prime() const {
    if (!attached()) throw BadArgument("RatFunc: detached element has no modulus");
    return den_.leading().prime();
}

RatFunc RatFunc::one() const { return RatFunc(Fp(1, prime())); }

RatFunc RatFunc::from_int(std::int64_t n) const { return RatFunc(Fp::from_signed(n, prime())); }

RatFunc RatFunc::inv() const {
    if (is_zero()) throw DivisionByZero("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    if (e == 0) return one();
    // num and den are already coprime; their powers stay coprime.
    RatFunc out;
    out.num_ = num_.pow(static_cast<std::uint64_t>(e));
    out.den_ = den_.pow(static_cast<std::uint64_t>(e));
    Fp lead_inv = out.den_.leading().inv();
    out.num_ = out.num_.scaled(lead_inv);
    out.den_ = out.den_.scaled(lead_inv);
    return out;
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw DivisionByZero("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = PolyFp(den_.leading().one());
        return;
    }
    PolyFp g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    Fp lead_inv = den_.leading().inv();
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (!a.attached()) return b;
    if (!b.attached()) return a;
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (!a.attached() || !b.attached()) {
        if (a.attached()) return RatFunc(a.prime());
        if (b.attached()) return RatFunc(b.prime());
        return RatFunc();
    }
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

RatFunc RatFunc::substitute(const PolyFp& g) const {
    if (!attached()) return *this;
    PolyFp den2 = compose(den_, g);
    if (den2.is_zero()) throw PoleError("RatFunc: substitution maps the denominator to zero");
    return RatFunc(compose(num_, g), std::move(den2));
}

Fp RatFunc::specialize(Fp c) const {
    if (!attached()) return Fp(0, c.prime());
    Fp d = den_.eval(c);
    if (d.is_zero())
        throw PoleError("RatFunc: pole at alpha = " + std::to_string(c.value()));
    if (num_.is_zero()) return Fp(0, prime());
    return num_.eval(c) * d.inv();
}

}  // namespace polylog
