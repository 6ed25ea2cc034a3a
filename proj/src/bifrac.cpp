#include "polylog/bifrac.hpp"

#include <atomic>
#include <string>

namespace polylog {

namespace {

std::atomic<int> g_guard_factor{4};

// gcd of the alpha-polynomial coefficients (content along beta).
PolyFp beta_content(const BiPoly& f) {
    PolyFp g;
    for (const PolyFp& c : f.coeffs()) {
        g = poly_gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

BiPoly divide_content(const BiPoly& f, const PolyFp& g) {
    std::vector<PolyFp> out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!f.coeffs()[i].is_zero()) out[i] = exact_div(f.coeffs()[i], g);
    }
    return BiPoly(std::move(out));
}

// Swap the roles of alpha and beta (transpose the coefficient matrix).
BiPoly transpose(const BiPoly& f) {
    std::size_t na = 0;
    for (const PolyFp& c : f.coeffs()) na = std::max(na, c.coeffs().size());
    std::vector<std::vector<Fp>> rows(na, std::vector<Fp>(f.coeffs().size()));
    for (std::size_t b = 0; b < f.coeffs().size(); ++b)
        for (std::size_t a = 0; a < f.coeffs()[b].coeffs().size(); ++a)
            rows[a][b] = f.coeffs()[b].coeffs()[a];
    std::vector<PolyFp> out(na);
    for (std::size_t a = 0; a < na; ++a) out[a] = PolyFp(std::move(rows[a]));
    return BiPoly(std::move(out));
}

}  // namespace

int bipoly_total_degree(const BiPoly& f) {
    int best = -1;
    const auto& c = f.coeffs();
    for (std::size_t b = 0; b < c.size(); ++b)
        if (!c[b].is_zero()) best = std::max(best, static_cast<int>(b) + c[b].degree());
    return best;
}

BiPoly lift_alpha(const PolyFp& f) {
    if (f.is_zero()) return BiPoly();
    return BiPoly(f);
}

BiPoly lift_beta(const PolyFp& f) {
    std::vector<PolyFp> out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!f.coeffs()[i].is_zero()) out[i] = PolyFp(f.coeffs()[i]);
    return BiPoly(std::move(out));
}

BiPoly bipoly_substitute(const PolyFp& f, const BiPoly& point, std::uint32_t p) {
    BiPoly acc;
    for (std::size_t i = f.coeffs().size(); i-- > 0;)
        acc = acc * point + lift_alpha(PolyFp(Fp(f.coeffs()[i].value(), p)));
    return acc;
}

BiFrac::BiFrac(std::uint32_t p) : den_(lift_alpha(PolyFp(Fp(1, p)))) {}

BiFrac::BiFrac(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

BiFrac BiFrac::from_alpha(const PolyFp& f, std::uint32_t p) {
    return BiFrac(lift_alpha(f), lift_alpha(PolyFp(Fp(1, p))));
}

BiFrac BiFrac::from_beta(const PolyFp& f, std::uint32_t p) {
    return BiFrac(lift_beta(f), lift_alpha(PolyFp(Fp(1, p))));
}

std::uint32_t BiFrac::prime() const {
    if (!attached()) throw BadArgument("BiFrac: detached element has no modulus");
    return den_.leading().leading().prime();
}

BiFrac BiFrac::one() const { return from_int(1); }

BiFrac BiFrac::from_int(std::int64_t n) const {
    std::uint32_t p = prime();
    return BiFrac(lift_alpha(PolyFp(Fp::from_signed(n, p))), lift_alpha(PolyFp(Fp(1, p))));
}

BiFrac BiFrac::inv() const {
    if (is_zero()) throw DivisionByZero("BiFrac: inverse of zero");
    return BiFrac(den_, num_);
}

void BiFrac::normalize() {
    if (den_.is_zero()) throw DivisionByZero("BiFrac: zero denominator");
    std::uint32_t p = den_.leading().leading().prime();
    if (num_.is_zero()) {
        den_ = lift_alpha(PolyFp(Fp(1, p)));
        return;
    }
    // Content stripping along both orientations caps growth without a full
    // bivariate gcd.
    PolyFp g = poly_gcd(beta_content(num_), beta_content(den_));
    if (g.degree() > 0) {
        num_ = divide_content(num_, g);
        den_ = divide_content(den_, g);
    }
    BiPoly num_t = transpose(num_), den_t = transpose(den_);
    PolyFp h = poly_gcd(beta_content(num_t), beta_content(den_t));
    if (h.degree() > 0) {
        num_ = transpose(divide_content(num_t, h));
        den_ = transpose(divide_content(den_t, h));
    }
    // Deterministic scalar normalization: make the denominator's top
    // coefficient 1.
    Fp lead = den_.leading().leading();
    if (lead.value() != 1) {
        Fp s = lead.inv();
        num_ = num_.scaled(PolyFp(s));
        den_ = den_.scaled(PolyFp(s));
    }
    int limit = degree_limit(p);
    int dn = bipoly_total_degree(num_), dd = bipoly_total_degree(den_);
    if (dn > limit || dd > limit)
        throw DegreeGuardExceeded("BiFrac: total degree " + std::to_string(std::max(dn, dd)) +
                                  " exceeds guard " + std::to_string(limit) + " at p = " +
                                  std::to_string(p));
}

BiFrac operator+(const BiFrac& a, const BiFrac& b) {
    if (!a.attached()) return b;
    if (!b.attached()) return a;
    return BiFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BiFrac operator-(const BiFrac& a, const BiFrac& b) { return a + (-b); }

BiFrac operator*(const BiFrac& a, const BiFrac& b) {
    if (!a.attached() || !b.attached()) {
        if (a.attached()) return BiFrac(a.prime());
        if (b.attached()) return BiFrac(b.prime());
        return BiFrac();
    }
    if (a.is_zero() || b.is_zero()) return BiFrac(a.prime());
    return BiFrac(a.num_ * b.num_, a.den_ * b.den_);
}

BiFrac BiFrac::operator-() const {
    BiFrac out = *this;
    out.num_ = -out.num_;
    return out;
}

bool operator==(const BiFrac& a, const BiFrac& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.num_ * b.den_ == b.num_ * a.den_;
}

Fp BiFrac::specialize(Fp a, Fp b) const {
    if (!attached()) return Fp(0, a.prime());
    auto eval2 = [&](const BiPoly& f) {
        Fp acc(0, a.prime());
        Fp bpow(1, b.prime());
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
            if (i > 0) bpow *= b;
            if (!f.coeffs()[i].is_zero()) acc += f.coeffs()[i].eval(a) * bpow;
        }
        return acc;
    };
    Fp d = eval2(den_);
    if (d.is_zero()) throw PoleError("BiFrac: pole at (alpha, beta) = (" +
                                     std::to_string(a.value()) + ", " + std::to_string(b.value()) +
                                     ")");
    return eval2(num_) * d.inv();
}

int BiFrac::degree_limit(std::uint32_t p) {
    return g_guard_factor.load() * static_cast<int>(p) * static_cast<int>(p);
}

BiFrac::GuardOverride::GuardOverride(int factor) : saved_(g_guard_factor.exchange(factor)) {}

BiFrac::GuardOverride::~GuardOverride() { g_guard_factor.store(saved_); }

}  // namespace polylog
