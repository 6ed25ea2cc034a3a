#include "polylog/special.hpp"

#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <string>

#include "polylog/combinatorics.hpp"

namespace polylog {

namespace {

// 1 - alpha^{p-1} as a polynomial.
PolyFp one_minus_alpha_pow(std::uint32_t p) {
    std::vector<Fp> c(p);
    c[0] = Fp(1, p);
    c[p - 1] = Fp(p - 1, p);
    return PolyFp(std::move(c));
}

// alpha + j.
PolyFp alpha_plus(std::uint32_t j, std::uint32_t p) {
    return PolyFp(std::vector<Fp>{Fp(j, p), Fp(1, p)});
}

}  // namespace

Poly<RatFunc> build_laguerre(std::uint32_t p) {
    require_odd_prime(p);
    RatFunc top(one_minus_alpha_pow(p));
    std::vector<RatFunc> coeffs(p);
    RatFunc denom = top.one();  // (1+alpha)(2+alpha)...(k+alpha), grown per k
    for (std::uint32_t k = 0; k < p; ++k) {
        if (k > 0) denom *= RatFunc(alpha_plus(k, p));
        coeffs[k] = top * denom.inv();
        if (!coeffs[k].is_polynomial())
            throw InternalInconsistency("build_laguerre: coefficient of X^" + std::to_string(k) +
                                        " is not polynomial in alpha");
    }
    Poly<RatFunc> L{std::move(coeffs)};
    if (L.coeff(0) != top)
        throw InternalInconsistency("build_laguerre: constant term is not 1 - alpha^(p-1)");
    return L;
}

Poly<RatFunc> build_gexp(std::uint32_t p) {
    require_odd_prime(p);
    std::vector<RatFunc> coeffs(p);
    RatFunc denom = RatFunc(Fp(1, p));
    for (std::uint32_t k = 0; k < p; ++k) {
        if (k > 0) denom *= RatFunc(alpha_plus(k, p));
        coeffs[k] = denom.inv();
    }
    Poly<RatFunc> E{std::move(coeffs)};
    if (E.coeff(0) != RatFunc(Fp(1, p)))
        throw InternalInconsistency("build_gexp: constant term is not 1");
    return E;
}

Poly<Fp> build_trunc_exp(std::uint32_t p) {
    require_odd_prime(p);
    std::vector<Fp> c(p);
    Fp f(1, p);
    c[0] = f;
    for (std::uint32_t k = 1; k < p; ++k) {
        f *= Fp(k, p);
        c[k] = f.inv();
    }
    return PolyFp(std::move(c));
}

Poly<Fp> build_T(std::uint32_t p) {
    require_odd_prime(p);
    // Product form prod_{i=1..p-1} (1 + X/i)^i.
    PolyFp product(Fp(1, p));
    for (std::uint32_t i = 1; i < p; ++i) {
        PolyFp factor(std::vector<Fp>{Fp(1, p), Fp(i, p).inv()});
        for (std::uint32_t e = 0; e < i; ++e) product *= factor;
    }
    // Independent evaluation form L_{p-1}^(X^p)(X^p - X).
    Poly<RatFunc> L = build_laguerre(p);
    std::vector<Fp> wc(p + 1);
    wc[1] = Fp(p - 1, p);
    wc[p] = Fp(1, p);
    PolyFp w(std::move(wc));  // X^p - X
    PolyFp evaluated;
    PolyFp wpow(Fp(1, p));
    for (std::uint32_t k = 0; k < p; ++k) {
        if (k > 0) wpow *= w;
        PolyFp lk = L.coeff(k).num();  // polynomial in alpha (checked by the builder)
        for (std::size_t j = 0; j < lk.coeffs().size(); ++j)
            PolyFp::add_scaled_shifted(evaluated, wpow, lk.coeffs()[j],
                                       static_cast<std::size_t>(p) * j);
    }
    if (evaluated != product)
        throw InternalInconsistency("build_T: product form and Laguerre evaluation disagree at p=" +
                                    std::to_string(p));
    return product;
}

Poly<Fp> build_b1s(std::uint32_t p, std::uint32_t s) {
    require_odd_prime(p);
    if (s == 0 || s >= p - 1) throw BadArgument("build_b1s: need 0 < s < p-1");
    // Binomials with polynomial upper argument expand as falling factorials
    // over k!.
    PolyFp alpha_minus_1(std::vector<Fp>{Fp(p - 1, p), Fp(1, p)});
    PolyFp s_alpha_minus_1(std::vector<Fp>{Fp(p - 1, p), Fp(s, p)});
    std::vector<PolyFp> ff1(p), ff2(p);  // (alpha-1)_m and (s*alpha-1)_m
    ff1[0] = PolyFp(Fp(1, p));
    ff2[0] = ff1[0];
    for (std::uint32_t m = 1; m < p; ++m) {
        PolyFp shift1 = alpha_minus_1 - PolyFp(Fp(m - 1, p));
        PolyFp shift2 = s_alpha_minus_1 - PolyFp(Fp(m - 1, p));
        ff1[m] = ff1[m - 1] * shift1;
        ff2[m] = ff2[m - 1] * shift2;
    }
    Fp minus_inv_s = -Fp(s, p).inv();
    Fp scale(1, p);
    PolyFp sum;
    for (std::uint32_t k = 0; k < p; ++k) {
        if (k > 0) scale *= minus_inv_s;
        Fp c = scale * fp_factorial(p - 1 - k, p).inv() * fp_factorial(k, p).inv();
        PolyFp::add_scaled_shifted(sum, ff1[p - 1 - k] * ff2[k], c, 0);
    }
    return sum;
}

std::vector<RatFunc> build_g(std::uint32_t p, GMethod method) {
    require_odd_prime(p);
    std::vector<RatFunc> g(p);
    g[0] = RatFunc(Fp(1, p));
    if (method == GMethod::jacobi) {
        PolyFp prod(Fp(1, p));
        for (std::uint32_t k = 1; k < p; ++k) {
            if (k > 1) prod *= build_b1s(p, k - 1);
            g[k] = RatFunc(PolyFp(Fp(1, p)), prod);
        }
        return g;
    }
    // Valuation method: g_k = prod_a a^{e(k,a)} / prod_a (alpha+a)^{e(k,a)},
    // grown incrementally since e(k, a) is nondecreasing in k.
    PolyFp den(Fp(1, p));
    Fp num(1, p);
    std::vector<std::uint32_t> prev(p, 0);
    for (std::uint32_t k = 1; k < p; ++k) {
        for (std::uint32_t a = 1; a < p; ++a) {
            std::uint32_t e = valuation_e(k, a, p);
            for (std::uint32_t t = prev[a]; t < e; ++t) {
                den *= alpha_plus(a, p);
                num *= Fp(a, p);
            }
            prev[a] = e;
        }
        g[k] = RatFunc(PolyFp(num), den);
    }
    return g;
}

Poly<Fp> build_polylog(std::uint32_t p, std::int64_t d) {
    require_odd_prime(p);
    std::int64_t m = p - 1;
    std::int64_t dd = ((d % m) + m) % m;
    std::vector<Fp> c(p);
    for (std::uint32_t k = 1; k < p; ++k) c[k] = Fp(k, p).inv().pow(dd);
    return PolyFp(std::move(c));
}

Poly<RatFunc> build_gen_polylog(std::uint32_t p, std::int64_t d, const PolyFp* param_sub) {
    require_odd_prime(p);
    auto g = cache::g_table(p);
    std::int64_t m = p - 1;
    std::int64_t dd = ((d % m) + m) % m;
    std::vector<RatFunc> c(p);
    for (std::uint32_t k = 1; k < p; ++k) {
        RatFunc gk = param_sub ? (*g)[k].substitute(*param_sub) : (*g)[k];
        c[k] = gk * RatFunc(Fp(k, p).inv().pow(dd));
    }
    return Poly<RatFunc>(std::move(c));
}

BiPolyXY<BiFrac> build_thm2_correction(std::uint32_t p) {
    require_odd_prime(p);
    BiPolyXY<BiFrac> corr(p, p);
    corr.set(0, 0, BiFrac(p).from_int(1));
    for (std::uint32_t i = 1; i < p; ++i) {
        PolyFp da = falling_factorial(alpha_plus(i, p), i);                  // (alpha+i)_i
        PolyFp db = falling_factorial(alpha_plus(p - i, p), p - i);         // (beta+p-i)_{p-i}
        BiFrac s = BiFrac(lift_alpha(PolyFp(Fp(1, p))), lift_alpha(da) * lift_beta(db));
        corr.set(i, p - i, s);
    }
    return corr;
}

std::vector<BiFrac> build_thm1_coeffs(std::uint32_t p) {
    require_odd_prime(p);
    PolyFp alpha_minus_1(std::vector<Fp>{Fp(p - 1, p), Fp(1, p)});
    // (alpha+beta-1)_{p-1} over the bivariate ring.
    BiPoly base(std::vector<PolyFp>{alpha_minus_1, PolyFp(Fp(1, p))});
    BiPoly denom = falling_factorial(base, p - 1);
    std::vector<BiFrac> c(p);
    PolyFp ff_top = falling_factorial(alpha_minus_1, p - 1);  // (x-1)_{p-1}
    c[0] = BiFrac(-(lift_alpha(ff_top) * lift_beta(ff_top)), denom);
    for (std::uint32_t i = 1; i < p; ++i) {
        PolyFp fa = falling_factorial(alpha_minus_1, p - 1 - i);
        PolyFp fb = falling_factorial(alpha_minus_1, i - 1);
        c[i] = BiFrac(-(lift_alpha(fa) * lift_beta(fb)), denom);
    }
    return c;
}

SpecialObject build_object(ObjectKind kind, std::uint32_t p, const SpecialParams& params) {
    SpecialObject obj{kind, p, params, Poly<Fp>()};
    switch (kind) {
        case ObjectKind::laguerre: obj.body = build_laguerre(p); break;
        case ObjectKind::gexp: obj.body = build_gexp(p); break;
        case ObjectKind::trunc_exp: obj.body = build_trunc_exp(p); break;
        case ObjectKind::tpoly: obj.body = build_T(p); break;
        case ObjectKind::b1s: obj.body = build_b1s(p, params.s); break;
        case ObjectKind::g_coeffs: obj.body = build_g(p); break;
        case ObjectKind::polylog: obj.body = build_polylog(p, params.d); break;
        case ObjectKind::gen_polylog: obj.body = build_gen_polylog(p, params.d); break;
        case ObjectKind::thm2_correction: obj.body = build_thm2_correction(p); break;
        case ObjectKind::thm1_coeffs: obj.body = build_thm1_coeffs(p); break;
    }
    return obj;
}

// ---------------------------------------------------------------------------
// Caches.

namespace {

template <class V>
class PerPrimeCache {
public:
    std::shared_ptr<const V> get(std::uint32_t p, const std::function<V()>& build) {
        std::promise<std::shared_ptr<const V>> prom;
        std::shared_future<std::shared_ptr<const V>> fut;
        bool builder = false;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = map_.find(p);
            if (it == map_.end()) {
                fut = prom.get_future().share();
                map_.emplace(p, fut);
                builder = true;
            } else {
                fut = it->second;
            }
        }
        if (builder) {
            try {
                prom.set_value(std::make_shared<const V>(build()));
            } catch (...) {
                prom.set_exception(std::current_exception());
            }
        }
        return fut.get();
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        map_.clear();
    }

private:
    std::mutex mu_;
    std::map<std::uint32_t, std::shared_future<std::shared_ptr<const V>>> map_;
};

PerPrimeCache<Poly<Fp>>& tpoly_cache() {
    static PerPrimeCache<Poly<Fp>> c;
    return c;
}
PerPrimeCache<std::vector<Poly<Fp>>>& b1s_cache() {
    static PerPrimeCache<std::vector<Poly<Fp>>> c;
    return c;
}
PerPrimeCache<std::vector<RatFunc>>& g_cache() {
    static PerPrimeCache<std::vector<RatFunc>> c;
    return c;
}
PerPrimeCache<Poly<RatFunc>>& laguerre_cache() {
    static PerPrimeCache<Poly<RatFunc>> c;
    return c;
}
PerPrimeCache<std::vector<RatFunc>>& gp_sums_cache() {
    static PerPrimeCache<std::vector<RatFunc>> c;
    return c;
}

// Test harness hook: POLYLOG_MUTATION="g:<k>" perturbs g_k in the shared
// table by +1, so a full CLI run exercises the failure path end to end.
void apply_mutation_hook(std::vector<RatFunc>& g) {
    const char* env = std::getenv("POLYLOG_MUTATION");
    if (env == nullptr) return;
    std::string spec(env);
    if (spec.rfind("g:", 0) != 0) return;
    std::size_t k = std::strtoul(spec.c_str() + 2, nullptr, 10);
    if (k < g.size() && !g[k].is_zero()) g[k] += g[k].one();
}

}  // namespace

namespace cache {

std::shared_ptr<const Poly<Fp>> tpoly(std::uint32_t p) {
    return tpoly_cache().get(p, [p] { return build_T(p); });
}

std::shared_ptr<const std::vector<Poly<Fp>>> b1s_all(std::uint32_t p) {
    return b1s_cache().get(p, [p] {
        std::vector<Poly<Fp>> all(p - 1);  // index s = 1..p-2
        for (std::uint32_t s = 1; s + 1 < p; ++s) all[s] = build_b1s(p, s);
        return all;
    });
}

std::shared_ptr<const std::vector<RatFunc>> g_table(std::uint32_t p) {
    return g_cache().get(p, [p] {
        std::vector<RatFunc> g = build_g(p, GMethod::valuation);
        apply_mutation_hook(g);
        return g;
    });
}

std::shared_ptr<const Poly<RatFunc>> laguerre(std::uint32_t p) {
    return laguerre_cache().get(p, [p] { return build_laguerre(p); });
}

std::shared_ptr<const std::vector<RatFunc>> gp_sums(std::uint32_t p) {
    return gp_sums_cache().get(p, [p] {
        auto g = g_table(p);
        auto t = tpoly(p);
        return detail::compute_gp_sums(p, *g, *t);
    });
}

void clear() {
    tpoly_cache().clear();
    b1s_cache().clear();
    g_cache().clear();
    laguerre_cache().clear();
    gp_sums_cache().clear();
}

}  // namespace cache

namespace detail {

std::vector<RatFunc> compute_gp_sums(std::uint32_t p, const std::vector<RatFunc>& g,
                                     const Poly<Fp>& tpoly) {
    std::vector<RatFunc> sums(p, RatFunc(p));
    for (std::uint32_t r = 1; r < p; ++r) {
        PolyFp r_alpha_p = PolyFp::monomial(Fp(r, p), p);      // r*alpha^p
        PolyFp t_r = scale_argument(tpoly, Fp(r, p));          // T(r*alpha)
        PolyFp t_r_pow(Fp(1, p));
        for (std::uint32_t k = 1; k < p; ++k) {
            t_r_pow *= t_r;
            sums[k] += g[k].substitute(r_alpha_p) * RatFunc(t_r_pow);
        }
    }
    return sums;
}

Poly<RatFunc> build_gen_polylog_raw(std::uint32_t p, std::uint64_t d_raw,
                                    const std::vector<RatFunc>& g) {
    // Exponent applied literally: k^{-d} computed by binary exponentiation of
    // the raw integer, with no reduction mod p-1 up front.
    std::vector<RatFunc> c(p);
    for (std::uint32_t k = 1; k < p; ++k)
        c[k] = g[k] * RatFunc(Fp(k, p).inv().pow(static_cast<std::int64_t>(d_raw)));
    return Poly<RatFunc>(std::move(c));
}

}  // namespace detail

}  // namespace polylog
