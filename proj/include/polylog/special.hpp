#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "polylog/bifrac.hpp"
#include "polylog/bipoly_xy.hpp"
#include "polylog/poly.hpp"
#include "polylog/ratfunc.hpp"

namespace polylog {

/// L_{p-1}^(alpha)(X) = (1 - alpha^{p-1}) sum_k X^k / ((1+alpha)...(k+alpha)).
/// Every coefficient is in fact a polynomial in alpha; the constructor checks
/// each denominator is 1 after normalization.
Poly<RatFunc> build_laguerre(std::uint32_t p);

/// The normalized exponential-like polynomial with constant term 1:
/// L_{p-1}^(alpha)(X) / (1 - alpha^{p-1}).
Poly<RatFunc> build_gexp(std::uint32_t p);

/// The truncated exponential E(X) = sum_{k<p} X^k / k! over F_p.
Poly<Fp> build_trunc_exp(std::uint32_t p);

/// T, built from the product form prod_{i=1..p-1} (1 + X/i)^i; the Laguerre
/// evaluation form is computed independently and the two must agree
/// (InternalInconsistency otherwise).
Poly<Fp> build_T(std::uint32_t p);

/// b_{1,s}(alpha) = sum_{k<p} (-1/s)^k C(alpha-1, p-1-k) C(s*alpha-1, k),
/// expanded symbolically. Requires 0 < s < p-1.
Poly<Fp> build_b1s(std::uint32_t p, std::uint32_t s);

enum class GMethod {
    valuation,  // from the carry-count valuations e(k, a)
    jacobi,     // from the products of b_{1,s}
};

/// Coefficient weights g_k(alpha) for k = 1..p-1 (index k; entry 0 is the
/// constant 1 so the vector can be indexed directly by k).
std::vector<RatFunc> build_g(std::uint32_t p, GMethod method = GMethod::valuation);

/// The plain finite polylogarithm sum_{k=1..p-1} X^k / k^d over F_p. Any
/// integer d is accepted and reduced mod p-1.
Poly<Fp> build_polylog(std::uint32_t p, std::int64_t d);

/// The generalized finite polylogarithm sum_{k=1..p-1} g_k(alpha) X^k / k^d.
/// When param_sub is given, alpha -> param_sub(alpha) is applied to every
/// g_k first (e.g. for parameters h*alpha or r*alpha^p).
Poly<RatFunc> build_gen_polylog(std::uint32_t p, std::int64_t d,
                                const PolyFp* param_sub = nullptr);

/// The two-variable correction factor
/// 1 + sum_{i=1..p-1} X^i Y^{p-i} / ((alpha+i)_i (beta+p-i)_{p-i}).
BiPolyXY<BiFrac> build_thm2_correction(std::uint32_t p);

/// The coefficient family c_0, ..., c_{p-1}:
/// c_0 = -(alpha-1)_{p-1} (beta-1)_{p-1} / (alpha+beta-1)_{p-1} and
/// c_i = -(alpha-1)_{p-1-i} (beta-1)_{i-1} / (alpha+beta-1)_{p-1}.
std::vector<BiFrac> build_thm1_coeffs(std::uint32_t p);

// ---------------------------------------------------------------------------
// Uniform wrapper used by the CLI.

enum class ObjectKind {
    laguerre,
    gexp,
    trunc_exp,
    tpoly,
    b1s,
    g_coeffs,
    polylog,
    gen_polylog,
    thm2_correction,
    thm1_coeffs,
};

struct SpecialParams {
    std::int64_t d = 0;
    std::uint32_t s = 0;
    std::uint32_t h = 0;
};

struct SpecialObject {
    ObjectKind kind;
    std::uint32_t prime;
    SpecialParams params;
    std::variant<Poly<Fp>, Poly<RatFunc>, std::vector<RatFunc>, std::vector<BiFrac>,
                 BiPolyXY<BiFrac>>
        body;
};

SpecialObject build_object(ObjectKind kind, std::uint32_t p, const SpecialParams& params);

// ---------------------------------------------------------------------------
// Shared per-prime tables. Construction is pure and deterministic; the cache
// sits behind a mutex so concurrent checks can share results.

namespace cache {

std::shared_ptr<const Poly<Fp>> tpoly(std::uint32_t p);
std::shared_ptr<const std::vector<Poly<Fp>>> b1s_all(std::uint32_t p);  // index s = 1..p-2
std::shared_ptr<const std::vector<RatFunc>> g_table(std::uint32_t p);   // valuation method
std::shared_ptr<const Poly<RatFunc>> laguerre(std::uint32_t p);

/// Per-k sums S_k = sum_{r=1..p-1} g_k(r alpha^p) T(r alpha)^k used by the
/// Theorem-6 style checks; index k = 1..p-1.
std::shared_ptr<const std::vector<RatFunc>> gp_sums(std::uint32_t p);

/// Drop every cached table (test isolation).
void clear();

}  // namespace cache

namespace detail {

/// Same sums as cache::gp_sums but computed from the given inputs; lets
/// mutation tests feed perturbed tables through the full computation.
std::vector<RatFunc> compute_gp_sums(std::uint32_t p, const std::vector<RatFunc>& g,
                                     const Poly<Fp>& tpoly);

/// Generalized polylog built with the exponent applied literally (no d mod
/// p-1 reduction); the periodicity check compares it to the reduced builder.
Poly<RatFunc> build_gen_polylog_raw(std::uint32_t p, std::uint64_t d_raw,
                                    const std::vector<RatFunc>& g);

}  // namespace detail

}  // namespace polylog
