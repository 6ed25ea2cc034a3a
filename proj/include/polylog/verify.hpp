#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polylog/special.hpp"

namespace polylog {

enum class CheckStatus { pass, fail, error };

/// On failure: the first differing coefficient position (lowest degree,
/// deterministic tie-break) and the two sides' values there.
struct Witness {
    std::string position;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    std::string identity;
    std::uint32_t prime = 0;
    std::vector<std::pair<std::string, std::int64_t>> params;  // fixed per-tag order
    CheckStatus status = CheckStatus::pass;
    std::optional<Witness> witness;  // present exactly when status == fail
    std::string message;             // present when status == error
    std::int64_t elapsed_millis = 0;
};

struct SuiteResult {
    std::vector<CheckReport> runs;  // sorted by (identity, p, params)
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t errors = 0;
};

// One checkable predicate per identity in the catalog; each returns a
// structured report, never a bare boolean.

CheckReport verify_L_diff(std::uint32_t p);
CheckReport verify_thm2(std::uint32_t p);
CheckReport verify_thm1_coeffs(std::uint32_t p);
CheckReport characterization_probe(std::uint32_t p, std::uint32_t c);
CheckReport verify_inverse(std::uint32_t p);
CheckReport verify_periodicity(std::uint32_t p, std::int64_t d);
CheckReport verify_theta_chain(std::uint32_t p, std::int64_t d);

enum class ClassicalEq { eq2, eq3, eq4, eq5, eq6, eq7 };

/// eq2/eq3/eq4 are exact identities in F_p[X] or F_p[X,Y]; eq5 is the exact
/// distribution relation over a primitive h-th root of unity (requires
/// h | p-1); eq6 is mod X^p - 1; eq7 is mod X^p (requires 0 < d < p-1).
CheckReport verify_classical(std::uint32_t p, ClassicalEq which, std::int64_t d = 0,
                             std::uint32_t h = 1);

CheckReport verify_g_symmetry(std::uint32_t p);
CheckReport verify_g_highest(std::uint32_t p);
CheckReport verify_b1s_properties(std::uint32_t p);
CheckReport verify_gen_inversion(std::uint32_t p, std::int64_t d);
CheckReport verify_lemma_G0G1(std::uint32_t p);
CheckReport verify_thm_powers(std::uint32_t p, std::uint32_t d);
CheckReport verify_thm_xh(std::uint32_t p, std::uint32_t d, std::uint32_t h);
CheckReport verify_thm_GP(std::uint32_t p, std::int64_t d);
CheckReport verify_aux_identities(std::uint32_t p, std::uint32_t h);

/// Identity tags accepted by run_suite, ascending.
const std::vector<std::string>& all_identity_tags();

/// Run every selected check over its full parameter grid for each prime.
/// Per-check exceptions become status=error without halting the suite; the
/// report order is (identity, p, params) regardless of scheduling.
SuiteResult run_suite(const std::vector<std::uint32_t>& primes,
                      const std::set<std::string>& selection, unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Check cores with injectable inputs. The public functions above feed them
// the cached canonical objects; mutation tests feed perturbed ones.

namespace detail {

struct Outcome {
    bool ok = true;
    std::optional<Witness> witness;
};

Outcome check_L_diff(std::uint32_t p, const Poly<RatFunc>& laguerre);

/// fx(X) * fy(Y) == fxy(X+Y) * correction  mod  X^p - u, Y^p - v, where the
/// f* vectors list coefficients by exponent. Shared by thm2 / thm1 / the
/// characterization probe.
Outcome check_bivariate_functional(std::uint32_t p, const std::vector<BiFrac>& fx,
                                   const std::vector<BiFrac>& fy, const std::vector<BiFrac>& fxy,
                                   const BiPolyXY<BiFrac>& correction, const BiFrac& u,
                                   const BiFrac& v);

Outcome check_thm2(std::uint32_t p, const BiPolyXY<BiFrac>& correction);
Outcome check_thm1(std::uint32_t p, const Poly<RatFunc>& laguerre,
                   const std::vector<BiFrac>& coeffs);
Outcome check_characterization(std::uint32_t p, std::uint32_t c, bool zero_s1_control = false);

Outcome check_inverse(std::uint32_t p, const Poly<RatFunc>& polylog1,
                      const Poly<RatFunc>& laguerre);

/// The two sides are built from separate g tables (normally the same one) so
/// perturbing a single side is possible in mutation tests.
Outcome check_periodicity(std::uint32_t p, std::int64_t d, const std::vector<RatFunc>& g_lhs,
                          const std::vector<RatFunc>& g_rhs);
Outcome check_theta_chain(std::uint32_t p, std::int64_t d, const std::vector<RatFunc>& g_lhs,
                          const std::vector<RatFunc>& g_rhs);

Outcome check_eq2(std::uint32_t p, const Poly<Fp>& polylog1);
Outcome check_eq3(std::uint32_t p, const Poly<Fp>& polylog1);
Outcome check_eq4(std::uint32_t p, std::int64_t d, const Poly<Fp>& polylog_d);
Outcome check_eq5(std::uint32_t p, std::int64_t d, std::uint32_t h, const Poly<Fp>& polylog_d);
Outcome check_eq6(std::uint32_t p, std::int64_t d, std::uint32_t h, const Poly<Fp>& polylog_d);
Outcome check_eq7(std::uint32_t p, std::int64_t d, const Poly<Fp>& polylog1,
                  const Poly<Fp>& polylog_d);

/// The alpha=0 face of the powers congruence: polylog1^d == (-1)^(d-1) d!
/// polylog_d mod X^p - 1; equivalent to eq7 under X -> 1-X.
Outcome check_powers_alpha_zero(std::uint32_t p, std::int64_t d, const Poly<Fp>& polylog1,
                                const Poly<Fp>& polylog_d);

Outcome check_g_symmetry(std::uint32_t p, const std::vector<RatFunc>& g);
Outcome check_g_highest(std::uint32_t p, const std::vector<RatFunc>& g, const Poly<Fp>& tpoly);
Outcome check_b1s_properties(std::uint32_t p, const std::vector<Poly<Fp>>& b1s);
Outcome check_gen_inversion(std::uint32_t p, std::int64_t d, const std::vector<RatFunc>& g,
                            const Poly<Fp>& tpoly);
Outcome check_lemma_G0G1(std::uint32_t p, const std::vector<RatFunc>& g, const Poly<Fp>& tpoly,
                         bool wrong_modulus_control = false);
Outcome check_thm_powers(std::uint32_t p, std::uint32_t d, const std::vector<RatFunc>& g,
                         const Poly<Fp>& tpoly);
Outcome check_thm_xh(std::uint32_t p, std::uint32_t d, std::uint32_t h,
                     const std::vector<RatFunc>& g, const Poly<Fp>& tpoly);
Outcome check_thm_gp(std::uint32_t p, std::int64_t d, const std::vector<RatFunc>& gp_sums);
Outcome check_aux_identities(std::uint32_t p, std::uint32_t h, const std::vector<RatFunc>& g,
                             const Poly<Fp>& tpoly, const Poly<RatFunc>& laguerre);

}  // namespace detail

}  // namespace polylog
