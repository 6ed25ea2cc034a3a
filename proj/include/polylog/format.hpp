#pragma once

#include <string>
#include <string_view>

#include "polylog/bifrac.hpp"
#include "polylog/fp.hpp"
#include "polylog/poly.hpp"
#include "polylog/ratfunc.hpp"

namespace polylog {

/// Spaced main-variable form: "1 + 2*X + X^3". Zero prints as "0".
std::string poly_text(const Poly<Fp>& f, std::string_view var = "X");

/// Compact parameter-variable form: "1+2a+a^2". Zero prints as "0".
std::string poly_compact(const Poly<Fp>& f, std::string_view var = "a");

/// Exact rational string "num/den" with the canonical monic denominator,
/// e.g. "2/(2+a)"; polynomial values print without the "/".
std::string ratfunc_string(const RatFunc& f, std::string_view var = "a");

/// Compact bivariate form over variables "a" and "b".
std::string bipoly_string(const BiPoly& f);

std::string bifrac_string(const BiFrac& f);

/// Spaced main-variable form with rational coefficients:
/// "X + (2/(2+a))*X^2".
std::string poly_rf_text(const Poly<RatFunc>& f, std::string_view var = "X");

/// Uniform coefficient printing for witness reports.
std::string coeff_string(const Fp& c);
std::string coeff_string(const RatFunc& c);
std::string coeff_string(const BiFrac& c);

/// LaTeX forms using \alpha / \beta and \frac.
std::string poly_latex(const Poly<Fp>& f, std::string_view var = "X");
std::string poly_compact_latex(const Poly<Fp>& f, std::string_view var = "\\alpha");
std::string ratfunc_latex(const RatFunc& f);
std::string poly_rf_latex(const Poly<RatFunc>& f, std::string_view var = "X");

/// RFC-4180-style CSV field quoting.
std::string csv_quote(std::string_view field);

}  // namespace polylog
