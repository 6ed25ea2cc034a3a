#include "polylog/format.hpp"

namespace polylog {

namespace {

std::string term(std::uint32_t c, std::string_view var, std::size_t e, bool compact) {
    std::string out;
    if (e == 0) return std::to_string(c);
    if (c != 1) {
        out += std::to_string(c);
        if (!compact) out += "*";
    }
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
    return out;
}

std::string poly_string(const Poly<Fp>& f, std::string_view var, bool compact) {
    if (f.is_zero()) return "0";
    std::string out;
    const char* sep = compact ? "+" : " + ";
    for (std::size_t e = 0; e < f.coeffs().size(); ++e) {
        const Fp& c = f.coeffs()[e];
        if (c.is_zero()) continue;
        if (!out.empty()) out += sep;
        out += term(c.value(), var, e, compact);
    }
    return out;
}

std::string latex_term(std::uint32_t c, std::string_view var, std::size_t e) {
    std::string out;
    if (e == 0) return std::to_string(c);
    if (c != 1) out += std::to_string(c);
    out += var;
    if (e > 1) out += "^{" + std::to_string(e) + "}";
    return out;
}

std::string poly_latex_impl(const Poly<Fp>& f, std::string_view var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t e = 0; e < f.coeffs().size(); ++e) {
        const Fp& c = f.coeffs()[e];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += latex_term(c.value(), var, e);
    }
    return out;
}

bool multi_term(const Poly<Fp>& f) {
    std::size_t n = 0;
    for (const Fp& c : f.coeffs())
        if (!c.is_zero()) ++n;
    return n > 1;
}

}  // namespace

std::string poly_text(const Poly<Fp>& f, std::string_view var) { return poly_string(f, var, false); }

std::string poly_compact(const Poly<Fp>& f, std::string_view var) {
    return poly_string(f, var, true);
}

std::string ratfunc_string(const RatFunc& f, std::string_view var) {
    if (f.is_zero()) return "0";
    std::string num = poly_compact(f.num(), var);
    if (f.den().degree() == 0) return num;
    if (multi_term(f.num())) num = "(" + num + ")";
    std::string den = poly_compact(f.den(), var);
    if (multi_term(f.den())) den = "(" + den + ")";
    return num + "/" + den;
}

std::string bipoly_string(const BiPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t b = 0; b < f.coeffs().size(); ++b) {
        const PolyFp& slice = f.coeffs()[b];
        for (std::size_t a = 0; a < slice.coeffs().size(); ++a) {
            const Fp& c = slice.coeffs()[a];
            if (c.is_zero()) continue;
            if (!out.empty()) out += "+";
            std::string t;
            if (c.value() != 1 || (a == 0 && b == 0)) t += std::to_string(c.value());
            if (a > 0) {
                t += "a";
                if (a > 1) t += "^" + std::to_string(a);
            }
            if (b > 0) {
                t += "b";
                if (b > 1) t += "^" + std::to_string(b);
            }
            out += t;
        }
    }
    return out;
}

std::string bifrac_string(const BiFrac& f) {
    if (f.is_zero()) return "0";
    std::string num = bipoly_string(f.num());
    if (f.den().degree() == 0 && f.den().leading().degree() == 0 &&
        f.den().leading().leading().value() == 1)
        return num;
    if (num.find('+') != std::string::npos) num = "(" + num + ")";
    std::string den = bipoly_string(f.den());
    if (den.find('+') != std::string::npos) den = "(" + den + ")";
    return num + "/" + den;
}

std::string poly_rf_text(const Poly<RatFunc>& f, std::string_view var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t e = 0; e < f.coeffs().size(); ++e) {
        const RatFunc& c = f.coeffs()[e];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = ratfunc_string(c);
        bool plain_int = cs.find_first_not_of("0123456789") == std::string::npos;
        if (e == 0) {
            out += plain_int ? cs : "(" + cs + ")";
            continue;
        }
        std::string t;
        if (cs != "1") t = (plain_int ? cs : "(" + cs + ")") + "*";
        t += var;
        if (e > 1) t += "^" + std::to_string(e);
        out += t;
    }
    return out;
}

std::string coeff_string(const Fp& c) { return std::to_string(c.value()); }

std::string coeff_string(const RatFunc& c) { return ratfunc_string(c); }

std::string coeff_string(const BiFrac& c) { return bifrac_string(c); }

std::string poly_latex(const Poly<Fp>& f, std::string_view var) { return poly_latex_impl(f, var); }

std::string poly_compact_latex(const Poly<Fp>& f, std::string_view var) {
    return poly_latex_impl(f, var);
}

std::string ratfunc_latex(const RatFunc& f) {
    if (f.is_zero()) return "0";
    if (f.den().degree() == 0) return poly_compact_latex(f.num());
    return "\\frac{" + poly_compact_latex(f.num()) + "}{" + poly_compact_latex(f.den()) + "}";
}

std::string poly_rf_latex(const Poly<RatFunc>& f, std::string_view var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t e = 0; e < f.coeffs().size(); ++e) {
        const RatFunc& c = f.coeffs()[e];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = ratfunc_latex(c);
        if (e == 0) {
            out += cs;
            continue;
        }
        std::string t;
        if (cs != "1") t = cs + "\\,";
        t += var;
        if (e > 1) t += "^{" + std::to_string(e) + "}";
        out += t;
    }
    return out;
}

std::string csv_quote(std::string_view field) {
    bool needs = field.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace polylog
