#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polylog/format.hpp"
#include "polylog/special.hpp"
#include "test_util.hpp"

using namespace polylog;
using testutil::make_poly;

TEST_CASE("main-variable polynomial text") {
    CHECK(poly_text(PolyFp()) == "0");
    CHECK(poly_text(make_poly(3, {1, 2, 2, 1})) == "1 + 2*X + 2*X^2 + X^3");
    CHECK(poly_text(build_polylog(3, 1)) == "X + 2*X^2");
    CHECK(poly_text(make_poly(5, {0, 1})) == "X");
    CHECK(poly_text(make_poly(5, {2}), "a") == "2");
}

TEST_CASE("compact and rational forms") {
    CHECK(poly_compact(make_poly(3, {1, 2})) == "1+2a");
    CHECK(poly_compact(make_poly(5, {0, 0, 3})) == "3a^2");
    CHECK(ratfunc_string(RatFunc(Fp(0, 5))) == "0");
    CHECK(ratfunc_string(RatFunc(make_poly(3, {1, 2}))) == "1+2a");
    // 1/(1+2a) normalizes to the monic-denominator form 2/(2+a).
    CHECK(ratfunc_string(RatFunc(make_poly(3, {1}), make_poly(3, {1, 2}))) == "2/(2+a)");
    CHECK(ratfunc_string(RatFunc(make_poly(3, {0, 1}), make_poly(3, {0, 0, 1}))) == "1/a");
}

TEST_CASE("rational-coefficient polynomial text") {
    CHECK(poly_rf_text(build_gen_polylog(3, 1)) == "X + (1/(2+a))*X^2");
    CHECK(poly_rf_text(Poly<RatFunc>(RatFunc(Fp(2, 5)))) == "2");
    CHECK(poly_rf_text(Poly<RatFunc>()) == "0");
}

TEST_CASE("bivariate strings") {
    BiPoly f(std::vector<PolyFp>{make_poly(3, {1, 2}), make_poly(3, {0, 1})});
    CHECK(bipoly_string(f) == "1+2a+ab");
    CHECK(bifrac_string(BiFrac(3)) == "0");
    CHECK(bifrac_string(BiFrac(3).from_int(2)) == "2");
}

TEST_CASE("latex forms") {
    CHECK(poly_latex(make_poly(3, {1, 0, 2})) == "1 + 2X^{2}");
    CHECK(ratfunc_latex(RatFunc(make_poly(3, {1}), make_poly(3, {1, 2}))) ==
          "\\frac{2}{2 + \\alpha}");
}

TEST_CASE("csv quoting is RFC-4180 style") {
    CHECK(csv_quote("plain") == "plain");
    CHECK(csv_quote("1/(1+2a)") == "1/(1+2a)");
    CHECK(csv_quote("a,b") == "\"a,b\"");
    CHECK(csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_quote("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("coefficient strings for witnesses") {
    CHECK(coeff_string(Fp(4, 5)) == "4");
    CHECK(coeff_string(RatFunc(make_poly(3, {1}), make_poly(3, {1, 2}))) == "2/(2+a)");
    CHECK(coeff_string(BiFrac(5).from_int(3)) == "3");
}
