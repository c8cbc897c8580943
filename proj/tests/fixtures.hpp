#ifndef HDC_TEST_FIXTURES_HPP
#define HDC_TEST_FIXTURES_HPP

// Shared reference fixtures for the quartic examples used across the test
// suites: divisors, printed defining polynomials, and the sample quartic
// curve with its reference outputs.

#include "hdc/divisor.hpp"
#include "hdc/exprio.hpp"

namespace fixtures {

using namespace hdc;

inline ConjugateFamily fam(const std::string& m, const std::string& p1, const std::string& p2,
                           const std::string& p3, int mult) {
    return make_family(parse_upoly_t(m), parse_upoly_t(p1), parse_upoly_t(p2), parse_upoly_t(p3),
                       mult);
}

inline ProjPoint pt(long x, long y, long z) {
    return {Rational(x), Rational(y), Rational(z)};
}

// (1:1:0) + (-1:1:0) + (0:1:0) + (1:0:0)
inline EffectiveDivisor four_point_divisor() {
    return make_divisor({point_family(pt(1, 1, 0)), point_family(pt(-1, 1, 0)),
                         point_family(pt(0, 1, 0)), point_family(pt(1, 0, 0))});
}

// four points at infinity plus 2(3:-2:1) + 2(1:1:1) + 2(2:3:1)
inline EffectiveDivisor quartic_rational_divisor() {
    EffectiveDivisor D = four_point_divisor();
    D.families.push_back(affine_point_family(Rational(3), Rational(-2), 2));
    D.families.push_back(affine_point_family(Rational(1), Rational(1), 2));
    D.families.push_back(affine_point_family(Rational(2), Rational(3), 2));
    return make_divisor(D.families);
}

// the collinear-degenerate variant: D_S = 2(2:2:1) + 2(1:1:1) + 2(2:3:1)
inline EffectiveDivisor quartic_reducible_divisor() {
    EffectiveDivisor D = four_point_divisor();
    D.families.push_back(affine_point_family(Rational(2), Rational(2), 2));
    D.families.push_back(affine_point_family(Rational(1), Rational(1), 2));
    D.families.push_back(affine_point_family(Rational(2), Rational(3), 2));
    return make_divisor(D.families);
}

// sum over t^4+1 of (t:1:0), plus 3(0:0:1)
inline EffectiveDivisor monomial_quartic_divisor() {
    return make_divisor({fam("t^4+1", "t", "1", "0", 1), point_family(pt(0, 0, 1), 3)});
}

// sum over t^4-4 of (1:t:0), plus 2 * sum over t^3+1 of (t:t^2:1)
inline EffectiveDivisor second_quartic_divisor() {
    return make_divisor({fam("t^4-4", "1", "t", "0", 1), fam("t^3+1", "t", "t^2", "1", 2)});
}

// the sample quartic curve (genus 3, Hausdorff)
inline MPoly<Rational> sample_quartic() {
    return parse_poly(
        "4+2*y-5*y^2-9*y^3+6*y^4+x-7*x*y-5*x*y^2-6*x^2+6*x^2*y-3*x^3-6*x^4");
}

// printed 2-parameter defining polynomial of the quartic rational system
inline MPoly<Rational> printed_quartic_H() {
    return parse_poly(
        "(65/2*lambda_2-8175/98*lambda_1)*z^4"
        "+(17*lambda_2-1518/49*lambda_1)*y*z^3"
        "+(-29/2*lambda_2+2787/98*lambda_1)*y^2*z^2"
        "+lambda_2*y^3*z"
        "+(-97*lambda_2+11618/49*lambda_1)*x*z^3"
        "+(11/2*lambda_2-1789/98*lambda_1)*x*y*z^2"
        "+(9/2*lambda_2-121/14*lambda_1)*x*y^2*z"
        "-lambda_1*x*y^3"
        "+(143/2*lambda_2-16873/98*lambda_1)*x^2*z^2"
        "+(-11/2*lambda_2+163/14*lambda_1)*x^2*y*z"
        "+(-15*lambda_2+254/7*lambda_1)*x^3*z"
        "+lambda_1*x^3*y");
}

// printed dim-0 curve through the four interpolation points
inline MPoly<Rational> printed_G() {
    return parse_poly(
        "-11189780504385617373808*y*z^3"
        "-64177446384507906894080*y^2*z^2"
        "+25328929045126690271232*y^3*z"
        "-68315663351181964574720*x^3*z"
        "+69446473202369720695808*x^2*z^2"
        "-30949472647714110913696*x*z^3"
        "-24897211394328530780160*y^4"
        "+24897211394328530780160*x^4"
        "+28677478743593794827264*x*y*z^2"
        "+104113819442735106875392*x*y^2*z"
        "-17303699534378810261504*x^2*y*z"
        "+5094649843686955824985*z^4");
}

inline UPoly<Rational> printed_B() {
    return parse_upoly_t("16777216*t^4+42991616*t^3+41312256*t^2+17643776*t+2825745");
}

} // namespace fixtures

#endif
