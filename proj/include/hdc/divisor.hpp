#ifndef HDC_DIVISOR_HPP
#define HDC_DIVISOR_HPP

#include <optional>
#include <vector>

#include "hdc/mpoly.hpp"
#include "hdc/upoly.hpp"

namespace hdc {

struct ProjPoint {
    Rational x, y, z;
};

// Family of conjugate points {(p1(t):p2(t):p3(t)) | m(t)=0} with a common
// multiplicity. m is squarefree monic; the p_i are reduced mod m with
// gcd(p1,p2,p3) = 1, so the point is well defined at every root.
struct ConjugateFamily {
    UPoly<Rational> m;
    UPoly<Rational> p1, p2, p3;
    int mult = 1;

    int point_count() const { return m.degree(); }
    bool at_infinity() const { return p3.is_zero(); }
};

struct EffectiveDivisor {
    std::vector<ConjugateFamily> families;
};

// Canonical encoding of a plain point: m = t, constant coordinates.
ConjugateFamily point_family(const ProjPoint& P, int mult = 1);
ConjugateFamily affine_point_family(const Rational& x, const Rational& y, int mult = 1);

// Normalizes (monic m, reduced p_i, cleared common factor) and checks the
// family invariants; throws DomainError("InvalidFamily", ...) on violation.
ConjugateFamily make_family(UPoly<Rational> m, UPoly<Rational> p1, UPoly<Rational> p2,
                            UPoly<Rational> p3, int mult);

// Exact test: do two families contain a common projective point?
// (cross-product resultants, refined over extension fields when needed)
bool families_share_point(const ConjugateFamily& A, const ConjugateFamily& B);

EffectiveDivisor make_divisor(std::vector<ConjugateFamily> families);

EffectiveDivisor merge_divisors(const EffectiveDivisor& a, const EffectiveDivisor& b);

int divisor_degree(const EffectiveDivisor& D);

// true iff every family has multiplicity 1 and lies on z = 0
bool is_hausdorff(const EffectiveDivisor& D);

// n in {1,2}: deg(D) = 1; n > 2: all multiplicities > 1 and
// (n-1)(n-2) = sum s_i(s_i - 1)
bool is_n_rational(const EffectiveDivisor& D, int n);

struct DivisorClassification {
    bool is_hausdorff = false;
    std::optional<int> n_rational_for;
    bool is_monomial = false;
    std::optional<EffectiveDivisor> hausdorff_part;
    std::optional<EffectiveDivisor> singular_part;
};

// Split D = D_H + D_S (infinity / affine) and validate that D_H is an
// n-degree Hausdorff divisor and D_S is n-rational.
// DomainError("NotRationalHausdorff", <failed condition>) otherwise.
DivisorClassification decompose_rational_hausdorff(const EffectiveDivisor& D, int n);

// Divisor at infinity of an affine curve f: one multiplicity-1 family per
// irreducible factor of the leading form, points (1:t:0) plus (0:1:0) when
// x divides the leading form once. NotHausdorffCurve when card < deg.
EffectiveDivisor divisor_from_curve(const MPoly<Rational>& f);

bool check_hausdorff_curve(const MPoly<Rational>& f);

// P = (a:b:1): true iff Res_t(m, a*p2 - b*p1) != 0 for every family of the
// Hausdorff divisor D.
bool validate_singular_point(const Rational& a, const Rational& b, const EffectiveDivisor& D);

// D + (n-1)P for an n-degree Hausdorff divisor D and a valid affine P.
EffectiveDivisor build_monomial_divisor(const EffectiveDivisor& D, const Rational& a,
                                        const Rational& b, int n);

} // namespace hdc

#endif
