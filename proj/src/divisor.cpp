#include "hdc/divisor.hpp"

#include "hdc/exprio.hpp"
#include "hdc/extfield.hpp"
#include "hdc/factor.hpp"
#include "hdc/mgcd.hpp"

namespace hdc {

namespace {

constexpr int kMaxMult = 64;

// standard-convention resultant of univariate polynomials (monic m gives the
// plain product of evaluations over the roots)
Rational res_std(const UPoly<Rational>& m, const UPoly<Rational>& g) {
    if (g.is_zero()) return Rational(0);
    if (g.degree() == 0) return rat_pow(g[0], static_cast<unsigned long>(m.degree()));
    return upoly_resultant(m, g);
}

// cross products c_ij(s,u) = pA_i(s) pB_j(u) - pA_j(s) pB_i(u) as bivariate
// polynomials in the scratch variables s = x, u = y
std::vector<MPoly<Rational>> cross_products(const ConjugateFamily& A, const ConjugateFamily& B) {
    auto lift = [](const UPoly<Rational>& p, int var) { return lift_upoly<Rational>(p, var); };
    MPoly<Rational> a1 = lift(A.p1, kVarX), a2 = lift(A.p2, kVarX), a3 = lift(A.p3, kVarX);
    MPoly<Rational> b1 = lift(B.p1, kVarY), b2 = lift(B.p2, kVarY), b3 = lift(B.p3, kVarY);
    return {a1 * b2 - a2 * b1, a1 * b3 - a3 * b1, a2 * b3 - a3 * b2};
}

UPoly<Rational> to_upoly_in(const MPoly<Rational>& p, int var) {
    std::vector<Rational> c(std::max(0, p.degree_in(var)) + 1, Rational(0));
    for (auto& [m, coef] : p.terms()) c[m[var]] = coef;
    return UPoly<Rational>(std::move(c));
}

UPoly<ExtElem> lift_to_ext(const UPoly<Rational>& p, const ExtFieldPtr& F) {
    std::vector<ExtElem> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = ExtElem(p.coeffs()[i]);
    (void)F;
    return UPoly<ExtElem>(std::move(c));
}

// evaluate the bivariate c(s,u) at s = alpha (generator of F), as a
// polynomial in u over F
UPoly<ExtElem> eval_s_at_generator(const MPoly<Rational>& c, const ExtFieldPtr& F) {
    int du = c.degree_in(kVarY);
    std::vector<ExtElem> out(std::max(0, du) + 1, ExtElem(0));
    ExtElem alpha = ExtElem::generator(F);
    for (auto& [m, coef] : c.terms()) {
        ExtElem v = ExtElem(coef);
        for (int i = 0; i < m[kVarX]; ++i) v = v * alpha;
        out[m[kVarY]] = out[m[kVarY]] + v;
    }
    return UPoly<ExtElem>(std::move(out));
}

// Does some root of mA (as s) and some root of mB (as u), with u != s when
// exclude_diagonal, make all cross products vanish?
bool common_point_exists(const ConjugateFamily& A, const ConjugateFamily& B,
                         bool exclude_diagonal) {
    std::vector<MPoly<Rational>> cs = cross_products(A, B);
    if (exclude_diagonal) {
        MPoly<Rational> diag = MPoly<Rational>::variable(kVarY) - MPoly<Rational>::variable(kVarX);
        for (auto& c : cs) {
            if (c.is_zero()) continue;
            auto q = mpoly_divexact(c, diag);
            if (!q) throw std::logic_error("diagonal does not divide its cross product");
            c = std::move(*q);
        }
    }
    // all three identically zero: every pair of roots collides
    bool all_zero = true;
    for (auto& c : cs) all_zero = all_zero && c.is_zero();
    if (all_zero) {
        if (!exclude_diagonal) return true;
        // within one family: collision iff there are at least two roots
        return A.m.degree() >= 2;
    }
    // eliminate u against mB, gcd the results with mA(s)
    MPoly<Rational> mB = lift_upoly<Rational>(B.m, kVarY);
    UPoly<Rational> g = A.m;
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        MPoly<Rational> R = resultant(mB, c, kVarY);
        g = upoly_gcd(g, to_upoly_in(R, kVarX));
        if (g.degree() == 0) return false;  // no candidate s at all
    }
    // refine each irreducible factor of g over its extension field
    for (auto& [phi, mult] : factor_over_Q(g)) {
        (void)mult;
        ExtFieldPtr F = ExtField::make(phi);
        UPoly<ExtElem> h = lift_to_ext(B.m, F);
        for (auto& c : cs) {
            if (c.is_zero()) continue;
            h = upoly_gcd(h, eval_s_at_generator(c, F));
            if (h.degree() <= 0) break;
        }
        if (h.degree() <= 0) continue;
        if (exclude_diagonal && A.m == B.m) {
            // discard the root u = alpha itself
            UPoly<ExtElem> lin({-ExtElem::generator(F), ExtElem(1)});
            UPoly<ExtElem> d = upoly_gcd(h, lin);
            if (d.degree() > 0) {
                h = UPoly<ExtElem>::divmod(h, lin).first;
            }
            if (h.degree() <= 0) continue;
        }
        return true;
    }
    return false;
}

[[noreturn]] void invalid(const std::string& what) { fail("InvalidFamily", what); }

} // namespace

ConjugateFamily point_family(const ProjPoint& P, int mult) {
    if (P.x.is_zero() && P.y.is_zero() && P.z.is_zero()) invalid("point has all zero coordinates");
    ConjugateFamily f;
    f.m = UPoly<Rational>::variable();
    f.p1 = UPoly<Rational>::constant(P.x);
    f.p2 = UPoly<Rational>::constant(P.y);
    f.p3 = UPoly<Rational>::constant(P.z);
    f.mult = mult;
    if (mult < 1 || mult > kMaxMult) invalid("multiplicity out of range");
    return f;
}

ConjugateFamily affine_point_family(const Rational& x, const Rational& y, int mult) {
    return point_family({x, y, Rational(1)}, mult);
}

ConjugateFamily make_family(UPoly<Rational> m, UPoly<Rational> p1, UPoly<Rational> p2,
                            UPoly<Rational> p3, int mult) {
    if (m.degree() < 1) invalid("m must have positive degree");
    if (mult < 1 || mult > kMaxMult) invalid("multiplicity out of range");
    m = m.monic();
    if (upoly_gcd(m, m.derivative()).degree() != 0) invalid("m is not squarefree");
    p1 = p1.mod(m);
    p2 = p2.mod(m);
    p3 = p3.mod(m);
    UPoly<Rational> g = upoly_gcd3(p1, p2, p3);
    if (g.is_zero()) invalid("all coordinate polynomials vanish");
    if (g.degree() > 0) {
        if (upoly_gcd(g, m).degree() > 0)
            invalid("coordinates vanish simultaneously at a root of m");
        p1 = UPoly<Rational>::divmod(p1, g).first;
        p2 = UPoly<Rational>::divmod(p2, g).first;
        p3 = UPoly<Rational>::divmod(p3, g).first;
    }
    ConjugateFamily f{std::move(m), std::move(p1), std::move(p2), std::move(p3), mult};
    if (f.m.degree() >= 2 && common_point_exists(f, f, /*exclude_diagonal=*/true))
        invalid("distinct roots of m give equal points");
    return f;
}

bool families_share_point(const ConjugateFamily& A, const ConjugateFamily& B) {
    return common_point_exists(A, B, /*exclude_diagonal=*/false);
}

EffectiveDivisor make_divisor(std::vector<ConjugateFamily> families) {
    for (auto& f : families)
        f = make_family(f.m, f.p1, f.p2, f.p3, f.mult);
    for (size_t i = 0; i < families.size(); ++i)
        for (size_t j = i + 1; j < families.size(); ++j)
            if (families_share_point(families[i], families[j]))
                invalid("families are not pairwise disjoint");
    return EffectiveDivisor{std::move(families)};
}

EffectiveDivisor merge_divisors(const EffectiveDivisor& a, const EffectiveDivisor& b) {
    std::vector<ConjugateFamily> fams = a.families;
    fams.insert(fams.end(), b.families.begin(), b.families.end());
    return make_divisor(std::move(fams));
}

int divisor_degree(const EffectiveDivisor& D) {
    int d = 0;
    for (auto& f : D.families) d += f.mult * f.point_count();
    return d;
}

bool is_hausdorff(const EffectiveDivisor& D) {
    for (auto& f : D.families)
        if (f.mult != 1 || !f.at_infinity()) return false;
    return true;
}

bool is_n_rational(const EffectiveDivisor& D, int n) {
    if (n < 1) return false;
    if (n <= 2) return divisor_degree(D) == 1;
    long budget = 0;
    for (auto& f : D.families) {
        if (f.mult <= 1) return false;
        budget += static_cast<long>(f.point_count()) * f.mult * (f.mult - 1);
    }
    return budget == static_cast<long>(n - 1) * (n - 2);
}

DivisorClassification decompose_rational_hausdorff(const EffectiveDivisor& D, int n) {
    EffectiveDivisor H, S;
    for (auto& f : D.families) {
        if (f.at_infinity()) {
            H.families.push_back(f);
        } else if (upoly_gcd(f.p3, f.m).degree() == 0) {
            S.families.push_back(f);
        } else {
            fail("NotRationalHausdorff",
                 "a family meets the line z=0 at some but not all of its points");
        }
    }
    for (auto& f : H.families)
        if (f.mult != 1)
            fail("NotRationalHausdorff", "infinity point with multiplicity > 1");
    if (divisor_degree(H) != n)
        fail("NotRationalHausdorff", "Hausdorff part has degree " +
                                         std::to_string(divisor_degree(H)) + ", expected " +
                                         std::to_string(n));
    if (!is_n_rational(S, n))
        fail("NotRationalHausdorff", "affine part is not n-rational for n = " + std::to_string(n));
    DivisorClassification c;
    c.is_hausdorff = S.families.empty();
    c.n_rational_for = n;
    c.is_monomial = S.families.size() == 1 && S.families[0].point_count() == 1 &&
                    ((n <= 2 && S.families[0].mult == 1) || S.families[0].mult == n - 1);
    c.hausdorff_part = std::move(H);
    c.singular_part = std::move(S);
    return c;
}

EffectiveDivisor divisor_from_curve(const MPoly<Rational>& f) {
    if (f.is_zero()) fail("ZeroPolynomial", "divisor of the zero curve");
    int n = f.total_degree();
    if (n < 1) fail("NotHausdorffCurve", "constant polynomial defines no curve");
    for (int v = kVarZ; v < kNumVars; ++v)
        if (f.degree_in(v) > 0)
            fail("NotHausdorffCurve", "expected an affine curve in x and y");
    // leading form
    MPoly<Rational> lf;
    for (auto& [m, c] : f.terms())
        if (mono_degree(m) == n) lf.add_term(m, c);
    // slope polynomial q(t) = lf(1, t)
    UPoly<Rational> q;
    {
        std::vector<Rational> cq(n + 1, Rational(0));
        for (auto& [m, c] : lf.terms()) cq[m[kVarY]] = c;
        q = UPoly<Rational>(std::move(cq));
    }
    if (q.is_zero()) fail("NotHausdorffCurve", "leading form is a power of x");
    int x_mult = n - q.degree();
    if (x_mult > 1)
        fail("NotHausdorffCurve", "leading form divisible by x^2 (repeated infinity point)");
    if (upoly_gcd(q, q.derivative()).degree() != 0)
        fail("NotHausdorffCurve", "leading form is not squarefree");
    std::vector<ConjugateFamily> fams;
    for (auto& [phi, mult] : factor_over_Q(q)) {
        if (mult != 1) fail("NotHausdorffCurve", "leading form is not squarefree");
        fams.push_back(make_family(phi, UPoly<Rational>::constant(Rational(1)),
                                   UPoly<Rational>::variable(), UPoly<Rational>(), 1));
    }
    if (x_mult == 1) fams.push_back(point_family({Rational(0), Rational(1), Rational(0)}, 1));
    return make_divisor(std::move(fams));
}

bool check_hausdorff_curve(const MPoly<Rational>& f) {
    try {
        divisor_from_curve(f);
        return true;
    } catch (const DomainError& e) {
        if (e.code() == "NotHausdorffCurve") return false;
        throw;
    }
}

bool validate_singular_point(const Rational& a, const Rational& b, const EffectiveDivisor& D) {
    for (auto& f : D.families) {
        UPoly<Rational> c = f.p2 * a - f.p1 * b;
        if (res_std(f.m, c).is_zero()) return false;
    }
    return true;
}

EffectiveDivisor build_monomial_divisor(const EffectiveDivisor& D, const Rational& a,
                                        const Rational& b, int n) {
    if (!is_hausdorff(D) || divisor_degree(D) != n)
        fail("InvalidSingularPoint", "base divisor is not an n-degree Hausdorff divisor");
    if (n < 2) fail("InvalidSingularPoint", "monomial construction needs n >= 2");
    if (!validate_singular_point(a, b, D))
        fail("InvalidSingularPoint",
             "point (" + a.str() + ":" + b.str() + ":1) collides with an infinity direction");
    EffectiveDivisor out = D;
    out.families.push_back(affine_point_family(a, b, n - 1));
    return make_divisor(out.families);
}

} // namespace hdc
