#include "hdc/param.hpp"

#include <algorithm>

namespace hdc {

namespace {

template <class K>
int degree_in_xyz(const MPoly<K>& H) {
    int d = -1;
    for (auto& [m, c] : H.terms()) d = std::max(d, m[kVarX] + m[kVarY] + m[kVarZ]);
    return d;
}

} // namespace

template <class K>
ProjParam<K> normalize_param(ProjParam<K> P) {
    MPoly<K> g = mpoly_gcd3(P.p1, P.p2, P.p3);
    if (g.is_zero()) fail("ZeroPolynomial", "zero parametrization");
    P.p1 = *mpoly_divexact(P.p1, g);
    P.p2 = *mpoly_divexact(P.p2, g);
    P.p3 = *mpoly_divexact(P.p3, g);
    const MPoly<K>* lead = !P.p3.is_zero() ? &P.p3 : (!P.p1.is_zero() ? &P.p1 : &P.p2);
    if constexpr (std::is_same_v<K, Rational>) {
        Integer num_gcd = 0, den_lcm = 1;
        for (const MPoly<K>* c : {&P.p1, &P.p2, &P.p3})
            for (auto& [m, coef] : c->terms()) {
                num_gcd = int_gcd(num_gcd, coef.num());
                den_lcm = int_lcm(den_lcm, coef.den());
            }
        Rational s(den_lcm, num_gcd);
        if ((lead->leading().second * s).sign() < 0) s = -s;
        P.p1 = P.p1 * s;
        P.p2 = P.p2 * s;
        P.p3 = P.p3 * s;
    } else {
        K inv = lead->leading().second.inverse();
        P.p1 = P.p1 * inv;
        P.p2 = P.p2 * inv;
        P.p3 = P.p3 * inv;
    }
    return P;
}

template ProjParam<Rational> normalize_param<Rational>(ProjParam<Rational>);
template ProjParam<ExtElem> normalize_param<ExtElem>(ProjParam<ExtElem>);

// ---- parametrization by lines ----

ProjParam<Rational> parametrize_by_lines(const MPoly<Rational>& H, int n, const ProjPoint& P) {
    using MP = MPoly<Rational>;
    if (H.is_zero()) fail("ZeroPolynomial", "empty system");
    if (degree_in_xyz(H) != n) throw std::logic_error("by-lines: degree mismatch");
    if (P.x.is_zero() && P.y.is_zero() && P.z.is_zero())
        throw std::logic_error("by-lines: invalid point");

    // multiplicity at P must be exactly n-1, identically in the lambdas
    auto eval_at_P = [&](const MP& F) {
        return F.substitute(kVarX, P.x).substitute(kVarY, P.y).substitute(kVarZ, P.z);
    };
    for (int order = 0; order <= n - 2; ++order)
        for (int i = 0; i <= order; ++i)
            for (int j = 0; j <= order - i; ++j) {
                MP d = H.derivative(kVarX, i).derivative(kVarY, j).derivative(kVarZ, order - i - j);
                if (!eval_at_P(d).is_zero())
                    fail("SystemNotMonomial",
                         "point is not an (n-1)-fold point of the system (order " +
                             std::to_string(order) + " derivative does not vanish)");
            }

    // moving point M(t) on the first coordinate line avoiding P
    MP t = MP::variable(kVarT);
    MP one = MP::constant(Rational(1));
    MP M1, M2, M3;
    if (!P.y.is_zero()) {
        M1 = -t; M3 = one;            // reference line y = 0, M = (-t : 0 : 1)
    } else if (!P.x.is_zero()) {
        M2 = -t; M3 = one;            // reference line x = 0, M = (0 : -t : 1)
    } else {
        M1 = -t; M2 = one;            // reference line z = 0, M = (-t : 1 : 0)
    }

    MP u = MP::variable(kVarU), v = MP::variable(kVarV);
    MP S = substitute_parametrization(H, MP::constant(P.x) * u + M1 * v,
                                      MP::constant(P.y) * u + M2 * v,
                                      MP::constant(P.z) * u + M3 * v);
    MP A, B;
    for (auto& [m, c] : S.terms()) {
        Mono rest = m;
        int ue = m[kVarU], ve = m[kVarV];
        rest[kVarU] = rest[kVarV] = 0;
        if (ue == 1 && ve == n - 1) A.add_term(rest, c);
        else if (ue == 0 && ve == n) B.add_term(rest, c);
        else if (ue >= 2)
            fail("SystemNotMonomial", "restriction to the pencil has a u^2 term");
    }
    if (A.is_zero())
        fail("SystemNotMonomial", "every pencil line meets the system n-fold at the point");

    ProjParam<Rational> R;
    R.p1 = B * P.x - A * M1;
    R.p2 = B * P.y - A * M2;
    R.p3 = B * P.z - A * M3;
    R = normalize_param(std::move(R));
    if (!verify_parametrization(H, R))
        fail("VerificationFailed", "by-lines residual point does not lie on the system");
    return R;
}

ProjParam<Rational> parametrize_by_lines(const LinearSystem& L, const ProjPoint& P) {
    const MPoly<Rational>& H = L.basis.size() > 1 ? L.defining : L.basis[0];
    return parametrize_by_lines(H, L.degree, P);
}

// ---- adjoint-pencil parametrization ----

namespace {

template <class K>
MPoly<K> family_coordinate_poly(const ConjugateFamily& f, bool x_coord) {
    // monic polynomial in x (resp. y) whose roots are the x- (resp. y-)
    // coordinates of the family points, with multiplicity
    int var = x_coord ? kVarX : kVarY;
    MPoly<K> m = lift_upoly<K>(f.m, kVarT);
    MPoly<K> num = MPoly<K>::variable(var) * lift_upoly<K>(f.p3, kVarT) -
                   lift_upoly<K>(x_coord ? f.p1 : f.p2, kVarT);
    MPoly<K> res = detail::subres_resultant_std(m, num, kVarT);
    // monic in var
    std::vector<MPoly<K>> cs = res.coeffs_in(var);
    if (static_cast<int>(cs.size()) - 1 != f.m.degree() || !cs.back().is_constant())
        throw std::logic_error("family coordinate polynomial has unexpected degree");
    return res * cs.back().leading().second.inverse();
}

template <class K>
MPoly<K> eval_infinity(const MPoly<K>& C, const MPoly<K>& tpoly) {
    // C(1, t, 0)
    return C.substitute(kVarX, K(1)).substitute(kVarZ, K(0)).substitute(kVarY, tpoly);
}

// coordinate function of the residual point: eliminate `other`, divide the
// base-point factors, require a linear remainder in `var`
template <class K>
std::pair<MPoly<K>, MPoly<K>> residual_coordinate(
    const MPoly<K>& Haff, const MPoly<K>& HstarAff, int var, int other,
    const std::vector<std::pair<ConjugateFamily, int>>& known) {
    MPoly<K> S = resultant(Haff, HstarAff, other);
    if (S.is_zero()) fail("ResidualNotLinear", "resultant vanished identically");
    for (auto& [fam, power] : known) {
        MPoly<K> q = family_coordinate_poly<K>(fam, var == kVarX);
        for (int e = 0; e < power; ++e) {
            auto d = mpoly_divexact(S, q);
            if (!d) fail("ResidualNotLinear", "base-point factor does not divide the resultant");
            S = std::move(*d);
        }
    }
    // drop the content in var
    std::vector<MPoly<K>> cs = S.coeffs_in(var);
    MPoly<K> cont;
    for (auto& c : cs) cont = mpoly_gcd(cont, c);
    S = *mpoly_divexact(S, cont);
    if (S.degree_in(var) != 1)
        fail("ResidualNotLinear", "residual factor has degree " +
                                      std::to_string(S.degree_in(var)) + " in " + var_name(var));
    cs = S.coeffs_in(var);
    // var = -cs[0] / cs[1], reduced
    MPoly<K> num = -cs[0], den = cs[1];
    MPoly<K> g = mpoly_gcd(num, den);
    if (!g.is_zero() && !g.is_constant()) {
        num = *mpoly_divexact(num, g);
        den = *mpoly_divexact(den, g);
    }
    return {num, den};
}

template <class K>
ProjParam<K> adjoint_engine(const MPoly<K>& H, const MPoly<K>& C1, const MPoly<K>& C2,
                            const std::vector<std::pair<ConjugateFamily, int>>& known) {
    using MP = MPoly<K>;
    MP t = MP::variable(kVarT);
    // pencil member through (1:t:0) when that collapses to a linear pencil
    MP c1 = eval_infinity(C1, t), c2 = eval_infinity(C2, t);
    MP Hstar;
    if (!c1.is_zero() || !c2.is_zero()) {
        MP g = mpoly_gcd(c1, c2);
        MP c1p = c1.is_zero() ? c1 : *mpoly_divexact(c1, g);
        MP c2p = c2.is_zero() ? c2 : *mpoly_divexact(c2, g);
        MP cand = C1 * c2p - C2 * c1p;
        if (!cand.is_zero() && cand.degree_in(kVarT) == 1) Hstar = cand;
    }
    if (Hstar.is_zero()) Hstar = C1 + C2 * t;

    MP Haff = H.substitute(kVarZ, K(1));
    MP HstarAff = Hstar.substitute(kVarZ, K(1));

    auto [xn, xd] = residual_coordinate(Haff, HstarAff, kVarX, kVarY, known);
    auto [yn, yd] = residual_coordinate(Haff, HstarAff, kVarY, kVarX, known);

    MP g = mpoly_gcd(xd, yd);
    MP xd_red = *mpoly_divexact(xd, g);
    MP yd_red = *mpoly_divexact(yd, g);
    ProjParam<K> R;
    R.p1 = xn * yd_red;
    R.p2 = yn * xd_red;
    R.p3 = xd_red * g * yd_red;  // = lcm(xd, yd)
    R = normalize_param(std::move(R));
    if (!verify_parametrization(H, R))
        fail("VerificationFailed", "adjoint residual point does not lie on the curve");
    return R;
}

struct ShearedProblem {
    LinearSystem L;
    EffectiveDivisor D;
    std::vector<ConjugateFamily> extra;
};

ConjugateFamily shear_family(const ConjugateFamily& f, long a, long b) {
    // coordinates transform by (x, y, z) -> (x + a y, y + b x, z)
    return make_family(f.m, f.p1 + f.p2 * Rational(a), f.p2 + f.p1 * Rational(b), f.p3, f.mult);
}

MPoly<Rational> shear_form(const MPoly<Rational>& H, long a, long b) {
    // inverse substitution up to the (constant) determinant factor
    MPoly<Rational> x = MPoly<Rational>::variable(kVarX);
    MPoly<Rational> y = MPoly<Rational>::variable(kVarY);
    MPoly<Rational> nx = x - y * Rational(a);
    MPoly<Rational> ny = y - x * Rational(b);
    return H.substitute(kVarX, nx).substitute(kVarY, ny);
}

} // namespace

AdjointResult parametrize_by_adjoints(const LinearSystem& L, const EffectiveDivisor& D,
                                      const AdjointOptions& opts) {
    const int n = L.degree;
    DivisorClassification cls = decompose_rational_hausdorff(D, n);
    const EffectiveDivisor& DS0 = *cls.singular_part;
    const EffectiveDivisor& DH0 = *cls.hausdorff_part;

    // Bezout bookkeeping: residual intersection count must be exactly 1
    long residual = static_cast<long>(n) * opts.adjoint_degree;
    for (auto& f : DS0.families) residual -= static_cast<long>(f.point_count()) * f.mult * (f.mult - 1);
    for (auto& f : opts.extra_simple_points) {
        if (f.mult != 1) fail("BezoutMismatch", "extra simple points must have multiplicity 1");
        if (upoly_gcd(f.p3, f.m).degree() != 0)
            fail("BezoutMismatch",
                 "extra simple points must be affine (use infinity_family_index instead)");
        residual -= f.point_count();
    }
    if (opts.infinity_family_index) residual -= 1;
    if (residual != 1)
        fail("BezoutMismatch", "adjoint bookkeeping leaves " + std::to_string(residual) +
                                   " residual intersections, expected 1");
    if (opts.infinity_family_index &&
        (*opts.infinity_family_index < 0 ||
         *opts.infinity_family_index >= static_cast<int>(DH0.families.size())))
        fail("BezoutMismatch", "infinity family index out of range");

    static const std::pair<long, long> shears[] = {{0, 0}, {1, -1}, {2, 1}, {-1, 2}};
    std::string last_error;
    for (auto [sa, sb] : shears) {
        try {
            // sheared problem (identity on the first attempt)
            std::vector<ConjugateFamily> dfams, extra;
            for (auto& f : D.families)
                dfams.push_back(sa == 0 && sb == 0 ? f : shear_family(f, sa, sb));
            for (auto& f : opts.extra_simple_points)
                extra.push_back(sa == 0 && sb == 0 ? f : shear_family(f, sa, sb));
            EffectiveDivisor Dsh = make_divisor(dfams);
            std::vector<MPoly<Rational>> forms;
            for (auto& bform : L.basis)
                forms.push_back(sa == 0 && sb == 0 ? bform : shear_form(bform, sa, sb));
            LinearSystem Lsh = system_from_forms(n, forms);
            DivisorClassification csh = decompose_rational_hausdorff(Dsh, n);

            // adjoint system of degree n' through (s-1)-fold singular points
            std::vector<ConjugateFamily> adj;
            for (auto& f : csh.singular_part->families)
                adj.push_back(make_family(f.m, f.p1, f.p2, f.p3, f.mult - 1));
            LinearSystem A = compute_system(opts.adjoint_degree, make_divisor(adj));
            if (!extra.empty()) A = add_point_conditions(A, extra);

            // known base-point coordinate factors for the resultants
            std::vector<std::pair<ConjugateFamily, int>> known;
            for (auto& f : csh.singular_part->families)
                known.push_back({f, f.mult * (f.mult - 1)});
            for (auto& f : extra) known.push_back({f, 1});

            const MPoly<Rational>& H =
                Lsh.basis.size() > 1 ? Lsh.defining : Lsh.basis[0];

            if (!opts.infinity_family_index) {
                if (A.basis.size() != 2)
                    fail("BezoutMismatch", "adjoint pencil has dimension " +
                                               std::to_string(A.dim()) + ", expected 1");
                AdjointResult res;
                res.curve = Lsh.basis.size() > 1 ? Lsh.defining : Lsh.basis[0];
                res.param = adjoint_engine<Rational>(H, A.basis[0], A.basis[1], known);
                if (sa != 0 || sb != 0) {
                    // map the parametrization back through the inverse shear
                    ProjParam<Rational> back;
                    back.p1 = res.param.p1 - res.param.p2 * Rational(sa);
                    back.p2 = res.param.p2 - res.param.p1 * Rational(sb);
                    back.p3 = res.param.p3 * Rational(1 - sa * sb);
                    res.param = normalize_param(std::move(back));
                    res.curve = L.basis.size() > 1 ? L.defining : L.basis[0];
                    if (!verify_parametrization(res.curve, res.param))
                        fail("VerificationFailed", "unshear verification failed");
                }
                return res;
            }

            const ConjugateFamily& fam = csh.hausdorff_part->families[*opts.infinity_family_index];
            if (fam.point_count() == 1) {
                LinearSystem A2 = add_point_conditions(A, {fam});
                if (A2.basis.size() != 2)
                    fail("BezoutMismatch", "adjoint pencil has dimension " +
                                               std::to_string(A2.dim()) + ", expected 1");
                AdjointResult res;
                res.curve = Lsh.basis.size() > 1 ? Lsh.defining : Lsh.basis[0];
                res.param = adjoint_engine<Rational>(H, A2.basis[0], A2.basis[1], known);
                if (sa != 0 || sb != 0) {
                    ProjParam<Rational> back;
                    back.p1 = res.param.p1 - res.param.p2 * Rational(sa);
                    back.p2 = res.param.p2 - res.param.p1 * Rational(sb);
                    back.p3 = res.param.p3 * Rational(1 - sa * sb);
                    res.param = normalize_param(std::move(back));
                    res.curve = L.basis.size() > 1 ? L.defining : L.basis[0];
                    if (!verify_parametrization(res.curve, res.param))
                        fail("VerificationFailed", "unshear verification failed");
                }
                return res;
            }

            // simple point over the extension defined by the family modulus
            ExtFieldPtr F = ExtField::make(fam.m);
            ExtElem alpha = ExtElem::generator(F);
            auto eval_pt = [&](const UPoly<Rational>& p) {
                ExtElem v(0);
                for (int i = p.degree(); i >= 0; --i) v = v * alpha + ExtElem(p[i]);
                return v;
            };
            ExtElem px = eval_pt(fam.p1), py = eval_pt(fam.p2), pz = eval_pt(fam.p3);
            std::vector<MPoly<ExtElem>> basisE;
            for (auto& bf : A.basis) basisE.push_back(lift_mpoly<ExtElem>(bf));
            Matrix<ExtElem> M(1, static_cast<int>(basisE.size()));
            for (size_t i = 0; i < basisE.size(); ++i) {
                MPoly<ExtElem> val = basisE[i]
                                         .substitute(kVarX, px)
                                         .substitute(kVarY, py)
                                         .substitute(kVarZ, pz);
                M(0, static_cast<int>(i)) = val.is_zero() ? ExtElem(0) : val.leading().second;
            }
            auto mu = nullspace_basis(M);
            if (mu.size() != 2)
                fail("BezoutMismatch", "adjoint pencil over the extension has dimension " +
                                           std::to_string(static_cast<int>(mu.size()) - 1) +
                                           ", expected 1");
            MPoly<ExtElem> C1, C2;
            for (size_t i = 0; i < basisE.size(); ++i) {
                C1 = C1 + basisE[i] * mu[0][i];
                C2 = C2 + basisE[i] * mu[1][i];
            }
            AdjointResult res;
            res.over_extension = true;
            res.field = F;
            res.curve = Lsh.basis.size() > 1 ? Lsh.defining : Lsh.basis[0];
            res.param_ext = adjoint_engine<ExtElem>(lift_mpoly<ExtElem>(H), C1, C2, known);
            if (sa != 0 || sb != 0) {
                ProjParam<ExtElem> back;
                back.p1 = res.param_ext.p1 - res.param_ext.p2 * ExtElem(sa);
                back.p2 = res.param_ext.p2 - res.param_ext.p1 * ExtElem(sb);
                back.p3 = res.param_ext.p3 * ExtElem(1 - sa * sb);
                res.param_ext = normalize_param(std::move(back));
                res.curve = L.basis.size() > 1 ? L.defining : L.basis[0];
                if (!verify_parametrization(lift_mpoly<ExtElem>(res.curve), res.param_ext))
                    fail("VerificationFailed", "unshear verification failed");
            }
            return res;
        } catch (const DomainError& e) {
            if (e.code() == "ResidualNotLinear" || e.code() == "VerificationFailed") {
                last_error = e.what();
                continue;  // retry with the next shear
            }
            throw;
        }
    }
    fail("ResidualNotLinear", "all shears exhausted: " + last_error);
}

// ---- properness heuristic ----

template <class K>
Properness properness_heuristic(const ProjParam<K>& P, int n, int samples, uint64_t seed) {
    int maxdeg = std::max({P.p1.degree_in(kVarT), P.p2.degree_in(kVarT), P.p3.degree_in(kVarT)});
    if (maxdeg != n) return Properness::ImproperLikely;
    RationalSampler rng(seed ? seed : 1);
    std::vector<int> lvars;
    for (int v = 3; v < kVarT; ++v)
        if (P.p1.uses_var(v) || P.p2.uses_var(v) || P.p3.uses_var(v)) lvars.push_back(v);
    auto eval_comp = [&](const MPoly<K>& c, const Rational& t,
                         const std::vector<Rational>& lv) -> K {
        MPoly<K> r = c.substitute(kVarT, make_scalar<K>(t));
        for (size_t i = 0; i < lvars.size(); ++i)
            r = r.substitute(lvars[i], make_scalar<K>(lv[i]));
        if (r.is_zero()) return K(0);
        return r.leading().second;
    };
    int done = 0, guard = 0;
    while (done < samples && guard < samples * 8) {
        ++guard;
        std::vector<Rational> lv;
        for (size_t i = 0; i < lvars.size(); ++i) lv.push_back(rng.small_rational(19, 5));
        Rational t1 = rng.small_rational(61, 7), t2 = rng.small_rational(61, 7);
        if (t1 == t2) continue;
        K a1 = eval_comp(P.p1, t1, lv), a2 = eval_comp(P.p2, t1, lv), a3 = eval_comp(P.p3, t1, lv);
        K b1 = eval_comp(P.p1, t2, lv), b2 = eval_comp(P.p2, t2, lv), b3 = eval_comp(P.p3, t2, lv);
        if ((a1.is_zero() && a2.is_zero() && a3.is_zero()) ||
            (b1.is_zero() && b2.is_zero() && b3.is_zero()))
            continue;  // hit a base point / denominator root
        bool distinct = !(a1 * b2 - a2 * b1).is_zero() || !(a1 * b3 - a3 * b1).is_zero() ||
                        !(a2 * b3 - a3 * b2).is_zero();
        if (!distinct) return Properness::ImproperLikely;
        ++done;
    }
    return Properness::ProperLikely;
}

template Properness properness_heuristic<Rational>(const ProjParam<Rational>&, int, int, uint64_t);
template Properness properness_heuristic<ExtElem>(const ProjParam<ExtElem>&, int, int, uint64_t);

} // namespace hdc
