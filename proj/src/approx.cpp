#include "hdc/approx.hpp"

#include <algorithm>

#include "hdc/sturm.hpp"

namespace hdc {

namespace {

bool is_power_of_two(const Integer& d) {
    if (d <= 1) return false;
    Integer x = d;
    while (x % 2 == 0) x /= 2;
    return x == 1;
}

UPoly<Rational> x_fiber(const MPoly<Rational>& f, const Rational& c) {
    MPoly<Rational> g = f.substitute(kVarY, c);
    std::vector<Rational> v(std::max(0, g.degree_in(kVarX)) + 1, Rational(0));
    for (auto& [m, coef] : g.terms()) v[m[kVarX]] = coef;
    return UPoly<Rational>(std::move(v));
}

// P rounded onto the 1/denom grid near a random fiber of the real locus
std::optional<std::pair<Rational, Rational>> auto_pick_point(const MPoly<Rational>& f,
                                                             const EffectiveDivisor& D,
                                                             const Integer& denom,
                                                             RationalSampler& rng) {
    for (int attempt = 0; attempt < 10; ++attempt) {
        // vertical fiber at a small rational x0, root rounded to the grid
        Rational x0(static_cast<long>(rng.bits() % 25) - 12, 1 + static_cast<long>(rng.bits() % 3));
        MPoly<Rational> g = f.substitute(kVarX, x0);
        std::vector<Rational> v(std::max(0, g.degree_in(kVarY)) + 1, Rational(0));
        for (auto& [m, coef] : g.terms()) v[m[kVarY]] = coef;
        UPoly<Rational> p(std::move(v));
        if (p.is_zero() || p.degree() < 1) continue;
        Rational bound = root_bound(p);
        auto roots = isolate_real_roots(p, -bound, bound, Rational(1, 64));
        if (roots.empty()) continue;
        size_t pick = rng.bits() % roots.size();
        Rational y0 = round_root_to_grid(roots[pick], denom);
        if (validate_singular_point(x0, y0, D)) return std::make_pair(x0, y0);
    }
    return std::nullopt;
}

} // namespace

std::vector<std::pair<Rational, Rational>> pick_interpolation_points(
    const MPoly<Rational>& f, const std::vector<Rational>& sweeps, const Integer& denom) {
    if (!is_power_of_two(denom))
        fail("ParseError", "rounding denominator must be a positive power of 2");
    std::vector<std::pair<Rational, Rational>> out;
    for (const Rational& c : sweeps) {
        UPoly<Rational> p = x_fiber(f, c);
        if (p.is_zero() || p.degree() < 1) continue;
        Rational bound = root_bound(p);
        for (auto& iv : isolate_real_roots(p, -bound, bound, Rational(1, 64))) {
            Rational x = round_root_to_grid(iv, denom);
            auto pt = std::make_pair(x, c);
            if (std::find(out.begin(), out.end(), pt) == out.end()) out.push_back(pt);
        }
    }
    if (out.empty()) fail("NoRealIntersections", "no sweep line meets the real curve");
    return out;
}

ApproxResult approximate_parametrize(const ApproxRequest& req) {
    const MPoly<Rational>& f = req.curve;
    if (f.is_zero()) fail("ZeroPolynomial", "empty input curve");
    const int n = f.total_degree();
    EffectiveDivisor D = divisor_from_curve(f);  // NotHausdorffCurve on failure
    RationalSampler rng(req.seed);

    ApproxResult res;
    if (req.check_input_irreducible) {
        MPoly<Rational> sq = mpoly_gcd3(f, f.derivative(kVarX), f.derivative(kVarY));
        res.input_irreducible_warning = !sq.is_constant() || absolute_factor_count(f) != 1;
    }

    std::pair<Rational, Rational> P;
    if (req.singular_point) {
        P = *req.singular_point;
        if (!req.allow_invalid_point && !validate_singular_point(P.first, P.second, D))
            fail("InvalidSingularPoint", "(" + P.first.str() + ", " + P.second.str() +
                                             ") is aligned with an infinity direction of the curve");
    } else {
        auto picked = auto_pick_point(f, D, req.denom, rng);
        if (!picked) fail("InvalidSingularPoint", "no valid singular point found automatically");
        P = *picked;
    }
    res.point = P;

    EffectiveDivisor Dbar;
    if (req.allow_invalid_point) {
        Dbar = D;
        Dbar.families.push_back(affine_point_family(P.first, P.second, n - 1));
        Dbar = make_divisor(Dbar.families);
    } else {
        Dbar = build_monomial_divisor(D, P.first, P.second, n);
    }
    res.divisor = Dbar;

    LinearSystem L = compute_system(n, Dbar);
    if (L.dim() < n)
        throw std::logic_error("monomial system has dimension below the guaranteed bound");
    res.monomial_system_report = is_irreducible_system(L, req.trials, req.seed);

    std::vector<std::pair<Rational, Rational>> pts = req.explicit_points;
    if (!req.sweep_lines.empty()) {
        auto picked = pick_interpolation_points(f, req.sweep_lines, req.denom);
        pts.insert(pts.end(), picked.begin(), picked.end());
    }
    if (static_cast<int>(pts.size()) > L.dim())
        fail("TooManyInterpolationPoints",
             "got " + std::to_string(pts.size()) + " points for a dimension-" +
                 std::to_string(L.dim()) + " system");

    // add interpolation conditions, perturbing a point once if it makes the
    // final system reducible
    auto build = [&](const std::vector<std::pair<Rational, Rational>>& points) {
        LinearSystem S = L;
        for (auto& [x, y] : points)
            S = add_point_conditions(S, {affine_point_family(x, y, 1)});
        return S;
    };
    LinearSystem final_sys = build(pts);
    IrreducibilityReport rep = is_irreducible_system(final_sys, req.trials, req.seed);
    int retries = 0;
    if (rep.verdict != IrreducibilityReport::Verdict::Irreducible && !pts.empty()) {
        // find an offending point: dropping it should restore irreducibility
        for (size_t drop = 0; drop < pts.size() && retries < 2; ++drop) {
            std::vector<std::pair<Rational, Rational>> rest;
            for (size_t i = 0; i < pts.size(); ++i)
                if (i != drop) rest.push_back(pts[i]);
            LinearSystem without = build(rest);
            if (is_irreducible_system(without, req.trials, req.seed).verdict !=
                IrreducibilityReport::Verdict::Irreducible)
                continue;
            Rational step = Rational(1) / Rational(req.denom);
            for (Rational delta : {step, -step}) {
                auto moved = pts;
                moved[drop].first = moved[drop].first + delta;
                ++retries;
                LinearSystem candidate = build(moved);
                IrreducibilityReport r2 = is_irreducible_system(candidate, req.trials, req.seed);
                if (r2.verdict == IrreducibilityReport::Verdict::Irreducible) {
                    pts = moved;
                    final_sys = candidate;
                    rep = r2;
                    break;
                }
            }
            break;
        }
        if (rep.verdict != IrreducibilityReport::Verdict::Irreducible) {
            std::string factor;
            if (rep.fixed_factor) factor = ": factor " + rep.fixed_factor->str();
            else if (!rep.content.is_constant()) factor = ": content " + rep.content.str();
            fail("SystemBecameReducible",
                 "interpolation points force a reducible system" + factor);
        }
    }
    res.reducible_retries = retries;
    res.interp_points = pts;
    res.system = final_sys;

    ProjPoint Pp{P.first, P.second, Rational(1)};
    if (final_sys.dim() == 0) {
        res.G = final_sys.basis[0];
        res.param = parametrize_by_lines(final_sys.basis[0], n, Pp);
        MPoly<Rational> Gaff = final_sys.basis[0].substitute(kVarZ, Rational(1));
        if (Gaff.total_degree() != n)
            throw std::logic_error("degree drop in the interpolated curve");
        res.distance = hausdorff_estimate(f, Gaff, req.box, req.grid);
    } else {
        res.param = parametrize_by_lines(final_sys, Pp);
    }
    res.verified = final_sys.dim() == 0 ? verify_parametrization(final_sys.basis[0], res.param)
                                        : verify_parametrization(final_sys.defining, res.param);
    if (!res.verified) fail("VerificationFailed", "pipeline output failed verification");
    return res;
}

} // namespace hdc
