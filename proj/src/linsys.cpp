#include "hdc/linsys.hpp"

#include <algorithm>

#include "hdc/exprio.hpp"
#include "hdc/extfield.hpp"

namespace hdc {

std::vector<Mono> monomials_of_degree(int n) {
    std::vector<Mono> out;
    for (int i = n; i >= 0; --i)
        for (int j = n - i; j >= 0; --j) {
            Mono m{};
            m[kVarX] = static_cast<uint16_t>(i);
            m[kVarY] = static_cast<uint16_t>(j);
            m[kVarZ] = static_cast<uint16_t>(n - i - j);
            out.push_back(m);
        }
    std::sort(out.begin(), out.end(), MonoGreater{});
    return out;
}

std::vector<std::vector<Rational>> condition_rows(int n, const ConjugateFamily& f) {
    const std::vector<Mono> cols = monomials_of_degree(n);
    const int dm = f.m.degree();
    std::vector<UPoly<Rational>> P1{UPoly<Rational>::constant(Rational(1))}, P2 = P1, P3 = P1;
    auto pw = [&](std::vector<UPoly<Rational>>& cache, const UPoly<Rational>& base,
                  int e) -> const UPoly<Rational>& {
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back((cache.back() * base).mod(f.m));
        return cache[e];
    };
    std::vector<std::vector<Rational>> rows;
    for (int order = 0; order < f.mult; ++order) {
        for (int i = 0; i <= order; ++i)
            for (int j = 0; j <= order - i; ++j) {
                int k = order - i - j;
                // entries of d^(i,j,k) of the generic form at the family,
                // reduced mod m; each power of t is one linear condition
                std::vector<UPoly<Rational>> entries(cols.size());
                for (size_t c = 0; c < cols.size(); ++c) {
                    int a = cols[c][kVarX], b = cols[c][kVarY], d = cols[c][kVarZ];
                    if (a < i || b < j || d < k) continue;
                    long coef = 1;
                    for (int q = 0; q < i; ++q) coef *= (a - q);
                    for (int q = 0; q < j; ++q) coef *= (b - q);
                    for (int q = 0; q < k; ++q) coef *= (d - q);
                    UPoly<Rational> val = (pw(P1, f.p1, a - i) * pw(P2, f.p2, b - j)).mod(f.m);
                    val = (val * pw(P3, f.p3, d - k)).mod(f.m);
                    entries[c] = val * Rational(coef);
                }
                for (int e = 0; e < dm; ++e) {
                    std::vector<Rational> row(cols.size(), Rational(0));
                    for (size_t c = 0; c < cols.size(); ++c) row[c] = entries[c][e];
                    rows.push_back(std::move(row));
                }
            }
    }
    return rows;
}

Matrix<Rational> condition_matrix(int n, const EffectiveDivisor& D) {
    Matrix<Rational> M;
    M.cols = static_cast<int>(monomials_of_degree(n).size());
    for (auto& f : D.families)
        for (auto& row : condition_rows(n, f)) M.add_row(std::move(row));
    return M;
}

template <class K>
std::vector<std::vector<K>> canonical_span(std::vector<std::vector<K>> vectors) {
    if (vectors.empty()) return vectors;
    Matrix<K> M;
    for (auto& v : vectors) M.add_row(std::move(v));
    Rref<K> R = rref(M);
    std::vector<std::vector<K>> out;
    for (int i = 0; i < R.rank; ++i) {
        std::vector<K> row = R.m.a[i];
        if constexpr (std::is_same_v<K, Rational>) {
            Integer num_gcd = 0, den_lcm = 1;
            for (const K& c : row) {
                if (c.is_zero()) continue;
                num_gcd = int_gcd(num_gcd, c.num());
                den_lcm = int_lcm(den_lcm, c.den());
            }
            Rational s(den_lcm, num_gcd);
            int lead = 0;
            for (const K& c : row)
                if (!c.is_zero()) { lead = (c * s).sign(); break; }
            if (lead < 0) s = -s;
            for (K& c : row) c *= s;
        }
        out.push_back(std::move(row));
    }
    return out;
}

template std::vector<std::vector<Rational>> canonical_span<Rational>(
    std::vector<std::vector<Rational>>);
template std::vector<std::vector<ExtElem>> canonical_span<ExtElem>(
    std::vector<std::vector<ExtElem>>);

namespace {

std::vector<Rational> form_coords(int n, const MPoly<Rational>& form) {
    const std::vector<Mono> cols = monomials_of_degree(n);
    std::vector<Rational> v(cols.size(), Rational(0));
    for (auto& [m, c] : form.terms()) {
        auto it = std::lower_bound(cols.begin(), cols.end(), m, MonoGreater{});
        if (it == cols.end() || !(*it == m))
            throw std::logic_error("form is not homogeneous of the expected degree");
        v[static_cast<size_t>(it - cols.begin())] = c;
    }
    return v;
}

MPoly<Rational> coords_to_form(int n, const std::vector<Rational>& v) {
    const std::vector<Mono> cols = monomials_of_degree(n);
    MPoly<Rational> f;
    for (size_t i = 0; i < cols.size(); ++i) f.add_term(cols[i], v[i]);
    return f;
}

} // namespace

LinearSystem system_from_forms(int n, std::vector<MPoly<Rational>> forms) {
    std::vector<std::vector<Rational>> vecs;
    vecs.reserve(forms.size());
    for (auto& f : forms) vecs.push_back(form_coords(n, f));
    vecs = canonical_span(std::move(vecs));
    if (vecs.empty()) fail("EmptySystem", "linear system is empty");
    if (static_cast<int>(vecs.size()) > kMaxLambda)
        fail("SystemTooLarge", "system needs " + std::to_string(vecs.size()) +
                                  " parameters; the parameter budget is " +
                                  std::to_string(kMaxLambda));
    LinearSystem L;
    L.degree = n;
    for (size_t i = 0; i < vecs.size(); ++i) {
        MPoly<Rational> b = coords_to_form(n, vecs[i]);
        L.defining = L.defining + b * MPoly<Rational>::variable(lambda_var(static_cast<int>(i)));
        L.basis.push_back(std::move(b));
    }
    return L;
}

LinearSystem compute_system(int n, const EffectiveDivisor& D) {
    if (n < 1) throw std::logic_error("system degree must be positive");
    Matrix<Rational> M = condition_matrix(n, D);
    std::vector<std::vector<Rational>> ns = nullspace_basis(M);
    if (ns.empty()) fail("EmptySystem", "no degree-" + std::to_string(n) +
                                            " curves satisfy the divisor conditions");
    std::vector<MPoly<Rational>> forms;
    forms.reserve(ns.size());
    for (auto& v : ns) forms.push_back(coords_to_form(n, v));
    return system_from_forms(n, std::move(forms));
}

std::optional<std::vector<Rational>> membership(const LinearSystem& L,
                                                const MPoly<Rational>& form) {
    std::vector<Rational> target = form_coords(L.degree, form);
    const size_t k = L.basis.size();
    Matrix<Rational> M(static_cast<int>(target.size()), static_cast<int>(k + 1));
    for (size_t i = 0; i < k; ++i) {
        std::vector<Rational> col = form_coords(L.degree, L.basis[i]);
        for (size_t r = 0; r < target.size(); ++r)
            M(static_cast<int>(r), static_cast<int>(i)) = col[r];
    }
    for (size_t r = 0; r < target.size(); ++r)
        M(static_cast<int>(r), static_cast<int>(k)) = target[r];
    Rref<Rational> R = rref(M);
    for (int c : R.pivot_cols)
        if (c == static_cast<int>(k)) return std::nullopt;  // inconsistent
    std::vector<Rational> mu(k, Rational(0));
    for (size_t i = 0; i < R.pivot_cols.size(); ++i)
        mu[R.pivot_cols[i]] = R.m(static_cast<int>(i), static_cast<int>(k));
    MPoly<Rational> sum;
    for (size_t i = 0; i < k; ++i) sum = sum + L.basis[i] * mu[i];
    if (!(sum == form)) return std::nullopt;
    return mu;
}

LinearSystem add_point_conditions(const LinearSystem& L,
                                  const std::vector<ConjugateFamily>& pts) {
    const size_t k = L.basis.size();
    std::vector<std::vector<Rational>> basis_coords;
    basis_coords.reserve(k);
    for (auto& b : L.basis) basis_coords.push_back(form_coords(L.degree, b));
    Matrix<Rational> M;
    M.cols = static_cast<int>(k);
    for (auto& f : pts) {
        for (auto& row : condition_rows(L.degree, f)) {
            std::vector<Rational> mu_row(k, Rational(0));
            for (size_t i = 0; i < k; ++i) {
                Rational s(0);
                for (size_t c = 0; c < row.size(); ++c) s += row[c] * basis_coords[i][c];
                mu_row[i] = s;
            }
            M.add_row(std::move(mu_row));
        }
    }
    if (M.rows == 0) return L;
    std::vector<std::vector<Rational>> ns = nullspace_basis(M);
    if (ns.empty()) fail("EmptySystem", "point conditions eliminate the whole system");
    std::vector<MPoly<Rational>> forms;
    for (auto& mu : ns) {
        MPoly<Rational> f;
        for (size_t i = 0; i < k; ++i) f = f + L.basis[i] * mu[i];
        forms.push_back(std::move(f));
    }
    return system_from_forms(L.degree, std::move(forms));
}

MPoly<Rational> witness_irreducible_member(const EffectiveDivisor& D, const Rational& a,
                                           const Rational& b) {
    if (!is_hausdorff(D)) throw std::logic_error("witness construction needs a Hausdorff divisor");
    if (a.is_zero() && b.is_zero())
        fail("DirectionCollidesWithDivisor", "(0:0) is not a direction");
    const int n = divisor_degree(D);
    for (auto& f : D.families) {
        UPoly<Rational> c = f.p2 * a - f.p1 * b;
        Rational r = c.is_zero()
                         ? Rational(0)
                         : (c.degree() == 0
                                ? rat_pow(c[0], static_cast<unsigned long>(f.m.degree()))
                                : upoly_resultant(f.m, c));
        if (r.is_zero())
            fail("DirectionCollidesWithDivisor",
                 "direction (" + a.str() + ":" + b.str() + ":0) lies in the divisor");
    }
    MPoly<Rational> x = MPoly<Rational>::variable(kVarX);
    MPoly<Rational> y = MPoly<Rational>::variable(kVarY);
    MPoly<Rational> z = MPoly<Rational>::variable(kVarZ);
    MPoly<Rational> prod = MPoly<Rational>::constant(Rational(1));
    for (auto& f : D.families) {
        // product over the family of (p2(tau) x - p1(tau) y): resultant in t
        // against the monic m
        MPoly<Rational> g =
            lift_upoly<Rational>(f.p2, kVarT) * x - lift_upoly<Rational>(f.p1, kVarT) * y;
        MPoly<Rational> m = lift_upoly<Rational>(f.m, kVarT);
        prod = prod * detail::subres_resultant_std(m, g, kVarT);
    }
    return z * (x * b - y * a).pow(n - 1) - prod;
}

// ---- absolute factor count (log-derivative PDE nullspace dimension) ----

namespace {

template <class K>
MPoly<K> shear_xy(const MPoly<K>& f, long a, long b) {
    // x -> x + a y, y -> y + b x (unimodular when 1 - ab != 0)
    MPoly<K> x = MPoly<K>::variable(kVarX), y = MPoly<K>::variable(kVarY);
    MPoly<K> fx = f.substitute(kVarX, x + y * K(a));
    return fx.substitute(kVarY, y + x * K(b));
}

} // namespace

template <class K>
int absolute_factor_count(const MPoly<K>& f) {
    if (f.is_zero()) fail("ZeroPolynomial", "factor count of zero polynomial");
    if (f.is_constant()) return 0;
    {
        MPoly<K> sq = mpoly_gcd3(f, f.derivative(kVarX), f.derivative(kVarY));
        if (!sq.is_constant()) fail("NotSquarefree", "polynomial has a repeated factor");
    }
    // a squarefree univariate polynomial splits into distinct linear factors
    // over C
    if (f.degree_in(kVarX) <= 0) return f.degree_in(kVarY);
    if (f.degree_in(kVarY) <= 0) return f.degree_in(kVarX);

    static const std::pair<long, long> shears[] = {{0, 0}, {1, 0}, {0, 1}, {1, 2}, {2, 1},
                                                   {1, 3}, {3, 1}, {2, 3}, {3, 2}, {1, 5}};
    MPoly<K> g;
    bool ready = false;
    for (auto [a, b] : shears) {
        g = (a == 0 && b == 0) ? f : shear_xy(f, a, b);
        if (g.degree_in(kVarX) <= 0 || g.degree_in(kVarY) <= 0) continue;
        if (mpoly_gcd(g, g.derivative(kVarX)).is_constant()) {
            ready = true;
            break;
        }
    }
    if (!ready) throw std::logic_error("no usable shear for factor counting");

    const int m = g.degree_in(kVarX), n = g.degree_in(kVarY);
    MPoly<K> gx = g.derivative(kVarX), gy = g.derivative(kVarY);
    // unknowns: u (deg_x <= m-1, deg_y <= n) and v (deg_x <= m, deg_y <= n-1);
    // equation g*u_y - u*g_y - g*v_x + v*g_x = 0
    std::vector<MPoly<K>> contributions;
    contributions.reserve(m * (n + 1) + (m + 1) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) {
            Mono mo{};
            mo[kVarX] = static_cast<uint16_t>(i);
            mo[kVarY] = static_cast<uint16_t>(j);
            MPoly<K> u = MPoly<K>::term(mo, K(1));
            contributions.push_back(g * u.derivative(kVarY) - u * gy);
        }
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j < n; ++j) {
            Mono mo{};
            mo[kVarX] = static_cast<uint16_t>(i);
            mo[kVarY] = static_cast<uint16_t>(j);
            MPoly<K> v = MPoly<K>::term(mo, K(1));
            contributions.push_back(v * gx - g * v.derivative(kVarX));
        }
    std::map<Mono, int, MonoGreater> row_of;
    for (auto& e : contributions)
        for (auto& [mo, c] : e.terms()) row_of.emplace(mo, 0);
    int idx = 0;
    for (auto& [mo, r] : row_of) r = idx++;
    Matrix<K> M(idx, static_cast<int>(contributions.size()));
    for (size_t c = 0; c < contributions.size(); ++c)
        for (auto& [mo, coef] : contributions[c].terms())
            M(row_of[mo], static_cast<int>(c)) = coef;
    return static_cast<int>(contributions.size()) - rank(M);
}

template int absolute_factor_count<Rational>(const MPoly<Rational>&);
template int absolute_factor_count<ExtElem>(const MPoly<ExtElem>&);

// ---- irreducibility of the system ----

namespace {

int degree_in_xyz(const MPoly<Rational>& H) {
    int d = -1;
    for (auto& [m, c] : H.terms()) d = std::max(d, m[kVarX] + m[kVarY] + m[kVarZ]);
    return d;
}

std::vector<int> lambda_vars_used(const MPoly<Rational>& H) {
    std::vector<int> vs;
    for (int v = 3; v < kVarT; ++v)
        if (H.uses_var(v)) vs.push_back(v);
    return vs;
}

MPoly<Rational> specialize_lambdas(const MPoly<Rational>& H, const std::vector<int>& vars,
                                   const std::vector<Rational>& vals) {
    MPoly<Rational> r = H;
    for (size_t i = 0; i < vars.size(); ++i) r = r.substitute(vars[i], vals[i]);
    return r;
}

// factor count (with multiplicity in the z-power) of a specialized
// homogeneous form; -1 when the specialization is not cleanly countable
int specialized_count(const MPoly<Rational>& H0, int n) {
    if (H0.is_zero() || degree_in_xyz(H0) < n) return -1;
    MPoly<Rational> h = H0.substitute(kVarZ, Rational(1));
    int zmult = n - h.total_degree();
    if (zmult >= 2) return -1;  // repeated z factor
    if (h.is_constant()) return zmult == 1 ? 1 : -1;  // c*z (a line) or a constant
    MPoly<Rational> sq = mpoly_gcd3(h, h.derivative(kVarX), h.derivative(kVarY));
    if (!sq.is_constant()) return -1;  // repeated affine factor
    return zmult + absolute_factor_count(h);
}

} // namespace

IrreducibilityReport is_irreducible_system(const LinearSystem& L, int trials, uint64_t seed) {
    if (L.basis.empty()) throw std::logic_error("irreducibility of an empty system");
    IrreducibilityReport rep;
    const bool parametric = L.basis.size() > 1;
    MPoly<Rational> H = parametric ? L.defining : L.basis[0];
    const int n = degree_in_xyz(H);

    rep.content = content_in_parameters(H);
    if (!rep.content.is_constant()) {
        rep.verdict = IrreducibilityReport::Verdict::Reducible;
        rep.certified = true;
        return rep;
    }

    if (!parametric) {
        // a single concrete form: count directly; any degenerate case
        // (repeated factor, z^2 divisor) is already a factorization
        int c = specialized_count(H, n);
        rep.trials.push_back({{}, true, c >= 0, c});
        rep.certified = true;
        rep.verdict = (c == 1) ? IrreducibilityReport::Verdict::Irreducible
                               : IrreducibilityReport::Verdict::Reducible;
        return rep;
    }

    const std::vector<int> lvars = lambda_vars_used(H);
    RationalSampler rng(seed);

    // fixed-factor certificate: common factor of two random members
    {
        MPoly<Rational> s1, s2;
        bool have = false;
        for (int attempt = 0; attempt < 8 && !have; ++attempt) {
            std::vector<Rational> v1, v2;
            for (size_t i = 0; i < lvars.size(); ++i) v1.push_back(rng.small_rational(97, 7));
            for (size_t i = 0; i < lvars.size(); ++i) v2.push_back(rng.small_rational(97, 7));
            s1 = specialize_lambdas(H, lvars, v1);
            s2 = specialize_lambdas(H, lvars, v2);
            have = degree_in_xyz(s1) == n && degree_in_xyz(s2) == n;
        }
        if (have) {
            MPoly<Rational> g = mpoly_gcd(s1, s2);
            if (degree_in_xyz(g) > 0 && mpoly_divides(g, H)) {
                rep.verdict = IrreducibilityReport::Verdict::Reducible;
                rep.certified = true;
                rep.fixed_factor = g;
                return rep;
            }
        }
    }

    int consistent_count = -2;
    bool consistent = true;
    int usable = 0;
    for (int tno = 0; tno < trials; ++tno) {
        std::vector<Rational> vals;
        for (size_t i = 0; i < lvars.size(); ++i) vals.push_back(rng.small_rational());
        MPoly<Rational> H0 = specialize_lambdas(H, lvars, vals);
        IrreducibilityReport::Trial tr;
        tr.lambda_values = vals;
        tr.degree_preserved = degree_in_xyz(H0) == n;
        int c = specialized_count(H0, n);
        tr.squarefree = c >= 0;
        tr.factor_count = c;
        rep.trials.push_back(tr);
        if (c == 1) {
            // one absolutely irreducible degree-preserving member certifies
            // irreducibility of H over the closure of C(Lambda)
            rep.verdict = IrreducibilityReport::Verdict::Irreducible;
            rep.certified = true;
            return rep;
        }
        if (c > 1) {
            ++usable;
            if (consistent_count == -2) consistent_count = c;
            else if (consistent_count != c) consistent = false;
        }
    }
    (void)consistent;
    if (usable > 0) {
        rep.verdict = IrreducibilityReport::Verdict::Reducible;  // heuristic
        rep.certified = false;
    } else {
        rep.verdict = IrreducibilityReport::Verdict::Undetermined;
    }
    return rep;
}

} // namespace hdc
