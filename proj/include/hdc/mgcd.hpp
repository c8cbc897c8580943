#ifndef HDC_MGCD_HPP
#define HDC_MGCD_HPP

#include <optional>
#include <vector>

#include "hdc/mpoly.hpp"
#include "hdc/extfield.hpp"

namespace hdc {

// Exact multivariate division: a / b when b divides a, nullopt otherwise.
// Single-divisor division under the canonical term order: if at any step the
// leading term of the remainder is not divisible by lt(b), b does not divide a.
template <class K>
std::optional<MPoly<K>> mpoly_divexact(const MPoly<K>& a, const MPoly<K>& b) {
    if (b.is_zero()) fail("DivisionByZero", "polynomial division by zero");
    MPoly<K> q, r = a;
    const auto& [mb, cb] = b.leading();
    while (!r.is_zero()) {
        const auto& [mr, cr] = r.leading();
        Mono mq;
        for (int i = 0; i < kNumVars; ++i) {
            if (mr[i] < mb[i]) return std::nullopt;
            mq[i] = static_cast<uint16_t>(mr[i] - mb[i]);
        }
        K cq = cr / cb;
        MPoly<K> t = MPoly<K>::term(mq, cq);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

template <class K>
bool mpoly_divides(const MPoly<K>& b, const MPoly<K>& a) {
    return mpoly_divexact(a, b).has_value();
}

namespace detail {

// Normalization of gcd candidates: over Q a primitive integer polynomial with
// positive leading coefficient, over an extension field monic.
template <class K>
MPoly<K> gcd_normalize(const MPoly<K>& g) {
    if (g.is_zero()) return g;
    if constexpr (std::is_same_v<K, Rational>) {
        Integer num_gcd = 0, den_lcm = 1;
        for (auto& [m, c] : g.terms()) {
            num_gcd = int_gcd(num_gcd, c.num());
            den_lcm = int_lcm(den_lcm, c.den());
        }
        Rational s(den_lcm, num_gcd);
        if ((g.leading().second * s).sign() < 0) s = -s;
        return g * s;
    } else {
        return g * g.leading().second.inverse();
    }
}

template <class K>
int first_var_used(const MPoly<K>& a, const MPoly<K>& b) {
    for (int v = 0; v < kNumVars; ++v)
        if (a.uses_var(v) || b.uses_var(v)) return v;
    return -1;
}

// Pseudo-remainder of a by b in the variable v, premultiplier dropped
// (callers take primitive parts afterwards).
template <class K>
MPoly<K> prem_in(const MPoly<K>& a, const MPoly<K>& b, int v) {
    std::vector<MPoly<K>> bc = b.coeffs_in(v);
    int db = static_cast<int>(bc.size()) - 1;
    MPoly<K> lb = bc[db];
    MPoly<K> r = a;
    int dr = r.degree_in(v);
    while (!r.is_zero() && dr >= db) {
        std::vector<MPoly<K>> rc = r.coeffs_in(v);
        r = r * lb - b * rc[dr] * MPoly<K>::variable(v, dr - db);
        int d2 = r.degree_in(v);
        if (d2 >= dr && !r.is_zero()) throw std::logic_error("prem did not reduce degree");
        dr = d2;
    }
    return r;
}

} // namespace detail

template <class K>
MPoly<K> mpoly_gcd(const MPoly<K>& a, const MPoly<K>& b);

namespace detail {

// index of the only variable used, -1 for constants, -2 for several
template <class K>
int single_var(const MPoly<K>& a) {
    int found = -1;
    for (int v = 0; v < kNumVars; ++v) {
        if (!a.uses_var(v)) continue;
        if (found >= 0) return -2;
        found = v;
    }
    return found;
}

template <class K>
UPoly<K> to_upoly_in_var(const MPoly<K>& a, int v) {
    std::vector<K> c(std::max(0, a.degree_in(v)) + 1, K(0));
    for (auto& [m, coef] : a.terms()) c[m[v]] = coef;
    return UPoly<K>(std::move(c));
}

template <class K>
MPoly<K> from_upoly_in_var(const UPoly<K>& p, int v) {
    MPoly<K> r;
    for (int i = 0; i <= p.degree(); ++i) {
        if (p[i].is_zero()) continue;
        Mono m{};
        m[v] = static_cast<uint16_t>(i);
        r.add_term(m, p[i]);
    }
    return r;
}

// Exact short-circuit: certify that gcd(a, b) has no factor of positive
// degree in v. Evaluating every other variable at a point that preserves
// both leading degrees in v maps any common factor with positive v-degree
// to a nonconstant common divisor of the univariate images; a coprime image
// is therefore a proof. Inconclusive evaluations just fall back to the PRS.
template <class K>
bool no_common_factor_in(const MPoly<K>& a, const MPoly<K>& b, int v) {
    int da = a.degree_in(v), db = b.degree_in(v);
    uint64_t state = 0x9e3779b97f4a7c15ull;
    for (int attempt = 0; attempt < 4; ++attempt) {
        MPoly<K> ea = a, eb = b;
        for (int w = 0; w < kNumVars; ++w) {
            if (w == v || (!ea.uses_var(w) && !eb.uses_var(w))) continue;
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            K val = K(static_cast<long>((state >> 11) % 19) - 9);
            ea = ea.substitute(w, val);
            eb = eb.substitute(w, val);
        }
        if (ea.degree_in(v) != da || eb.degree_in(v) != db) continue;
        UPoly<K> g = upoly_gcd(to_upoly_in_var(ea, v), to_upoly_in_var(eb, v));
        if (g.degree() == 0) return true;
    }
    return false;
}

} // namespace detail

// Content of a viewed as a univariate polynomial in v (gcd of coefficients).
template <class K>
MPoly<K> mpoly_content_in(const MPoly<K>& a, int v) {
    MPoly<K> g;
    for (const MPoly<K>& c : a.coeffs_in(v)) {
        g = mpoly_gcd(g, c);
        if (!g.is_zero() && g.is_constant()) break;
    }
    return g;
}

// Primitive-PRS multivariate gcd (univariate pairs go through the monic
// Euclidean algorithm over the field, which keeps coefficients small).
template <class K>
MPoly<K> mpoly_gcd(const MPoly<K>& a, const MPoly<K>& b) {
    if (a.is_zero()) return detail::gcd_normalize(b);
    if (b.is_zero()) return detail::gcd_normalize(a);
    {
        int va = detail::single_var(a), vb = detail::single_var(b);
        if (va != -2 && vb != -2) {
            if (va >= 0 && vb >= 0 && va != vb) return MPoly<K>::constant(K(1));
            if (va < 0 || vb < 0) return MPoly<K>::constant(K(1));  // a constant operand
            UPoly<K> g = upoly_gcd(detail::to_upoly_in_var(a, va), detail::to_upoly_in_var(b, va));
            return detail::gcd_normalize(detail::from_upoly_in_var(g, va));
        }
    }
    int v = detail::first_var_used(a, b);
    if (v < 0) return MPoly<K>::constant(K(1));  // both constants
    if (!a.uses_var(v)) return mpoly_gcd(a, mpoly_content_in(b, v));
    if (!b.uses_var(v)) return mpoly_gcd(mpoly_content_in(a, v), b);

    if (detail::no_common_factor_in(a, b, v))
        return mpoly_gcd(mpoly_content_in(a, v), mpoly_content_in(b, v));

    MPoly<K> ca = mpoly_content_in(a, v);
    MPoly<K> cb = mpoly_content_in(b, v);
    MPoly<K> pa = *mpoly_divexact(a, ca);
    MPoly<K> pb = *mpoly_divexact(b, cb);
    MPoly<K> cont = mpoly_gcd(ca, cb);

    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MPoly<K> r = detail::prem_in(pa, pb, v);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = MPoly<K>();
        } else {
            pb = *mpoly_divexact(r, mpoly_content_in(r, v));
        }
    }
    if (pa.degree_in(v) == 0) return detail::gcd_normalize(cont);
    MPoly<K> pp = *mpoly_divexact(pa, mpoly_content_in(pa, v));
    return detail::gcd_normalize(cont * pp);
}

template <class K>
MPoly<K> mpoly_gcd3(const MPoly<K>& a, const MPoly<K>& b, const MPoly<K>& c) {
    return mpoly_gcd(mpoly_gcd(a, b), c);
}

namespace detail {

// Subresultant PRS resultant in the standard convention (Cohen Alg. 3.3.7).
// A, B nonzero; not both of degree zero in v.
template <class K>
MPoly<K> subres_resultant_std(MPoly<K> A, MPoly<K> B, int v) {
    int dA = A.degree_in(v), dB = B.degree_in(v);
    int sign = 1;
    if (dA < dB) {
        std::swap(A, B);
        std::swap(dA, dB);
        if ((dA & 1) && (dB & 1)) sign = -sign;
    }
    if (dB == 0) {
        MPoly<K> r = B.pow(dA);
        return sign < 0 ? -r : r;
    }
    MPoly<K> gprev = MPoly<K>::constant(K(1));
    MPoly<K> h = gprev;
    while (true) {
        dA = A.degree_in(v);
        dB = B.degree_in(v);
        int delta = dA - dB;
        if ((dA & 1) && (dB & 1)) sign = -sign;
        // canonical pseudo-remainder R = lc(B)^{delta+1} * A mod B
        MPoly<K> lb = B.coeffs_in(v).back();
        MPoly<K> R = A;
        int steps = 0;
        for (int dr = R.degree_in(v); !R.is_zero() && dr >= dB; dr = R.degree_in(v)) {
            std::vector<MPoly<K>> rc = R.coeffs_in(v);
            R = R * lb - B * rc[dr] * MPoly<K>::variable(v, dr - dB);
            ++steps;
        }
        for (int i = steps; i < delta + 1; ++i) R = R * lb;

        MPoly<K> next;
        if (!R.is_zero()) {
            auto q = mpoly_divexact(R, gprev * h.pow(delta));
            if (!q) throw std::logic_error("subresultant PRS: inexact division");
            next = std::move(*q);
        }
        A = std::move(B);
        B = std::move(next);
        if (B.is_zero()) return MPoly<K>();  // common factor of positive degree
        gprev = A.coeffs_in(v).back();
        if (delta >= 1) {
            auto hq = mpoly_divexact(gprev.pow(delta), h.pow(delta - 1));
            if (!hq) throw std::logic_error("subresultant PRS: inexact h update");
            h = std::move(*hq);
        }
        if (B.degree_in(v) == 0) {
            int d = A.degree_in(v);
            auto rq = mpoly_divexact(B.pow(d), h.pow(d - 1));
            if (!rq) throw std::logic_error("subresultant PRS: inexact final step");
            return sign < 0 ? -*rq : *rq;
        }
    }
}

} // namespace detail

// Resultant eliminating v. Sign convention pinned by res(t-a, t-b, t) = b-a,
// i.e. the standard resultant of (g, f). VariableAbsent if v occurs in
// neither input; a degree-zero side is handled by the lc-power formula.
template <class K>
MPoly<K> resultant(const MPoly<K>& f, const MPoly<K>& g, int v) {
    if (f.is_zero() || g.is_zero()) return MPoly<K>();
    if (f.degree_in(v) <= 0 && g.degree_in(v) <= 0)
        fail("VariableAbsent", "resultant variable absent from both inputs");
    return detail::subres_resultant_std(g, f, v);
}

// Rational function: numerator/denominator with constant gcd; denominator
// normalized (primitive with positive leading coefficient over Q, monic over
// an extension field).
template <class K>
struct RatFunc {
    MPoly<K> num, den;

    static RatFunc make(const MPoly<K>& n, const MPoly<K>& d) {
        if (d.is_zero()) fail("DivisionByZero", "rational function with zero denominator");
        if (n.is_zero()) return {MPoly<K>(), MPoly<K>::constant(K(1))};
        MPoly<K> g = mpoly_gcd(n, d);
        MPoly<K> nn = *mpoly_divexact(n, g);
        MPoly<K> dd = *mpoly_divexact(d, g);
        MPoly<K> dnorm = detail::gcd_normalize(dd);
        // rescale the numerator by the same unit
        if constexpr (std::is_same_v<K, Rational>) {
            // dnorm = dd * s for the unique positive-primitive scale s
            const auto& [m, c] = dd.leading();
            K s = dnorm.coeff(m) / c;
            nn = nn * s;
        } else {
            nn = nn * dd.leading().second.inverse();
        }
        return {nn, dnorm};
    }
};

// gcd of the coefficients of H viewed as a polynomial in x, y, z over the
// parameter ring: the part of H depending only on the lambdas (and t).
template <class K>
MPoly<K> content_in_parameters(const MPoly<K>& H) {
    if (H.is_zero()) fail("ZeroPolynomial", "content of zero polynomial");
    std::map<Mono, MPoly<K>, MonoGreater> groups;
    for (auto& [m, c] : H.terms()) {
        Mono geom{};
        geom[kVarX] = m[kVarX];
        geom[kVarY] = m[kVarY];
        geom[kVarZ] = m[kVarZ];
        Mono rest = m;
        rest[kVarX] = rest[kVarY] = rest[kVarZ] = 0;
        groups[geom].add_term(rest, c);
    }
    MPoly<K> g;
    for (auto& [geom, coef] : groups) {
        g = mpoly_gcd(g, coef);
        if (!g.is_zero() && g.is_constant()) break;
    }
    return g;
}

// Sylvester-matrix determinant by fraction-free (Bareiss) elimination over
// the polynomial ring; retained as a cross-check oracle for the PRS path.
template <class K>
MPoly<K> sylvester_resultant(const MPoly<K>& f, const MPoly<K>& g, int v) {
    if (f.is_zero() || g.is_zero()) return MPoly<K>();
    if (f.degree_in(v) <= 0 && g.degree_in(v) <= 0)
        fail("VariableAbsent", "resultant variable absent from both inputs");
    // rows of g first: matches the pinned sign convention
    std::vector<MPoly<K>> a = g.coeffs_in(v), b = f.coeffs_in(v);
    int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
    int N = m + n;
    if (N == 0) return MPoly<K>::constant(K(1));
    std::vector<std::vector<MPoly<K>>> M(N, std::vector<MPoly<K>>(N));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = a[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = b[n - j];
    // Bareiss
    MPoly<K> prev = MPoly<K>::constant(K(1));
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k].is_zero()) {
            int p = -1;
            for (int i = k + 1; i < N; ++i)
                if (!M[i][k].is_zero()) { p = i; break; }
            if (p < 0) return MPoly<K>();
            std::swap(M[k], M[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                MPoly<K> t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                auto q = mpoly_divexact(t, prev);
                if (!q) throw std::logic_error("Bareiss: inexact division");
                M[i][j] = std::move(*q);
            }
            M[i][k] = MPoly<K>();
        }
        prev = M[k][k];
    }
    MPoly<K> det = M[N - 1][N - 1];
    return sign < 0 ? -det : det;
}

} // namespace hdc

#endif
