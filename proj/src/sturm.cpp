#include "hdc/sturm.hpp"

#include "hdc/factor.hpp"

namespace hdc {

namespace {

// primitive integer scaling by a positive factor (signs must be preserved
// inside a Sturm chain)
UPoly<Rational> scale_positive(const UPoly<Rational>& p) {
    Integer num_gcd = 0, den_lcm = 1;
    for (const Rational& c : p.coeffs()) {
        num_gcd = int_gcd(num_gcd, c.num());
        den_lcm = int_lcm(den_lcm, c.den());
    }
    if (num_gcd == 0) return p;
    return p * Rational(den_lcm, num_gcd).abs();
}

int sign_variations(const std::vector<UPoly<Rational>>& chain, const Rational& x) {
    int vars = 0, prev = 0;
    for (const auto& q : chain) {
        int s = q.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

// one Sturm bisection step on (lo, hi] known to hold exactly one root
void bisect_step(const std::vector<UPoly<Rational>>& chain, Rational& lo, Rational& hi) {
    Rational m = midpoint(lo, hi);
    if (sturm_count(chain, lo, m) == 1)
        hi = m;
    else
        lo = m;
}

// round-half-up of x*denom
Integer grid_index(const Rational& x, const Integer& denom) {
    Rational t = x * Rational(denom) + Rational(1, 2);
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(), t.num().get_mpz_t(), t.den().get_mpz_t());
    return k;
}

} // namespace

std::vector<UPoly<Rational>> sturm_chain(const UPoly<Rational>& p) {
    if (p.is_zero()) fail("ZeroPolynomial", "Sturm chain of zero polynomial");
    std::vector<UPoly<Rational>> chain;
    chain.push_back(scale_positive(p));
    if (p.degree() == 0) return chain;
    chain.push_back(scale_positive(p.derivative()));
    while (chain.back().degree() > 0) {
        UPoly<Rational> r = UPoly<Rational>::divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        // primitive scaling controls growth; the positive factor keeps signs
        chain.push_back(scale_positive(-r));
    }
    return chain;
}

int sturm_count(const std::vector<UPoly<Rational>>& chain, const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

std::vector<IsolatingInterval> isolate_real_roots(const UPoly<Rational>& p, const Rational& lo,
                                                  const Rational& hi, const Rational& width) {
    if (p.is_zero()) fail("ZeroPolynomial", "root isolation of zero polynomial");
    std::vector<IsolatingInterval> out;
    if (p.degree() == 0 || lo >= hi) return out;
    auto poly = std::make_shared<UPoly<Rational>>(squarefree_part(p));
    std::vector<UPoly<Rational>> chain = sturm_chain(*poly);

    struct Seg { Rational a, b; int count; };
    std::vector<Seg> stack{{lo, hi, sturm_count(chain, lo, hi)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1 && s.b - s.a <= width) {
            out.push_back({s.a, s.b, poly});
            continue;
        }
        Rational m = midpoint(s.a, s.b);
        int left = sturm_count(chain, s.a, m);
        // push right first so the output comes back sorted ascending
        stack.push_back({m, s.b, s.count - left});
        stack.push_back({s.a, m, left});
    }
    return out;
}

IsolatingInterval refine_interval(const IsolatingInterval& iv, const Rational& width) {
    IsolatingInterval r = iv;
    if (r.hi - r.lo <= width) return r;
    if (r.poly->eval(r.hi).is_zero()) {
        r.lo = r.hi - width;
        return r;
    }
    std::vector<UPoly<Rational>> chain = sturm_chain(*r.poly);
    while (r.hi - r.lo > width) bisect_step(chain, r.lo, r.hi);
    return r;
}

Rational round_root_to_grid(const IsolatingInterval& iv, const Integer& denom) {
    const UPoly<Rational>& p = *iv.poly;
    Rational d(denom);
    Rational lo = iv.lo, hi = iv.hi;
    if (p.eval(hi).is_zero()) return Rational(grid_index(hi, denom)) / d;
    std::vector<UPoly<Rational>> chain = sturm_chain(p);
    for (int guard = 0; guard < 8192; ++guard) {
        Integer klo = grid_index(lo, denom);
        Integer khi = grid_index(hi, denom);
        if (klo == khi) return Rational(klo) / d;
        if (hi - lo < Rational(1, 4) / d && khi == klo + 1) {
            // the interval straddles one half-grid boundary; an exact tie
            // rounds half up, otherwise keep bisecting
            Rational b = Rational(2 * klo + 1, 2) / d;
            if (p.eval(b).is_zero()) return Rational(khi) / d;
        }
        bisect_step(chain, lo, hi);
    }
    throw std::logic_error("round_root_to_grid failed to converge");
}

double approximate_root(const IsolatingInterval& iv) {
    const UPoly<Rational>& p = *iv.poly;
    Rational lo = iv.lo, hi = iv.hi;
    if (p.eval(hi).is_zero()) return hi.to_double();
    // 40 bisection steps from the exact isolating interval
    int slo = p.eval(lo).sign(), shi = p.eval(hi).sign();
    if (slo != 0 && shi != 0 && slo != shi) {
        for (int i = 0; i < 40; ++i) {
            Rational m = midpoint(lo, hi);
            int sm = p.eval(m).sign();
            if (sm == 0) return m.to_double();
            if (sm == slo) lo = m;
            else hi = m;
        }
    } else {
        std::vector<UPoly<Rational>> chain = sturm_chain(p);
        for (int i = 0; i < 40; ++i) bisect_step(chain, lo, hi);
    }
    double x = midpoint(lo, hi).to_double();
    // then 5 Newton steps in double precision; divergence falls back to the
    // bisection midpoint
    double dlo = lo.to_double() - 1, dhi = hi.to_double() + 1;
    std::vector<double> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs()[i].to_double();
    std::vector<double> dc(c.size() > 1 ? c.size() - 1 : 0);
    for (size_t i = 1; i < c.size(); ++i) dc[i - 1] = c[i] * static_cast<double>(i);
    auto horner = [](const std::vector<double>& v, double t) {
        double s = 0;
        for (size_t i = v.size(); i-- > 0;) s = s * t + v[i];
        return s;
    };
    double cur = x;
    for (int i = 0; i < 5; ++i) {
        double fp = horner(dc, cur);
        if (fp == 0) break;
        double nx = cur - horner(c, cur) / fp;
        if (!(nx >= dlo && nx <= dhi)) return x;
        cur = nx;
    }
    return cur;
}

} // namespace hdc
