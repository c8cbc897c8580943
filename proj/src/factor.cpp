#include "hdc/factor.hpp"

#include <algorithm>
#include <numeric>

// Univariate factorization over Q: Yun squarefree decomposition, then
// Zassenhaus per squarefree part (factor mod p, Hensel lift to past the
// Landau-Mignotte bound, subset recombination).

namespace hdc {
namespace {

using ZPoly = std::vector<Integer>;  // dense, low degree first, trimmed

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Integer zcontent(const ZPoly& f) {
    Integer g = 0;
    for (const Integer& c : f) g = int_gcd(g, c);
    return g;
}

ZPoly zprimitive(ZPoly f) {
    Integer g = zcontent(f);
    if (g == 0) return f;
    if (f.back() < 0) g = -g;
    for (Integer& c : f) c /= g;
    return f;
}

// Exact division in Z[x]; false when g does not divide f.
bool zdivexact(const ZPoly& f, const ZPoly& g, ZPoly& q) {
    if (g.empty()) return false;
    ZPoly r = f;
    ztrim(r);
    q.assign(std::max<size_t>(1, f.size() >= g.size() ? f.size() - g.size() + 1 : 1), Integer(0));
    while (!r.empty() && zdeg(r) >= zdeg(g)) {
        Integer qt;
        mpz_tdiv_q(qt.get_mpz_t(), r.back().get_mpz_t(), g.back().get_mpz_t());
        if (qt * g.back() != r.back()) return false;
        int sh = zdeg(r) - zdeg(g);
        q[sh] = qt;
        for (size_t i = 0; i < g.size(); ++i) r[sh + i] -= qt * g[i];
        ztrim(r);
    }
    ztrim(q);
    return r.empty();
}

ZPoly from_upoly(const UPoly<Rational>& p) {
    std::vector<Integer> v = primitive_integer_coeffs(p);
    return v;
}

UPoly<Rational> to_monic_upoly(const ZPoly& f) {
    std::vector<Rational> c(f.size());
    Rational lc(f.back());
    for (size_t i = 0; i < f.size(); ++i) c[i] = Rational(f[i]) / lc;
    return UPoly<Rational>(std::move(c));
}

// ---- arithmetic mod a word-sized prime ----

using PPoly = std::vector<long>;  // coefficients in [0, p)

long mod_inv(long a, long p) {
    long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        long q = r / newr;
        std::swap(t, newt); newt -= q * t;
        std::swap(r, newr); newr -= q * r;
    }
    t = ((t % p) + p) % p;
    return t;
}

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<__int128>(a[i]) * b[j]) % p;
    }
    ptrim(r);
    return r;
}

PPoly psub(PPoly a, const PPoly& b, long p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    ptrim(a);
    return a;
}

PPoly pmod(PPoly a, const PPoly& m, long p) {
    long inv = mod_inv(m.back(), p);
    while (!a.empty() && a.size() >= m.size()) {
        long f = static_cast<long>(static_cast<__int128>(a.back()) * inv % p);
        size_t sh = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[sh + i] = ((a[sh + i] - static_cast<__int128>(f) * m[i]) % p + p) % p;
        ptrim(a);
    }
    return a;
}

std::pair<PPoly, PPoly> pdivmod(const PPoly& a, const PPoly& b, long p) {
    PPoly r = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, 0);
    long inv = mod_inv(b.back(), p);
    while (!r.empty() && r.size() >= b.size()) {
        long f = static_cast<long>(static_cast<__int128>(r.back()) * inv % p);
        size_t sh = r.size() - b.size();
        q[sh] = f;
        for (size_t i = 0; i < b.size(); ++i)
            r[sh + i] = ((r[sh + i] - static_cast<__int128>(f) * b[i]) % p + p) % p;
        ptrim(r);
    }
    ptrim(q);
    return {q, r};
}

PPoly pgcd(PPoly a, PPoly b, long p) {
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long inv = mod_inv(a.back(), p);
        for (long& c : a) c = static_cast<long>(static_cast<__int128>(c) * inv % p);
    }
    return a;
}

PPoly pderiv(const PPoly& f, long p) {
    if (f.size() <= 1) return {};
    PPoly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = static_cast<long>(static_cast<__int128>(f[i]) * (i % p) % p);
    ptrim(r);
    return r;
}

PPoly pmonic(PPoly f, long p) {
    if (f.empty()) return f;
    long inv = mod_inv(f.back(), p);
    for (long& c : f) c = static_cast<long>(static_cast<__int128>(c) * inv % p);
    return f;
}

// a^e mod (m, p), e an arbitrary-precision exponent
PPoly ppowmod(const PPoly& a, const Integer& e, const PPoly& m, long p) {
    PPoly r{1};
    PPoly b = pmod(a, m, p);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = pmod(pmul(r, r, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = pmod(pmul(r, b, p), m, p);
    }
    return r;
}

struct Lcg {
    uint64_t s;
    explicit Lcg(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 11;
    }
};

int zdeg_p(const PPoly& f) { return static_cast<int>(f.size()) - 1; }

// equal-degree splitting (Cantor-Zassenhaus), p odd
void equal_degree_split(const PPoly& f, int d, long p, Lcg& rng, std::vector<PPoly>& out) {
    if (static_cast<int>(f.size()) - 1 == d) {
        out.push_back(f);
        return;
    }
    Integer e = (int_pow(Integer(p), d) - 1) / 2;
    while (true) {
        PPoly a(f.size() - 1);
        for (auto& c : a) c = static_cast<long>(rng.next() % static_cast<uint64_t>(p));
        ptrim(a);
        if (a.empty() || static_cast<int>(a.size()) - 1 < 1) continue;
        PPoly g = pgcd(a, f, p);
        if (!g.empty() && zdeg_p(g) > 0 && zdeg_p(g) < zdeg_p(f)) {
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(pdivmod(f, g, p).first, d, p, rng, out);
            return;
        }
        PPoly b = ppowmod(a, e, f, p);
        if (b.empty()) continue;
        b[0] = ((b[0] - 1) % p + p) % p;
        ptrim(b);
        if (b.empty()) continue;
        g = pgcd(b, f, p);
        if (!g.empty() && zdeg_p(g) > 0 && zdeg_p(g) < zdeg_p(f)) {
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(pdivmod(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

std::vector<PPoly> factor_mod_p(PPoly f, long p) {
    f = pmonic(std::move(f), p);
    std::vector<PPoly> out;
    Lcg rng(0x5eed0000u ^ static_cast<uint64_t>(p) ^ (static_cast<uint64_t>(f.size()) << 32));
    // distinct-degree
    PPoly x{0, 1};
    PPoly h = pmod(x, f, p);
    int i = 1;
    PPoly rest = f;
    while (zdeg_p(rest) >= 2 * i) {
        h = ppowmod(h, Integer(p), rest, p);
        PPoly hx = psub(h, x, p);
        if (!hx.empty()) {
            PPoly g = pgcd(hx, rest, p);
            if (!g.empty() && zdeg_p(g) > 0) {
                equal_degree_split(g, i, p, rng, out);
                rest = pdivmod(rest, g, p).first;
                h = pmod(h, rest, p);
            }
        } else {
            // h == x: every remaining factor has degree dividing i
            equal_degree_split(rest, i, p, rng, out);
            rest = PPoly{1};
        }
        ++i;
    }
    if (zdeg_p(rest) > 0) out.push_back(pmonic(rest, p));
    return out;
}

// ---- Hensel lifting (quadratic, vzG&G Alg. 15.10) ----

Integer mod_sym(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZPoly zmod(const ZPoly& f, const Integer& m) {
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        r[i] = f[i] % m;
        if (r[i] < 0) r[i] += m;
    }
    ztrim(r);
    return r;
}

ZPoly zmod_sym(const ZPoly& f, const Integer& m) {
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = mod_sym(f[i], m);
    ztrim(r);
    return r;
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) { return zmod(zmul(a, b), m); }

ZPoly zsub_mod(ZPoly a, const ZPoly& b, const Integer& m) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (size_t i = 0; i < b.size(); ++i) {
        a[i] = (a[i] - b[i]) % m;
        if (a[i] < 0) a[i] += m;
    }
    ztrim(a);
    return a;
}

ZPoly zadd_mod(ZPoly a, const ZPoly& b, const Integer& m) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % m;
    ztrim(a);
    return a;
}

Integer int_inv_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::logic_error("non-invertible element in Hensel lifting");
    return r;
}

// division by monic h mod m
std::pair<ZPoly, ZPoly> zdivmod_monic(const ZPoly& a, const ZPoly& h, const Integer& m) {
    ZPoly r = a, q;
    if (a.size() >= h.size()) q.assign(a.size() - h.size() + 1, Integer(0));
    while (!r.empty() && r.size() >= h.size()) {
        Integer f = r.back();
        size_t sh = r.size() - h.size();
        q[sh] = f;
        for (size_t i = 0; i < h.size(); ++i) {
            r[sh + i] = (r[sh + i] - f * h[i]) % m;
            if (r[sh + i] < 0) r[sh + i] += m;
        }
        ztrim(r);
    }
    ztrim(q);
    return {q, r};
}

struct HenselPair {
    ZPoly g, h, s, t;
};

// one quadratic step: from modulus m to m^2
void hensel_step(const ZPoly& f, HenselPair& P, const Integer& m) {
    Integer m2 = m * m;
    ZPoly e = zsub_mod(zmod(f, m2), zmul_mod(P.g, P.h, m2), m2);
    auto [q, r] = zdivmod_monic(zmul_mod(P.s, e, m2), P.h, m2);
    ZPoly gstar = zadd_mod(zadd_mod(P.g, zmul_mod(P.t, e, m2), m2), zmul_mod(q, P.g, m2), m2);
    ZPoly hstar = zadd_mod(P.h, r, m2);
    ZPoly b = zsub_mod(zadd_mod(zmul_mod(P.s, gstar, m2), zmul_mod(P.t, hstar, m2), m2), ZPoly{Integer(1)}, m2);
    auto [c, d] = zdivmod_monic(zmul_mod(P.s, b, m2), hstar, m2);
    ZPoly sstar = zsub_mod(P.s, d, m2);
    ZPoly tstar = zsub_mod(zsub_mod(P.t, zmul_mod(P.t, b, m2), m2), zmul_mod(c, gstar, m2), m2);
    P.g = std::move(gstar);
    P.h = std::move(hstar);
    P.s = std::move(sstar);
    P.t = std::move(tstar);
}

ZPoly from_ppoly(const PPoly& f) {
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    return r;
}

// xgcd mod p for the initial Bezout pair
void pxgcd(const PPoly& a, const PPoly& b, long p, PPoly& s, PPoly& t) {
    PPoly r0 = a, r1 = b;
    PPoly s0{1}, s1{};
    PPoly t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = pdivmod(r0, r1, p);
        r0 = std::move(r1); r1 = std::move(r);
        PPoly s2 = psub(s0, pmul(q, s1, p), p);
        s0 = std::move(s1); s1 = std::move(s2);
        PPoly t2 = psub(t0, pmul(q, t1, p), p);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    long inv = mod_inv(r0.back(), p);  // r0 is a nonzero constant (coprime inputs)
    s = s0;
    t = t0;
    for (long& c : s) c = static_cast<long>(static_cast<__int128>(c) * inv % p);
    for (long& c : t) c = static_cast<long>(static_cast<__int128>(c) * inv % p);
}

// lift the full modular factorization of f to modulus P (a power of p),
// returning monic factors mod P in the order of `us`
std::vector<ZPoly> lift_list(const ZPoly& f, const std::vector<PPoly>& us, long p, const Integer& P) {
    if (us.size() == 1) {
        ZPoly g = zmod(f, P);
        Integer inv = int_inv_mod(g.back(), P);
        for (Integer& c : g) c = c * inv % P;
        return {g};
    }
    size_t half = us.size() / 2;
    PPoly gp{static_cast<long>(mpz_fdiv_ui(Integer(f.back()).get_mpz_t(), static_cast<unsigned long>(p)))};
    for (size_t i = 0; i < half; ++i) gp = pmul(gp, us[i], p);
    PPoly hp{1};
    for (size_t i = half; i < us.size(); ++i) hp = pmul(hp, us[i], p);
    HenselPair pair;
    pair.g = from_ppoly(gp);
    pair.h = from_ppoly(hp);
    PPoly sp, tp;
    pxgcd(gp, hp, p, sp, tp);
    pair.s = from_ppoly(sp);
    pair.t = from_ppoly(tp);
    Integer m(p);
    while (m < P) {
        hensel_step(f, pair, m);
        m = m * m;
    }
    // both halves now known mod m >= P; reduce and recurse
    ZPoly g = zmod(pair.g, P), h = zmod(pair.h, P);
    std::vector<PPoly> low(us.begin(), us.begin() + half), high(us.begin() + half, us.end());
    std::vector<ZPoly> out = lift_list(g, low, p, P);
    std::vector<ZPoly> out2 = lift_list(h, high, p, P);
    out.insert(out.end(), out2.begin(), out2.end());
    return out;
}

// Landau-Mignotte style coefficient bound for factors of f
Integer factor_coeff_bound(const ZPoly& f) {
    Integer maxabs = 0;
    for (const Integer& c : f) {
        Integer a = c < 0 ? Integer(-c) : c;
        if (a > maxabs) maxabs = a;
    }
    int n = zdeg(f);
    Integer b = int_pow(Integer(2), static_cast<unsigned long>(n + 1));
    Integer lc = f.back() < 0 ? Integer(-f.back()) : f.back();
    Integer root = 1;
    mpz_sqrt(root.get_mpz_t(), Integer(Integer(n + 1) * maxabs * maxabs).get_mpz_t());
    root += 1;
    return b * root * lc;
}

const long kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
                        67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131};

// Zassenhaus on a primitive squarefree integer polynomial of degree >= 1.
std::vector<ZPoly> zassenhaus(ZPoly f) {
    std::vector<ZPoly> out;
    if (zdeg(f) == 1) {
        out.push_back(zprimitive(f));
        return out;
    }
    // choose a prime keeping f squarefree with the fewest modular factors
    long best_p = 0;
    std::vector<PPoly> best_factors;
    int tried = 0;
    for (long p : kPrimes) {
        if (mpz_fdiv_ui(f.back().get_mpz_t(), static_cast<unsigned long>(p)) == 0) continue;
        PPoly fp(f.size());
        for (size_t i = 0; i < f.size(); ++i) {
            long c = static_cast<long>(mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(p)));
            fp[i] = c;
        }
        ptrim(fp);
        PPoly g = pgcd(fp, pderiv(fp, p), p);
        if (zdeg_p(g) != 0) continue;  // not squarefree mod p
        std::vector<PPoly> fac = factor_mod_p(fp, p);
        if (best_p == 0 || fac.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(fac);
        }
        if (++tried >= 4 || best_factors.size() == 1) break;
    }
    if (best_p == 0) throw std::logic_error("no usable prime for factorization");
    if (best_factors.size() == 1) {
        out.push_back(zprimitive(f));
        return out;
    }
    long p = best_p;
    Integer bound = factor_coeff_bound(f);
    Integer P(p);
    while (P <= 2 * bound) P = P * P;
    std::vector<ZPoly> lifted = lift_list(f, best_factors, p, P);

    // subset recombination
    std::vector<int> active(lifted.size());
    std::iota(active.begin(), active.end(), 0);
    auto symmetric_product = [&](const std::vector<int>& idx) {
        ZPoly g{f.back()};
        for (int i : idx) g = zmul_mod(g, lifted[i], P);
        return zmod_sym(g, P);
    };
    for (size_t d = 1; !active.empty() && d <= active.size() / 2;) {
        bool found = false;
        std::vector<int> comb(d);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            std::vector<int> idx(d);
            for (size_t i = 0; i < d; ++i) idx[i] = active[comb[i]];
            // cheap test on the constant coefficient first
            Integer c0 = f.back();
            for (int i : idx) c0 = c0 * (lifted[i].empty() ? Integer(0) : lifted[i][0]) % P;
            c0 = mod_sym(c0, P);
            bool plausible = false;
            if (c0 == 0) {
                plausible = (f[0] == 0);
            } else {
                Integer prod = f[0] * f.back();
                plausible = mpz_divisible_p(prod.get_mpz_t(), c0.get_mpz_t()) != 0;
            }
            if (plausible) {
                ZPoly cand = zprimitive(symmetric_product(idx));
                ZPoly q;
                if (zdeg(cand) >= 1 && zdivexact(f, cand, q)) {
                    out.push_back(cand);
                    f = zprimitive(q);
                    std::vector<int> rest;
                    for (int a : active)
                        if (std::find(idx.begin(), idx.end(), a) == idx.end()) rest.push_back(a);
                    active = std::move(rest);
                    found = true;
                    break;
                }
            }
            // next combination
            int i = static_cast<int>(d) - 1;
            while (i >= 0 && comb[i] == static_cast<int>(active.size() - d + i)) --i;
            if (i < 0) break;
            ++comb[i];
            for (size_t j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!found) ++d;
    }
    if (zdeg(f) >= 1) out.push_back(zprimitive(f));
    return out;
}

} // namespace

std::vector<Integer> primitive_integer_coeffs(const UPoly<Rational>& p) {
    Integer den_lcm = 1;
    for (const Rational& c : p.coeffs()) den_lcm = int_lcm(den_lcm, c.den());
    std::vector<Integer> out(p.coeffs().size());
    Integer g = 0;
    for (size_t i = 0; i < out.size(); ++i) {
        Rational scaled = p.coeffs()[i] * Rational(den_lcm);
        out[i] = scaled.num();
        g = int_gcd(g, out[i]);
    }
    if (g == 0) return {};
    if (!out.empty() && out.back() < 0) g = -g;
    for (Integer& c : out) c /= g;
    return out;
}

UPoly<Rational> upoly_from_integers(const std::vector<Integer>& c) {
    std::vector<Rational> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = Rational(c[i]);
    return UPoly<Rational>(std::move(r));
}

Rational root_bound(const UPoly<Rational>& p) {
    if (p.is_zero()) fail("ZeroPolynomial", "root bound of zero polynomial");
    Rational lc = p.lc().abs();
    Rational m(0);
    for (const Rational& c : p.coeffs()) {
        Rational a = c.abs() / lc;
        if (a > m) m = a;
    }
    return m + Rational(1);
}

std::vector<std::pair<UPoly<Rational>, int>> squarefree_decomposition(const UPoly<Rational>& p) {
    if (p.is_zero()) fail("ZeroPolynomial", "squarefree decomposition of zero polynomial");
    std::vector<std::pair<UPoly<Rational>, int>> out;
    UPoly<Rational> f = p.monic();
    if (f.degree() == 0) return out;
    // Yun's algorithm
    UPoly<Rational> fd = f.derivative();
    UPoly<Rational> u = upoly_gcd(f, fd);
    UPoly<Rational> v = UPoly<Rational>::divmod(f, u).first;
    UPoly<Rational> w = UPoly<Rational>::divmod(fd, u).first;
    int i = 1;
    while (v.degree() > 0) {
        UPoly<Rational> vd = v.derivative();
        UPoly<Rational> s = upoly_gcd(v, w - vd);
        if (s.degree() > 0) out.emplace_back(s.monic(), i);
        v = UPoly<Rational>::divmod(v, s).first;
        w = UPoly<Rational>::divmod(w - vd, s).first;
        ++i;
    }
    return out;
}

std::vector<std::pair<UPoly<Rational>, int>> factor_over_Q(const UPoly<Rational>& p) {
    if (p.is_zero()) fail("ZeroPolynomial", "factorization of zero polynomial");
    if (p.degree() > 24) fail("DegreeOutOfScope", "factorization degree capped at 24");
    std::vector<std::pair<UPoly<Rational>, int>> out;
    if (p.degree() == 0) return out;
    for (auto& [g, mult] : squarefree_decomposition(p)) {
        ZPoly zg = from_upoly(g);
        for (const ZPoly& f : zassenhaus(zg)) out.emplace_back(to_monic_upoly(f), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i) {
            if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
        }
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible_over_Q(const UPoly<Rational>& p) {
    if (p.degree() <= 0) return false;
    auto f = factor_over_Q(p);
    return f.size() == 1 && f[0].second == 1;
}

} // namespace hdc
