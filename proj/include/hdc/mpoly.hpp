#ifndef HDC_MPOLY_HPP
#define HDC_MPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hdc/errors.hpp"
#include "hdc/rational.hpp"

namespace hdc {

// Fixed variable universe, strongest first for the term order:
//   x > y > z > lambda_1 > ... > lambda_64 > t > u > v
// (u and v are internal scratch variables for pencil expansions)
inline constexpr int kMaxLambda = 64;
inline constexpr int kNumVars = 3 + kMaxLambda + 3;
inline constexpr int kVarX = 0;
inline constexpr int kVarY = 1;
inline constexpr int kVarZ = 2;
inline constexpr int kVarT = kNumVars - 3;
inline constexpr int kVarU = kNumVars - 2;
inline constexpr int kVarV = kNumVars - 1;
inline constexpr int lambda_var(int i) { return 3 + i; }  // lambda_{i+1}
inline constexpr bool is_lambda_var(int v) { return v >= 3 && v < kVarT; }

std::string var_name(int v);
int var_index(const std::string& name);  // -1 if unknown

using Mono = std::array<uint16_t, kNumVars>;

inline Mono mono_one() {
    Mono m{};
    return m;
}

inline int mono_degree(const Mono& m) {
    int d = 0;
    for (int i = 0; i < kNumVars; ++i) d += m[i];
    return d;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<uint16_t>(a[i] + b[i]);
    return r;
}

// Graded lexicographic, bigger first: higher total degree wins, then the
// first differing variable (x strongest).
struct MonoGreater {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da > db;
        for (int i = 0; i < kNumVars; ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

// Sparse multivariate polynomial over a field K on the fixed variable
// universe. No zero coefficients stored; iteration order is the canonical
// (graded-lex descending) term order, so printing is deterministic.
template <class K>
class MPoly {
public:
    using TermMap = std::map<Mono, K, MonoGreater>;

    MPoly() = default;

    static MPoly zero() { return MPoly(); }
    static MPoly constant(const K& k) {
        MPoly p;
        if (!k.is_zero()) p.terms_[mono_one()] = k;
        return p;
    }
    static MPoly variable(int v, int e = 1) {
        MPoly p;
        if (e < 0) throw std::logic_error("negative exponent");
        Mono m{};
        m[v] = static_cast<uint16_t>(e);
        p.terms_[m] = K(1);
        return p;
    }
    static MPoly term(const Mono& m, const K& c) {
        MPoly p;
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == mono_one());
    }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    int total_degree() const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
        return d;
    }
    int degree_in(int v) const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[v]));
        return terms_.empty() ? -1 : d;
    }
    bool uses_var(int v) const {
        for (auto& [m, c] : terms_)
            if (m[v] > 0) return true;
        return false;
    }

    K coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? K(0) : it->second;
    }

    // Leading term under the canonical order.
    const std::pair<const Mono, K>& leading() const {
        if (terms_.empty()) fail("ZeroPolynomial", "leading term of zero polynomial");
        return *terms_.begin();
    }

    void add_term(const Mono& m, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    MPoly operator-() const {
        MPoly r;
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const K& s) {
        MPoly r;
        if (s.is_zero()) return r;
        for (auto& [m, c] : a.terms_) r.terms_.emplace(m, c * s);
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(int e) const {
        if (e < 0) throw std::logic_error("negative exponent");
        MPoly r = constant(K(1));
        MPoly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            if (e >>= 1) b = b * b;
        }
        return r;
    }

    // Exact iterated partial derivative.
    MPoly derivative(int v, int order = 1) const {
        if (v < 0 || v >= kNumVars) fail("UnknownVariable", "derivative variable out of range");
        MPoly r = *this;
        for (int k = 0; k < order; ++k) {
            MPoly d;
            for (auto& [m, c] : r.terms_) {
                if (m[v] == 0) continue;
                Mono m2 = m;
                m2[v] -= 1;
                d.add_term(m2, c * K(static_cast<long>(m[v])));
            }
            r = std::move(d);
        }
        return r;
    }

    // Substitute a polynomial for one variable.
    MPoly substitute(int v, const MPoly& value) const {
        std::vector<MPoly> powers{constant(K(1))};
        MPoly r;
        for (auto& [m, c] : terms_) {
            while (static_cast<int>(powers.size()) <= m[v])
                powers.push_back(powers.back() * value);
            Mono m2 = m;
            m2[v] = 0;
            r = r + term(m2, c) * powers[m[v]];
        }
        return r;
    }

    MPoly substitute(int v, const K& value) const { return substitute(v, constant(value)); }

    // View as a univariate polynomial in v: coefficients low degree first.
    std::vector<MPoly> coeffs_in(int v) const {
        std::vector<MPoly> out(std::max(0, degree_in(v)) + 1);
        if (is_zero()) return {};
        for (auto& [m, c] : terms_) {
            Mono m2 = m;
            int e = m2[v];
            m2[v] = 0;
            out[e].add_term(m2, c);
        }
        while (!out.empty() && out.back().is_zero()) out.pop_back();
        return out;
    }

    static MPoly from_coeffs_in(int v, const std::vector<MPoly>& cs) {
        MPoly r;
        for (size_t e = 0; e < cs.size(); ++e) r = r + cs[e] * variable(v, static_cast<int>(e));
        return r;
    }

    bool is_homogeneous() const {
        if (is_zero()) return true;
        int d = mono_degree(terms_.begin()->first);
        for (auto& [m, c] : terms_)
            if (mono_degree(m) != d) return false;
        return true;
    }

    std::string str() const;

private:
    TermMap terms_;
};

// f(x,y) -> homogeneous F(x,y,z) of degree deg(f) with F(x,y,1) = f.
template <class K>
MPoly<K> homogenize(const MPoly<K>& f, int homvar = kVarZ) {
    if (f.is_zero()) fail("ZeroPolynomial", "homogenize of zero polynomial");
    int n = f.total_degree();
    MPoly<K> r;
    for (auto& [m, c] : f.terms()) {
        Mono m2 = m;
        m2[homvar] = static_cast<uint16_t>(m2[homvar] + n - mono_degree(m));
        r.add_term(m2, c);
    }
    return r;
}

// F(x,y,z) homogeneous -> F(x,y,1).
template <class K>
MPoly<K> dehomogenize(const MPoly<K>& F, int homvar = kVarZ) {
    if (!F.is_homogeneous()) fail("NotHomogeneous", "dehomogenize of non-homogeneous polynomial");
    return F.substitute(homvar, K(1));
}

// F(x,y,0) for homogeneous F of degree n with z not dividing F.
template <class K>
MPoly<K> leading_form(const MPoly<K>& F) {
    if (F.is_zero()) fail("ZeroPolynomial", "leading form of zero polynomial");
    MPoly<K> r = F.substitute(kVarZ, K(0));
    if (r.is_zero())
        fail("CurveContainsLineAtInfinity", "z divides the homogeneous polynomial");
    return r;
}

// Exact composition F(P1, P2, P3) for F in x, y, z (parameters allowed in
// the coefficients); the components are polynomials in t (and parameters).
// A zero result certifies that the parametrization lies on the curve.
template <class K>
MPoly<K> substitute_parametrization(const MPoly<K>& F, const MPoly<K>& P1, const MPoly<K>& P2,
                                    const MPoly<K>& P3) {
    if (P1.is_zero() && P2.is_zero() && P3.is_zero())
        fail("ZeroPolynomial", "parametrization components are all zero");
    std::vector<MPoly<K>> pow1{MPoly<K>::constant(K(1))}, pow2 = pow1, pow3 = pow1;
    auto power = [](std::vector<MPoly<K>>& cache, const MPoly<K>& base, int e) -> const MPoly<K>& {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    MPoly<K> r;
    for (auto& [m, c] : F.terms()) {
        Mono rest = m;
        rest[kVarX] = rest[kVarY] = rest[kVarZ] = 0;
        MPoly<K> term = MPoly<K>::term(rest, c);
        term = term * power(pow1, P1, m[kVarX]);
        term = term * power(pow2, P2, m[kVarY]);
        term = term * power(pow3, P3, m[kVarZ]);
        r = r + term;
    }
    return r;
}

template <class K>
std::string MPoly<K>::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        out += first ? (neg ? "-" : "") : (neg ? "-" : "+");
        first = false;
        std::string vars;
        for (int v = 0; v < kNumVars; ++v) {
            if (m[v] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += var_name(v);
            if (m[v] > 1) vars += "^" + std::to_string(m[v]);
        }
        if (vars.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += vars;
        } else {
            out += cs + "*" + vars;
        }
    }
    return out;
}

} // namespace hdc

#endif
