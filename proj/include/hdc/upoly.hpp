#ifndef HDC_UPOLY_HPP
#define HDC_UPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "hdc/errors.hpp"
#include "hdc/rational.hpp"

namespace hdc {

// Dense univariate polynomial over a field K, coefficients lowest degree
// first, no trailing zeros (the zero polynomial is the empty sequence).
template <class K>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    UPoly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static UPoly zero() { return UPoly(); }
    static UPoly constant(const K& k) { return UPoly(std::vector<K>{k}); }
    static UPoly variable() { return UPoly(std::vector<K>{K(0), K(1)}); }
    // c * x^e
    static UPoly monomial(const K& c, int e) {
        std::vector<K> v(e + 1, K(0));
        v[e] = c;
        return UPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const K& operator[](int i) const {
        static const K zero_k = K(0);
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero_k;
        return c_[i];
    }
    const std::vector<K>& coeffs() const { return c_; }

    const K& lc() const {
        if (is_zero()) fail("ZeroPolynomial", "leading coefficient of zero polynomial");
        return c_.back();
    }

    void set_coeff(int i, const K& v) {
        if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, K(0));
        c_[i] = v;
        trim();
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return UPoly(std::move(r));
    }
    UPoly operator-() const {
        std::vector<K> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const UPoly& a, const K& s) {
        std::vector<K> r(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i] * s;
        return UPoly(std::move(r));
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    // Euclidean division; requires b != 0.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) fail("DivisionByZero", "polynomial division by zero");
        UPoly q, r = a;
        const int db = b.degree();
        const K& lb = b.lc();
        std::vector<K> qc(std::max(0, a.degree() - db + 1), K(0));
        while (!r.is_zero() && r.degree() >= db) {
            K f = r.lc() / lb;
            int sh = r.degree() - db;
            qc[sh] = f;
            std::vector<K> rc = r.c_;
            for (int i = 0; i <= db; ++i) rc[i + sh] = rc[i + sh] - f * b.c_[i];
            rc.pop_back();  // leading term cancels exactly
            r = UPoly(std::move(rc));
        }
        return {UPoly(std::move(qc)), r};
    }

    UPoly mod(const UPoly& m) const { return divmod(*this, m).second; }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<K> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<long>(i));
        return UPoly(std::move(r));
    }

    K eval(const K& x) const {
        K r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return *this * lc().inverse();
    }

    // substitute x -> p(x)
    UPoly compose(const UPoly& p) const {
        UPoly r;
        for (size_t i = c_.size(); i-- > 0;) r = r * p + constant(c_[i]);
        return r;
    }

    std::string str(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

// Monic gcd; gcd(0,0) = 0.
template <class K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        UPoly<K> r = UPoly<K>::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class K>
UPoly<K> upoly_gcd3(const UPoly<K>& a, const UPoly<K>& b, const UPoly<K>& c) {
    return upoly_gcd(upoly_gcd(a, b), c);
}

// Extended Euclid: g = monic gcd, g = s*a + t*b.
template <class K>
void upoly_xgcd(const UPoly<K>& a, const UPoly<K>& b, UPoly<K>& g, UPoly<K>& s, UPoly<K>& t) {
    UPoly<K> r0 = a, r1 = b;
    UPoly<K> s0 = UPoly<K>::constant(K(1)), s1;
    UPoly<K> t0, t1 = UPoly<K>::constant(K(1));
    while (!r1.is_zero()) {
        auto [q, r] = UPoly<K>::divmod(r0, r1);
        r0 = std::move(r1); r1 = std::move(r);
        UPoly<K> s2 = s0 - q * s1;
        s0 = std::move(s1); s1 = std::move(s2);
        UPoly<K> t2 = t0 - q * t1;
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) { g = r0; s = s0; t = t0; return; }
    K inv = r0.lc().inverse();
    g = r0 * inv;
    s = s0 * inv;
    t = t0 * inv;
}

// Product of distinct irreducible factors, monic.
template <class K>
UPoly<K> squarefree_part(const UPoly<K>& p) {
    if (p.is_zero()) fail("ZeroPolynomial", "squarefree part of zero polynomial");
    if (p.degree() == 0) return UPoly<K>::constant(K(1));
    UPoly<K> g = upoly_gcd(p, p.derivative());
    return UPoly<K>::divmod(p, g).first.monic();
}

// Resultant over a field, by the remainder-sequence recurrence
//   res(a,b) = (-1)^{da*db} lc(b)^{da-dr} res(b, r).
template <class K>
K upoly_resultant(UPoly<K> a, UPoly<K> b) {
    if (a.is_zero() || b.is_zero()) return K(0);
    K acc(1);
    bool negate = false;
    while (b.degree() > 0) {
        UPoly<K> r = UPoly<K>::divmod(a, b).second;
        int da = a.degree(), db = b.degree(), dr = r.degree();
        if ((da & 1) && (db & 1)) negate = !negate;
        K lcb = b.lc();
        K f(1);
        for (int i = 0; i < da - std::max(dr, 0); ++i) f = f * lcb;
        acc = acc * f;
        if (r.is_zero()) return K(0);
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant
    K f(1);
    for (int i = 0; i < a.degree(); ++i) f = f * b[0];
    acc = acc * f;
    return negate ? -acc : acc;
}

// ---- Rational-specific helpers ----

// Scale q-coefficient polynomial to a primitive integer polynomial with
// positive leading coefficient; returns the integer coefficient vector.
std::vector<Integer> primitive_integer_coeffs(const UPoly<Rational>& p);

UPoly<Rational> upoly_from_integers(const std::vector<Integer>& c);

// Cauchy bound: all real roots lie in (-B, B).
Rational root_bound(const UPoly<Rational>& p);

template <class K>
std::string UPoly<K>::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const K& c = (*this)[i];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            out += neg ? "-" : "";
        } else {
            out += neg ? "-" : "+";
        }
        if (neg) cs = cs.substr(1);
        first = false;
        if (i == 0) {
            out += cs;
        } else {
            std::string v = (i == 1) ? var : var + "^" + std::to_string(i);
            if (cs == "1") out += v;
            else out += cs + "*" + v;
        }
    }
    return out;
}

} // namespace hdc

#endif
