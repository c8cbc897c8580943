#ifndef HDC_EXTFIELD_HPP
#define HDC_EXTFIELD_HPP

#include <memory>
#include <string>

#include "hdc/upoly.hpp"

namespace hdc {

// Simple extension Q[t]/(m(t)), m monic irreducible. Irreducibility is
// checked at construction (fail fast).
class ExtField {
public:
    static std::shared_ptr<const ExtField> make(const UPoly<Rational>& modulus);

    const UPoly<Rational>& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }

private:
    explicit ExtField(UPoly<Rational> m) : modulus_(std::move(m)) {}
    UPoly<Rational> modulus_;
};

using ExtFieldPtr = std::shared_ptr<const ExtField>;

// Element of an ExtField, represented reduced mod the modulus. An element
// with a null field pointer is a rational constant; it adopts the field of
// the first operand that carries one, so templated code can write K(0), K(1).
class ExtElem {
public:
    ExtElem() = default;
    ExtElem(long n) : rep_(UPoly<Rational>::constant(Rational(n))) {}
    explicit ExtElem(const Rational& r) : rep_(UPoly<Rational>::constant(r)) {}
    ExtElem(UPoly<Rational> rep, ExtFieldPtr fld);

    static ExtElem generator(const ExtFieldPtr& fld) {
        return ExtElem(UPoly<Rational>::variable(), fld);
    }

    const UPoly<Rational>& rep() const { return rep_; }
    const ExtFieldPtr& field() const { return fld_; }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const { return rep_.degree() == 0 && rep_[0].is_one(); }
    bool is_rational() const { return rep_.degree() <= 0; }

    ExtElem operator-() const { return ExtElem(-rep_, fld_, no_reduce_tag{}); }
    friend ExtElem operator+(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator-(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator/(const ExtElem& a, const ExtElem& b);
    friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.rep_ == b.rep_; }
    friend bool operator!=(const ExtElem& a, const ExtElem& b) { return a.rep_ != b.rep_; }

    // e * inverse() == 1 mod modulus; DivisionByZero on zero.
    ExtElem inverse() const;

    std::string str() const;

private:
    struct no_reduce_tag {};
    ExtElem(UPoly<Rational> rep, ExtFieldPtr fld, no_reduce_tag)
        : rep_(std::move(rep)), fld_(std::move(fld)) {}

    static ExtFieldPtr join(const ExtElem& a, const ExtElem& b);

    UPoly<Rational> rep_;
    ExtFieldPtr fld_;  // null: plain rational constant
};

inline ExtElem ext_inverse(const ExtElem& e) { return e.inverse(); }

} // namespace hdc

#endif
