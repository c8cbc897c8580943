#include "hdc/extfield.hpp"

#include "hdc/factor.hpp"

namespace hdc {

ExtFieldPtr ExtField::make(const UPoly<Rational>& modulus) {
    if (modulus.degree() < 1) fail("ReducibleModulus", "extension modulus must have positive degree");
    if (!modulus.lc().is_one()) fail("ReducibleModulus", "extension modulus must be monic");
    if (modulus.degree() > 1 && !is_irreducible_over_Q(modulus))
        fail("ReducibleModulus", "extension modulus is reducible over Q: " + modulus.str());
    return ExtFieldPtr(new ExtField(modulus));
}

ExtElem::ExtElem(UPoly<Rational> rep, ExtFieldPtr fld) : fld_(std::move(fld)) {
    if (fld_ && rep.degree() >= fld_->degree())
        rep = rep.mod(fld_->modulus());
    rep_ = std::move(rep);
}

ExtFieldPtr ExtElem::join(const ExtElem& a, const ExtElem& b) {
    if (a.fld_ && b.fld_ && a.fld_ != b.fld_ && a.fld_->modulus() != b.fld_->modulus())
        throw std::logic_error("mixing elements of different extension fields");
    return a.fld_ ? a.fld_ : b.fld_;
}

ExtElem operator+(const ExtElem& a, const ExtElem& b) {
    return ExtElem(a.rep_ + b.rep_, ExtElem::join(a, b));
}

ExtElem operator-(const ExtElem& a, const ExtElem& b) {
    return ExtElem(a.rep_ - b.rep_, ExtElem::join(a, b));
}

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
    return ExtElem(a.rep_ * b.rep_, ExtElem::join(a, b));
}

ExtElem operator/(const ExtElem& a, const ExtElem& b) {
    return a * b.inverse();
}

ExtElem ExtElem::inverse() const {
    if (is_zero()) fail("DivisionByZero", "inverse of zero field element");
    if (!fld_ || rep_.degree() == 0) {
        // rational constant
        return ExtElem(UPoly<Rational>::constant(rep_[0].inverse()), fld_, no_reduce_tag{});
    }
    UPoly<Rational> g, s, t;
    upoly_xgcd(rep_, fld_->modulus(), g, s, t);
    if (g.degree() != 0)
        throw std::logic_error("non-invertible element: modulus not irreducible?");
    // g = s*rep + t*m is the constant 1 after normalization
    return ExtElem(s, fld_);
}

std::string ExtElem::str() const {
    if (rep_.degree() <= 0) return rep_.is_zero() ? "0" : rep_[0].str();
    std::string s = rep_.str("alpha");
    return "(" + s + ")";
}

} // namespace hdc
