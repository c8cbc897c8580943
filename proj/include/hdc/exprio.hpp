#ifndef HDC_EXPRIO_HPP
#define HDC_EXPRIO_HPP

#include <string>

#include "hdc/extfield.hpp"
#include "hdc/mpoly.hpp"
#include "hdc/upoly.hpp"

namespace hdc {

// Expression grammar (no implicit multiplication):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := rational | identifier | '(' expr ')' | '-' base
// Identifiers: x, y, z, t, lambda_1 .. lambda_64. Rationals are single
// tokens "a" or "a/b". Errors carry line and column.
MPoly<Rational> parse_poly(const std::string& text);

// Parse a polynomial in the single variable t (divisor file entries).
UPoly<Rational> parse_upoly_t(const std::string& text);

std::string upoly_to_string(const UPoly<Rational>& p, const std::string& var = "t");

// MPoly in t (and nothing else) -> UPoly
UPoly<Rational> to_upoly_t(const MPoly<Rational>& p);
MPoly<Rational> from_upoly_t(const UPoly<Rational>& p, int var = kVarT);

// Rational -> K embedding used by templated code.
template <class K>
inline K make_scalar(const Rational& r) {
    return K(r);
}
template <>
inline Rational make_scalar<Rational>(const Rational& r) {
    return r;
}

template <class K>
MPoly<K> lift_upoly(const UPoly<Rational>& p, int var) {
    MPoly<K> r;
    for (int i = 0; i <= p.degree(); ++i) {
        if (p[i].is_zero()) continue;
        Mono m{};
        m[var] = static_cast<uint16_t>(i);
        r.add_term(m, make_scalar<K>(p[i]));
    }
    return r;
}

template <class K>
MPoly<K> lift_mpoly(const MPoly<Rational>& p) {
    if constexpr (std::is_same_v<K, Rational>) {
        return p;
    } else {
        MPoly<K> r;
        for (auto& [m, c] : p.terms()) r.add_term(m, make_scalar<K>(c));
        return r;
    }
}

} // namespace hdc

#endif
