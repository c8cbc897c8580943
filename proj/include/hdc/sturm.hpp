#ifndef HDC_STURM_HPP
#define HDC_STURM_HPP

#include <memory>
#include <vector>

#include "hdc/upoly.hpp"

namespace hdc {

// Open-closed interval (lo, hi] containing exactly one real root of *poly.
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    std::shared_ptr<const UPoly<Rational>> poly;
};

// Sturm chain of p (primitive integer scaled at every step).
std::vector<UPoly<Rational>> sturm_chain(const UPoly<Rational>& p);

// Number of distinct real roots in (a, b]; p squarefree.
int sturm_count(const std::vector<UPoly<Rational>>& chain, const Rational& a, const Rational& b);

// Isolating intervals of width <= width for all real roots in (lo, hi].
// Precondition: p squarefree on the interval.
std::vector<IsolatingInterval> isolate_real_roots(const UPoly<Rational>& p, const Rational& lo,
                                                  const Rational& hi, const Rational& width);

// Shrink by bisection until hi - lo <= width (keeps the single root inside).
IsolatingInterval refine_interval(const IsolatingInterval& iv, const Rational& width);

// Nearest multiple of 1/denom to the root inside iv (half-up on exact ties).
Rational round_root_to_grid(const IsolatingInterval& iv, const Integer& denom);

// Midpoint of the interval refined to width, as a double (used by sampling).
double approximate_root(const IsolatingInterval& iv);

} // namespace hdc

#endif
