#ifndef HDC_PARAM_HPP
#define HDC_PARAM_HPP

#include <cstdint>
#include <optional>

#include "hdc/exprio.hpp"
#include "hdc/linsys.hpp"

namespace hdc {

// Projective parametrization: three polynomials in t (coefficients may
// involve the lambdas), gcd 1, canonically normalized.
template <class K>
struct ProjParam {
    MPoly<K> p1, p2, p3;
};

template <class K>
bool verify_parametrization(const MPoly<K>& F, const ProjParam<K>& P) {
    return substitute_parametrization(F, P.p1, P.p2, P.p3).is_zero();
}

// Clear the common polynomial content and normalize the sign (positive
// leading coefficient of the first nonzero component, scanning p3, p1, p2).
template <class K>
ProjParam<K> normalize_param(ProjParam<K> P);

// Parametrization by the pencil of lines through the (n-1)-fold point P of H.
// The pencil member l(t) joins P and M(t) = -t*C1 + C2 moving along the first
// coordinate line {y=0}, {x=0}, {z=0} that does not contain P, with the
// corners ordered (1:0:0) > (0:1:0) > (0:0:1). For P = (0:0:1) this is the
// pencil t*y + x = 0.
ProjParam<Rational> parametrize_by_lines(const MPoly<Rational>& H, int n, const ProjPoint& P);
ProjParam<Rational> parametrize_by_lines(const LinearSystem& L, const ProjPoint& P);

struct AdjointOptions {
    int adjoint_degree = 0;
    // extra simple base points (affine points or rational infinity points)
    std::vector<ConjugateFamily> extra_simple_points;
    // pick the simple point (1:tau:0) from this infinity family of D_H
    // (by index into the family list of the Hausdorff part)
    std::optional<int> infinity_family_index;
};

struct AdjointResult {
    bool over_extension = false;
    ExtFieldPtr field;  // set when over_extension
    ProjParam<Rational> param;
    ProjParam<ExtElem> param_ext;
    // the homogeneous polynomial the parametrization verifies against
    MPoly<Rational> curve;
};

// Adjoint-pencil parametrization of Curve(H(n,D)) for a rational Hausdorff
// divisor D: adjoints of degree n' through the singular part, cut down to a
// pencil by the extra simple points, residual point by resultants.
AdjointResult parametrize_by_adjoints(const LinearSystem& L, const EffectiveDivisor& D,
                                      const AdjointOptions& opts);

enum class Properness { ProperLikely, ImproperLikely };

template <class K>
Properness properness_heuristic(const ProjParam<K>& P, int n, int samples = 16,
                                uint64_t seed = 1);

} // namespace hdc

#endif
