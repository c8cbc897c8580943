#ifndef HDC_APPROX_HPP
#define HDC_APPROX_HPP

#include <optional>

#include "hdc/divisor.hpp"
#include "hdc/numericdist.hpp"
#include "hdc/param.hpp"

namespace hdc {

struct ApproxRequest {
    MPoly<Rational> curve;  // affine f over Q
    std::optional<std::pair<Rational, Rational>> singular_point;
    std::vector<std::pair<Rational, Rational>> explicit_points;  // interpolation points
    std::vector<Rational> sweep_lines;                           // lines y = c
    Integer denom = 32;                                          // rounding grid, power of 2
    uint64_t seed = 1;
    int trials = 7;  // irreducibility specialization trials
    bool allow_invalid_point = false;  // skip the direction check on P
    bool check_input_irreducible = false;
    // distance-estimate record settings (used when the final system is a
    // single curve)
    Box box{-5.0, 5.0, -5.0, 5.0};
    int grid = 200;
};

struct ApproxResult {
    EffectiveDivisor divisor;               // D + (n-1)P
    std::pair<Rational, Rational> point;    // P
    std::vector<std::pair<Rational, Rational>> interp_points;  // accepted Q_i
    LinearSystem system;                     // final linear system
    std::optional<MPoly<Rational>> G;        // the unique curve when dim = 0
    ProjParam<Rational> param;               // by-lines parametrization
    bool verified = false;
    IrreducibilityReport monomial_system_report;  // H(n, D + (n-1)P)
    int reducible_retries = 0;
    std::optional<HausdorffRecord> distance;  // input curve vs G
    bool input_irreducible_warning = false;
};

// Intersection points of the curve with sweep lines y = c, rounded to the
// nearest multiple of 1/denom. NoRealIntersections when the total is empty.
std::vector<std::pair<Rational, Rational>> pick_interpolation_points(
    const MPoly<Rational>& f, const std::vector<Rational>& sweeps, const Integer& denom);

// The end-to-end pipeline: divisor at infinity, monomial divisor through P,
// linear system, interpolation conditions, by-lines parametrization.
ApproxResult approximate_parametrize(const ApproxRequest& req);

} // namespace hdc

#endif
