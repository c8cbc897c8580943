#ifndef HDC_NUMERICDIST_HPP
#define HDC_NUMERICDIST_HPP

#include <vector>

#include "hdc/mpoly.hpp"

namespace hdc {

struct Box {
    double xmin, xmax, ymin, ymax;
};

struct SampleSet {
    std::vector<std::pair<double, double>> points;  // sorted
    double residual_bound = 0.0;  // max |f(x,y)| over the samples
    double coeff_scale = 0.0;     // max |coefficient| of the curve
};

// Fiber sampling: real roots of f on vertical and horizontal grid lines,
// isolated exactly and refined to double precision. Empty set allowed.
SampleSet sample_curve(const MPoly<Rational>& f, const Box& box, int grid);

// max over a in A of min over b in B of the Euclidean distance
double directed_distance(const SampleSet& A, const SampleSet& B);

struct HausdorffRecord {
    Box box;
    int grid = 0;
    size_t samples_a = 0, samples_b = 0;
    double residual_a = 0.0, residual_b = 0.0;
    double d_ab = 0.0, d_ba = 0.0;
    double estimate = 0.0;
};

// Box-restricted sample estimate of the Hausdorff distance. Conventions:
// both sets empty -> 0, exactly one empty -> +infinity.
HausdorffRecord hausdorff_estimate(const MPoly<Rational>& f, const MPoly<Rational>& g,
                                   const Box& box, int grid = 200);

} // namespace hdc

#endif
