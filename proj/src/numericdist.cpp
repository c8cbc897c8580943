#include "hdc/numericdist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hdc/sturm.hpp"

namespace hdc {

namespace {

UPoly<Rational> fiber_poly(const MPoly<Rational>& f, int fixed_var, const Rational& value,
                           int free_var) {
    MPoly<Rational> g = f.substitute(fixed_var, value);
    std::vector<Rational> c(std::max(0, g.degree_in(free_var)) + 1, Rational(0));
    for (auto& [m, coef] : g.terms()) c[m[free_var]] = coef;
    return UPoly<Rational>(std::move(c));
}

double eval_double(const MPoly<Rational>& f, double x, double y) {
    double s = 0;
    for (auto& [m, c] : f.terms())
        s += c.to_double() * std::pow(x, m[kVarX]) * std::pow(y, m[kVarY]);
    return s;
}

} // namespace

SampleSet sample_curve(const MPoly<Rational>& f, const Box& box, int grid) {
    if (f.is_zero()) fail("ZeroPolynomial", "sampling the zero curve");
    if (grid < 2) throw std::logic_error("grid must be at least 2");
    SampleSet out;
    for (auto& [m, c] : f.terms()) out.coeff_scale = std::max(out.coeff_scale, std::fabs(c.to_double()));

    auto run_fibers = [&](int fixed_var, double lo, double hi, int free_var, double flo,
                          double fhi) {
        Rational range_lo = Rational::from_double(flo) - Rational(1);
        Rational range_hi = Rational::from_double(fhi);
        for (int i = 0; i < grid; ++i) {
            double v = lo + (hi - lo) * i / (grid - 1);
            Rational vr = Rational::from_double(v);
            UPoly<Rational> p = fiber_poly(f, fixed_var, vr, free_var);
            if (p.is_zero() || p.degree() < 1) continue;
            // (range_lo, range_hi] covers [flo, fhi]
            for (auto& iv : isolate_real_roots(p, range_lo, range_hi, Rational(1, 16))) {
                double root = approximate_root(iv);
                if (root < flo - 1e-9 || root > fhi + 1e-9) continue;
                double px = fixed_var == kVarX ? v : root;
                double py = fixed_var == kVarX ? root : v;
                out.points.emplace_back(px, py);
                out.residual_bound = std::max(out.residual_bound, std::fabs(eval_double(f, px, py)));
            }
        }
    };
    run_fibers(kVarX, box.xmin, box.xmax, kVarY, box.ymin, box.ymax);
    run_fibers(kVarY, box.ymin, box.ymax, kVarX, box.xmin, box.xmax);
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

double directed_distance(const SampleSet& A, const SampleSet& B) {
    if (A.points.empty() || B.points.empty())
        fail("EmptySampleSet", "directed distance of an empty sample set");
    double worst = 0;
    for (auto& [ax, ay] : A.points) {
        double best = std::numeric_limits<double>::infinity();
        for (auto& [bx, by] : B.points) {
            double dx = ax - bx, dy = ay - by;
            double d = dx * dx + dy * dy;
            if (d < best) best = d;
        }
        worst = std::max(worst, best);
    }
    return std::sqrt(worst);
}

HausdorffRecord hausdorff_estimate(const MPoly<Rational>& f, const MPoly<Rational>& g,
                                   const Box& box, int grid) {
    HausdorffRecord rec;
    rec.box = box;
    rec.grid = grid;
    SampleSet A = sample_curve(f, box, grid);
    SampleSet B = sample_curve(g, box, grid);
    rec.samples_a = A.points.size();
    rec.samples_b = B.points.size();
    rec.residual_a = A.residual_bound;
    rec.residual_b = B.residual_bound;
    if (A.points.empty() && B.points.empty()) {
        rec.estimate = 0.0;
        return rec;
    }
    if (A.points.empty() || B.points.empty()) {
        rec.estimate = std::numeric_limits<double>::infinity();
        rec.d_ab = rec.d_ba = rec.estimate;
        return rec;
    }
    rec.d_ab = directed_distance(A, B);
    rec.d_ba = directed_distance(B, A);
    rec.estimate = std::max(rec.d_ab, rec.d_ba);
    return rec;
}

} // namespace hdc
