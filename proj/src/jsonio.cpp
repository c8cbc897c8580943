#include "hdc/jsonio.hpp"

#include <cmath>
#include <cstdio>

#include "hdc/exprio.hpp"

namespace hdc {

namespace {

std::string dstr(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json double_or_inf(double v) {
    if (std::isinf(v)) return Json(v > 0 ? "inf" : "-inf");
    return Json(v);
}

} // namespace

Rational parse_rational(const std::string& s) {
    MPoly<Rational> p = parse_poly(s);
    if (!p.is_constant()) fail("ParseError", "expected a rational constant, got '" + s + "'");
    return p.is_zero() ? Rational(0) : p.leading().second;
}

EffectiveDivisor divisor_from_json(const Json& j) {
    if (!j.contains("families") || !j["families"].is_array())
        fail("ParseError", "divisor file must contain a 'families' array");
    std::vector<ConjugateFamily> fams;
    for (const Json& fj : j["families"]) {
        UPoly<Rational> m = parse_upoly_t(fj.at("m").get<std::string>());
        const Json& p = fj.at("p");
        if (!p.is_array() || p.size() != 3)
            fail("ParseError", "family 'p' must be an array of three polynomials");
        int mult = fj.value("mult", 1);
        fams.push_back(make_family(m, parse_upoly_t(p[0].get<std::string>()),
                                   parse_upoly_t(p[1].get<std::string>()),
                                   parse_upoly_t(p[2].get<std::string>()), mult));
    }
    return make_divisor(std::move(fams));
}

Json divisor_to_json(const EffectiveDivisor& D) {
    Json out;
    out["families"] = Json::array();
    for (auto& f : D.families) {
        Json fj;
        fj["m"] = f.m.str("t");
        fj["p"] = Json::array({f.p1.str("t"), f.p2.str("t"), f.p3.str("t")});
        fj["mult"] = f.mult;
        out["families"].push_back(fj);
    }
    return out;
}

Json system_to_json(const LinearSystem& L) {
    Json out;
    out["degree"] = L.degree;
    out["dim"] = L.dim();
    out["basis"] = Json::array();
    for (auto& b : L.basis) out["basis"].push_back(b.str());
    out["defining_poly"] = (L.basis.size() > 1 ? L.defining : L.basis[0]).str();
    Json names = Json::array();
    for (size_t i = 0; i < L.basis.size(); ++i) names.push_back(var_name(lambda_var(static_cast<int>(i))));
    out["parameters"] = names;
    return out;
}

std::string ratfunc_string(const MPoly<Rational>& num, const MPoly<Rational>& den) {
    RatFunc<Rational> r = RatFunc<Rational>::make(num, den);
    if (r.den == MPoly<Rational>::constant(Rational(1))) return r.num.str();
    return "(" + r.num.str() + ")/(" + r.den.str() + ")";
}

namespace {

template <class K>
Json param_to_json_impl(const ProjParam<K>& P, const std::string& field, bool verified) {
    Json out;
    RatFunc<K> x = RatFunc<K>::make(P.p1, P.p3);
    RatFunc<K> y = RatFunc<K>::make(P.p2, P.p3);
    auto fmt = [](const RatFunc<K>& r) {
        if (r.den == MPoly<K>::constant(K(1))) return r.num.str();
        return "(" + r.num.str() + ")/(" + r.den.str() + ")";
    };
    out["x"] = fmt(x);
    out["y"] = fmt(y);
    out["z"] = "1";
    out["field"] = field;
    out["verified"] = verified;
    return out;
}

} // namespace

Json param_to_json(const ProjParam<Rational>& P, const std::string& field, bool verified) {
    return param_to_json_impl(P, field, verified);
}

Json param_to_json(const ProjParam<ExtElem>& P, const std::string& field, bool verified) {
    return param_to_json_impl(P, field, verified);
}

Json hausdorff_to_json(const HausdorffRecord& rec) {
    Json out;
    out["estimate"] = double_or_inf(rec.estimate);
    Json r;
    r["box"] = Json::array({rec.box.xmin, rec.box.xmax, rec.box.ymin, rec.box.ymax});
    r["grid"] = rec.grid;
    r["samples"] = Json::array({rec.samples_a, rec.samples_b});
    r["residual_bounds"] = Json::array({rec.residual_a, rec.residual_b});
    r["directed"] = Json::array({double_or_inf(rec.d_ab), double_or_inf(rec.d_ba)});
    r["note"] = "sample-based estimate restricted to the box";
    out["record"] = r;
    return out;
}

Json approx_to_json(const ApproxResult& r) {
    Json out;
    out["point"] = Json::array({r.point.first.str(), r.point.second.str()});
    out["interpolation_points"] = Json::array();
    for (auto& [x, y] : r.interp_points)
        out["interpolation_points"].push_back(Json::array({x.str(), y.str()}));
    out["divisor"] = divisor_to_json(r.divisor);
    out["system"] = system_to_json(r.system);
    if (r.G) out["G"] = r.G->str();
    out["parametrization"] = param_to_json(r.param, "Q", r.verified);
    switch (r.monomial_system_report.verdict) {
        case IrreducibilityReport::Verdict::Irreducible: out["monomial_system"] = "Irreducible"; break;
        case IrreducibilityReport::Verdict::Reducible: out["monomial_system"] = "Reducible"; break;
        default: out["monomial_system"] = "Undetermined";
    }
    out["reducible_retries"] = r.reducible_retries;
    if (r.distance) out["distance"] = hausdorff_to_json(*r.distance);
    if (r.input_irreducible_warning) out["input_irreducible_warning"] = true;
    return out;
}

std::string samples_to_csv(const std::vector<std::pair<SampleSet, std::string>>& sets) {
    std::string out = "x,y,curve_id\n";
    for (auto& [s, id] : sets)
        for (auto& [x, y] : s.points) out += dstr(x) + "," + dstr(y) + "," + id + "\n";
    return out;
}

} // namespace hdc
