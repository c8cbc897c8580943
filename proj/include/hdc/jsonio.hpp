#ifndef HDC_JSONIO_HPP
#define HDC_JSONIO_HPP

#include <json.hpp>

#include "hdc/approx.hpp"
#include "hdc/linsys.hpp"
#include "hdc/numericdist.hpp"
#include "hdc/param.hpp"

namespace hdc {

using Json = nlohmann::ordered_json;

// Divisor file format:
// { "families": [ { "m": "<poly in t>", "p": ["<p1>","<p2>","<p3>"], "mult": <int> }, ... ] }
EffectiveDivisor divisor_from_json(const Json& j);
Json divisor_to_json(const EffectiveDivisor& D);

Json system_to_json(const LinearSystem& L);

std::string ratfunc_string(const MPoly<Rational>& num, const MPoly<Rational>& den);

Json param_to_json(const ProjParam<Rational>& P, const std::string& field, bool verified);
Json param_to_json(const ProjParam<ExtElem>& P, const std::string& field, bool verified);

Json hausdorff_to_json(const HausdorffRecord& rec);

Json approx_to_json(const ApproxResult& r);

std::string samples_to_csv(const std::vector<std::pair<SampleSet, std::string>>& sets);

Rational parse_rational(const std::string& s);

} // namespace hdc

#endif
