#include "hdc/clirun.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hdc/exprio.hpp"
#include "hdc/jsonio.hpp"

namespace hdc {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("ParseError", "cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::pair<Rational, Rational> parse_point(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) fail("ParseError", "expected point as 'a,b': " + s);
    return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
}

Box parse_box(const std::string& s) {
    Box b{};
    std::stringstream ss(s);
    char sep;
    if (!(ss >> b.xmin >> sep >> b.xmax >> sep >> b.ymin >> sep >> b.ymax))
        fail("ParseError", "expected box as 'x0,x1,y0,y1': " + s);
    if (!(b.xmin < b.xmax) || !(b.ymin < b.ymax))
        fail("ParseError", "box must satisfy x0 < x1 and y0 < y1");
    return b;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

std::vector<std::pair<Rational, Rational>> parse_point_list(const std::string& s) {
    std::vector<std::pair<Rational, Rational>> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) out.push_back(parse_point(item));
    return out;
}

EffectiveDivisor load_divisor(const std::string& path) {
    Json j = Json::parse(slurp(path), nullptr, true, true);
    return divisor_from_json(j);
}

MPoly<Rational> load_curve(const std::string& expr, const std::string& file) {
    if (!expr.empty()) return parse_poly(expr);
    if (!file.empty()) return parse_poly(slurp(file));
    fail("ParseError", "a curve is required (--curve or --curve-file)");
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) fail("ParseError", "cannot write file: " + out_path);
    f << text;
}

void emit_json(const Json& j, const std::string& out_path, std::ostream& out) {
    emit(j.dump(2) + "\n", out_path, out);
}

std::string verdict_name(IrreducibilityReport::Verdict v) {
    switch (v) {
        case IrreducibilityReport::Verdict::Irreducible: return "Irreducible";
        case IrreducibilityReport::Verdict::Reducible: return "Reducible";
        default: return "Undetermined";
    }
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact linear systems of plane curves, rational parametrization, and "
                 "Hausdorff-distance estimation"};
    app.require_subcommand(1);

    int degree = 0, adjoint_degree = 0, grid = 200, trials = 7;
    long denom = 32;
    uint64_t seed = 1;
    std::string divisor_file, out_file, point_str, sweep_str, points_str, box_str = "-5,5,-5,5";
    std::vector<std::string> curves;
    std::string curve_file;
    int infinity_family = -1;
    std::vector<std::string> simple_points;
    bool allow_invalid = false, check_input = false;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--seed", seed, "random seed (all randomness flows from it)");
        c->add_option("--out", out_file, "write the result to a file instead of stdout");
    };

    CLI::App* linsys = app.add_subcommand("linsys", "linear system of a divisor");
    linsys->add_option("--degree", degree, "system degree n")->required();
    linsys->add_option("--divisor", divisor_file, "divisor JSON file")->required();
    linsys->add_option("--trials", trials, "irreducibility specialization trials");
    add_common(linsys);

    CLI::App* plines = app.add_subcommand("param-lines", "parametrization by lines");
    plines->add_option("--degree", degree)->required();
    plines->add_option("--divisor", divisor_file)->required();
    plines->add_option("--point", point_str, "the (n-1)-fold point 'a,b'");
    add_common(plines);

    CLI::App* padj = app.add_subcommand("param-adjoint", "parametrization by adjoints");
    padj->add_option("--degree", degree)->required();
    padj->add_option("--divisor", divisor_file)->required();
    padj->add_option("--adjoint-degree", adjoint_degree)->required();
    padj->add_option("--simple-point", simple_points, "extra simple point 'a,b' (repeatable)");
    padj->add_option("--infinity-family", infinity_family,
                     "index of the infinity family providing the simple point");
    add_common(padj);

    CLI::App* approx = app.add_subcommand("approx", "approximate parametrization pipeline");
    approx->add_option("--curve", curves, "curve expression");
    approx->add_option("--curve-file", curve_file, "file with the curve expression");
    approx->add_option("--point", point_str, "singular point 'a,b'");
    approx->add_option("--sweep", sweep_str, "sweep lines y = c1,c2,...");
    approx->add_option("--points", points_str, "explicit interpolation points 'x,y;x,y'");
    approx->add_option("--denom", denom, "rounding denominator (power of 2)");
    approx->add_option("--box", box_str, "distance box 'x0,x1,y0,y1'");
    approx->add_option("--grid", grid, "distance sampling grid");
    approx->add_option("--trials", trials, "irreducibility specialization trials");
    approx->add_flag("--allow-invalid-point", allow_invalid,
                     "skip the direction check on the singular point");
    approx->add_flag("--check-input", check_input, "warn when the input curve is reducible");
    add_common(approx);

    CLI::App* hau = app.add_subcommand("hausdorff", "Hausdorff distance estimate of two curves");
    hau->add_option("--curve", curves, "curve expression (give twice)");
    hau->add_option("--curve-file", curve_file, "file with one curve per line");
    hau->add_option("--box", box_str, "sampling box 'x0,x1,y0,y1'");
    hau->add_option("--grid", grid, "grid lines per direction");
    add_common(hau);

    CLI::App* sample = app.add_subcommand("sample", "CSV samples of a curve");
    sample->add_option("--curve", curves, "curve expression");
    sample->add_option("--curve-file", curve_file);
    sample->add_option("--box", box_str, "sampling box 'x0,x1,y0,y1'");
    sample->add_option("--grid", grid, "grid lines per direction");
    add_common(sample);

    std::vector<const char*> argv;
    argv.push_back("hdcurve");
    for (auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        Json j;
        j["error"] = "UsageError";
        j["message"] = e.what();
        err << j.dump() << "\n";
        return 2;
    }

    try {
        if (linsys->parsed()) {
            EffectiveDivisor D = load_divisor(divisor_file);
            LinearSystem L = compute_system(degree, D);
            Json j = system_to_json(L);
            IrreducibilityReport rep = is_irreducible_system(L, trials, seed);
            j["irreducible"] = verdict_name(rep.verdict);
            j["certified"] = rep.certified;
            if (rep.fixed_factor) j["fixed_factor"] = rep.fixed_factor->str();
            emit_json(j, out_file, out);
        } else if (plines->parsed()) {
            EffectiveDivisor D = load_divisor(divisor_file);
            LinearSystem L = compute_system(degree, D);
            ProjPoint P;
            if (!point_str.empty()) {
                auto [a, b] = parse_point(point_str);
                P = {a, b, Rational(1)};
            } else {
                // the unique (n-1)-fold affine point of the divisor
                const ConjugateFamily* found = nullptr;
                for (auto& f : D.families)
                    if (!f.at_infinity() && f.point_count() == 1 && f.mult == degree - 1)
                        found = &f;
                if (!found)
                    fail("SystemNotMonomial", "no (n-1)-fold affine point in the divisor; "
                                              "pass --point");
                P = {found->p1[0] / found->p3[0], found->p2[0] / found->p3[0], Rational(1)};
            }
            ProjParam<Rational> R = parametrize_by_lines(L, P);
            Json j = param_to_json(R, "Q", true);
            j["proper"] = properness_heuristic(R, degree, 16, seed) == Properness::ProperLikely
                              ? "ProperLikely"
                              : "ImproperLikely";
            emit_json(j, out_file, out);
        } else if (padj->parsed()) {
            EffectiveDivisor D = load_divisor(divisor_file);
            LinearSystem L = compute_system(degree, D);
            AdjointOptions opts;
            opts.adjoint_degree = adjoint_degree;
            for (auto& s : simple_points) {
                auto [a, b] = parse_point(s);
                opts.extra_simple_points.push_back(affine_point_family(a, b, 1));
            }
            if (infinity_family >= 0) opts.infinity_family_index = infinity_family;
            AdjointResult res = parametrize_by_adjoints(L, D, opts);
            Json j;
            if (res.over_extension) {
                j = param_to_json(res.param_ext,
                                  "Q[t]/(" + res.field->modulus().str("t") + ")", true);
                j["proper"] = properness_heuristic(res.param_ext, degree, 16, seed) ==
                                      Properness::ProperLikely
                                  ? "ProperLikely"
                                  : "ImproperLikely";
            } else {
                j = param_to_json(res.param, "Q", true);
                j["proper"] = properness_heuristic(res.param, degree, 16, seed) ==
                                      Properness::ProperLikely
                                  ? "ProperLikely"
                                  : "ImproperLikely";
            }
            emit_json(j, out_file, out);
        } else if (approx->parsed()) {
            ApproxRequest req;
            req.curve = load_curve(curves.empty() ? "" : curves[0], curve_file);
            if (!point_str.empty()) req.singular_point = parse_point(point_str);
            if (!sweep_str.empty()) req.sweep_lines = parse_rational_list(sweep_str);
            if (!points_str.empty()) req.explicit_points = parse_point_list(points_str);
            req.denom = Integer(denom);
            req.seed = seed;
            req.allow_invalid_point = allow_invalid;
            req.check_input_irreducible = check_input;
            req.box = parse_box(box_str);
            req.grid = grid;
            req.trials = trials;
            ApproxResult res = approximate_parametrize(req);
            emit_json(approx_to_json(res), out_file, out);
        } else if (hau->parsed()) {
            std::vector<MPoly<Rational>> cs;
            for (auto& c : curves) cs.push_back(parse_poly(c));
            if (!curve_file.empty()) {
                std::stringstream ss(slurp(curve_file));
                std::string line;
                while (std::getline(ss, line))
                    if (!line.empty()) cs.push_back(parse_poly(line));
            }
            if (cs.size() != 2)
                fail("ParseError", "hausdorff needs exactly two curves (--curve twice)");
            HausdorffRecord rec = hausdorff_estimate(cs[0], cs[1], parse_box(box_str), grid);
            emit_json(hausdorff_to_json(rec), out_file, out);
        } else if (sample->parsed()) {
            MPoly<Rational> f = load_curve(curves.empty() ? "" : curves[0], curve_file);
            SampleSet s = sample_curve(f, parse_box(box_str), grid);
            emit(samples_to_csv({{s, "0"}}), out_file, out);
        }
        return 0;
    } catch (const DomainError& e) {
        Json j;
        j["error"] = e.code();
        j["message"] = e.what();
        err << j.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = "InternalError";
        j["message"] = e.what();
        err << j.dump() << "\n";
        return 1;
    }
}

} // namespace hdc
