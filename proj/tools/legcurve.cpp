// legcurve: command line frontend.
//
// Construction:  bryant, fcurve, exceptional, chart
// Verification:  verify, analyze, residues, invert
// Numerics:      project, report, radius
//
// Exit codes: 0 success / property verified, 1 domain error / property
// refuted, 2 usage error.  PRECISION_BITS=53|64 selects the floating
// precision of the numeric pipeline.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "legendrian/analysis.hpp"
#include "legendrian/curve_json.hpp"
#include "legendrian/expr_parser.hpp"
#include "legendrian/mesh_export.hpp"
#include "legendrian/radius.hpp"
#include "legendrian/reports.hpp"

using namespace legendrian;
using nlohmann::ordered_json;

namespace {

GaussianRational constant_arg(const std::string& text, const std::string& flag) {
    RationalFunction r = parse_expression(text);
    if (!r.is_constant() || !r.is_polynomial())
        throw InvalidInput(flag + " must be a constant, got '" + text + "'");
    return r.num().coeff(0);
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot open '" + path + "' for writing");
    out << text;
}

ordered_json point_json(const AlgebraicPoint& p) {
    ordered_json j;
    if (p.at_infinity) {
        j["at_infinity"] = true;
        return j;
    }
    j["exact"] = p.exact;
    if (p.exact) j["value"] = {rational_to_string(p.point.value.re()),
                               rational_to_string(p.point.value.im())};
    j["approx"] = {p.approx.real(), p.approx.imag()};
    return j;
}

ordered_json analysis_json(const CurveAnalysisReport& rep) {
    ordered_json j;
    auto& base = j["base_points"] = ordered_json::array();
    for (const auto& b : rep.base_points)
        base.push_back({{"point", point_json(b.location)}, {"multiplicity", b.multiplicity}});
    auto& hyper = j["hyperplane_points"] = ordered_json::array();
    for (const auto& hp : rep.hyperplane_points)
        hyper.push_back({{"point", point_json(hp.location)},
                         {"z0_contact_order", hp.z0_contact_order},
                         {"transverse", hp.transverse},
                         {"immersed", hp.immersed}});
    auto& poles = j["data_poles"] = ordered_json::array();
    for (const auto& dp : rep.data_poles)
        poles.push_back({{"point", point_json(dp.location)},
                         {"pole_orders", {dp.order_first, dp.order_second}},
                         {"simple", dp.simple},
                         {"immersed", dp.immersed}});
    auto& fails = j["immersion_failures"] = ordered_json::array();
    for (const auto& p : rep.immersion_failures) fails.push_back(point_json(p));
    j["immersed_everywhere"] = rep.immersed_everywhere;
    return j;
}

ordered_json geometry_json(const GeometryReport& rep) {
    ordered_json j;
    j["h"] = rep.h;
    j["conformality_max"] = rep.conformality_max;
    j["minimality_max"] = rep.minimality_max;
    j["supermin_circle_max"] = rep.supermin_circle_max;
    j["spin_sign"] = spin_sign_name(rep.spin);
    j["isometry_ratio_mean"] = rep.isometry_ratio_mean;
    j["isometry_ratio_reldev"] = rep.isometry_ratio_reldev;
    return j;
}

int precision_bits() {
    const char* env = std::getenv("PRECISION_BITS");
    if (!env) return 53;
    int bits = std::atoi(env);
    if (bits <= 0) throw InvalidInput("PRECISION_BITS must be a positive integer");
    if (bits <= 53) return 53;
    if (bits <= 64) return 64;
    throw InvalidInput("PRECISION_BITS supports up to 64 (double or x87 long double)");
}

SurfaceSample sample_at_precision(const ProjectiveCurve& C, const DomainSpec& domain, double h,
                                  const SampleOptions& options) {
    if (precision_bits() == 64)
        return to_double_sample(sample_surface<long double>(C, domain, h, options));
    return sample_surface<double>(C, domain, h, options);
}

std::vector<Exclusion> parse_exclusions(const std::vector<std::string>& specs) {
    std::vector<Exclusion> out;
    for (const auto& text : specs) {
        Exclusion e;
        if (std::sscanf(text.c_str(), "%lf,%lf,%lf", &e.x, &e.y, &e.r) != 3)
            throw InvalidInput("--exclude expects x,y,r");
        out.push_back(e);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Legendrian curves in CP^3 and superminimal surfaces in S^4"};
    app.require_subcommand(1);
    // --h is a function argument below, so help lives on --help alone.
    app.set_help_flag("--help", "Print help");

    std::string f_expr, g_expr, h_expr, c_expr = "0", a_expr = "0", b_expr = "0";
    std::string a1_expr = "0", a2_expr = "0", a3_expr = "0";
    std::string curve_path, out_path, domain_spec, center_spec, projection = "stereo3";
    std::vector<std::string> exclude_specs;
    double grid_h = 1e-2;
    int refine = 1, levels = 3, pole_axis = 4, pole_sign = 1;
    bool arc_weights = false;

    auto* bryant = app.add_subcommand("bryant", "Curve from a pair (f, g), g nonconstant");
    bryant->add_option("--f", f_expr)->required();
    bryant->add_option("--g", g_expr)->required();
    bryant->add_option("-o,--output", out_path);

    auto* fcurve = app.add_subcommand("fcurve", "Curve from a pair (h, g) via the integral formula");
    fcurve->add_option("--h", h_expr)->required();
    fcurve->add_option("--g", g_expr)->required();
    fcurve->add_option("--c", c_expr, "Integration constant");
    fcurve->add_option("-o,--output", out_path);

    auto* exceptional = app.add_subcommand("exceptional", "The line [1 : a + b t : b : -t]");
    exceptional->add_option("--a", a_expr)->required();
    exceptional->add_option("--b", b_expr)->required();
    exceptional->add_option("-o,--output", out_path);

    auto* verify = app.add_subcommand("verify", "Check the contact condition exactly");
    verify->add_option("curve", curve_path)->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "Orders, poles and immersion diagnostics");
    analyze_cmd->add_option("curve", curve_path)->required();

    auto* residues = app.add_subcommand("residues", "Residue obstruction report for h dg");
    residues->add_option("--h", h_expr)->required();
    residues->add_option("--g", g_expr)->required();

    auto* invert = app.add_subcommand("invert", "Recover (f, g) from a curve");
    invert->add_option("curve", curve_path)->required();

    auto* chart = app.add_subcommand("chart", "Apply a hyperplane-adapted coordinate change");
    chart->add_option("--a1", a1_expr)->required();
    chart->add_option("--a2", a2_expr)->required();
    chart->add_option("--a3", a3_expr)->required();
    chart->add_option("--apply", curve_path)->required();
    chart->add_option("-o,--output", out_path);

    auto* project = app.add_subcommand("project", "Sample the surface and write a mesh");
    project->add_option("curve", curve_path)->required();
    project->add_option("--domain", domain_spec)->required();
    project->add_option("--h", grid_h)->required();
    project->add_option("-o,--output", out_path)->required();
    project->add_option("--exclude", exclude_specs, "Exclusion disk x,y,r (repeatable)");
    project->add_option("--projection", projection)->check(CLI::IsMember({"r5", "stereo3"}));
    project->add_option("--pole-axis", pole_axis)->check(CLI::Range(0, 4));
    project->add_option("--pole-sign", pole_sign)->check(CLI::IsMember({-1, 1}));

    auto* report = app.add_subcommand("report", "Geometric certificates on a sampled grid");
    report->add_option("curve", curve_path)->required();
    report->add_option("--domain", domain_spec)->required();
    report->add_option("--h", grid_h)->required();
    report->add_option("--refine", refine, "Run at h, h/2, ... and estimate orders");
    report->add_option("--exclude", exclude_specs);

    auto* radius = app.add_subcommand("radius", "Intrinsic radius from a base point");
    radius->add_option("curve", curve_path)->required();
    radius->add_option("--domain", domain_spec)->required();
    radius->add_option("--h", grid_h)->required();
    radius->add_option("--center", center_spec)->required();
    radius->add_option("--levels", levels);
    radius->add_flag("--arc", arc_weights, "Great-circle edge weights");
    radius->add_option("--exclude", exclude_specs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bryant->parsed()) {
            ProjectiveCurve C = bryant_curve(parse_expression(f_expr), parse_expression(g_expr));
            write_output(curve_to_json(C), out_path);
        } else if (fcurve->parsed()) {
            ProjectiveCurve C = f_curve(parse_expression(h_expr), parse_expression(g_expr),
                                        constant_arg(c_expr, "--c"));
            write_output(curve_to_json(C), out_path);
        } else if (exceptional->parsed()) {
            ProjectiveCurve C =
                exceptional_line(constant_arg(a_expr, "--a"), constant_arg(b_expr, "--b"));
            write_output(curve_to_json(C), out_path);
        } else if (verify->parsed()) {
            LegendrianCheck check = is_legendrian(load_curve(curve_path));
            ordered_json j;
            j["legendrian"] = check.legendrian;
            if (!check.legendrian) j["witness"] = check.witness.str();
            std::cout << j.dump(1) << "\n";
            return check.legendrian ? 0 : 1;
        } else if (analyze_cmd->parsed()) {
            std::cout << analysis_json(analyze(load_curve(curve_path))).dump(1) << "\n";
        } else if (residues->parsed()) {
            ExactnessReport rep =
                exactness_check(parse_expression(h_expr), parse_expression(g_expr));
            ordered_json j;
            j["pass"] = rep.pass;
            auto& entries = j["poles"] = ordered_json::array();
            for (const auto& e : rep.entries) {
                ordered_json ej;
                ej["point"] = point_json(e.pole);
                if (e.residue_exact)
                    ej["residue"] = {rational_to_string(e.residue.re()),
                                     rational_to_string(e.residue.im())};
                ej["residue_approx"] = {e.residue_approx.real(), e.residue_approx.imag()};
                ej["vanishes"] = e.vanishes;
                if (e.fast_path_checked) ej["fast_path_agrees"] = e.fast_path_agrees;
                entries.push_back(ej);
            }
            std::cout << j.dump(1) << "\n";
            return rep.pass ? 0 : 1;
        } else if (invert->parsed()) {
            BryantData data = invert_bryant(load_curve(curve_path));
            ordered_json j;
            j["f"] = print_expression(data.f);
            j["g"] = print_expression(data.g);
            std::cout << j.dump(1) << "\n";
        } else if (chart->parsed()) {
            ContactChart cc = chart_change(constant_arg(a1_expr, "--a1"),
                                           constant_arg(a2_expr, "--a2"),
                                           constant_arg(a3_expr, "--a3"));
            ProjectiveCurve C = load_curve(curve_path).transformed(cc.projective_forward);
            write_output(curve_to_json(C), out_path);
        } else if (project->parsed()) {
            SampleOptions options;
            options.extra_exclusions = parse_exclusions(exclude_specs);
            SurfaceSample s = sample_at_precision(load_curve(curve_path),
                                                  DomainSpec::parse(domain_spec), grid_h, options);
            std::ofstream out(out_path);
            if (!out) throw InvalidInput("cannot open '" + out_path + "' for writing");
            bool obj = out_path.size() > 4 && out_path.substr(out_path.size() - 4) == ".obj";
            if (obj) {
                MeshOptions mesh_options;
                mesh_options.projection = projection == "r5" ? MeshProjection::r5
                                                             : MeshProjection::stereo3;
                mesh_options.pole_axis = pole_axis;
                mesh_options.pole_sign = pole_sign;
                export_mesh_obj(s, out, mesh_options);
            } else {
                export_mesh_json(s, out);
            }
        } else if (report->parsed()) {
            SampleOptions options;
            options.extra_exclusions = parse_exclusions(exclude_specs);
            ProjectiveCurve C = load_curve(curve_path);
            DomainSpec domain = DomainSpec::parse(domain_spec);
            ordered_json j;
            auto& runs = j["reports"] = ordered_json::array();
            std::vector<GeometryReport> reports;
            double h = grid_h;
            for (int level = 0; level < std::max(refine, 1); ++level, h /= 2) {
                SurfaceSample s = sample_at_precision(C, domain, h, options);
                reports.push_back(geometry_report(s));
                runs.push_back(geometry_json(reports.back()));
            }
            if (reports.size() > 1) {
                auto orders = [&](auto pick) {
                    ordered_json arr = ordered_json::array();
                    for (std::size_t k = 0; k + 1 < reports.size(); ++k) {
                        double coarse = pick(reports[k]), fine = pick(reports[k + 1]);
                        arr.push_back(fine > 0 ? std::log2(coarse / fine) : 0.0);
                    }
                    return arr;
                };
                j["observed_orders"] = {
                    {"conformality", orders([](const GeometryReport& r) { return r.conformality_max; })},
                    {"minimality", orders([](const GeometryReport& r) { return r.minimality_max; })},
                    {"superminimality",
                     orders([](const GeometryReport& r) { return r.supermin_circle_max; })}};
            }
            std::cout << j.dump(1) << "\n";
        } else if (radius->parsed()) {
            double cx = 0, cy = 0;
            if (std::sscanf(center_spec.c_str(), "%lf,%lf", &cx, &cy) != 2)
                throw InvalidInput("--center expects X,Y");
            SampleOptions sample_options;
            sample_options.extra_exclusions = parse_exclusions(exclude_specs);
            RadiusOptions options;
            options.arc_weights = arc_weights;
            RadiusReport rep = radius_study(load_curve(curve_path), DomainSpec::parse(domain_spec),
                                            grid_h, levels, cx, cy, options, sample_options);
            ordered_json j;
            j["center"] = {rep.p0x, rep.p0y};
            j["estimate"] = rep.estimate;
            j["arc_weights"] = rep.arc_weights;
            auto& lv = j["levels"] = ordered_json::array();
            for (const auto& level : rep.levels)
                lv.push_back({{"h", level.h}, {"estimate", level.estimate}, {"nodes", level.nodes}});
            std::cout << j.dump(1) << "\n";
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
