// Command-line front end: frame reports, involute and indicatrix figure-data
// exports, w-curve generation, and geodesic-spray verdicts for spacelike
// curves with timelike binormal.
//
// Exit codes: 0 success (negative verdicts included), 1 usage or parse
// error, 2 numeric or precondition failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcurves/errors.hpp"
#include "mcurves/exporters.hpp"

namespace {

struct CommonOptions {
    std::string spec_file;
    std::string builtin;
    double c = 2.0;
    bool c_given = false;
    std::string kind;
    std::string format = "csv";
    std::string out_path;
    int samples = 0;
    double tol = 0.0;
    bool abs_offset = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool wants_kind) {
    auto* spec = cmd->add_option("--spec", opt.spec_file, "curve specification file");
    auto* builtin = cmd->add_option("--builtin", opt.builtin, "built-in curve name");
    spec->excludes(builtin);
    cmd->add_option("--c", opt.c, "involute constant")->each([&](const std::string&) {
        opt.c_given = true;
    });
    if (wants_kind) cmd->add_option("--kind", opt.kind, "which indicatrix / verdict");
    cmd->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opt.out_path, "output path (stdout when omitted)");
    cmd->add_option("--samples", opt.samples, "sample count override");
    cmd->add_option("--tol", opt.tol, "tolerance override");
    cmd->add_flag("--abs-offset", opt.abs_offset,
                  "involute offset |c - s| instead of (c - s)");
}

mcurves::CurveSpec load_spec(const CommonOptions& opt) {
    if (!opt.spec_file.empty() && !opt.builtin.empty())
        throw mcurves::ParseError("--spec and --builtin are mutually exclusive", 1, 1);
    if (!opt.spec_file.empty()) return mcurves::parse_curve_spec_file(opt.spec_file);
    if (!opt.builtin.empty()) return mcurves::builtin_spec(opt.builtin);
    throw mcurves::ParseError("one of --spec or --builtin is required", 1, 1);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw mcurves::Error("cannot open output file '" + out_path + "'");
    out << text;
}

int run(int argc, char** argv) {
    CLI::App app{"differential-geometric toolkit for spacelike curves with "
                 "timelike binormal in a flat (-,+,+) metric"};
    app.require_subcommand(1);

    CommonOptions frenet_opt, involute_opt, indicatrix_opt, geodesic_opt;
    std::vector<double> frenet_at;

    CLI::App* cmd_frenet =
        app.add_subcommand("frenet", "frame, curvatures and rotation axis at chosen s");
    add_common(cmd_frenet, frenet_opt, false);
    cmd_frenet->add_option("--at", frenet_at, "parameter values (repeatable)");

    CLI::App* cmd_involute = app.add_subcommand("involute", "sample an involute curve");
    add_common(cmd_involute, involute_opt, false);

    CLI::App* cmd_indicatrix = app.add_subcommand(
        "indicatrix", "sample a spherical image of the involute frame plus its natural lift");
    add_common(cmd_indicatrix, indicatrix_opt, true);

    CLI::App* cmd_geodesic = app.add_subcommand(
        "geodesic-check", "integral-curve verdicts for the natural lift curves");
    add_common(cmd_geodesic, geodesic_opt, true);

    // wcurve takes generator parameters instead of a spec.
    std::string w_kind;
    double w_kappa = 0.0, w_tau = 0.0;
    CommonOptions wcurve_opt;
    CLI::App* cmd_wcurve =
        app.add_subcommand("wcurve", "generate a constant-curvature curve and verify it");
    cmd_wcurve->add_option("--kind", w_kind, "hyperbolic | circular | circle")->required();
    cmd_wcurve->add_option("--kappa", w_kappa, "curvature (> 0)")->required();
    cmd_wcurve->add_option("--tau", w_tau, "torsion");
    cmd_wcurve->add_option("--format", wcurve_opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_wcurve->add_option("--out", wcurve_opt.out_path, "output path");
    cmd_wcurve->add_option("--samples", wcurve_opt.samples, "sample count override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // usage errors are exit code 1, whatever CLI11 prefers
    }

    using namespace mcurves;

    if (cmd_frenet->parsed()) {
        const CurveSpec spec = load_spec(frenet_opt);
        if (frenet_at.empty()) {
            const int n = frenet_opt.samples > 0 ? frenet_opt.samples : 9;
            const auto curve = make_curve(spec);
            const double m = curve->derivative_margin();
            for (int i = 0; i < n; ++i)
                frenet_at.push_back(curve->domain().lo + m +
                                    (curve->domain().length() - 2.0 * m) * i / (n - 1));
        }
        const FrenetReport report = build_frenet_report(spec, frenet_at);
        if (frenet_opt.out_path.empty() && frenet_opt.format == "csv") {
            std::cout << render_frenet_report_text(report);
        } else {
            emit(render_frenet_report(report, parse_export_format(frenet_opt.format)),
                 frenet_opt.out_path);
        }
        return 0;
    }

    if (cmd_involute->parsed()) {
        const CurveSpec spec = load_spec(involute_opt);
        const double c = involute_opt.c_given ? involute_opt.c : spec.c;
        const int n = involute_opt.samples > 0 ? involute_opt.samples : spec.n_samples;
        const InvoluteOffset mode =
            involute_opt.abs_offset ? InvoluteOffset::Absolute : InvoluteOffset::Signed;
        const PolylineExport doc = build_involute_export(spec, c, mode, n);
        emit(render(doc, parse_export_format(involute_opt.format)), involute_opt.out_path);
        return 0;
    }

    if (cmd_indicatrix->parsed()) {
        const CurveSpec spec = load_spec(indicatrix_opt);
        const double c = indicatrix_opt.c_given ? indicatrix_opt.c : spec.c;
        const int n = indicatrix_opt.samples > 0 ? indicatrix_opt.samples : spec.n_samples;
        const InvoluteOffset mode =
            indicatrix_opt.abs_offset ? InvoluteOffset::Absolute : InvoluteOffset::Signed;
        if (indicatrix_opt.kind.empty())
            throw ParseError("indicatrix: --kind is required", 1, 1);
        const IndicatrixKind kind = parse_indicatrix_kind(indicatrix_opt.kind);
        const PolylineExport doc = build_indicatrix_export(spec, c, mode, kind, n);
        emit(render(doc, parse_export_format(indicatrix_opt.format)), indicatrix_opt.out_path);
        return 0;
    }

    if (cmd_geodesic->parsed()) {
        const CurveSpec spec = load_spec(geodesic_opt);
        const std::string which = geodesic_opt.kind.empty() ? "all" : geodesic_opt.kind;
        const int n = geodesic_opt.samples > 0 ? geodesic_opt.samples : 64;
        const double tol =
            geodesic_opt.tol > 0.0 ? geodesic_opt.tol : tolerance::residual_finite_diff;
        const auto verdicts = run_geodesic_checks(spec, which, n, tol);
        if (geodesic_opt.out_path.empty() && geodesic_opt.format == "csv") {
            std::cout << render_verdicts_text(verdicts);
        } else {
            emit(render_verdicts(verdicts, parse_export_format(geodesic_opt.format)),
                 geodesic_opt.out_path);
        }
        return 0;
    }

    if (cmd_wcurve->parsed()) {
        CurveSpecType kind;
        if (w_kind == "hyperbolic") kind = CurveSpecType::WHyperbolic;
        else if (w_kind == "circular") kind = CurveSpecType::WCircular;
        else if (w_kind == "circle") kind = CurveSpecType::WCircle;
        else throw ParseError("wcurve: --kind must be hyperbolic, circular or circle", 1, 1);

        const int n = wcurve_opt.samples > 0 ? wcurve_opt.samples : 501;
        const PolylineExport doc =
            build_wcurve_export(kind, w_kappa, w_tau, Interval{-5.0, 5.0}, n);
        emit(render(doc, parse_export_format(wcurve_opt.format)), wcurve_opt.out_path);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const mcurves::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const mcurves::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
