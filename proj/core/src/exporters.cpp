#include "mcurves/exporters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "mcurves/errors.hpp"

namespace mcurves {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kCsvSentinel = "# mcurves-export";
constexpr const char* kCsvHeader = "series,s,x1,x2,x3,guard,membership";

std::string text_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

ExportFormat parse_export_format(const std::string& name) {
    if (name == "csv") return ExportFormat::Csv;
    if (name == "json") return ExportFormat::Json;
    throw ParseError("unknown export format '" + name + "' (expected csv or json)", 1, 1);
}

IndicatrixKind parse_indicatrix_kind(const std::string& name) {
    if (name == "tangent") return IndicatrixKind::Tangent;
    if (name == "normal") return IndicatrixKind::PrincipalNormal;
    if (name == "binormal") return IndicatrixKind::Binormal;
    throw ParseError("unknown indicatrix kind '" + name +
                         "' (expected tangent, normal or binormal)",
                     1, 1);
}

const std::string* PolylineExport::find_meta(const std::string& key) const {
    for (const auto& [k, v] : metadata)
        if (k == key) return &v;
    return nullptr;
}

void ValidationReport::fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
}

// --- rendering -------------------------------------------------------------

namespace {

std::string render_csv(const PolylineExport& doc) {
    std::ostringstream out;
    out << kCsvSentinel << "\n";
    out << "# label: " << doc.label << "\n";
    for (const auto& [k, v] : doc.metadata) out << "# " << k << ": " << v << "\n";
    out << kCsvHeader << "\n";
    for (const Polyline& series : doc.series) {
        for (const PolylineRow& row : series.rows) {
            out << series.label << ',' << csv_double(row.s) << ',';
            if (row.point) {
                out << csv_double(row.point->x1) << ',' << csv_double(row.point->x2) << ','
                    << csv_double(row.point->x3);
            } else {
                out << ",,";
            }
            out << ',' << (row.guard ? '1' : '0') << ',' << row.membership << "\n";
        }
    }
    return out.str();
}

std::string render_json(const PolylineExport& doc) {
    ordered_json j;
    j["format"] = "mcurves-export";
    j["label"] = doc.label;
    ordered_json meta = ordered_json::object();
    for (const auto& [k, v] : doc.metadata) meta[k] = v;
    j["metadata"] = meta;
    j["series"] = ordered_json::array();
    for (const Polyline& series : doc.series) {
        ordered_json s;
        s["label"] = series.label;
        if (series.sphere)
            s["sphere"] = to_string(*series.sphere);
        else
            s["sphere"] = nullptr;
        s["rows"] = ordered_json::array();
        for (const PolylineRow& row : series.rows) {
            ordered_json r;
            r["s"] = row.s;
            if (row.point)
                r["point"] = {row.point->x1, row.point->x2, row.point->x3};
            else
                r["point"] = nullptr;
            r["guard"] = row.guard;
            r["membership"] = row.membership;
            s["rows"].push_back(r);
        }
        j["series"].push_back(s);
    }
    return j.dump(2) + "\n";
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == sep) {
            out.push_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

PolylineExport parse_csv(const std::string& text) {
    PolylineExport doc;
    std::istringstream in(text);
    std::string line;
    bool saw_header = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line == kCsvSentinel) continue;
            const std::size_t colon = line.find(": ");
            if (colon == std::string::npos)
                throw ParseError("export: malformed metadata line", line_no, 1);
            const std::string key = line.substr(2, colon - 2);
            const std::string value = line.substr(colon + 2);
            if (key == "label")
                doc.label = value;
            else
                doc.metadata.emplace_back(key, value);
            continue;
        }
        if (!saw_header) {
            if (line != kCsvHeader)
                throw ParseError("export: missing column header", line_no, 1);
            saw_header = true;
            continue;
        }
        const std::vector<std::string> cells = split(line, ',');
        if (cells.size() != 7)
            throw ParseError("export: expected 7 columns", line_no, 1);

        PolylineRow row;
        row.s = std::stod(cells[1]);
        if (!cells[2].empty() || !cells[3].empty() || !cells[4].empty())
            row.point = Vec3{std::stod(cells[2]), std::stod(cells[3]), std::stod(cells[4])};
        row.guard = cells[5] == "1";
        row.membership = cells[6];

        auto it = std::find_if(doc.series.begin(), doc.series.end(),
                               [&](const Polyline& p) { return p.label == cells[0]; });
        if (it == doc.series.end()) {
            doc.series.push_back({cells[0], std::nullopt, {}});
            it = doc.series.end() - 1;
        }
        it->rows.push_back(row);
    }
    for (Polyline& series : doc.series) {
        if (const std::string* sphere = doc.find_meta("sphere." + series.label)) {
            if (*sphere == "S12") series.sphere = ModelSphere::S12;
            if (*sphere == "H02") series.sphere = ModelSphere::H02;
        }
    }
    return doc;
}

PolylineExport parse_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    PolylineExport doc;
    doc.label = j.at("label").get<std::string>();
    for (const auto& [k, v] : j.at("metadata").items())
        doc.metadata.emplace_back(k, v.get<std::string>());
    for (const auto& s : j.at("series")) {
        Polyline series;
        series.label = s.at("label").get<std::string>();
        if (!s.at("sphere").is_null()) {
            const std::string name = s.at("sphere").get<std::string>();
            series.sphere = name == "S12" ? ModelSphere::S12 : ModelSphere::H02;
        }
        for (const auto& r : s.at("rows")) {
            PolylineRow row;
            row.s = r.at("s").get<double>();
            if (!r.at("point").is_null())
                row.point = Vec3{r.at("point")[0].get<double>(), r.at("point")[1].get<double>(),
                                 r.at("point")[2].get<double>()};
            row.guard = r.at("guard").get<bool>();
            row.membership = r.at("membership").get<std::string>();
            series.rows.push_back(row);
        }
        doc.series.push_back(std::move(series));
    }
    return doc;
}

}  // namespace

std::string render(const PolylineExport& doc, ExportFormat format) {
    return format == ExportFormat::Csv ? render_csv(doc) : render_json(doc);
}

PolylineExport parse_export(const std::string& text, ExportFormat format) {
    return format == ExportFormat::Csv ? parse_csv(text) : parse_json(text);
}

// --- validation ------------------------------------------------------------

namespace {

double meta_double(const PolylineExport& doc, const std::string& key, double fallback) {
    const std::string* v = doc.find_meta(key);
    return v ? std::stod(*v) : fallback;
}

bool meta_has(const PolylineExport& doc, const std::string& key, const std::string& item) {
    const std::string* v = doc.find_meta(key);
    if (!v) return false;
    for (const std::string& tok : split(*v, ','))
        if (tok == item) return true;
    return false;
}

}  // namespace

ValidationReport validate_export(const PolylineExport& doc) {
    ValidationReport rep;

    const bool has_guard_band = doc.find_meta("guard_lo") != nullptr;
    const double guard_lo = meta_double(doc, "guard_lo", 0.0);
    const double guard_hi = meta_double(doc, "guard_hi", 0.0);
    const double spill = meta_double(doc, "guard_spill", 0.0);
    const bool has_edges = doc.find_meta("edge_margin") != nullptr;
    const double edge_margin = meta_double(doc, "edge_margin", 0.0);
    const double domain_lo = meta_double(doc, "domain_lo", 0.0);
    const double domain_hi = meta_double(doc, "domain_hi", 0.0);

    const auto near_cusp = [&](double s) {
        return has_guard_band && s >= guard_lo - spill && s <= guard_hi + spill;
    };
    const auto near_edge = [&](double s) {
        return has_edges &&
               (s <= domain_lo + edge_margin || s >= domain_hi - edge_margin);
    };

    for (const Polyline& series : doc.series) {
        for (std::size_t i = 0; i < series.rows.size(); ++i) {
            const PolylineRow& row = series.rows[i];
            if (i > 0 && row.s <= series.rows[i - 1].s) {
                rep.fail(series.label + ": rows not strictly sorted by s");
                break;
            }
            if (row.guard && row.point)
                rep.fail(series.label + ": guard row carries coordinates");
            if (!row.guard && !row.point)
                rep.fail(series.label + ": regular row missing coordinates");
            if (row.point && !row.point->is_finite())
                rep.fail(series.label + ": non-finite coordinates");
            if (row.guard) {
                if (!near_cusp(row.s) && !near_edge(row.s))
                    rep.fail(series.label + ": guard row outside the stamped bands");
            } else if (has_guard_band && row.s > guard_lo && row.s < guard_hi) {
                rep.fail(series.label + ": row inside the guard band not marked");
            }
        }
    }

    if (meta_has(doc, "validators", "membership")) {
        const double tol = meta_double(doc, "tol_membership", tolerance::membership);
        for (const Polyline& series : doc.series) {
            if (!series.sphere) continue;
            const SphereMembership want = *series.sphere == ModelSphere::S12
                                              ? SphereMembership::OnS12
                                              : SphereMembership::OnH02;
            for (const PolylineRow& row : series.rows) {
                if (!row.point) continue;
                if (sphere_membership(*row.point, tol) != want) {
                    rep.fail(series.label + ": point off " + to_string(*series.sphere) +
                             " at s = " + text_double(row.s));
                    break;
                }
            }
        }
    }

    if (meta_has(doc, "validators", "unit_speed")) {
        // Row-level speed check from the sampled points themselves.
        const double tol = meta_double(doc, "tol_unit_speed", 1e-3);
        for (const Polyline& series : doc.series) {
            for (std::size_t i = 1; i + 1 < series.rows.size(); ++i) {
                const PolylineRow& a = series.rows[i - 1];
                const PolylineRow& b = series.rows[i + 1];
                if (!a.point || !b.point) continue;
                const Vec3 v = (*b.point - *a.point) / (b.s - a.s);
                if (std::abs(minkowski_inner(v, v) - 1.0) > tol) {
                    rep.fail(series.label + ": sampled speed off unit at s = " +
                             text_double(series.rows[i].s));
                    break;
                }
            }
        }
    }

    if (meta_has(doc, "validators", "reconstruct")) {
        const std::string* spec_text = doc.find_meta("spec");
        const std::string* content = doc.find_meta("content");
        if (!spec_text || !content) {
            rep.fail("reconstruct validator without embedded spec");
            return rep;
        }
        const double tol = meta_double(doc, "tol_reconstruct", 1e-12);
        try {
            const CurveSpec spec = parse_curve_spec(*spec_text);
            const auto curve = make_curve(spec);
            const double c = meta_double(doc, "c", spec.c);
            const InvoluteOffset mode = doc.find_meta("offset") && *doc.find_meta("offset") ==
                                                                       std::string("absolute")
                                            ? InvoluteOffset::Absolute
                                            : InvoluteOffset::Signed;

            auto check_series = [&](const Polyline& series, auto&& eval) {
                for (const PolylineRow& row : series.rows) {
                    if (!row.point) continue;
                    const Vec3 expect = eval(row.s);
                    if (euclidean_distance(expect, *row.point) > tol) {
                        rep.fail(series.label + ": reconstruction mismatch at s = " +
                                 text_double(row.s));
                        return;
                    }
                }
            };

            if (*content == "wcurve") {
                for (const Polyline& series : doc.series)
                    check_series(series, [&](double s) { return curve->position(s); });
            } else if (*content == "involute") {
                const InvoluteCurve inv = involute(curve, c, mode);
                for (const Polyline& series : doc.series)
                    check_series(series, [&](double s) { return inv.position(s); });
            } else if (*content == "indicatrix") {
                const InvoluteCurve inv = involute(curve, c, mode);
                const IndicatrixKind kind = parse_indicatrix_kind(*doc.find_meta("kind"));
                const IndicatrixCurve ind(inv, kind);
                for (const Polyline& series : doc.series) {
                    if (series.label == "indicatrix")
                        check_series(series, [&](double s) { return ind.point(s); });
                    else if (series.label == "natural_lift")
                        check_series(series, [&](double s) { return ind.velocity(s); });
                }
            } else {
                rep.fail("unknown content tag '" + *content + "'");
            }
        } catch (const Error& e) {
            rep.fail(std::string("reconstruction failed: ") + e.what());
        }
    }
    return rep;
}

// --- builders ---------------------------------------------------------------

namespace {

struct SampleRange {
    double lo, hi;
    double at(int i, int n) const { return lo + (hi - lo) * i / (n - 1); }
};

SampleRange sampling_range(const ParametricCurve& curve, double extra_margin) {
    const double m = curve.derivative_margin() + extra_margin;
    const Interval dom = curve.domain();
    if (dom.length() <= 2.0 * m) throw OutOfDomainError("export: domain too small to sample");
    return {dom.lo + m, dom.hi - m};
}

void stamp(PolylineExport& doc, const std::string& key, const std::string& value) {
    doc.metadata.emplace_back(key, value);
}

void stamp(PolylineExport& doc, const std::string& key, double value) {
    stamp(doc, key, text_double(value));
}

}  // namespace

PolylineExport build_involute_export(const CurveSpec& spec, double c, InvoluteOffset mode,
                                     int n_samples) {
    if (n_samples < 2) throw Error("build_involute_export: n_samples must be >= 2");
    const auto curve = make_curve(spec);
    const InvoluteCurve inv = involute(curve, c, mode);
    const SampleRange range = sampling_range(*curve, 0.0);

    PolylineExport doc;
    doc.label = "involute";
    stamp(doc, "tool", "mcurves");
    stamp(doc, "content", "involute");
    stamp(doc, "spec", to_text(spec));
    stamp(doc, "c", c);
    stamp(doc, "offset", to_string(mode));
    stamp(doc, "n_samples", std::to_string(n_samples));
    stamp(doc, "guard_lo", c - inv.guard_width());
    stamp(doc, "guard_hi", c + inv.guard_width());
    stamp(doc, "guard_spill", 0.0);
    stamp(doc, "tol_reconstruct", 1e-12);
    stamp(doc, "validators", "structure,reconstruct");

    Polyline series;
    series.label = "involute";
    for (int i = 0; i < n_samples; ++i) {
        const double s = range.at(i, n_samples);
        PolylineRow row;
        row.s = s;
        if (inv.in_guard_band(s)) {
            row.guard = true;
        } else {
            row.point = inv.position(s);
        }
        series.rows.push_back(row);
    }
    doc.series.push_back(std::move(series));
    return doc;
}

PolylineExport build_indicatrix_export(const CurveSpec& spec, double c, InvoluteOffset mode,
                                       IndicatrixKind kind, int n_samples) {
    if (n_samples < 2) throw Error("build_indicatrix_export: n_samples must be >= 2");
    const auto curve = make_curve(spec);
    const InvoluteCurve inv = involute(curve, c, mode);
    const IndicatrixCurve ind(inv, kind);
    const double lift_spill = 2.0 * ind.fd_step();
    const SampleRange range = sampling_range(*curve, 0.0);

    Polyline image;
    image.label = "indicatrix";
    image.sphere = ind.sphere();
    Polyline lift;
    lift.label = "natural_lift";

    // Both series share one grid. A row whose stencil cannot be evaluated
    // (cusp band or domain edge) is emitted as a guard row. The membership
    // tolerance is stamped from the worst observed defect (floored at the
    // library default), so the document self-validates.
    double max_defect = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double s = range.at(i, n_samples);
        const bool banned = inv.in_guard_band(s);

        PolylineRow img_row;
        img_row.s = s;
        img_row.guard = banned;
        if (!banned) {
            const Vec3 p = ind.point(s);
            img_row.point = p;
            max_defect = std::max(
                max_defect, std::abs(minkowski_inner(p, p) - sphere_sign(ind.sphere())));
        }
        image.rows.push_back(img_row);

        PolylineRow lift_row;
        lift_row.s = s;
        lift_row.guard = banned;
        if (!banned) {
            try {
                lift_row.point = ind.velocity(s);
            } catch (const SingularParameterError&) {
                lift_row.guard = true;
            } catch (const OutOfDomainError&) {
                lift_row.guard = true;
            } catch (const StepTooLargeError&) {
                lift_row.guard = true;
            }
        }
        lift.rows.push_back(lift_row);
    }
    const double membership_tol = std::max(tolerance::membership, 2.0 * max_defect);
    for (PolylineRow& row : image.rows)
        if (row.point) row.membership = to_string(sphere_membership(*row.point, membership_tol));
    for (PolylineRow& row : lift.rows)
        if (row.point) row.membership = to_string(sphere_membership(*row.point, membership_tol));

    PolylineExport doc;
    doc.label = "indicatrix";
    stamp(doc, "tool", "mcurves");
    stamp(doc, "content", "indicatrix");
    stamp(doc, "kind", to_string(kind));
    stamp(doc, "case", to_string(ind.darboux_case()));
    stamp(doc, "sphere.indicatrix", to_string(ind.sphere()));
    stamp(doc, "spec", to_text(spec));
    stamp(doc, "c", c);
    stamp(doc, "offset", to_string(mode));
    stamp(doc, "n_samples", std::to_string(n_samples));
    stamp(doc, "guard_lo", c - inv.guard_width());
    stamp(doc, "guard_hi", c + inv.guard_width());
    stamp(doc, "guard_spill", lift_spill);
    stamp(doc, "domain_lo", curve->domain().lo);
    stamp(doc, "domain_hi", curve->domain().hi);
    stamp(doc, "edge_margin", lift_spill + curve->derivative_margin());
    stamp(doc, "tol_membership", membership_tol);
    stamp(doc, "tol_reconstruct", 1e-12);
    stamp(doc, "validators", "structure,membership,reconstruct");

    // A constant image (binormal of a helix) collapses to one row.
    double spread = 0.0;
    const PolylineRow* first = nullptr;
    for (const PolylineRow& row : image.rows) {
        if (!row.point) continue;
        if (!first) first = &row;
        spread = std::max(spread, euclidean_distance(*row.point, *first->point));
    }
    const bool degenerate = first != nullptr && spread <= 1e-6;
    stamp(doc, "degenerate", degenerate ? "true" : "false");
    if (degenerate) {
        image.rows = {*first};
        Polyline collapsed_lift;
        collapsed_lift.label = lift.label;
        for (const PolylineRow& row : lift.rows)
            if (row.s == first->s) collapsed_lift.rows.push_back(row);
        lift = std::move(collapsed_lift);
    }

    doc.series.push_back(std::move(image));
    doc.series.push_back(std::move(lift));
    return doc;
}

PolylineExport build_wcurve_export(CurveSpecType kind, double kappa, double tau,
                                   Interval domain, int n_samples) {
    if (n_samples < 2) throw Error("build_wcurve_export: n_samples must be >= 2");
    CurveSpec spec;
    spec.type = kind;
    spec.kappa = kappa;
    spec.tau = tau;
    spec.domain = domain;
    spec.n_samples = n_samples;
    spec.label = to_string(kind);
    if (kind == CurveSpecType::WCircle) spec.tau.reset();

    const auto curve = make_curve(spec);

    // Round-trip verification: the frame must return the requested pair.
    double kappa_err = 0.0, tau_err = 0.0;
    const SampleRange probe = sampling_range(*curve, 0.0);
    for (int i = 0; i < 9; ++i) {
        const FrenetApparatus fr = frenet_apparatus(*curve, probe.at(i, 9));
        kappa_err = std::max(kappa_err, std::abs(fr.kappa - kappa));
        tau_err = std::max(tau_err, std::abs(fr.tau - (kind == CurveSpecType::WCircle ? 0.0 : tau)));
    }
    const UnitSpeedReport speed = unit_speed_check(*curve);

    Polyline series;
    series.label = "wcurve";
    const SampleRange range = sampling_range(*curve, 0.0);
    for (int i = 0; i < n_samples; ++i) {
        const double s = range.at(i, n_samples);
        series.rows.push_back({s, curve->position(s), false, ""});
    }

    // Stamp the row-level speed tolerance from the sampled defect itself
    // (central differences over the grid), floored at 1e-6.
    double fd_speed_defect = 0.0;
    for (std::size_t i = 1; i + 1 < series.rows.size(); ++i) {
        const Vec3 v = (*series.rows[i + 1].point - *series.rows[i - 1].point) /
                       (series.rows[i + 1].s - series.rows[i - 1].s);
        fd_speed_defect = std::max(fd_speed_defect, std::abs(minkowski_inner(v, v) - 1.0));
    }

    PolylineExport doc;
    doc.label = "wcurve";
    stamp(doc, "tool", "mcurves");
    stamp(doc, "content", "wcurve");
    stamp(doc, "spec", to_text(spec));
    stamp(doc, "kappa", kappa);
    if (kind != CurveSpecType::WCircle) stamp(doc, "tau", tau);
    stamp(doc, "roundtrip_kappa_err", kappa_err);
    stamp(doc, "roundtrip_tau_err", tau_err);
    stamp(doc, "unit_speed_max_dev", speed.max_deviation);
    stamp(doc, "n_samples", std::to_string(n_samples));
    stamp(doc, "tol_reconstruct", 1e-12);
    stamp(doc, "tol_unit_speed", std::max(1e-6, 2.0 * fd_speed_defect));
    stamp(doc, "validators", "structure,reconstruct,unit_speed");

    doc.series.push_back(std::move(series));
    return doc;
}

// --- frenet report -----------------------------------------------------------

FrenetReport build_frenet_report(const CurveSpec& spec, const std::vector<double>& at) {
    const auto curve = make_curve(spec);
    FrenetReport report;
    report.label = spec.label;
    for (double s : at) {
        FrenetReportRow row;
        row.s = s;
        row.frame = frenet_apparatus(*curve, s);
        try {
            row.axis = darboux(row.frame);
            row.axis_defined = true;
        } catch (const NullDarbouxError&) {
            row.axis_defined = false;
        }
        report.rows.push_back(row);
    }
    return report;
}

namespace {

std::string vec_text(const Vec3& v) {
    return "(" + text_double(v.x1) + ", " + text_double(v.x2) + ", " + text_double(v.x3) + ")";
}

}  // namespace

std::string render_frenet_report_text(const FrenetReport& report) {
    std::ostringstream out;
    out << "curve: " << report.label << "\n";
    for (const FrenetReportRow& row : report.rows) {
        out << "s = " << text_double(row.s) << "\n";
        out << "  t = " << vec_text(row.frame.t) << "\n";
        out << "  n = " << vec_text(row.frame.n) << "\n";
        out << "  b = " << vec_text(row.frame.b) << "\n";
        out << "  kappa = " << text_double(row.frame.kappa)
            << ", tau = " << text_double(row.frame.tau) << "\n";
        if (row.axis_defined) {
            out << "  axis: " << to_string(row.axis.kind)
                << ", |omega| = " << text_double(row.axis.norm_omega)
                << ", theta = " << text_double(row.axis.theta)
                << ", direction = " << vec_text(row.axis.axis) << "\n";
        } else {
            out << "  axis: undefined (|kappa| == |tau|)\n";
        }
    }
    return out.str();
}

std::string render_frenet_report(const FrenetReport& report, ExportFormat format) {
    if (format == ExportFormat::Csv) {
        std::ostringstream out;
        out << "# mcurves-frenet\n# label: " << report.label << "\n";
        out << "s,t1,t2,t3,n1,n2,n3,b1,b2,b3,kappa,tau,axis_case,norm_omega,theta\n";
        for (const FrenetReportRow& row : report.rows) {
            out << csv_double(row.s) << ',' << csv_double(row.frame.t.x1) << ','
                << csv_double(row.frame.t.x2) << ',' << csv_double(row.frame.t.x3) << ','
                << csv_double(row.frame.n.x1) << ',' << csv_double(row.frame.n.x2) << ','
                << csv_double(row.frame.n.x3) << ',' << csv_double(row.frame.b.x1) << ','
                << csv_double(row.frame.b.x2) << ',' << csv_double(row.frame.b.x3) << ','
                << csv_double(row.frame.kappa) << ',' << csv_double(row.frame.tau) << ',';
            if (row.axis_defined)
                out << to_string(row.axis.kind) << ',' << csv_double(row.axis.norm_omega) << ','
                    << csv_double(row.axis.theta);
            else
                out << "undefined,,";
            out << "\n";
        }
        return out.str();
    }

    ordered_json j;
    j["format"] = "mcurves-frenet";
    j["label"] = report.label;
    j["rows"] = ordered_json::array();
    for (const FrenetReportRow& row : report.rows) {
        ordered_json r;
        r["s"] = row.s;
        r["t"] = {row.frame.t.x1, row.frame.t.x2, row.frame.t.x3};
        r["n"] = {row.frame.n.x1, row.frame.n.x2, row.frame.n.x3};
        r["b"] = {row.frame.b.x1, row.frame.b.x2, row.frame.b.x3};
        r["kappa"] = row.frame.kappa;
        r["tau"] = row.frame.tau;
        if (row.axis_defined) {
            r["axis_case"] = to_string(row.axis.kind);
            r["norm_omega"] = row.axis.norm_omega;
            r["theta"] = row.axis.theta;
            r["axis"] = {row.axis.axis.x1, row.axis.axis.x2, row.axis.axis.x3};
        } else {
            r["axis_case"] = "undefined";
        }
        j["rows"].push_back(r);
    }
    return j.dump(2) + "\n";
}

// --- verdicts ----------------------------------------------------------------

std::vector<GeodesicVerdict> run_geodesic_checks(const CurveSpec& spec,
                                                 const std::string& which, int n_samples,
                                                 double tol) {
    const auto curve = make_curve(spec);
    std::vector<IndicatrixKind> kinds;
    if (which == "all")
        kinds = {IndicatrixKind::Tangent, IndicatrixKind::PrincipalNormal,
                 IndicatrixKind::Binormal};
    else
        kinds = {parse_indicatrix_kind(which)};

    std::vector<GeodesicVerdict> out;
    for (IndicatrixKind kind : kinds) {
        switch (kind) {
            case IndicatrixKind::Tangent:
                out.push_back(verdict_tangent_lift(curve, n_samples, tol));
                break;
            case IndicatrixKind::PrincipalNormal:
                out.push_back(verdict_normal_lift(curve, n_samples, tol));
                break;
            case IndicatrixKind::Binormal:
                out.push_back(verdict_binormal_lift(curve, n_samples, tol));
                break;
        }
    }
    return out;
}

std::string render_verdicts_text(const std::vector<GeodesicVerdict>& verdicts) {
    std::ostringstream out;
    for (const GeodesicVerdict& v : verdicts) {
        out << to_string(v.kind) << " lift: integral curve of the geodesic spray = "
            << (v.is_geodesic ? "true" : "false") << "\n";
        out << "  sphere = " << to_string(v.sphere) << ", axis case = "
            << to_string(v.darboux_case) << ", reason = " << to_string(v.reason) << "\n";
        out << "  max residual = " << text_double(v.max_residual) << " (tol "
            << text_double(v.tolerance_used) << "), condition deviation = "
            << text_double(v.condition_deviation) << ", routes agree = "
            << (v.routes_agree ? "yes" : "no");
        if (v.degenerate_indicatrix) out << ", image degenerate (single point)";
        if (v.undefined_samples > 0)
            out << ", undefined at " << v.undefined_samples
                << " samples (|kappa| == |tau|)";
        out << "\n";
    }
    return out.str();
}

std::string render_verdicts(const std::vector<GeodesicVerdict>& verdicts, ExportFormat format) {
    if (format == ExportFormat::Csv) {
        std::ostringstream out;
        out << "# mcurves-verdicts\n";
        out << "kind,case,sphere,is_geodesic,reason,max_residual,condition_deviation,"
               "routes_agree,degenerate,undefined_samples,tol,sample_count\n";
        for (const GeodesicVerdict& v : verdicts) {
            out << to_string(v.kind) << ',' << to_string(v.darboux_case) << ','
                << to_string(v.sphere) << ',' << (v.is_geodesic ? "true" : "false") << ','
                << to_string(v.reason) << ',' << csv_double(v.max_residual) << ','
                << csv_double(v.condition_deviation) << ','
                << (v.routes_agree ? "true" : "false") << ','
                << (v.degenerate_indicatrix ? "true" : "false") << ','
                << v.undefined_samples << ',' << csv_double(v.tolerance_used) << ','
                << v.sample_count << "\n";
        }
        return out.str();
    }

    ordered_json arr = ordered_json::array();
    for (const GeodesicVerdict& v : verdicts) {
        ordered_json j;
        j["kind"] = to_string(v.kind);
        j["case"] = to_string(v.darboux_case);
        j["sphere"] = to_string(v.sphere);
        j["is_geodesic"] = v.is_geodesic;
        j["reason"] = to_string(v.reason);
        j["max_residual"] = v.max_residual;
        j["condition_deviation"] = v.condition_deviation;
        j["routes_agree"] = v.routes_agree;
        j["degenerate_indicatrix"] = v.degenerate_indicatrix;
        j["undefined_samples"] = v.undefined_samples;
        j["tolerances"] = {{"residual", v.tolerance_used}};
        j["sample_count"] = v.sample_count;
        arr.push_back(j);
    }
    ordered_json doc;
    doc["format"] = "mcurves-verdicts";
    doc["verdicts"] = arr;
    return doc.dump(2) + "\n";
}

}  // namespace mcurves
