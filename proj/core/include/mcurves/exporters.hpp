#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcurves/curve_spec.hpp"
#include "mcurves/indicatrix.hpp"

// Figure-data exports and command reports. Exports are deterministic:
// CSV floats use fixed 17-significant-digit scientific notation, JSON
// floats the shortest round-trip form, and metadata keeps insertion order,
// so identical inputs give byte-identical documents. Every export embeds
// enough metadata (curve spec, constants, tolerances) to re-validate its
// rows after a round trip through disk.

namespace mcurves {

enum class ExportFormat { Csv, Json };

ExportFormat parse_export_format(const std::string& name);  // "csv" | "json"

struct PolylineRow {
    double s = 0.0;
    std::optional<Vec3> point;  // absent on guard rows
    bool guard = false;
    std::string membership;  // "", "S12", "H02", "neither"
};

struct Polyline {
    std::string label;
    std::optional<ModelSphere> sphere;  // stamped for indicatrix series
    std::vector<PolylineRow> rows;
};

struct PolylineExport {
    std::string label;
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<Polyline> series;

    const std::string* find_meta(const std::string& key) const;
};

std::string render(const PolylineExport& doc, ExportFormat format);
PolylineExport parse_export(const std::string& text, ExportFormat format);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string msg);
};

/// Row-level self-validation driven by the document's own metadata:
/// strictly increasing s, finite points, guard marking consistent with the
/// stamped guard band, membership columns re-checked at the stamped
/// tolerance, and (when the spec is embedded) full reconstruction of every
/// point at the stamped tolerance.
ValidationReport validate_export(const PolylineExport& doc);

/// 17-significant-digit scientific rendering used by the CSV writer.
std::string csv_double(double v);

// --- command cores -------------------------------------------------------

struct FrenetReportRow {
    double s = 0.0;
    FrenetApparatus frame;
    bool axis_defined = false;  // false at |kappa| == |tau| parameters
    DarbouxData axis;           // valid when axis_defined
};

struct FrenetReport {
    std::string label;
    std::vector<FrenetReportRow> rows;
};

FrenetReport build_frenet_report(const CurveSpec& spec, const std::vector<double>& at);
std::string render_frenet_report(const FrenetReport& report, ExportFormat format);
std::string render_frenet_report_text(const FrenetReport& report);

PolylineExport build_involute_export(const CurveSpec& spec, double c, InvoluteOffset mode,
                                     int n_samples);

PolylineExport build_indicatrix_export(const CurveSpec& spec, double c, InvoluteOffset mode,
                                       IndicatrixKind kind, int n_samples);

PolylineExport build_wcurve_export(CurveSpecType kind, double kappa, double tau,
                                   Interval domain, int n_samples);

IndicatrixKind parse_indicatrix_kind(const std::string& name);  // tangent|normal|binormal

/// which: tangent | normal | binormal | all
std::vector<GeodesicVerdict> run_geodesic_checks(const CurveSpec& spec,
                                                 const std::string& which, int n_samples,
                                                 double tol);

std::string render_verdicts(const std::vector<GeodesicVerdict>& verdicts, ExportFormat format);
std::string render_verdicts_text(const std::vector<GeodesicVerdict>& verdicts);

}  // namespace mcurves
