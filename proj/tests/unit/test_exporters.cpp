#include <doctest.h>

#include <cmath>
#include <random>

#include "mcurves/errors.hpp"
#include "mcurves/exporters.hpp"

using namespace mcurves;

namespace {

CurveSpec example_spec() { return builtin_spec("example_3_1_7"); }

const PolylineRow* row_at(const Polyline& series, double s, double tol = 1e-12) {
    for (const PolylineRow& row : series.rows)
        if (std::abs(row.s - s) <= tol) return &row;
    return nullptr;
}

}  // namespace

TEST_CASE("csv float rendering round-trips exactly") {
    std::mt19937 gen(7u);
    std::uniform_real_distribution<double> d(-1e6, 1e6);
    for (int i = 0; i < 200; ++i) {
        const double x = d(gen) * std::pow(10.0, i % 13 - 6);
        CHECK(std::stod(csv_double(x)) == x);
    }
    CHECK(csv_double(1.0) == "1.0000000000000000e+00");
}

TEST_CASE("involute export") {
    const PolylineExport doc = build_involute_export(example_spec(), 2.0,
                                                     InvoluteOffset::Signed, 501);
    REQUIRE(doc.series.size() == 1);
    const Polyline& series = doc.series[0];
    CHECK(series.rows.size() == 501);

    const PolylineRow* origin = row_at(series, 0.0);
    REQUIRE(origin != nullptr);
    REQUIRE(origin->point.has_value());
    CHECK(origin->point->x1 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(origin->point->x2 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(origin->point->x3 == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));

    // The sample falling on the cusp is a guard row.
    const PolylineRow* cusp = row_at(series, 2.0);
    REQUIRE(cusp != nullptr);
    CHECK(cusp->guard);
    CHECK_FALSE(cusp->point.has_value());

    const ValidationReport rep = validate_export(doc);
    CHECK(rep.ok);
}

TEST_CASE("csv and json carry identical values") {
    const PolylineExport doc = build_involute_export(example_spec(), 2.0,
                                                     InvoluteOffset::Signed, 101);
    const PolylineExport csv = parse_export(render(doc, ExportFormat::Csv), ExportFormat::Csv);
    const PolylineExport json =
        parse_export(render(doc, ExportFormat::Json), ExportFormat::Json);
    REQUIRE(csv.series.size() == json.series.size());
    for (std::size_t k = 0; k < csv.series.size(); ++k) {
        REQUIRE(csv.series[k].rows.size() == json.series[k].rows.size());
        for (std::size_t i = 0; i < csv.series[k].rows.size(); ++i) {
            const PolylineRow& a = csv.series[k].rows[i];
            const PolylineRow& b = json.series[k].rows[i];
            CHECK(a.s == b.s);
            CHECK(a.guard == b.guard);
            CHECK(a.point.has_value() == b.point.has_value());
            if (a.point) CHECK(*a.point == *b.point);
        }
    }
}

TEST_CASE("round-tripped documents still validate") {
    const PolylineExport doc = build_indicatrix_export(
        example_spec(), 2.0, InvoluteOffset::Signed, IndicatrixKind::Tangent, 101);
    for (ExportFormat f : {ExportFormat::Csv, ExportFormat::Json}) {
        const PolylineExport back = parse_export(render(doc, f), f);
        const ValidationReport rep = validate_export(back);
        CHECK_MESSAGE(rep.ok, (rep.failures.empty() ? "" : rep.failures.front()));
    }
}

TEST_CASE("rendering is byte-deterministic") {
    const auto build = [] {
        return build_indicatrix_export(example_spec(), 2.0, InvoluteOffset::Signed,
                                       IndicatrixKind::PrincipalNormal, 101);
    };
    CHECK(render(build(), ExportFormat::Csv) == render(build(), ExportFormat::Csv));
    CHECK(render(build(), ExportFormat::Json) == render(build(), ExportFormat::Json));
}

TEST_CASE("indicatrix export") {
    SUBCASE("tangent image sits on S12 and carries a lift polyline") {
        const PolylineExport doc = build_indicatrix_export(
            example_spec(), 2.0, InvoluteOffset::Signed, IndicatrixKind::Tangent, 101);
        REQUIRE(doc.series.size() == 2);
        const Polyline& image = doc.series[0];
        CHECK(image.label == "indicatrix");
        CHECK(image.sphere == ModelSphere::S12);
        int guard_rows = 0;
        for (const PolylineRow& row : image.rows) {
            if (row.guard) {
                ++guard_rows;
                continue;
            }
            CHECK(row.membership == "S12");
        }
        CHECK(guard_rows >= 1);  // the cusp sample
        CHECK(doc.series[1].label == "natural_lift");
        CHECK(doc.series[1].rows.size() == image.rows.size());
        CHECK(*doc.find_meta("degenerate") == "false");
        CHECK(validate_export(doc).ok);
    }
    SUBCASE("binormal image collapses to a single flagged row") {
        const PolylineExport doc = build_indicatrix_export(
            example_spec(), 2.0, InvoluteOffset::Signed, IndicatrixKind::Binormal, 101);
        CHECK(*doc.find_meta("degenerate") == "true");
        REQUIRE(doc.series[0].rows.size() == 1);
        REQUIRE(doc.series[0].rows[0].point.has_value());
        CHECK(euclidean_distance(*doc.series[0].rows[0].point, {0.0, 0.0, 1.0}) <= 1e-9);
        CHECK(validate_export(doc).ok);
    }
    SUBCASE("timelike-axis evolutes send the normal image to S12, the binormal to H02") {
        const CurveSpec circ = parse_curve_spec("type = w_circular; kappa = 2; tau = 1");
        const PolylineExport normal = build_indicatrix_export(
            circ, 2.0, InvoluteOffset::Signed, IndicatrixKind::PrincipalNormal, 51);
        CHECK(*normal.find_meta("sphere.indicatrix") == "S12");
        CHECK(*normal.find_meta("case") == "timelike-omega");
        CHECK(validate_export(normal).ok);
        const PolylineExport binormal = build_indicatrix_export(
            circ, 2.0, InvoluteOffset::Signed, IndicatrixKind::Binormal, 51);
        CHECK(*binormal.find_meta("sphere.indicatrix") == "H02");
        CHECK(*binormal.find_meta("degenerate") == "true");
        CHECK(validate_export(binormal).ok);
    }
}

TEST_CASE("validation catches tampering") {
    PolylineExport doc = build_involute_export(example_spec(), 2.0,
                                               InvoluteOffset::Signed, 51);
    SUBCASE("corrupted coordinates") {
        for (PolylineRow& row : doc.series[0].rows)
            if (row.point) {
                row.point->x2 += 1e-6;
                break;
            }
        CHECK_FALSE(validate_export(doc).ok);
    }
    SUBCASE("unsorted rows") {
        std::swap(doc.series[0].rows[0].s, doc.series[0].rows[1].s);
        CHECK_FALSE(validate_export(doc).ok);
    }
    SUBCASE("guard row smuggled outside the band") {
        doc.series[0].rows[0].guard = true;
        doc.series[0].rows[0].point.reset();
        CHECK_FALSE(validate_export(doc).ok);
    }
    SUBCASE("membership mismatch") {
        PolylineExport ind = build_indicatrix_export(
            example_spec(), 2.0, InvoluteOffset::Signed, IndicatrixKind::Tangent, 51);
        for (PolylineRow& row : ind.series[0].rows)
            if (row.point) {
                *row.point = 2.0 * *row.point;
                break;
            }
        CHECK_FALSE(validate_export(ind).ok);
    }
}

TEST_CASE("wcurve export") {
    SUBCASE("hyperbolic pair matching the builtin curve") {
        const PolylineExport doc = build_wcurve_export(
            CurveSpecType::WHyperbolic, 1.0, std::sqrt(2.0), {-5.0, 5.0}, 101);
        CHECK(std::stod(*doc.find_meta("roundtrip_kappa_err")) <= 1e-7);
        CHECK(std::stod(*doc.find_meta("roundtrip_tau_err")) <= 1e-7);
        CHECK(std::stod(*doc.find_meta("unit_speed_max_dev")) <= 1e-9);
        CHECK(validate_export(doc).ok);

        const auto example = make_curve(example_spec());
        for (const PolylineRow& row : doc.series[0].rows)
            CHECK(euclidean_distance(*row.point, example->position(row.s)) <= 1e-12);
    }
    SUBCASE("circle export") {
        const PolylineExport doc =
            build_wcurve_export(CurveSpecType::WCircle, 2.0, 0.0, {-3.0, 3.0}, 51);
        CHECK(validate_export(doc).ok);
    }
    SUBCASE("equal pair is rejected") {
        CHECK_THROWS_AS(
            build_wcurve_export(CurveSpecType::WCircular, 1.0, 1.0, {-5.0, 5.0}, 51),
            CaseViolationError);
    }
}

TEST_CASE("frame report") {
    const FrenetReport report = build_frenet_report(example_spec(), {0.0, 1.0});
    REQUIRE(report.rows.size() == 2);
    CHECK(report.rows[0].frame.kappa == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.rows[0].frame.tau == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(report.rows[0].axis_defined);
    CHECK(report.rows[0].axis.kind == DarbouxCase::SpacelikeOmega);

    const std::string text = render_frenet_report_text(report);
    CHECK(text.find("kappa = 1") != std::string::npos);
    CHECK(text.find("1.4142135623730951") != std::string::npos);
    CHECK(render_frenet_report(report, ExportFormat::Csv).find("axis_case") !=
          std::string::npos);
    CHECK(render_frenet_report(report, ExportFormat::Json).find("\"kappa\": 1.0") !=
          std::string::npos);
}

TEST_CASE("geodesic checks through the spec surface") {
    const auto verdicts = run_geodesic_checks(example_spec(), "all", 64, 1e-4);
    REQUIRE(verdicts.size() == 3);
    CHECK(verdicts[0].is_geodesic);
    CHECK(verdicts[1].is_geodesic);
    CHECK_FALSE(verdicts[2].is_geodesic);

    const std::string text = render_verdicts_text(verdicts);
    CHECK(text.find("tangent lift: integral curve of the geodesic spray = true") !=
          std::string::npos);
    CHECK(text.find("binormal lift: integral curve of the geodesic spray = false") !=
          std::string::npos);
    const std::string json = render_verdicts(verdicts, ExportFormat::Json);
    CHECK(json.find("\"is_geodesic\": true") != std::string::npos);
    CHECK(json.find("\"sphere\": \"H02\"") != std::string::npos);

    const auto tangent_only = run_geodesic_checks(example_spec(), "tangent", 32, 1e-4);
    CHECK(tangent_only.size() == 1);
    CHECK_THROWS_AS(run_geodesic_checks(example_spec(), "sideways", 32, 1e-4), ParseError);
}

TEST_CASE("name parsing helpers") {
    CHECK(parse_export_format("csv") == ExportFormat::Csv);
    CHECK(parse_export_format("json") == ExportFormat::Json);
    CHECK_THROWS_AS(parse_export_format("yaml"), ParseError);
    CHECK(parse_indicatrix_kind("tangent") == IndicatrixKind::Tangent);
    CHECK(parse_indicatrix_kind("normal") == IndicatrixKind::PrincipalNormal);
    CHECK(parse_indicatrix_kind("binormal") == IndicatrixKind::Binormal);
    CHECK_THROWS_AS(parse_indicatrix_kind("trinormal"), ParseError);
}
