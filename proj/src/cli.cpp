#include "scherk/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "scherk/exhaust.hpp"
#include "scherk/report_json.hpp"
#include "scherk/svg.hpp"

namespace scherk::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join_args(const std::vector<std::string>& args) {
    std::string out;
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) out += ' ';
        out += args[i];
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file: " + path);
    f << content;
    if (!f) throw UsageError("cannot write output file: " + path);
}

struct HoroFlags {
    double r = 0.0;  // 0 = derive from mu
    double M = 0.0;
};

HorocycleSystem make_horocycles(const CellComplex& c, double mu, const HoroFlags& hf) {
    const double theta = std::asin(2.0 * c.H);
    const double r = hf.r > 0.0 ? hf.r : mu / 10.0;
    const double M = hf.M > 0.0 ? hf.M : 4.0 * mu / std::cos(theta);
    HorocycleSystem hs = uniform_horocycles(c, r, M);
    validate_disjoint(c, hs);
    return hs;
}

struct CompareRow {
    std::string name;
    double printed;
    double computed;
};

void write_compare_rows(JsonWriter& w, const std::vector<CompareRow>& rows) {
    w.begin_array();
    for (const CompareRow& row : rows) {
        const double dev = std::abs(row.printed - row.computed);
        const double rel = dev / std::max(std::abs(row.printed), std::abs(row.computed));
        const bool agree = dev <= 1e-9 || rel <= 1e-6;
        w.begin_object();
        w.kv("formula", row.name);
        w.kv("printed", row.printed);
        w.kv("computed", row.computed);
        w.kv("deviation_abs", dev);
        w.kv("deviation_rel", dev == 0.0 ? 0.0 : rel);
        w.kv("verdict", agree ? "agree" : "disagree");
        w.end_object();
    }
    w.end_array();
}

std::vector<CompareRow> paper_comparison(double mu, double H, double r, double quad_tol) {
    const double theta = std::asin(2.0 * H);
    const RootResult root = solve_d3_star(mu, H, quad_tol);
    const double d3 = root.d3_star;
    const QuadParams params = QuadParams::create(mu, d3, H);
    const double log_ratio = std::log((d3 - 2.0 * mu) / (2.0 * mu));

    std::vector<CompareRow> rows;
    rows.push_back({"theorem_3_1_d3_star", 2.0 * mu * (1.0 + std::exp(2.0 * kPi * std::tan(theta))), d3});
    rows.push_back({"lemma_3_3_G",
                    std::cos(theta) * log_ratio - 2.0 * kPi * std::sin(theta),
                    balance_function(mu, d3, H, quad_tol)});
    const double area = quad_area(params, quad_tol);
    rows.push_back({"eq_3_5_area", 2.0 * kPi - 2.0 * std::tan(theta) * log_ratio, area});
    rows.push_back({"area_reflected_log",
                    2.0 * kPi - 2.0 * std::tan(theta) * std::log(params.R_B / params.R_A),
                    area});

    // Claim 3.2 crossings of the two finite-vertex horocycles with B1 and A2
    const CellComplex c = standard_quadrilateral(mu, H, d3);
    const Horocycle h1{BoundaryPoint::finite(0.0), r};
    const Horocycle h2{BoundaryPoint::finite(2.0 * mu), r};
    const HPoint p0 = arc_horocycle_intersection(c.sides[0].arc, h1);
    const HPoint p1 = arc_horocycle_intersection(c.sides[1].arc, h2);
    const double s = std::sin(theta);
    const double tan_t = std::tan(theta);
    const double sec2 = 1.0 + tan_t * tan_t;
    const double RA = params.R_A, RB = params.R_B;
    rows.push_back({"claim_3_2_x0",
                    2.0 * r * mu * (r - mu * tan_t) / (mu * mu * sec2 + r * (r - 2.0 * mu * tan_t)),
                    p0.x});
    rows.push_back({"claim_3_2_y0",
                    2.0 * r * RB * RB * (1.0 - s * s) / (RB * RB + r * r - 2.0 * r * RB * s),
                    p0.y});
    const double c2t = std::cos(2.0 * theta);
    const double s2t = std::sin(2.0 * theta);
    rows.push_back(
        {"claim_3_2_x1",
         (2.0 * (d3 * d3 * mu + 4.0 * mu * mu * mu + d3 * (r * r - 4.0 * mu * mu) +
                 d3 * r * r * c2t) +
          r * s2t * (d3 * d3 - 4.0 * mu * mu)) /
             (2.0 * r * r + (d3 - 2.0 * mu) * (d3 - 2.0 * mu) +
              2.0 * r * (r * c2t + s2t * (d3 - 2.0 * mu))),
         p1.x});
    rows.push_back({"claim_3_2_y1",
                    2.0 * r * RA * RA * (1.0 - s * s) / (RA * RA + r * r + 2.0 * r * RA * s),
                    p1.y});
    return rows;
}

void begin_document(JsonWriter& w, const std::vector<std::string>& args) {
    w.begin_object();
    w.kv("schema_version", "1");
    w.kv("command", join_args(args));
}

void emit_outputs(const std::string& doc, const std::string& json_path,
                  const std::string& svg_path, const CellComplex& c,
                  const HorocycleSystem* hs, SceneSpec::Chart chart) {
    if (!json_path.empty()) write_file(json_path, doc + "\n");
    if (!svg_path.empty()) {
        SceneSpec scene;
        scene.chart = chart;
        write_file(svg_path, render_svg(c, hs, scene, fnv1a_hex(doc)));
    }
}

int cmd_quad(const std::vector<std::string>& args, double mu, double H, const std::string& mode,
             const HoroFlags& hf, const std::string& json_path, const std::string& svg_path,
             bool disk_chart) {
    const Tolerances tol;
    const RootResult root = solve_d3_star(mu, H, tol.quad);
    const double theta = std::asin(2.0 * H);
    const double d3_paper = 2.0 * mu * (1.0 + std::exp(2.0 * kPi * std::tan(theta)));
    const double d3 = mode == "paper" ? d3_paper : root.d3_star;

    const CellComplex c = standard_quadrilateral(mu, H, d3);
    const HorocycleSystem hs = make_horocycles(c, mu, hf);
    const AdmissibilityReport report = check_admissibility(c, hs, tol);

    JsonWriter w;
    begin_document(w, args);
    w.key("parameters");
    w.begin_object();
    w.kv("mu", mu);
    w.kv("H", H);
    w.kv("mode", mode);
    w.kv("r", hs.size[0]);
    w.kv("M", hs.size[3]);
    w.end_object();
    w.key("result");
    w.begin_object();
    w.kv("d3", d3);
    w.kv("d3_computed_root", root.d3_star);
    w.kv("balance_monotone_increasing", root.increasing);
    w.key("report");
    write_admissibility(w, report);
    w.end_object();
    w.key("paper_comparison");
    w.begin_object();
    w.kv("d3_paper_formula", d3_paper);
    w.kv("deviation_abs", std::abs(d3_paper - root.d3_star));
    w.kv("deviation_rel", std::abs(d3_paper - root.d3_star) / root.d3_star);
    w.end_object();
    w.end_object();

    const std::string doc = w.take();
    emit_outputs(doc, json_path, svg_path, c, &hs,
                 disk_chart ? SceneSpec::Chart::disk : SceneSpec::Chart::halfplane);
    std::cout << "quad: d3=" << format_double(d3) << " balance=" << format_double(report.balance)
              << (report.pass ? " pass" : " FAIL") << "\n";
    return report.pass ? 0 : 1;
}

CellComplex domain_from_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open input file: " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("cannot parse input JSON: " + std::string(e.what()));
    }
    try {
        const double mu = j.at("parameters").at("mu").get<double>();
        const double H = j.at("parameters").at("H").get<double>();
        const double d3 = j.at("result").at("d3").get<double>();
        return standard_quadrilateral(mu, H, d3);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("input JSON lacks the quad report fields: " + std::string(e.what()));
    }
}

int cmd_extend(const std::vector<std::string>& args, const std::string& in_path, double mu,
               double H, double phi_ratio, const HoroFlags& hf, const std::string& json_path,
               const std::string& svg_path, bool disk_chart) {
    ExtendPolicy policy;
    policy.phi_ratio = phi_ratio;
    CellComplex seed = in_path.empty()
                           ? standard_quadrilateral(mu, H, QuadMode::computed_root, policy.tol.quad)
                           : domain_from_json(in_path);
    const double seed_mu = seed.cells[0].params.mu;
    const HorocycleSystem hs = make_horocycles(seed, seed_mu, hf);
    const ExtendOutcome out = extend_domain(seed, hs, policy);

    JsonWriter w;
    begin_document(w, args);
    w.key("parameters");
    w.begin_object();
    w.kv("mu", seed_mu);
    w.kv("H", seed.H);
    w.kv("phi_ratio", phi_ratio);
    w.kv("source", in_path.empty() ? std::string("standard") : in_path);
    w.end_object();
    w.key("result");
    w.begin_object();
    w.kv("side_count", static_cast<int>(out.complex.boundary.size()));
    w.key("records");
    write_records(w, out.records);
    w.key("report");
    write_admissibility(w, out.report);
    w.end_object();
    w.end_object();

    const std::string doc = w.take();
    emit_outputs(doc, json_path, svg_path, out.complex, &out.hs,
                 disk_chart ? SceneSpec::Chart::disk : SceneSpec::Chart::halfplane);
    std::cout << "extend: sides=" << out.complex.boundary.size()
              << " balance=" << format_double(out.report.balance)
              << (out.report.pass ? " pass" : " FAIL (" + out.report.failing + ")") << "\n";
    return out.report.pass ? 0 : 1;
}

int cmd_exhaust(const std::vector<std::string>& args, int N, double mu, double H,
                double phi_ratio, double shrink, const HoroFlags& hf,
                const std::string& json_path, const std::string& svg_dir, bool disk_chart) {
    ExhaustionSchedule schedule;
    schedule.iterations = N;
    schedule.phi_ratio = phi_ratio;
    schedule.shrink = shrink;
    const CellComplex seed = standard_quadrilateral(mu, H, QuadMode::computed_root,
                                                    schedule.tol.quad);
    const HorocycleSystem hs = make_horocycles(seed, mu, hf);
    const ExhaustionRun run = run_exhaustion(seed, hs, schedule);

    JsonWriter w;
    begin_document(w, args);
    w.key("parameters");
    w.begin_object();
    w.kv("mu", mu);
    w.kv("H", H);
    w.kv("N", N);
    w.kv("phi_ratio", phi_ratio);
    w.kv("shrink", shrink);
    w.end_object();
    w.key("result");
    w.begin_object();
    w.key("trace");
    write_trace(w, run.trace);
    w.key("records_per_step");
    w.begin_array();
    for (const auto& recs : run.records) write_records(w, recs);
    w.end_array();
    w.end_object();
    w.end_object();

    const std::string doc = w.take();
    if (!json_path.empty()) write_file(json_path, doc + "\n");
    if (!svg_dir.empty()) {
        std::filesystem::create_directories(svg_dir);
        SceneSpec scene;
        scene.chart = disk_chart ? SceneSpec::Chart::disk : SceneSpec::Chart::halfplane;
        const std::string hash = fnv1a_hex(doc);
        const HorocycleSystem seed_hs = make_horocycles(seed, mu, hf);
        write_file(svg_dir + "/step_000.svg", render_svg(seed, &seed_hs, scene, hash));
        for (size_t i = 0; i < run.snapshots.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof(name), "/step_%03zu.svg", i + 1);
            write_file(svg_dir + name,
                       render_svg(run.snapshots[i], &run.snapshot_hs[i], scene, hash));
        }
    }
    std::cout << "exhaust: steps=" << N << " final_sides=" << run.complex.boundary.size()
              << " final_distance="
              << format_double(run.trace.steps.back().boundary_distance) << " pass\n";
    return 0;
}

int cmd_compare(const std::vector<std::string>& args, double mu, double H, double r,
                const std::string& json_path) {
    const Tolerances tol;
    const std::vector<CompareRow> rows = paper_comparison(mu, H, r, tol.quad);
    JsonWriter w;
    begin_document(w, args);
    w.key("parameters");
    w.begin_object();
    w.kv("mu", mu);
    w.kv("H", H);
    w.kv("r", r);
    w.end_object();
    w.key("paper_comparison");
    write_compare_rows(w, rows);
    w.end_object();
    const std::string doc = w.take();
    if (!json_path.empty()) write_file(json_path, doc + "\n");
    std::cout << "compare-paper: " << rows.size() << " formulas evaluated\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"ideal admissible domains for constant-curvature Scherk graphs"};
    app.require_subcommand(1);

    const auto h_check = CLI::Validator(
        [](std::string& s) -> std::string {
            const double v = std::stod(s);
            if (!(v >= 0.0) || !(v < 0.5)) return "H must satisfy 0 <= H < 1/2";
            return {};
        },
        "H_RANGE");

    double mu = 1.0, H = 0.25;
    std::string mode = "computed";
    HoroFlags hf;
    std::string json_path, svg_path, svg_dir, in_path;
    bool disk_chart = false;
    double phi_ratio = 0.01, shrink = 0.5;
    int N = 1;
    double cmp_r = 0.05;

    const auto add_common = [&](CLI::App* cmd, bool with_horo) {
        cmd->add_option("--mu", mu, "scale parameter mu > 0")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--H", H, "curvature parameter, 0 <= H < 1/2")->check(h_check);
        if (with_horo) {
            cmd->add_option("--r", hf.r, "horocycle radius at finite vertices")
                ->check(CLI::PositiveNumber);
            cmd->add_option("--M", hf.M, "horocycle height at infinity")
                ->check(CLI::PositiveNumber);
        }
        cmd->add_option("--json", json_path, "write the JSON report here");
        cmd->add_flag("--disk", disk_chart, "render in the disk chart");
    };

    CLI::App* quad = app.add_subcommand("quad", "construct and verify the standard quadrilateral");
    add_common(quad, true);
    quad->add_option("--mode", mode, "d3 choice: computed | paper")
        ->check(CLI::IsMember({"computed", "paper"}));
    quad->add_option("--svg", svg_path, "write an SVG rendering here");

    CLI::App* extend = app.add_subcommand("extend", "attach balanced quadrilaterals to every side pair");
    add_common(extend, true);
    extend->add_option("--in", in_path, "seed domain from a quad JSON report");
    extend->add_flag("--standard", "seed from the standard quadrilateral (default)");
    extend->add_option("--phi-ratio", phi_ratio, "phi target as a fraction of the shortest host side")
        ->check(CLI::Range(0.0, 0.5));
    extend->add_option("--svg", svg_path, "write an SVG rendering here");

    CLI::App* exhaust = app.add_subcommand("exhaust", "iterate the extension with shrinking horocycles");
    add_common(exhaust, true);
    exhaust->add_option("--N", N, "number of extension steps")->check(CLI::PositiveNumber);
    exhaust->add_option("--phi-ratio", phi_ratio, "phi target fraction per step")
        ->check(CLI::Range(0.0, 0.5));
    exhaust->add_option("--shrink", shrink, "horocycle shrink factor per step")
        ->check(CLI::Range(1e-6, 1.0));
    exhaust->add_option("--svg-dir", svg_dir, "write one SVG per step into this directory");

    CLI::App* compare = app.add_subcommand("compare-paper",
                                           "evaluate the printed closed forms against quadrature");
    compare->add_option("--mu", mu, "scale parameter mu > 0")->check(CLI::PositiveNumber);
    compare->add_option("--H", H, "curvature parameter, 0 <= H < 1/2")->check(h_check);
    compare->add_option("--r", cmp_r, "horocycle radius used in the Claim 3.2 rows")
        ->check(CLI::PositiveNumber);
    compare->add_option("--json", json_path, "write the JSON report here");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (quad->parsed()) {
            return cmd_quad(args, mu, H, mode, hf, json_path, svg_path, disk_chart);
        }
        if (extend->parsed()) {
            return cmd_extend(args, in_path, mu, H, phi_ratio, hf, json_path, svg_path,
                              disk_chart);
        }
        if (exhaust->parsed()) {
            return cmd_exhaust(args, N, mu, H, phi_ratio, shrink, hf, json_path, svg_dir,
                               disk_chart);
        }
        if (compare->parsed()) {
            return cmd_compare(args, mu, H, cmp_r, json_path);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace scherk::cli
