#include "scherk/report_json.hpp"

#include <cstdio>

namespace scherk {

void write_admissibility(JsonWriter& w, const AdmissibilityReport& report) {
    w.begin_object();
    w.kv("pass", report.pass);
    w.kv("balance", report.balance);
    w.kv("balance_ok", report.balance_ok);
    w.kv("family", report.family);
    w.kv("tol_balance", report.tol_balance);
    w.kv("slack_threshold", report.slack_threshold);
    if (!report.failing.empty()) {
        w.kv("failing", report.failing);
    }
    w.key("horocycle_sizes");
    w.begin_array();
    for (double s : report.horocycle_sizes) w.value(s);
    w.end_array();
    w.key("polygons");
    w.begin_array();
    for (const PolygonCheck& p : report.polygons) {
        w.begin_object();
        w.kv("id", p.id);
        w.key("cells");
        w.begin_array();
        for (int c : p.cells) w.value(c);
        w.end_array();
        w.kv("s_A", p.s_A);
        w.kv("s_B", p.s_B);
        w.kv("ok", p.ok);
        w.end_object();
    }
    w.end_array();
    w.end_object();
}

void write_record(JsonWriter& w, const ExtensionRecord& rec) {
    w.begin_object();
    w.kv("side_a", rec.side_a);
    w.kv("side_b", rec.side_b);
    w.kv("cell_e", rec.cell_e);
    w.kv("cell_eprime", rec.cell_ep);
    w.kv("d3_star", rec.d3_star);
    w.kv("d3_e", rec.d3_e);
    w.kv("d3_eprime", rec.d3_ep);
    w.kv("tau_e", rec.tau_e);
    w.kv("tau_eprime", rec.tau_ep);
    w.kv("phi_target", rec.phi_target);
    w.kv("phi_e", rec.phi_e);
    w.kv("phi_eprime", rec.phi_ep);
    w.end_object();
}

void write_records(JsonWriter& w, const std::vector<ExtensionRecord>& recs) {
    w.begin_array();
    for (const ExtensionRecord& rec : recs) write_record(w, rec);
    w.end_array();
}

void write_trace(JsonWriter& w, const ExhaustionTrace& trace) {
    w.begin_object();
    w.key("base");
    w.begin_object();
    w.kv("x", trace.base.x);
    w.kv("y", trace.base.y);
    w.end_object();
    w.key("steps");
    w.begin_array();
    for (const StepTrace& s : trace.steps) {
        w.begin_object();
        w.kv("step", s.step);
        w.kv("cells", s.cells);
        w.kv("side_count", s.side_count);
        w.kv("balance", s.balance);
        w.key("min_slack");
        if (s.has_min_slack) {
            w.value(s.min_slack);
        } else {
            w.null_value();
        }
        w.kv("boundary_distance", s.boundary_distance);
        w.kv("min_horocycle_gap", s.min_horocycle_gap);
        w.kv("family", s.family);
        w.end_object();
    }
    w.end_array();
    w.end_object();
}

std::string fnv1a_hex(std::string_view text) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace scherk
