#include "hilbint/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace hilbint {

bool verdict(double lhs, double rhs, double tolerance) {
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    return std::abs(lhs - rhs) <= tolerance * scale;
}

ReportRecord make_record(std::string suite, std::string check, std::string anchor,
                         std::string instance, double lhs, double rhs, double tolerance) {
    ReportRecord rec;
    rec.suite = std::move(suite);
    rec.check = std::move(check);
    rec.anchor = std::move(anchor);
    rec.instance = std::move(instance);
    rec.lhs = lhs;
    rec.rhs = rhs;
    rec.tolerance = tolerance;
    rec.pass = verdict(lhs, rhs, tolerance);
    return rec;
}

namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

void write_jsonl(std::ostream& out, const std::vector<ReportRecord>& records,
                 bool include_timing) {
    for (const auto& rec : records) {
        nlohmann::ordered_json j;
        j["suite"] = rec.suite;
        j["check"] = rec.check;
        j["anchor"] = rec.anchor;
        j["instance"] = rec.instance;
        j["lhs"] = rec.lhs;
        j["rhs"] = rec.rhs;
        j["tolerance"] = rec.tolerance;
        j["verdict"] = rec.pass ? "pass" : "fail";
        if (include_timing) j["wall_ms"] = rec.wall_ms;
        out << j.dump() << '\n';
    }
}

void write_csv(std::ostream& out, const std::vector<ReportRecord>& records,
               bool include_timing) {
    out << "suite,check,anchor,instance,lhs,rhs,tolerance,verdict";
    if (include_timing) out << ",wall_ms";
    out << '\n';
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += "\"\"";
            else q += c;
        }
        return q + "\"";
    };
    for (const auto& rec : records) {
        out << quote(rec.suite) << ',' << quote(rec.check) << ',' << quote(rec.anchor) << ','
            << quote(rec.instance) << ',' << num(rec.lhs) << ',' << num(rec.rhs) << ','
            << num(rec.tolerance) << ',' << (rec.pass ? "pass" : "fail");
        if (include_timing) out << ',' << num(rec.wall_ms);
        out << '\n';
    }
}

ReportSummary summarize(const std::vector<ReportRecord>& records) {
    ReportSummary s;
    s.total = records.size();
    for (const auto& rec : records)
        if (!rec.pass) ++s.failed;
    return s;
}

} // namespace hilbint
