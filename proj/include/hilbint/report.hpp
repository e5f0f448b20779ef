#ifndef HILBINT_REPORT_HPP
#define HILBINT_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hilbint {

// One verification record. `anchor` names the mathematical claim the check
// realizes (stable across runs; used to aggregate reports downstream).
struct ReportRecord {
    std::string suite;
    std::string check;
    std::string anchor;
    std::string instance;
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double wall_ms = 0.0;
};

// pass iff |lhs - rhs| <= tolerance * max(|lhs|, |rhs|, 1).
bool verdict(double lhs, double rhs, double tolerance);

ReportRecord make_record(std::string suite, std::string check, std::string anchor,
                         std::string instance, double lhs, double rhs, double tolerance);

// Serialize records as JSON lines or CSV. Wall times are emitted only when
// include_timing is set; the default output depends only on inputs and seed,
// byte for byte.
void write_jsonl(std::ostream& out, const std::vector<ReportRecord>& records,
                 bool include_timing);
void write_csv(std::ostream& out, const std::vector<ReportRecord>& records,
               bool include_timing);

struct ReportSummary {
    std::size_t total = 0;
    std::size_t failed = 0;
};

ReportSummary summarize(const std::vector<ReportRecord>& records);

} // namespace hilbint

#endif
