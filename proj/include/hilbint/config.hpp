#ifndef HILBINT_CONFIG_HPP
#define HILBINT_CONFIG_HPP

#include <cstdint>
#include <string>

namespace hilbint {

// Suite configuration. Identical configuration and seed produce identical
// report bytes (timing is opt-in because wall clocks are not reproducible).
struct SuiteConfig {
    std::string suite = "all"; // param | couple | hormander | elliptic | charts | all
    std::uint64_t seed = 740217;
    double tolerance_scale = 1.0;
    std::size_t jobs = 0; // 0 = logical cores
    std::string output;   // empty = stdout
    std::string format = "jsonl"; // jsonl | csv
    bool timing = false;

    // Instance counts per randomized check.
    std::size_t couple_instances = 1000;
    std::size_t product_instances = 200;
    std::size_t two_point_instances = 50;
    std::size_t uniform_trials = 500;
    std::size_t hormander_instances = 500;
    std::size_t elliptic_instances = 500;
    std::size_t kt_instances = 100;

    // Circle-atlas geometry for the chart checks (mirrors charts::AtlasParams).
    double atlas_center0 = 0.0;
    double atlas_center1 = 3.141592653589793;
    double atlas_arc = 2.356194490192345;
    double atlas_support_fraction = 0.75;
    double atlas_scale = 4.0;
    double atlas_pad = 1.5;
    std::size_t atlas_circle_points = 4096;
    double atlas_line_length = 64.0;
    std::size_t atlas_line_points = 8192;
};

// Key-value text format, one `key value` pair per line, '#' comments, and a
// mandatory `version 1` line. Unknown keys and malformed values raise
// ConfigParseError with the line number.
SuiteConfig parse_config_text(const std::string& text);
SuiteConfig load_config_file(const std::string& path);

// HILBERT_INTERP_SEED overrides the seed when set.
void apply_env_overrides(SuiteConfig& config);

} // namespace hilbint

#endif
