#include "hilbint/config.hpp"

#include <cstdlib>
#include <sstream>

#include "hilbint/errors.hpp"
#include "hilbint/serialize.hpp"

namespace hilbint {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw ConfigParseError("config line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_u64(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(s, &used);
        if (used != s.size()) fail(line, "trailing characters in integer '" + s + "'");
        return v;
    } catch (const ConfigParseError&) {
        throw;
    } catch (...) {
        fail(line, "expected integer, got '" + s + "'");
    }
}

double parse_double(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) fail(line, "trailing characters in number '" + s + "'");
        return v;
    } catch (const ConfigParseError&) {
        throw;
    } catch (...) {
        fail(line, "expected number, got '" + s + "'");
    }
}

bool parse_flag(const std::string& s, int line) {
    if (s == "on" || s == "true" || s == "1") return true;
    if (s == "off" || s == "false" || s == "0") return false;
    fail(line, "expected on/off, got '" + s + "'");
}

} // namespace

SuiteConfig parse_config_text(const std::string& text) {
    SuiteConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool versioned = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string key, value, extra;
        if (!(fields >> key)) continue; // blank line
        if (!(fields >> value)) fail(lineno, "key '" + key + "' has no value");
        if (fields >> extra) fail(lineno, "unexpected trailing token '" + extra + "'");

        if (key == "version") {
            if (value != "1") fail(lineno, "unsupported config version '" + value + "'");
            versioned = true;
        } else if (key == "suite") {
            if (value != "param" && value != "couple" && value != "hormander" &&
                value != "elliptic" && value != "charts" && value != "all")
                fail(lineno, "unknown suite '" + value + "'");
            cfg.suite = value;
        } else if (key == "seed") {
            cfg.seed = parse_u64(value, lineno);
        } else if (key == "tolerance_scale") {
            cfg.tolerance_scale = parse_double(value, lineno);
            if (!(cfg.tolerance_scale > 0.0)) fail(lineno, "tolerance_scale must be positive");
        } else if (key == "jobs") {
            cfg.jobs = parse_u64(value, lineno);
        } else if (key == "output") {
            cfg.output = value;
        } else if (key == "format") {
            if (value != "jsonl" && value != "csv") fail(lineno, "format must be jsonl or csv");
            cfg.format = value;
        } else if (key == "timing") {
            cfg.timing = parse_flag(value, lineno);
        } else if (key == "couple_instances") {
            cfg.couple_instances = parse_u64(value, lineno);
        } else if (key == "product_instances") {
            cfg.product_instances = parse_u64(value, lineno);
        } else if (key == "two_point_instances") {
            cfg.two_point_instances = parse_u64(value, lineno);
        } else if (key == "uniform_trials") {
            cfg.uniform_trials = parse_u64(value, lineno);
        } else if (key == "hormander_instances") {
            cfg.hormander_instances = parse_u64(value, lineno);
        } else if (key == "elliptic_instances") {
            cfg.elliptic_instances = parse_u64(value, lineno);
        } else if (key == "kt_instances") {
            cfg.kt_instances = parse_u64(value, lineno);
        } else if (key == "atlas_center0") {
            cfg.atlas_center0 = parse_double(value, lineno);
        } else if (key == "atlas_center1") {
            cfg.atlas_center1 = parse_double(value, lineno);
        } else if (key == "atlas_arc") {
            cfg.atlas_arc = parse_double(value, lineno);
        } else if (key == "atlas_support_fraction") {
            cfg.atlas_support_fraction = parse_double(value, lineno);
        } else if (key == "atlas_scale") {
            cfg.atlas_scale = parse_double(value, lineno);
        } else if (key == "atlas_pad") {
            cfg.atlas_pad = parse_double(value, lineno);
        } else if (key == "atlas_circle_points") {
            cfg.atlas_circle_points = parse_u64(value, lineno);
        } else if (key == "atlas_line_length") {
            cfg.atlas_line_length = parse_double(value, lineno);
        } else if (key == "atlas_line_points") {
            cfg.atlas_line_points = parse_u64(value, lineno);
        } else {
            fail(lineno, "unknown key '" + key + "'");
        }
    }
    if (!versioned)
        throw ConfigParseError("config: missing mandatory 'version 1' line (after " +
                               std::to_string(lineno) + " lines)");
    return cfg;
}

SuiteConfig load_config_file(const std::string& path) {
    return parse_config_text(read_file(path));
}

void apply_env_overrides(SuiteConfig& config) {
    if (const char* env = std::getenv("HILBERT_INTERP_SEED")) {
        try {
            config.seed = std::stoull(env);
        } catch (...) {
            throw ConfigParseError("HILBERT_INTERP_SEED: expected integer, got '" +
                                   std::string(env) + "'");
        }
    }
}

} // namespace hilbint
