#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "hilbint/config.hpp"
#include "hilbint/report.hpp"
#include "hilbint/serialize.hpp"
#include "hilbint/suites.hpp"

using namespace hilbint;

namespace {

std::string run_binary(const std::string& args, int* exit_code) {
    const char* bin = std::getenv("HILBINT_BIN");
    REQUIRE(bin != nullptr);
    const std::string out_path = "/tmp/hilbint_cli_out.txt";
    const std::string cmd = std::string(bin) + " " + args + " > " + out_path + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    *exit_code = WEXITSTATUS(status);
    return read_file(out_path);
}

} // namespace

TEST_CASE("config parsing") {
    SUBCASE("full file") {
        const auto cfg = parse_config_text("# comment\n"
                                           "version 1\n"
                                           "suite couple\n"
                                           "seed 99\n"
                                           "format csv\n"
                                           "tolerance_scale 0.5\n"
                                           "couple_instances 12\n"
                                           "atlas_scale 3.5\n");
        CHECK(cfg.suite == "couple");
        CHECK(cfg.seed == 99);
        CHECK(cfg.format == "csv");
        CHECK(cfg.tolerance_scale == 0.5);
        CHECK(cfg.couple_instances == 12);
        CHECK(cfg.atlas_scale == 3.5);
    }
    SUBCASE("empty file fails for missing version") {
        CHECK_THROWS_AS(parse_config_text(""), ConfigParseError);
    }
    SUBCASE("diagnostics carry line numbers") {
        try {
            parse_config_text("version 1\nbogus_key 3\n");
            FAIL("expected ConfigParseError");
        } catch (const ConfigParseError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
        CHECK_THROWS_AS(parse_config_text("version 2\n"), ConfigParseError);
        CHECK_THROWS_AS(parse_config_text("version 1\nseed abc\n"), ConfigParseError);
        CHECK_THROWS_AS(parse_config_text("version 1\nsuite nope\n"), ConfigParseError);
        CHECK_THROWS_AS(parse_config_text("version 1\nseed 1 2\n"), ConfigParseError);
    }
    SUBCASE("environment override") {
        SuiteConfig cfg;
        setenv("HILBERT_INTERP_SEED", "4321", 1);
        apply_env_overrides(cfg);
        unsetenv("HILBERT_INTERP_SEED");
        CHECK(cfg.seed == 4321);
        setenv("HILBERT_INTERP_SEED", "not-a-number", 1);
        CHECK_THROWS_AS(apply_env_overrides(cfg), ConfigParseError);
        unsetenv("HILBERT_INTERP_SEED");
    }
}

TEST_CASE("report records") {
    SUBCASE("verdict rule") {
        CHECK(verdict(1.0, 1.0, 0.0));
        CHECK(verdict(1.0, 1.0 + 5e-13, 1e-12));
        CHECK_FALSE(verdict(1.0, 1.0 + 5e-12, 1e-12));
        // Scale floor of 1 for small values.
        CHECK(verdict(1e-15, 0.0, 1e-12));
        // Large values compare relatively.
        CHECK(verdict(1e9, 1e9 * (1.0 + 1e-13), 1e-12));
    }
    SUBCASE("jsonl and csv rendering") {
        std::vector<ReportRecord> records{
            make_record("suiteA", "check-1", "anchor-x", "i=0", 1.0, 1.0, 1e-12),
            make_record("suiteA", "check-2", "anchor-y", "i=1 \"quoted\"", 2.0, 3.0, 1e-12),
        };
        records[0].wall_ms = 12.5;
        std::ostringstream jsonl;
        write_jsonl(jsonl, records, false);
        CHECK(jsonl.str().find("\"verdict\":\"pass\"") != std::string::npos);
        CHECK(jsonl.str().find("\"verdict\":\"fail\"") != std::string::npos);
        CHECK(jsonl.str().find("wall_ms") == std::string::npos);
        std::ostringstream timed;
        write_jsonl(timed, records, true);
        CHECK(timed.str().find("wall_ms") != std::string::npos);

        std::ostringstream csv;
        write_csv(csv, records, false);
        CHECK(csv.str().find("suite,check,anchor,instance,lhs,rhs,tolerance,verdict") == 0);
        CHECK(csv.str().find("\"\"quoted\"\"") != std::string::npos);

        const auto summary = summarize(records);
        CHECK(summary.total == 2);
        CHECK(summary.failed == 1);
    }
}

TEST_CASE("suite runs are reproducible byte for byte") {
    SuiteConfig cfg;
    cfg.suite = "couple";
    cfg.seed = 31;
    cfg.couple_instances = 40;
    cfg.product_instances = 10;
    cfg.two_point_instances = 5;
    cfg.uniform_trials = 20;

    auto render = [&](std::size_t jobs) {
        SuiteConfig local = cfg;
        local.jobs = jobs;
        std::ostringstream out;
        write_jsonl(out, suites::run_suite(local), false);
        return out.str();
    };
    const std::string once = render(1);
    CHECK(once == render(1));
    // Worker count must not affect the byte stream.
    CHECK(once == render(4));
}

TEST_CASE("suite records all pass at defaults") {
    SuiteConfig cfg;
    cfg.suite = "param";
    const auto records = suites::run_suite(cfg);
    const auto summary = summarize(records);
    CHECK(summary.total > 100);
    CHECK(summary.failed == 0);
}

TEST_CASE("cli binary end to end") {
    int code = 0;

    SUBCASE("usage errors exit 2") {
        run_binary("norm hs", &code); // missing required --input
        CHECK(code == 2);
        run_binary("verify --config /nonexistent.cfg", &code);
        CHECK(code == 2);
        run_binary("counterexample --psi 'pow(2' ", &code);
        CHECK(code == 2);
    }

    SUBCASE("norm subcommand prints 15 significant digits") {
        // sqrt(13) from the frozen two-eigenvalue example.
        write_file("/tmp/hilbint_couple.json",
                   "{\"lambda\":[4.0,9.0],\"r\":1.0,\"u_re\":[1.0,1.0],\"u_im\":[0.0,0.0]}");
        const std::string out =
            run_binary("norm psi --psi 'pow(0.5)' --input /tmp/hilbint_couple.json", &code);
        CHECK(code == 0);
        CHECK(out.substr(0, 16) == "3.60555127546399");

        write_file("/tmp/hilbint_dist.json",
                   "{\"n\":1,\"K\":2,\"modes\":[{\"k\":[2],\"re\":1.0,\"im\":0.0}]}");
        const std::string hs =
            run_binary("norm hs --s 1 --phi 'const(1)' --input /tmp/hilbint_dist.json", &code);
        CHECK(code == 0);
        // <2> = sqrt(5)
        CHECK(hs.substr(0, 16) == "2.23606797749979");
        const std::string calc = run_binary(
            "norm calculus --s 1 --phi 'const(1)' --input /tmp/hilbint_dist.json", &code);
        CHECK(code == 0);
        CHECK(calc.substr(0, 16) == "2.23606797749979");

        const std::string chart = run_binary(
            "norm chart --s 0 --phi 'const(1)' --input /tmp/hilbint_dist.json", &code);
        CHECK(code == 0);
        CHECK(std::stod(chart) > 0.0);
    }

    SUBCASE("zero input prints zero") {
        write_file("/tmp/hilbint_zero.json", "{\"n\":1,\"K\":0,\"modes\":[]}");
        const std::string out =
            run_binary("norm hs --s 2 --phi 'logms(1)' --input /tmp/hilbint_zero.json", &code);
        CHECK(code == 0);
        CHECK(out == "0\n");
    }

    SUBCASE("malformed input exits 2") {
        write_file("/tmp/hilbint_bad.json", "{oops");
        run_binary("norm hs --s 0 --input /tmp/hilbint_bad.json", &code);
        CHECK(code == 2);
    }

    SUBCASE("interp-check passes on a sound instance") {
        write_file("/tmp/hilbint_dist2.json",
                   "{\"n\":1,\"K\":3,\"modes\":[{\"k\":[1],\"re\":0.5,\"im\":-0.25},"
                   "{\"k\":[-3],\"re\":1.0,\"im\":2.0}]}");
        const std::string out = run_binary(
            "interp-check --s 0.5 --phi 'logms(1)' --eps 0.7 --delta 1.1 "
            "--input /tmp/hilbint_dist2.json",
            &code);
        CHECK(code == 0);
        CHECK(out.find("verdict=pass") != std::string::npos);
    }

    SUBCASE("operator-calculus command family") {
        write_file("/tmp/hilbint_dist3.json",
                   "{\"n\":2,\"K\":4,\"modes\":[{\"k\":[1,-2],\"re\":0.5,\"im\":1.0},"
                   "{\"k\":[0,4],\"re\":-1.0,\"im\":0.0}]}");
        const std::string value = run_binary(
            "calculus-norm --s 1.5 --phi 'logms(0.5)' --input /tmp/hilbint_dist3.json", &code);
        CHECK(code == 0);
        CHECK(std::stod(value) > 0.0);
        const std::string eq = run_binary(
            "calculus-check --s -2 --phi 'logms(1)' --input /tmp/hilbint_dist3.json", &code);
        CHECK(code == 0);
        CHECK(eq.find("verdict=pass") != std::string::npos);
        const std::string lift = run_binary(
            "lifting-check --s 0.5 --phi 'logms(1)' --input /tmp/hilbint_dist3.json", &code);
        CHECK(code == 0);
        CHECK(lift.find("verdict=pass") != std::string::npos);
    }

    SUBCASE("failed checks force exit 1") {
        // An impossibly small tolerance turns quadrature-limited checks red.
        run_binary("verify --suite param --tolerance-scale 1e-18", &code);
        CHECK(code == 1);
    }

    SUBCASE("counterexample table shows bounded and unbounded regimes") {
        const std::string bounded =
            run_binary("counterexample --psi 'pow(0.5)' --ratios 1,10,1000", &code);
        CHECK(code == 0);
        std::istringstream lines(bounded);
        std::string line;
        std::getline(lines, line);
        CHECK(line == "ratio,norm_ratio,bound_ratio");
        // For the square-root parameter the bound ratio decays like r^(-1/2),
        // staying below 1 on the whole grid.
        while (std::getline(lines, line)) {
            const auto last_comma = line.rfind(',');
            CHECK(std::stod(line.substr(last_comma + 1)) <= 1.0);
        }
        // For the square parameter the bound ratio equals the point ratio.
        const std::string growing =
            run_binary("counterexample --psi 'pow(2)' --ratios 1000", &code);
        CHECK(code == 0);
        CHECK(growing.find("1000,1000000") != std::string::npos);
    }

    SUBCASE("verify exits 0 and reproduces bytes across runs") {
        const std::string args =
            "verify --suite hormander --seed 5 --hormander-instances 25 --jobs 2";
        const std::string first = run_binary(args, &code);
        CHECK(code == 0);
        const std::string second = run_binary(args, &code);
        CHECK(code == 0);
        CHECK(first == second);
        CHECK(first.find("\"verdict\":\"fail\"") == std::string::npos);
    }

    SUBCASE("verify respects the environment seed override") {
        const char* bin = std::getenv("HILBINT_BIN");
        REQUIRE(bin != nullptr);
        const std::string base = std::string(bin) +
                                 " verify --suite hormander --hormander-instances 5 > %s 2>/dev/null";
        char cmd[512];
        std::snprintf(cmd, sizeof cmd, base.c_str(), "/tmp/hilbint_env_a.txt");
        setenv("HILBERT_INTERP_SEED", "777", 1);
        CHECK(WEXITSTATUS(std::system(cmd)) == 0);
        std::snprintf(cmd, sizeof cmd, base.c_str(), "/tmp/hilbint_env_b.txt");
        setenv("HILBERT_INTERP_SEED", "778", 1);
        CHECK(WEXITSTATUS(std::system(cmd)) == 0);
        unsetenv("HILBERT_INTERP_SEED");
        CHECK(read_file("/tmp/hilbint_env_a.txt") != read_file("/tmp/hilbint_env_b.txt"));
    }

    SUBCASE("charts-study emits the ratio table") {
        const std::string out = run_binary("charts-study --s 1 --kmax 4", &code);
        CHECK(code == 0);
        CHECK(out.find("k,ratio,refined_ratio") == 0);
    }
}
