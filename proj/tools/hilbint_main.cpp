#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hilbint/charts.hpp"
#include "hilbint/config.hpp"
#include "hilbint/couple.hpp"
#include "hilbint/elliptic.hpp"
#include "hilbint/errors.hpp"
#include "hilbint/fourier.hpp"
#include "hilbint/param.hpp"
#include "hilbint/report.hpp"
#include "hilbint/serialize.hpp"
#include "hilbint/suites.hpp"

namespace {

using namespace hilbint;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

void print_value(double value) { std::printf("%.15g\n", value); }

int run_verify(const SuiteConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<ReportRecord> records = suites::run_suite(cfg);
    const double total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();

    std::ostringstream body;
    if (cfg.format == "csv") write_csv(body, records, cfg.timing);
    else write_jsonl(body, records, cfg.timing);
    if (cfg.output.empty()) std::cout << body.str();
    else write_file(cfg.output, body.str());

    const ReportSummary summary = summarize(records);
    std::fprintf(stderr, "verify: suite=%s seed=%llu checks=%zu failures=%zu wall_ms=%.0f\n",
                 cfg.suite.c_str(), static_cast<unsigned long long>(cfg.seed), summary.total,
                 summary.failed, total_ms);
    return summary.failed == 0 ? kExitPass : kExitCheckFailure;
}

std::vector<double> parse_ratio_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (...) {
            throw ConfigParseError("counterexample: bad ratio '" + item + "'");
        }
    }
    if (out.empty()) throw ConfigParseError("counterexample: empty ratio list");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hilbint: exact interpolation norms for diagonal Hilbert couples and "
                 "refined smoothness scales on the torus"};
    app.require_subcommand(1);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run the seeded verification suites");
    std::string v_suite = "all", v_config, v_output, v_format = "jsonl";
    std::uint64_t v_seed = 0;
    double v_tol_scale = 1.0;
    std::size_t v_jobs = 0;
    bool v_timing = false;
    verify->add_option("--suite", v_suite, "param|couple|hormander|elliptic|charts|all");
    auto* v_seed_opt = verify->add_option("--seed", v_seed, "base seed for all instances");
    verify->add_option("--config", v_config, "key-value config file (version 1)");
    verify->add_option("--output", v_output, "report path (default: stdout)");
    verify->add_option("--format", v_format, "jsonl|csv");
    auto* v_ts_opt = verify->add_option("--tolerance-scale", v_tol_scale,
                                        "multiply every check tolerance (e.g. 0.1 = stricter)");
    auto* v_jobs_opt = verify->add_option("--jobs", v_jobs, "worker pool size (0 = cores)");
    verify->add_flag("--timing", v_timing,
                     "include wall_ms in the report (breaks byte reproducibility)");
    std::size_t v_couple = 0, v_product = 0, v_two_point = 0, v_uniform = 0, v_hormander = 0,
                v_elliptic = 0, v_kt = 0;
    auto* o1 = verify->add_option("--couple-instances", v_couple);
    auto* o2 = verify->add_option("--product-instances", v_product);
    auto* o3 = verify->add_option("--two-point-instances", v_two_point);
    auto* o4 = verify->add_option("--uniform-trials", v_uniform);
    auto* o5 = verify->add_option("--hormander-instances", v_hormander);
    auto* o6 = verify->add_option("--elliptic-instances", v_elliptic);
    auto* o7 = verify->add_option("--kt-instances", v_kt);

    // ---- norm ----
    auto* norm = app.add_subcommand("norm", "evaluate one norm and print it (15 digits)");
    norm->require_subcommand(1);
    std::string n_phi = "const(1)", n_psi = "pow(0.5)", n_input, n_config;
    double n_s = 0.0;
    auto* norm_hs = norm->add_subcommand("hs", "refined Fourier-weight norm of a distribution");
    norm_hs->add_option("--s", n_s, "power smoothness");
    norm_hs->add_option("--phi", n_phi, "refinement expression");
    norm_hs->add_option("--input", n_input, "distribution JSON")->required();
    auto* norm_calc = norm->add_subcommand("calculus", "operator-calculus norm (order-2 shifted "
                                                       "Laplacian)");
    norm_calc->add_option("--s", n_s, "power smoothness");
    norm_calc->add_option("--phi", n_phi, "refinement expression");
    norm_calc->add_option("--input", n_input, "distribution JSON")->required();
    auto* norm_psi = norm->add_subcommand("psi", "interpolated norm on a diagonal couple");
    norm_psi->add_option("--psi", n_psi, "parameter expression");
    norm_psi->add_option("--input", n_input, "couple+vector JSON")->required();
    auto* norm_chart = norm->add_subcommand("chart", "two-chart atlas norm on the circle");
    norm_chart->add_option("--s", n_s, "power smoothness");
    norm_chart->add_option("--phi", n_phi, "refinement expression");
    norm_chart->add_option("--input", n_input, "distribution JSON (dimension 1)")->required();
    norm_chart->add_option("--config", n_config, "config file with atlas_* keys");

    // ---- interp-check ----
    auto* interp = app.add_subcommand("interp-check",
                                      "compare the couple route with the direct refined norm");
    std::string ic_phi = "const(1)", ic_input;
    double ic_s = 0.0, ic_eps = 1.0, ic_delta = 1.0, ic_tol = 1e-12;
    interp->add_option("--s", ic_s, "power smoothness");
    interp->add_option("--phi", ic_phi, "refinement expression");
    interp->add_option("--eps", ic_eps, "lower smoothness gap")->check(CLI::PositiveNumber);
    interp->add_option("--delta", ic_delta, "upper smoothness gap")->check(CLI::PositiveNumber);
    interp->add_option("--input", ic_input, "distribution JSON")->required();
    interp->add_option("--tolerance", ic_tol, "relative tolerance");

    // ---- operator-calculus commands ----
    std::string ec_phi = "const(1)", ec_input;
    double ec_s = 0.0, ec_tol = 1e-12;
    auto* calc_norm = app.add_subcommand("calculus-norm",
                                         "operator-calculus norm of a distribution");
    calc_norm->add_option("--s", ec_s, "power smoothness");
    calc_norm->add_option("--phi", ec_phi, "refinement expression");
    calc_norm->add_option("--input", ec_input, "distribution JSON")->required();
    auto* calc_check = app.add_subcommand(
        "calculus-check", "compare the operator-calculus norm with the Fourier-weight norm");
    calc_check->add_option("--s", ec_s, "power smoothness");
    calc_check->add_option("--phi", ec_phi, "refinement expression");
    calc_check->add_option("--input", ec_input, "distribution JSON")->required();
    calc_check->add_option("--tolerance", ec_tol, "relative tolerance");
    auto* lift_check = app.add_subcommand(
        "lifting-check", "check that applying 1 - Laplacian shifts smoothness by 2 exactly");
    lift_check->add_option("--s", ec_s, "power smoothness");
    lift_check->add_option("--phi", ec_phi, "refinement expression");
    lift_check->add_option("--input", ec_input, "distribution JSON")->required();
    lift_check->add_option("--tolerance", ec_tol, "relative tolerance");

    // ---- counterexample ----
    auto* counter = app.add_subcommand("counterexample",
                                       "two-point operator norms over a ratio grid (CSV)");
    std::string ce_psi, ce_ratios = "1,2,10,100,1000", ce_output;
    double ce_base = 2.0;
    counter->add_option("--psi", ce_psi, "parameter expression")->required();
    counter->add_option("--s-base", ce_base, "fixed lower point (> 1)");
    counter->add_option("--ratios", ce_ratios, "comma-separated t/s values");
    counter->add_option("--output", ce_output, "CSV path (default: stdout)");

    // ---- charts-study ----
    auto* study = app.add_subcommand("charts-study",
                                     "chart-norm / Fourier-norm ratios over low modes (CSV)");
    std::string cs_phi = "const(1)", cs_config, cs_output;
    double cs_s = 0.0;
    int cs_kmax = 16;
    study->add_option("--s", cs_s, "power smoothness");
    study->add_option("--phi", cs_phi, "refinement expression");
    study->add_option("--kmax", cs_kmax, "largest mode")->check(CLI::NonNegativeNumber);
    study->add_option("--config", cs_config, "config file with atlas_* keys");
    study->add_option("--output", cs_output, "CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            SuiteConfig cfg;
            if (!v_config.empty()) cfg = load_config_file(v_config);
            apply_env_overrides(cfg);
            if (v_seed_opt->count() > 0) cfg.seed = v_seed;
            if (verify->count("--suite") > 0 || v_config.empty()) cfg.suite = v_suite;
            if (verify->count("--output") > 0) cfg.output = v_output;
            if (verify->count("--format") > 0) cfg.format = v_format;
            if (v_ts_opt->count() > 0) cfg.tolerance_scale = v_tol_scale;
            if (v_jobs_opt->count() > 0) cfg.jobs = v_jobs;
            if (v_timing) cfg.timing = true;
            if (o1->count()) cfg.couple_instances = v_couple;
            if (o2->count()) cfg.product_instances = v_product;
            if (o3->count()) cfg.two_point_instances = v_two_point;
            if (o4->count()) cfg.uniform_trials = v_uniform;
            if (o5->count()) cfg.hormander_instances = v_hormander;
            if (o6->count()) cfg.elliptic_instances = v_elliptic;
            if (o7->count()) cfg.kt_instances = v_kt;
            if (cfg.format != "jsonl" && cfg.format != "csv")
                throw ConfigParseError("format must be jsonl or csv");
            return run_verify(cfg);
        }

        if (norm->parsed()) {
            if (norm_hs->parsed()) {
                const auto u = load_fourier(n_input);
                print_value(hormander::hnorm(u, {n_s, param::parse_param_fn(n_phi)}));
            } else if (norm_calc->parsed()) {
                const auto u = load_fourier(n_input);
                print_value(elliptic::calculus_norm(elliptic::ShiftedLaplacian{}, u,
                                                    {n_s, param::parse_param_fn(n_phi)}));
            } else if (norm_psi->parsed()) {
                const auto inst = load_couple_instance(n_input);
                print_value(couple::interpolated_norm(inst.spaces,
                                                      param::parse_param_fn(n_psi), inst.vector));
            } else if (norm_chart->parsed()) {
                SuiteConfig cfg;
                if (!n_config.empty()) cfg = load_config_file(n_config);
                const charts::ChartAtlas atlas(suites::atlas_from(cfg));
                const auto u = load_fourier(n_input);
                const auto f = charts::CircleFunction::from_spectral(u);
                const auto result =
                    charts::chart_norm(atlas, f, {n_s, param::parse_param_fn(n_phi)});
                print_value(result.value);
                std::fprintf(stderr, "refined=%.15g error_estimate=%.3g\n",
                             result.refined_value, result.error_estimate);
            }
            return kExitPass;
        }

        if (interp->parsed()) {
            const auto u = load_fourier(ic_input);
            const auto pair = hormander::interp_identity_check(
                u, {ic_s, param::parse_param_fn(ic_phi)}, ic_eps, ic_delta);
            const bool pass = verdict(pair.lhs, pair.rhs, ic_tol);
            std::printf("lhs=%.15g rhs=%.15g tolerance=%.3g verdict=%s\n", pair.lhs, pair.rhs,
                        ic_tol, pass ? "pass" : "fail");
            return pass ? kExitPass : kExitCheckFailure;
        }

        if (calc_norm->parsed()) {
            const auto u = load_fourier(ec_input);
            print_value(elliptic::calculus_norm(elliptic::ShiftedLaplacian{}, u,
                                                {ec_s, param::parse_param_fn(ec_phi)}));
            return kExitPass;
        }

        if (calc_check->parsed() || lift_check->parsed()) {
            const auto u = load_fourier(ec_input);
            const hormander::SmoothnessIndex idx{ec_s, param::parse_param_fn(ec_phi)};
            const NormPair pair =
                calc_check->parsed()
                    ? elliptic::calculus_vs_fourier_check(u, idx)
                    : elliptic::lifting_check(elliptic::ShiftedLaplacian{}, u, idx);
            const bool pass = verdict(pair.lhs, pair.rhs, ec_tol);
            std::printf("lhs=%.15g rhs=%.15g tolerance=%.3g verdict=%s\n", pair.lhs, pair.rhs,
                        ec_tol, pass ? "pass" : "fail");
            return pass ? kExitPass : kExitCheckFailure;
        }

        if (counter->parsed()) {
            if (!(ce_base > 1.0)) throw ConfigParseError("counterexample: --s-base must be > 1");
            const param::ParamFn psi = param::parse_param_fn(ce_psi);
            std::ostringstream csv;
            csv << "ratio,norm_ratio,bound_ratio\n";
            char buf[160];
            for (double ratio : parse_ratio_list(ce_ratios)) {
                const double t = ce_base * ratio;
                if (!(t > 1.0))
                    throw ConfigParseError("counterexample: ratio " + std::to_string(ratio) +
                                           " sends t below 1");
                const auto res = couple::two_point_counterexample(psi, ce_base, t);
                std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", ratio, res.norm_ratio,
                              res.bound_ratio);
                csv << buf;
            }
            if (ce_output.empty()) std::cout << csv.str();
            else write_file(ce_output, csv.str());
            return kExitPass;
        }

        if (study->parsed()) {
            SuiteConfig cfg;
            if (!cs_config.empty()) cfg = load_config_file(cs_config);
            const charts::ChartAtlas atlas(suites::atlas_from(cfg));
            const hormander::SmoothnessIndex idx{cs_s, param::parse_param_fn(cs_phi)};
            std::vector<charts::CircleFunction> family;
            for (int k = 0; k <= cs_kmax; ++k)
                family.push_back(charts::CircleFunction::single_mode(k));
            const auto result = charts::equivalence_study(atlas, family, idx);
            std::ostringstream csv;
            csv << "k,ratio,refined_ratio\n";
            char buf[120];
            for (std::size_t j = 0; j < result.ratios.size(); ++j) {
                std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", j, result.ratios[j],
                              result.refined_ratios[j]);
                csv << buf;
            }
            if (cs_output.empty()) std::cout << csv.str();
            else write_file(cs_output, csv.str());
            std::fprintf(stderr, "spread=%.6g refined_spread=%.6g\n",
                         result.ratio_max / result.ratio_min,
                         result.refined_ratio_max / result.refined_ratio_min);
            return kExitPass;
        }
    } catch (const ConfigParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const ExpressionParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const DeserializationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
