#include "hilbint/suites.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "hilbint/elliptic.hpp"
#include "hilbint/grid.hpp"

namespace hilbint::suites {

namespace {

constexpr double kE = 2.718281828459045;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string idx_str(std::size_t i) { return "i=" + std::to_string(i); }

// Excess of a value over an upper bound: zero when the inequality holds.
// Inequality checks report this against rhs = 0 so the |lhs-rhs| verdict rule
// applies without cancellation noise from large absolute norms.
double excess(double value, double bound) { return std::max(0.0, value - bound); }

// Runs fn(0..count-1) on a pool and flattens the results in instance order,
// so the report stream does not depend on the number of workers.
std::vector<ReportRecord> parallel_instances(
    std::size_t count, std::size_t jobs,
    const std::function<std::vector<ReportRecord>(std::size_t)>& fn) {
    if (jobs == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        jobs = hw == 0 ? 1 : hw;
    }
    jobs = std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1));

    auto timed = [&fn](std::size_t i) {
        const auto start = std::chrono::steady_clock::now();
        std::vector<ReportRecord> out = fn(i);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        for (auto& rec : out) rec.wall_ms = ms;
        return out;
    };

    std::vector<std::vector<ReportRecord>> slots(count);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i] = timed(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    slots[i] = timed(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    std::vector<ReportRecord> flat;
    for (auto& slot : slots)
        for (auto& rec : slot) flat.push_back(std::move(rec));
    return flat;
}

void append(std::vector<ReportRecord>& into, std::vector<ReportRecord> from) {
    for (auto& rec : from) into.push_back(std::move(rec));
}

} // namespace

// --------------------------------------------------------------- generators

param::ParamFn random_qsv(Rng& rng) {
    switch (rng.uniform_int(0, 5)) {
    case 0: return param::constant(rng.uniform(0.5, 2.0));
    case 1: return param::log_multiscale({rng.uniform(-1.5, 1.5)});
    case 2: return param::log_multiscale({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    case 3:
        return param::karamata(param::AlphaSpec::inv_log(rng.uniform(-1.0, 1.0)),
                               param::BetaSpec::constant(rng.uniform(-0.5, 0.5)), kE);
    case 4:
        return param::karamata(param::AlphaSpec::inv_pow(rng.uniform(-1.0, 1.0),
                                                         rng.uniform(0.5, 2.0)),
                               param::BetaSpec::sin_log_log(rng.uniform(-0.3, 0.3)), 1.0);
    default:
        return param::product(param::log_multiscale({rng.uniform(-1.0, 1.0)}),
                              param::karamata(param::AlphaSpec::inv_log(rng.uniform(-0.5, 0.5)),
                                              param::BetaSpec::constant(0.0), kE));
    }
}

param::ParamFn random_interp_param(Rng& rng, double lo, double hi) {
    const double theta = rng.uniform(lo, hi);
    return param::product(param::power(theta), random_qsv(rng));
}

couple::SpectralCouple random_couple(Rng& rng, std::size_t max_dim) {
    const auto dim = static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(max_dim)));
    std::vector<double> lam(dim);
    for (auto& l : lam) l = rng.log_uniform(1.0, 1e8);
    return couple::SpectralCouple(std::move(lam), 1.0);
}

couple::SpectralVector random_vector(Rng& rng, std::size_t dim) {
    std::vector<couple::Complex> coeffs(dim);
    for (auto& c : coeffs) c = rng.gaussian();
    return couple::SpectralVector(std::move(coeffs));
}

hormander::FourierDistribution random_distribution(Rng& rng, int dim, int band_limit,
                                                   std::size_t max_modes) {
    hormander::FourierDistribution u(dim, band_limit);
    const auto count = static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(max_modes)));
    std::vector<int> k(static_cast<std::size_t>(dim));
    for (std::size_t m = 0; m < count; ++m) {
        for (auto& ki : k) ki = rng.uniform_int(-band_limit, band_limit);
        u.set(k, rng.gaussian());
    }
    return u;
}

charts::AtlasParams atlas_from(const SuiteConfig& cfg) {
    charts::AtlasParams p;
    p.center0 = cfg.atlas_center0;
    p.center1 = cfg.atlas_center1;
    p.arc_half_length = cfg.atlas_arc;
    p.support_fraction = cfg.atlas_support_fraction;
    p.chart_scale = cfg.atlas_scale;
    p.cutoff_pad = cfg.atlas_pad;
    p.circle_points = cfg.atlas_circle_points;
    p.line_length = cfg.atlas_line_length;
    p.line_points = cfg.atlas_line_points;
    return p;
}

// -------------------------------------------------------------- param suite

std::vector<ReportRecord> run_param_suite(const SuiteConfig& cfg) {
    const double ts = cfg.tolerance_scale;
    std::vector<ReportRecord> records;
    auto add = [&](ReportRecord rec) { records.push_back(std::move(rec)); };

    // Exact evaluation spots.
    add(make_record("param", "eval-power-sqrt", "weighted-eval", "pow(0.5) at t=4",
                    param::power(0.5)(4.0), 2.0, 1e-14 * ts));
    add(make_record("param", "eval-karamata-trivial", "slow-variation-representation",
                    "alpha=0 beta=0 at t=100",
                    param::karamata(param::AlphaSpec::zero(), param::BetaSpec::constant(0.0),
                                    1.0)(100.0),
                    1.0, 1e-14 * ts));
    {
        // Interpolation parameter frozen below 1: the value is phi(1).
        const param::ParamFn phi = param::log_multiscale({1.0});
        const param::ParamFn psi = param::interp_parameter(phi, 1.0, 1.0);
        add(make_record("param", "eval-interp-param-clamped", "interp-parameter-low-clamp",
                        "t=0.5", psi(0.5), phi(1.0), 0.0));
    }
    {
        // With alpha = 1/ln and base point e the representation integral is
        // an iterated logarithm, so the whole expression equals ln t.
        const param::ParamFn phi = param::karamata(param::AlphaSpec::inv_log(1.0),
                                                   param::BetaSpec::constant(0.0), kE);
        for (double t : {1e2, 1e5, 1e8})
            add(make_record("param", "karamata-log-integral", "slow-variation-representation",
                            "t=" + fmt(t), phi(t), std::log(t), 1e-8 * ts));
    }

    // Positivity across the catalog on the default evidence grid.
    {
        Rng rng(cfg.seed ^ 0x9a11);
        const auto grid = default_evidence_grid();
        for (std::size_t i = 0; i < 24; ++i) {
            const param::ParamFn f =
                i % 2 == 0 ? random_qsv(rng) : random_interp_param(rng, 0.0, 1.0);
            double min_value = f(grid.front());
            for (double t : grid) min_value = std::min(min_value, f(t));
            add(make_record("param", "positivity", "positive-total-function",
                            idx_str(i) + " " + f.describe(),
                            min_value > 0.0 && std::isfinite(min_value) ? 0.0 : 1.0, 0.0, 0.0));
        }
    }

    // Slow-variation limit for the Karamata catalog: phi(lambda t)/phi(t)
    // within 5% of 1 at t = 1e9. Log-family amplitudes stay below 0.45
    // because the decade ratio there is (ln 10t / ln t)^a ~ 1 + 0.111 a.
    {
        const std::vector<param::ParamFn> catalog = {
            param::karamata(param::AlphaSpec::zero(), param::BetaSpec::constant(0.3), 1.0),
            param::karamata(param::AlphaSpec::inv_log(0.4), param::BetaSpec::constant(0.0), kE),
            param::karamata(param::AlphaSpec::inv_log(-0.4), param::BetaSpec::constant(0.1), kE),
            param::karamata(param::AlphaSpec::inv_pow(1.0, 1.0), param::BetaSpec::constant(0.0),
                            1.0),
            param::karamata(param::AlphaSpec::inv_pow(-0.5, 0.5),
                            param::BetaSpec::constant(-0.2), 1.0),
            param::karamata(param::AlphaSpec::sin_log_over_log(0.8),
                            param::BetaSpec::constant(0.0), kE),
            param::karamata(param::AlphaSpec::zero(), param::BetaSpec::sin_log_log(0.3), 1.0),
            param::karamata(param::AlphaSpec::zero(), param::BetaSpec::step(0.5, 100.0), 1.0),
        };
        std::size_t i = 0;
        for (const auto& phi : catalog) {
            for (double lam : {0.5, 2.0, 10.0})
                add(make_record("param", "karamata-slow-variation", "slow-variation-limit",
                                idx_str(i) + " lambda=" + fmt(lam), phi(lam * 1e9) / phi(1e9),
                                1.0, 0.05 * ts));
            ++i;
        }
    }

    // Closure of the quasislow class under product, quotient, power and sum.
    // Draw tame amplitudes: the decade ratio at 1e9 scales like
    // 1 + 0.111 * (combined log exponent), and the window is 5%.
    {
        Rng rng(cfg.seed ^ 0x9a12);
        auto tame_qsv = [&rng]() {
            switch (rng.uniform_int(0, 2)) {
            case 0: return param::log_multiscale({rng.uniform(-0.2, 0.2)});
            case 1:
                return param::karamata(param::AlphaSpec::inv_log(rng.uniform(-0.2, 0.2)),
                                       param::BetaSpec::constant(rng.uniform(-0.3, 0.3)), kE);
            default:
                return param::karamata(param::AlphaSpec::inv_pow(rng.uniform(-1.0, 1.0),
                                                                 rng.uniform(0.5, 2.0)),
                                       param::BetaSpec::constant(0.0), 1.0);
            }
        };
        for (std::size_t i = 0; i < 12; ++i) {
            const param::ParamFn a = tame_qsv();
            const param::ParamFn b = tame_qsv();
            const param::ParamFn combos[] = {param::product(a, b), param::quotient(a, b),
                                             param::real_power(a, rng.uniform(-1.5, 1.5)),
                                             param::sum(a, b)};
            const param::ParamFn& f = combos[i % 4];
            for (double lam : {0.5, 2.0, 10.0})
                add(make_record("param", "qsv-closure-ratio", "slow-variation-closure",
                                idx_str(i) + " lambda=" + fmt(lam), f(lam * 1e9) / f(1e9), 1.0,
                                0.05 * ts));
        }
    }

    // Any positive power eventually dominates the slow part in both
    // directions; thresholds 1e6 and 1e-6 on a far-out geometric grid.
    {
        Rng rng(cfg.seed ^ 0x9a13);
        for (std::size_t i = 0; i < 6; ++i) {
            const param::ParamFn phi = random_qsv(rng);
            for (double theta : {0.1, 1.0}) {
                const double t = theta >= 1.0 ? 1e12 : 1e130;
                const double up = std::pow(t, theta) * phi(t);
                const double down = std::pow(t, -theta) * phi(t);
                add(make_record("param", "index-growth", "power-dominates-slow-part",
                                idx_str(i) + " theta=" + fmt(theta), excess(1e6, up), 0.0, 0.0));
                add(make_record("param", "index-decay", "power-dominates-slow-part",
                                idx_str(i) + " theta=" + fmt(theta), excess(down, 1e-6), 0.0,
                                0.0));
            }
        }
    }

    // Composed-parameter identities evaluated through both routes.
    {
        Rng rng(cfg.seed ^ 0x9a14);
        for (std::size_t i = 0; i < 100; ++i) {
            const param::ParamFn f = random_interp_param(rng, 0.0, 0.5);
            const param::ParamFn g = random_interp_param(rng, 0.5, 1.0);
            const param::ParamFn psi = random_interp_param(rng, 0.0, 1.0);
            const param::ParamFn omega = param::reiteration_omega(f, g, psi);
            const param::ParamFn chi = param::dual_parameter(psi);
            const double t = rng.log_uniform(1e-2, 1e8);
            add(make_record("param", "reiteration-identity-pointwise", "reiteration-parameter",
                            idx_str(i) + " t=" + fmt(t), omega(t), f(t) * psi(g(t) / f(t)),
                            1e-12 * ts));
            add(make_record("param", "dual-identity-pointwise", "dual-parameter",
                            idx_str(i) + " t=" + fmt(t), chi(t), t / psi(t), 1e-12 * ts));
        }
    }

    // Power reiteration collapses to the affine exponent combination.
    {
        Rng rng(cfg.seed ^ 0x9a15);
        for (std::size_t i = 0; i < 20; ++i) {
            const double a = rng.uniform(-1.0, 1.0);
            const double b = a + rng.uniform(0.0, 1.0);
            const double theta = rng.uniform(0.0, 1.0);
            const param::ParamFn omega =
                param::reiteration_omega(param::power(a), param::power(b), param::power(theta));
            const double t = rng.log_uniform(1e-3, 1e9);
            add(make_record("param", "reiteration-power-algebra", "reiteration-parameter",
                            idx_str(i) + " t=" + fmt(t), omega(t),
                            std::pow(t, (1.0 - theta) * a + theta * b), 1e-12 * ts));
        }
    }

    // Quasiconcavity evidence: powers in [0,1] certify with c <= 1 + 1e-9 ...
    {
        const auto grid = geometric_grid(1.0, 1e8, 256);
        for (int j = 0; j <= 20; ++j) {
            const double theta = j / 20.0;
            const auto cert = param::quasiconcavity_certificate(param::power(theta), 0.0, grid);
            add(make_record("param", "quasiconcavity-power", "two-sided-growth-bound",
                            "theta=" + fmt(theta), excess(cert.c_estimate, 1.0), 0.0,
                            1e-9 * ts));
        }
        // ... while super-linear or decaying inputs grow without stabilizing.
        std::size_t i = 0;
        for (const auto& bad :
             {param::power(2.0), param::product(param::power(-0.5), param::log_multiscale({1.0})),
              param::real_power(param::power(0.5), 3.0)}) {
            const auto cert = param::quasiconcavity_certificate(bad, 0.0, grid);
            add(make_record("param", "quasiconcavity-violation", "two-sided-growth-bound",
                            idx_str(i++) + " " + bad.describe(),
                            cert.quasiconcave_evidence ? 1.0 : 0.0, 0.0, 0.0));
        }
    }

    // Interpolation-parameter verdicts.
    {
        const auto by_construction = param::interpolation_parameter_evidence(
            param::interp_parameter(param::constant(1.0), 1.0, 1.0));
        add(make_record("param", "interp-evidence-by-construction", "declared-index-shortcut",
                        "iparam(const(1),1,1)",
                        by_construction.verdict == param::InterpVerdict::PassByConstruction
                            ? 0.0
                            : 1.0,
                        0.0, 0.0));
        const auto violation = param::interpolation_parameter_evidence(param::power(2.0));
        add(make_record("param", "interp-evidence-violation", "two-sided-growth-bound", "pow(2)",
                        violation.pass() ? 1.0 : 0.0, 0.0, 0.0));
        const auto constant_pass = param::interpolation_parameter_evidence(param::power(0.0));
        add(make_record("param", "interp-evidence-constant", "two-sided-growth-bound", "pow(0)",
                        constant_pass.pass() ? 0.0 : 1.0, 0.0, 0.0));
    }

    // Boundedness evidence for the admissible class.
    {
        const auto grid = geometric_grid(1.0, 1e6, 256);
        const auto good = param::check_boundedness(param::power(2.0), grid, 1.0);
        add(make_record("param", "boundedness-pass", "admissible-weight-class", "pow(2)",
                        good.pass() ? 0.0 : 1.0, 0.0, 0.0));
        const auto bad = param::check_boundedness(param::power(-1.0), grid, 1.0);
        add(make_record("param", "boundedness-fail", "admissible-weight-class", "pow(-1)",
                        bad.pass() ? 1.0 : 0.0, 0.0, 0.0));
        const auto flat = param::check_boundedness(param::constant(1.0), grid, 1.0);
        add(make_record("param", "boundedness-constant", "admissible-weight-class", "const(1)",
                        flat.tail_inv_sup, 1.0, 0.0));
    }

    return records;
}

// ------------------------------------------------------------- couple suite

std::vector<ReportRecord> run_couple_suite(const SuiteConfig& cfg) {
    const double ts = cfg.tolerance_scale;
    std::vector<ReportRecord> records;

    // Reiteration, duality, embedding chain and monotonicity per instance.
    append(records, parallel_instances(cfg.couple_instances, cfg.jobs, [&](std::size_t i) {
        Rng rng = Rng::for_instance(cfg.seed, i);
        const auto c = random_couple(rng, 128);
        const auto u = random_vector(rng, c.dim());
        param::ParamFn f = random_interp_param(rng, 0.0, 1.0);
        param::ParamFn g = random_interp_param(rng, 0.0, 1.0);
        if (*g.declared_index() < *f.declared_index()) std::swap(f, g);
        const param::ParamFn psi = random_interp_param(rng, 0.0, 1.0);

        std::vector<ReportRecord> out;
        const auto reit = couple::reiteration_check(c, f, g, psi, u);
        out.push_back(make_record("couple", "reiteration-norm-equality",
                                  "reiteration-norm-identity",
                                  idx_str(i) + " N=" + std::to_string(c.dim()), reit.lhs,
                                  reit.rhs, 1e-12 * ts));
        const auto dual = couple::duality_check(c, psi, u);
        out.push_back(make_record("couple", "duality-norm-equality", "dual-norm-identity",
                                  idx_str(i) + " N=" + std::to_string(c.dim()), dual.lhs,
                                  dual.rhs, 1e-12 * ts));

        const double n0 = couple::interpolated_norm(c, param::power(0.0), u);
        const double n1 = couple::interpolated_norm(c, param::power(1.0), u);
        const double npsi = couple::interpolated_norm(c, psi, u);
        const double c_lower = couple::embedding_constants(c, psi, param::power(0.0)).norm_bound;
        const double c_upper = couple::embedding_constants(c, param::power(1.0), psi).norm_bound;
        const double lower_ratio = npsi == 0.0 ? 0.0 : n0 / (c_lower * npsi);
        const double upper_ratio = n1 == 0.0 ? 0.0 : npsi / (c_upper * n1);
        out.push_back(make_record("couple", "embedding-chain-lower", "dense-embedding-chain",
                                  idx_str(i), excess(lower_ratio, 1.0), 0.0, 1e-12 * ts));
        out.push_back(make_record("couple", "embedding-chain-upper", "dense-embedding-chain",
                                  idx_str(i), excess(upper_ratio, 1.0), 0.0, 1e-12 * ts));

        const param::ParamFn smaller = param::quotient(psi, param::power(rng.uniform(0.0, 0.5)));
        const double nsmall = couple::interpolated_norm(c, smaller, u);
        const double mono_ratio = npsi == 0.0 ? 0.0 : nsmall / npsi;
        out.push_back(make_record("couple", "embedding-monotone", "pointwise-weight-monotone",
                                  idx_str(i), excess(mono_ratio, 1.0), 0.0, 1e-12 * ts));
        return out;
    }));

    // Direct products: both routes share the blockwise summation order.
    append(records, parallel_instances(cfg.product_instances, cfg.jobs, [&](std::size_t i) {
        Rng rng = Rng::for_instance(cfg.seed ^ 0xb10c, i);
        const auto count = static_cast<std::size_t>(rng.uniform_int(1, 4));
        std::vector<couple::SpectralCouple> couples;
        std::vector<couple::SpectralVector> vectors;
        for (std::size_t b = 0; b < count; ++b) {
            couples.push_back(random_couple(rng, 12));
            vectors.push_back(random_vector(rng, couples.back().dim()));
        }
        const param::ParamFn w = random_interp_param(rng, 0.0, 1.0);
        const auto pair = couple::product_norm_check(couples, w, vectors);
        return std::vector<ReportRecord>{make_record(
            "couple", "product-norm-bitexact", "direct-product-norm-identity",
            idx_str(i) + " blocks=" + std::to_string(count), pair.lhs, pair.rhs, 0.0)};
    }));

    // Two-point construction: power-iteration norm equals the closed ratio.
    append(records, parallel_instances(cfg.two_point_instances, cfg.jobs, [&](std::size_t i) {
        Rng rng = Rng::for_instance(cfg.seed ^ 0x2217, i);
        const param::ParamFn psi = random_interp_param(rng, 0.0, 1.0);
        const double s = rng.log_uniform(1.01, 1e5);
        const double t = rng.log_uniform(1.01, 1e5);
        couple::OperatorNormOptions force;
        force.force_power_iteration = true;
        const auto res = couple::two_point_counterexample(psi, s, t, force);
        return std::vector<ReportRecord>{make_record(
            "couple", "two-point-exact-norm", "two-point-operator-norm",
            idx_str(i) + " s=" + fmt(s) + " t=" + fmt(t), res.norm_ratio_operator,
            res.norm_ratio, 1e-12 * ts)};
    }));

    // The square parameter defeats every uniform constant: at extent 1e3 the
    // bound ratio is exactly the extent.
    {
        const auto res = couple::two_point_counterexample(param::power(2.0), 2.0, 2000.0);
        records.push_back(make_record("couple", "two-point-bound-growth",
                                      "no-uniform-interpolation-constant", "t/s=1e3",
                                      res.bound_ratio, 1e3, 1e-9 * ts));
    }

    // Uniform operator-norm bound for power parameters.
    for (double theta : {0.25, 0.5, 0.75}) {
        const auto sweep = couple::uniform_bound_sweep(param::power(theta), 1.0,
                                                       cfg.uniform_trials, cfg.seed ^ 0x5eeb);
        records.push_back(make_record("couple", "uniform-bound-power", "uniform-operator-bound",
                                      "theta=" + fmt(theta) + " trials=" +
                                          std::to_string(cfg.uniform_trials),
                                      excess(sweep.max_observed_c, 1.0), 0.0, 1e-6 * ts));
    }

    // Closed-form and iterative operator norms agree on thin operators.
    append(records, parallel_instances(32, cfg.jobs, [&](std::size_t i) {
        Rng rng = Rng::for_instance(cfg.seed ^ 0xc105, i);
        std::vector<double> lamx(2), lamy(static_cast<std::size_t>(rng.uniform_int(3, 8)));
        for (auto& l : lamx) l = rng.log_uniform(1.0, 1e6);
        for (auto& l : lamy) l = rng.log_uniform(1.0, 1e6);
        const couple::SpectralCouple cx(lamx, 1.0), cy(lamy, 1.0);
        couple::SpectralOperator T(cy.dim(), cx.dim());
        for (std::size_t a = 0; a < cy.dim(); ++a)
            for (std::size_t b = 0; b < cx.dim(); ++b) T.at(a, b) = rng.gaussian();
        const param::ParamFn w = random_interp_param(rng, 0.0, 1.0);
        const double closed = couple::operator_norm(cx, cy, w, T);
        couple::OperatorNormOptions force;
        force.force_power_iteration = true;
        const double iterative = couple::operator_norm(cx, cy, w, T, force);
        return std::vector<ReportRecord>{make_record("couple", "operator-norm-routes",
                                                     "largest-singular-value", idx_str(i),
                                                     closed, iterative, 1e-9 * ts)};
    }));

    return records;
}

// ---------------------------------------------------------- hormander suite

std::vector<ReportRecord> run_hormander_suite(const SuiteConfig& cfg) {
    const double ts = cfg.tolerance_scale;
    std::vector<ReportRecord> records;

    append(records, parallel_instances(cfg.hormander_instances, cfg.jobs, [&](std::size_t i) {
        Rng rng = Rng::for_instance(cfg.seed ^ 0x4048, i);
        const int dim = rng.uniform_int(1, 2);
        const int band = rng.uniform_int(1, 64);
        const auto u = random_distribution(rng, dim, band, 128);
        const hormander::SmoothnessIndex idx{rng.uniform(-4.0, 4.0), random_qsv(rng)};
        const double eps = rng.uniform(0.1, 3.0);
        const double delta = rng.uniform(0.1, 3.0);

        std::vector<ReportRecord> out;
        const auto pair = hormander::interp_identity_check(u, idx, eps, delta);
        out.push_back(make_record("hormander", "interp-identity", "sobolev-couple-realization",
                                  idx_str(i) + " n=" + std::to_string(dim) + " K=" +
                                      std::to_string(band) + " s=" + fmt(idx.s),
                                  pair.lhs, pair.rhs, 1e-12 * ts));

        // Monotone in s on a spectrum of smoothed moduli >= 1.
        const double s_low = idx.s - rng.uniform(0.0, 2.0);
        const double low = hormander::hnorm(u, {s_low, idx.phi});
        const double high = hormander::hnorm(u, idx);
        const double ratio = high == 0.0 ? 0.0 : low / high;
        out.push_back(make_record("hormander", "hnorm-monotone-s", "weight-monotone-in-s",
                                  idx_str(i), excess(ratio, 1.0), 0.0, 1e-12 * ts));

        // Interpolating between two refined endpoints lands on the computed
        // target index with norm equality.
        const double gap = rng.uniform(0.1, 3.0);
        const auto target = hormander::target_identity_check(
            u, idx.s, idx.phi, idx.s + gap, random_qsv(rng), rng.uniform(0.05, 0.95),
            random_qsv(rng));
        out.push_back(make_record("hormander", "target-space-identity",
                                  "refined-scale-closure", idx_str(i), target.lhs, target.rhs,
                                  1e-12 * ts));
        return out;
    }));

    // Parseval at the base point of the scale: bit-exact.
    {
        Rng rng(cfg.seed ^ 0x9425);
        for (std::size_t i = 0; i < 25; ++i) {
            const auto u = random_distribution(rng, rng.uniform_int(1, 2), 32, 64);
            double l2_sq = 0.0;
            for (const auto& mode : u.modes()) l2_sq += std::norm(mode.coeff);
            const double hn = hormander::hnorm(u, {0.0, param::constant(1.0)});
            records.push_back(make_record("hormander", "parseval-base-point",
                                          "coefficient-norm-identity", idx_str(i), hn,
                                          std::sqrt(l2_sq), 0.0));
        }
    }

    // Single-mode weights: hnorm of one mode is its weight.
    {
        Rng rng(cfg.seed ^ 0x9426);
        for (std::size_t i = 0; i < 25; ++i) {
            const int k = rng.uniform_int(-64, 64);
            hormander::FourierDistribution u(1, 64);
            u.set({k}, {1.0, 0.0});
            const hormander::SmoothnessIndex idx{rng.uniform(-3.0, 3.0), random_qsv(rng)};
            const double kk = std::sqrt(1.0 + static_cast<double>(k) * k);
            records.push_back(make_record("hormander", "single-mode-weight", "weighted-eval",
                                          idx_str(i) + " k=" + std::to_string(k),
                                          hormander::hnorm(u, idx),
                                          std::pow(kk, idx.s) * idx.phi(kk), 1e-13 * ts));
        }
    }

    // The refinement strictly separates the scale from its power backbone:
    // single high modes push the norm ratio beyond any fixed value, sampled
    // on a growing band. The growth is logarithmic, so the witness threshold
    // at band 1e6 is ~ ln(1e6).
    {
        const param::ParamFn log_phi = param::log_multiscale({1.0});
        double previous = 0.0;
        bool monotone = true;
        double last = 0.0;
        for (int exponent = 1; exponent <= 6; ++exponent) {
            const int k = static_cast<int>(std::pow(10.0, exponent));
            hormander::FourierDistribution u(1, k);
            u.set({k}, {1.0, 0.0});
            const double with_log = hormander::hnorm(u, {1.0, log_phi});
            const double plain = hormander::hnorm(u, {1.0, param::constant(1.0)});
            last = with_log / plain;
            if (last <= previous) monotone = false;
            previous = last;
        }
        records.push_back(make_record("hormander", "scale-refinement-monotone-growth",
                                      "refinement-separates-scale", "k=10..1e6",
                                      monotone ? 0.0 : 1.0, 0.0, 0.0));
        records.push_back(make_record("hormander", "scale-refinement-witness",
                                      "refinement-separates-scale", "k=1e6 phi=log",
                                      excess(10.0, last), 0.0, 0.0));
    }

    // Inclusion constants: trivial refinement gives exactly 1 at the origin.
    {
        const auto flat = hormander::inclusion_constants({0.0, param::constant(1.0)}, 0.5, 64, 2);
        records.push_back(make_record("hormander", "inclusion-constants-flat",
                                      "two-sided-sobolev-inclusion", "phi=1 upper", flat.upper,
                                      1.0, 0.0));
        records.push_back(make_record("hormander", "inclusion-constants-flat",
                                      "two-sided-sobolev-inclusion", "phi=1 lower", flat.lower,
                                      1.0, 0.0));
        // Larger eps shrinks both constants toward the small-frequency values.
        const param::ParamFn log_phi = param::log_multiscale({1.0});
        double prev_upper = 1e300;
        bool monotone = true;
        for (double eps : {0.25, 0.5, 1.0, 2.0}) {
            const auto inc = hormander::inclusion_constants({0.0, log_phi}, eps, 256, 1);
            if (inc.upper > prev_upper) monotone = false;
            prev_upper = inc.upper;
        }
        records.push_back(make_record("hormander", "inclusion-constants-monotone",
                                      "two-sided-sobolev-inclusion", "phi=log eps grid",
                                      monotone ? 0.0 : 1.0, 0.0, 0.0));
    }

    return records;
}

// ----------------------------------------------------------- elliptic suite

std::vector<ReportRecord> run_elliptic_suite(const SuiteConfig& cfg) {
    const double ts = cfg.tolerance_scale;
    std::vector<ReportRecord> records;
    const elliptic::ShiftedLaplacian op;

    append(records, parallel_instances(cfg.elliptic_instances, cfg.jobs, [&](std::size_t i) {
        Rng rng = Rng::for_instance(cfg.seed ^ 0xe111, i);
        const int dim = rng.uniform_int(1, 2);
        const int band = rng.uniform_int(1, 64);
        const auto u = random_distribution(rng, dim, band, 128);
        const hormander::SmoothnessIndex idx{rng.uniform(-4.0, 4.0), random_qsv(rng)};

        std::vector<ReportRecord> out;
        const auto calculus = elliptic::calculus_vs_fourier_check(u, idx);
        out.push_back(make_record("elliptic", "calculus-norm-equality",
                                  "spectral-calculus-realization",
                                  idx_str(i) + " n=" + std::to_string(dim) + " s=" + fmt(idx.s),
                                  calculus.lhs, calculus.rhs, 1e-12 * ts));
        const auto lift = elliptic::lifting_check(op, u, idx);
        out.push_back(make_record("elliptic", "lifting-equality", "order-two-lifting",
                                  idx_str(i), lift.lhs, lift.rhs, 1e-12 * ts));

        // Quadratic form of the operator stays above the L2 form (lower
        // spectral bound 1).
        double form = 0.0, l2 = 0.0;
        for (const auto& mode : u.modes()) {
            form += op.eigenvalue(mode.k) * std::norm(mode.coeff);
            l2 += std::norm(mode.coeff);
        }
        out.push_back(make_record("elliptic", "positivity-form", "lower-spectral-bound",
                                  idx_str(i), excess(l2 / form, 1.0), 0.0, 1e-12 * ts));

        // Mode-wise inversion of the calculus weight.
        const param::ParamFn weight = param::power_scaled(idx.phi, idx.s, op.order());
        const auto forward = elliptic::apply_spectral(op, weight, u);
        const auto back =
            elliptic::apply_spectral(op, param::quotient(param::constant(1.0), weight), forward);
        double worst = 0.0;
        for (const auto& mode : u.modes()) {
            const double denom = std::abs(mode.coeff);
            if (denom > 0.0) worst = std::max(worst, std::abs(back.at(mode.k) - mode.coeff) / denom);
        }
        out.push_back(make_record("elliptic", "calculus-inversion", "spectral-function-inverse",
                                  idx_str(i), worst, 0.0, 1e-14 * ts));
        return out;
    }));

    // Graph norm against the plain norm for s >= 0.
    append(records, parallel_instances(100, cfg.jobs, [&](std::size_t i) {
        Rng rng = Rng::for_instance(cfg.seed ^ 0xe112, i);
        const int dim = rng.uniform_int(1, 2);
        const auto u = random_distribution(rng, dim, 32, 64);
        const hormander::SmoothnessIndex idx{rng.uniform(0.0, 3.0), random_qsv(rng)};
        const auto res = elliptic::graph_norm_check(u, idx);
        std::vector<ReportRecord> out;
        out.push_back(make_record("elliptic", "graph-norm-lower", "graph-norm-equivalence",
                                  idx_str(i), excess(1.0, res.ratio), 0.0, 1e-12 * ts));
        out.push_back(make_record("elliptic", "graph-norm-upper", "graph-norm-equivalence",
                                  idx_str(i) + " bound=" + fmt(res.ratio_bound),
                                  excess(res.ratio, res.ratio_bound), 0.0, 1e-12 * ts));
        return out;
    }));

    // Polynomial envelope of the calculus weight on the eigenvalue range:
    // with k m > s the quotient weight(t)/t^k stays bounded on [1, 1+nK^2].
    {
        Rng rng(cfg.seed ^ 0xe113);
        for (std::size_t i = 0; i < 10; ++i) {
            const hormander::SmoothnessIndex idx{rng.uniform(-4.0, 4.0), random_qsv(rng)};
            const int k = static_cast<int>(std::floor(idx.s / op.order())) + 1;
            const param::ParamFn weight = param::power_scaled(idx.phi, idx.s, op.order());
            double envelope = 0.0;
            for (double t : geometric_grid(1.0, 1.0 + 2.0 * 64.0 * 64.0, 256))
                envelope = std::max(envelope, weight(t) / std::pow(t, k));
            records.push_back(make_record("elliptic", "weight-polynomial-envelope",
                                          "calculus-domain-containment",
                                          idx_str(i) + " k=" + std::to_string(k),
                                          std::isfinite(envelope) && envelope > 0.0 ? 0.0 : 1.0,
                                          0.0, 0.0));
        }
    }

    return records;
}

// ------------------------------------------------------------- charts suite

std::vector<ReportRecord> run_charts_suite(const SuiteConfig& cfg) {
    const double ts = cfg.tolerance_scale;
    std::vector<ReportRecord> records;
    const charts::ChartAtlas atlas(atlas_from(cfg));

    // Partition of unity sums to 1 at every circle node.
    {
        double worst = 0.0;
        for (std::size_t m = 0; m < atlas.params().circle_points; ++m) {
            const double theta = atlas.circle_node(m);
            worst = std::max(worst,
                             std::abs(atlas.partition(0, theta) + atlas.partition(1, theta) - 1.0));
        }
        records.push_back(make_record("charts", "partition-exactness", "partition-of-unity",
                                      "all nodes", worst, 0.0, 1e-12 * ts));
    }

    // Sew inverts rectify on band-limited functions.
    append(records, parallel_instances(cfg.kt_instances, cfg.jobs, [&](std::size_t i) {
        Rng rng = Rng::for_instance(cfg.seed ^ 0xc4a2, i);
        const int band = rng.uniform_int(1, 32);
        hormander::FourierDistribution u(1, band);
        const int count = rng.uniform_int(1, 24);
        for (int m = 0; m < count; ++m) u.set({rng.uniform_int(-band, band)}, rng.gaussian());
        const auto f = charts::CircleFunction::from_spectral(u);

        const auto glued = charts::sew(atlas, charts::rectify(atlas, f));
        const auto direct = f.sample(atlas.params().circle_points);
        const auto back = glued.sample(atlas.params().circle_points);
        double worst = 0.0;
        for (std::size_t m = 0; m < direct.size(); ++m)
            worst = std::max(worst, std::abs(back[m] - direct[m]));
        return std::vector<ReportRecord>{make_record(
            "charts", "sew-rectify-identity", "rectify-sew-inverse",
            idx_str(i) + " K=" + std::to_string(band), worst, 0.0, 1e-8 * ts)};
    }));

    // Chart norm is a norm on the sampled family: absolute homogeneity and
    // the triangle inequality.
    append(records, parallel_instances(12, cfg.jobs, [&](std::size_t i) {
        Rng rng = Rng::for_instance(cfg.seed ^ 0xc4a3, i);
        auto random_circle_fn = [&](int band) {
            hormander::FourierDistribution u(1, band);
            const int count = rng.uniform_int(1, 12);
            for (int m = 0; m < count; ++m) u.set({rng.uniform_int(-band, band)}, rng.gaussian());
            return charts::CircleFunction::from_spectral(u);
        };
        const hormander::SmoothnessIndex idx{rng.uniform(-1.5, 1.5), random_qsv(rng)};
        const auto f = random_circle_fn(16);
        const auto g = random_circle_fn(16);
        const std::complex<double> scale = rng.gaussian();

        const double nf = charts::chart_norm(atlas, f, idx).value;
        const double ng = charts::chart_norm(atlas, g, idx).value;
        const auto scaled = charts::CircleFunction::from_spectral(f.spectrum().scaled(scale));
        const double nscaled = charts::chart_norm(atlas, scaled, idx).value;
        const auto fg = charts::CircleFunction::from_spectral(f.spectrum() + g.spectrum());
        const double nfg = charts::chart_norm(atlas, fg, idx).value;

        std::vector<ReportRecord> out;
        out.push_back(make_record("charts", "chart-norm-homogeneity", "norm-axioms",
                                  idx_str(i) + " s=" + fmt(idx.s), nscaled,
                                  std::abs(scale) * nf, 1e-12 * ts));
        const double triangle_ratio = nf + ng == 0.0 ? 0.0 : nfg / (nf + ng);
        out.push_back(make_record("charts", "chart-norm-triangle", "norm-axioms",
                                  idx_str(i) + " s=" + fmt(idx.s), excess(triangle_ratio, 1.0),
                                  0.0, 1e-12 * ts));
        return out;
    }));

    // Equivalence study on the low-mode family for the flat refinement.
    for (double s : {0.0, 1.0}) {
        std::vector<charts::CircleFunction> family;
        for (int k = 0; k <= 16; ++k) family.push_back(charts::CircleFunction::single_mode(k));
        const hormander::SmoothnessIndex idx{s, param::constant(1.0)};
        const auto study = charts::equivalence_study(atlas, family, idx);
        const double spread = study.ratio_max / study.ratio_min;
        records.push_back(make_record("charts", "equivalence-ratio-spread",
                                      "atlas-norm-equivalence", "modes 0..16 s=" + fmt(s),
                                      excess(spread, 10.0), 0.0, 0.0));
        double stability = 0.0;
        for (std::size_t j = 0; j < study.ratios.size(); ++j)
            stability = std::max(stability, std::abs(study.refined_ratios[j] - study.ratios[j]) /
                                                study.ratios[j]);
        records.push_back(make_record("charts", "equivalence-ratio-stability",
                                      "atlas-norm-equivalence", "modes 0..16 s=" + fmt(s),
                                      excess(stability, 0.01), 0.0, 0.0));
        const double refined_spread = study.refined_ratio_max / study.refined_ratio_min;
        records.push_back(make_record("charts", "equivalence-spread-stability",
                                      "atlas-norm-equivalence", "modes 0..16 s=" + fmt(s),
                                      std::abs(refined_spread - spread) / spread, 0.0,
                                      0.01 * ts));
    }

    return records;
}

std::vector<ReportRecord> run_suite(const SuiteConfig& cfg) {
    std::vector<ReportRecord> records;
    const bool all = cfg.suite == "all";
    if (all || cfg.suite == "param") append(records, run_param_suite(cfg));
    if (all || cfg.suite == "couple") append(records, run_couple_suite(cfg));
    if (all || cfg.suite == "hormander") append(records, run_hormander_suite(cfg));
    if (all || cfg.suite == "elliptic") append(records, run_elliptic_suite(cfg));
    if (all || cfg.suite == "charts") append(records, run_charts_suite(cfg));
    return records;
}

} // namespace hilbint::suites
