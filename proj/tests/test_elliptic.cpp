#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "hilbint/elliptic.hpp"
#include "hilbint/param.hpp"
#include "hilbint/rng.hpp"
#include "hilbint/suites.hpp"

using namespace hilbint;
using namespace hilbint::elliptic;
using hilbint::hormander::Complex;
using hilbint::hormander::hnorm;
using hilbint::param::constant;
using hilbint::param::log_multiscale;
using hilbint::param::power_scaled;
using hilbint::param::quotient;

namespace {

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0});
}

} // namespace

TEST_CASE("operator application") {
    const ShiftedLaplacian op;
    SUBCASE("constant mode is fixed") {
        FourierDistribution u(1, 2);
        u.set({0}, {2.5, -1.0});
        const auto v = apply(op, u);
        CHECK(v.at({0}) == Complex(2.5, -1.0));
    }
    SUBCASE("single mode scales by 1 + |k|^2") {
        FourierDistribution u(2, 2);
        u.set({1, 0}, {1.0, 0.0});
        const auto v = apply(op, u);
        CHECK(v.at({1, 0}) == Complex(2.0, 0.0));
    }
    SUBCASE("parseval of the image") {
        Rng rng(3);
        const auto u = suites::random_distribution(rng, 2, 8, 32);
        const auto v = apply(op, u);
        double direct = 0.0;
        for (const auto& mode : u.modes()) {
            const double ev = op.eigenvalue(mode.k);
            direct += ev * ev * std::norm(mode.coeff);
        }
        double image = 0.0;
        for (const auto& mode : v.modes()) image += std::norm(mode.coeff);
        CHECK(image == doctest::Approx(direct).epsilon(1e-15));
    }
}

TEST_CASE("calculus norm") {
    const ShiftedLaplacian op;
    SUBCASE("flat data reduce to the coefficient norm") {
        Rng rng(17);
        const auto u = suites::random_distribution(rng, 1, 16, 32);
        double l2_sq = 0.0;
        for (const auto& mode : u.modes()) l2_sq += std::norm(mode.coeff);
        CHECK(calculus_norm(op, u, {0.0, constant(1.0)}) ==
              doctest::Approx(std::sqrt(l2_sq)).epsilon(1e-15));
    }
    SUBCASE("single mode weight collapses to the smoothed modulus form") {
        const param::ParamFn phi = log_multiscale({1.0});
        for (long long k : {0LL, 3LL, 100LL, 100000LL}) {
            FourierDistribution u(1, static_cast<int>(k == 0 ? 1 : k));
            u.set({static_cast<int>(k)}, {1.0, 0.0});
            for (double s : {-1.5, 0.0, 2.0}) {
                const double kk = std::sqrt(1.0 + static_cast<double>(k) * k);
                CHECK(rel_diff(calculus_norm(op, u, {s, phi}),
                               std::pow(kk, s) * phi(kk)) < 1e-12);
            }
        }
    }
    SUBCASE("zero input") {
        CHECK(calculus_norm(op, FourierDistribution(1, 4), {1.0, constant(1.0)}) == 0.0);
    }
}

TEST_CASE("calculus equals the Fourier-side norm") {
    SUBCASE("flat refinement is the Sobolev norm on both routes") {
        Rng rng(23);
        const auto u = suites::random_distribution(rng, 2, 16, 48);
        const auto pair = calculus_vs_fourier_check(u, {2.0, constant(1.0)});
        CHECK(rel_diff(pair.lhs, pair.rhs) < 1e-12);
    }
    SUBCASE("500 randomized instances at 1e-12") {
        for (std::size_t i = 0; i < 500; ++i) {
            Rng rng = Rng::for_instance(31337, i);
            const int dim = rng.uniform_int(1, 2);
            const auto u = suites::random_distribution(rng, dim, rng.uniform_int(1, 64), 128);
            const hormander::SmoothnessIndex idx{rng.uniform(-4.0, 4.0), suites::random_qsv(rng)};
            const auto pair = calculus_vs_fourier_check(u, idx);
            CHECK(rel_diff(pair.lhs, pair.rhs) < 1e-12);
        }
    }
}

TEST_CASE("order-two lifting") {
    const ShiftedLaplacian op;
    SUBCASE("single mode is pure algebra") {
        FourierDistribution u(2, 3);
        u.set({2, -1}, {0.0, 1.0});
        const auto pair = lifting_check(op, u, {-0.5, log_multiscale({0.5})});
        CHECK(rel_diff(pair.lhs, pair.rhs) < 1e-13);
    }
    SUBCASE("500 randomized instances at 1e-12") {
        for (std::size_t i = 0; i < 500; ++i) {
            Rng rng = Rng::for_instance(91, i);
            const int dim = rng.uniform_int(1, 2);
            const auto u = suites::random_distribution(rng, dim, rng.uniform_int(1, 64), 128);
            const hormander::SmoothnessIndex idx{rng.uniform(-4.0, 4.0), suites::random_qsv(rng)};
            const auto pair = lifting_check(op, u, idx);
            CHECK(rel_diff(pair.lhs, pair.rhs) < 1e-12);
        }
    }
    SUBCASE("flat refinement is classical lifting") {
        Rng rng(92);
        const auto u = suites::random_distribution(rng, 1, 32, 64);
        const auto pair = lifting_check(op, u, {1.0, constant(1.0)});
        CHECK(rel_diff(pair.lhs, pair.rhs) < 1e-12);
        CHECK(pair.rhs == doctest::Approx(hnorm(u, {3.0, constant(1.0)})).epsilon(1e-15));
    }
}

TEST_CASE("graph norm") {
    SUBCASE("flat refinement, one constant mode") {
        FourierDistribution u(1, 1);
        u.set({0}, {1.0, 0.0});
        const auto res = graph_norm_check(u, {1.0, constant(1.0)});
        CHECK(res.graph == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
        CHECK(res.hnorm_value == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(res.ratio == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
        CHECK(res.ratio <= res.ratio_bound + 1e-15);
    }
    SUBCASE("high modes push the ratio to 1") {
        FourierDistribution u(1, 1000);
        u.set({1000}, {1.0, 0.0});
        const auto res = graph_norm_check(u, {2.0, constant(1.0)});
        CHECK(res.ratio == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("zero input returns ratio 1 by convention") {
        const auto res = graph_norm_check(FourierDistribution(1, 4), {1.0, constant(1.0)});
        CHECK(res.graph == 0.0);
        CHECK(res.ratio == 1.0);
    }
    SUBCASE("randomized two-sided bound") {
        for (std::size_t i = 0; i < 100; ++i) {
            Rng rng = Rng::for_instance(55, i);
            const auto u = suites::random_distribution(rng, rng.uniform_int(1, 2), 32, 64);
            const hormander::SmoothnessIndex idx{rng.uniform(0.0, 3.0), suites::random_qsv(rng)};
            const auto res = graph_norm_check(u, idx);
            CHECK(res.ratio >= 1.0 - 1e-12);
            CHECK(res.ratio <= res.ratio_bound * (1.0 + 1e-12));
        }
    }
    SUBCASE("negative smoothness is rejected") {
        FourierDistribution u(1, 1);
        u.set({0}, {1.0, 0.0});
        CHECK_THROWS_AS(graph_norm_check(u, {-0.5, constant(1.0)}), InvalidParameter);
    }
    SUBCASE("s = 0 with a vanishing refinement violates the hypothesis") {
        FourierDistribution u(1, 1);
        u.set({0}, {1.0, 0.0});
        // 1/phi ~ (ln t)^3 stays small on the sample range; a strong decaying
        // power does blow past 1e6.
        CHECK_THROWS_AS(graph_norm_check(u, {0.0, quotient(constant(1.0),
                                                           param::power(1.0))}),
                        HypothesisViolation);
        CHECK_NOTHROW(graph_norm_check(u, {0.0, log_multiscale({1.0})}));
    }
}

TEST_CASE("mode-wise inversion of the calculus weight") {
    const ShiftedLaplacian op;
    for (std::size_t i = 0; i < 50; ++i) {
        Rng rng = Rng::for_instance(808, i);
        const auto u = suites::random_distribution(rng, rng.uniform_int(1, 2), 48, 96);
        const hormander::SmoothnessIndex idx{rng.uniform(-4.0, 4.0), suites::random_qsv(rng)};
        const param::ParamFn weight = power_scaled(idx.phi, idx.s, op.order());
        const auto forward = apply_spectral(op, weight, u);
        const auto back = apply_spectral(op, quotient(constant(1.0), weight), forward);
        for (const auto& mode : u.modes()) {
            const double denom = std::abs(mode.coeff);
            if (denom > 0.0)
                CHECK(std::abs(back.at(mode.k) - mode.coeff) / denom < 1e-14);
        }
    }
}

TEST_CASE("polynomial envelope of the calculus weight") {
    // For any integer k with 2k > s the weight is dominated by t^k on the
    // eigenvalue range of a banded torus, with a finite constant.
    const ShiftedLaplacian op;
    for (int i = 0; i < 10; ++i) {
        const double s = -4.0 + i * 0.9;
        const int k = static_cast<int>(std::floor(s / op.order())) + 1;
        const param::ParamFn weight = power_scaled(log_multiscale({1.0}), s, op.order());
        double envelope = 0.0;
        for (double t = 1.0; t <= 1.0 + 2.0 * 64 * 64; t *= 1.2)
            envelope = std::max(envelope, weight(t) / std::pow(t, k));
        CHECK(std::isfinite(envelope));
        CHECK(envelope > 0.0);
    }
}
