#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "hilbint/fourier.hpp"
#include "hilbint/param.hpp"
#include "hilbint/rng.hpp"
#include "hilbint/serialize.hpp"
#include "hilbint/suites.hpp"

using namespace hilbint;
using namespace hilbint::hormander;
using hilbint::param::constant;
using hilbint::param::log_multiscale;
using hilbint::param::power;

namespace {

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0});
}

} // namespace

TEST_CASE("distribution storage") {
    FourierDistribution u(2, 4);
    CHECK(u.active_modes() == 0);
    u.set({1, -2}, {0.5, 1.0});
    u.set({0, 0}, {1.0, 0.0});
    u.set({1, -2}, {0.25, 0.0}); // replacement
    CHECK(u.active_modes() == 2);
    CHECK(u.at({1, -2}) == Complex(0.25, 0.0));
    CHECK(u.at({3, 3}) == Complex(0.0, 0.0));
    u.set({0, 0}, {0.0, 0.0}); // erasure
    CHECK(u.active_modes() == 1);

    CHECK_THROWS_AS(u.set({5, 0}, Complex(1.0, 0.0)), InvalidParameter);
    CHECK_THROWS_AS(u.set({1}, Complex(1.0, 0.0)), InvalidParameter);
    CHECK_THROWS_AS(FourierDistribution(0, 4), InvalidParameter);
}

TEST_CASE("conjugate symmetry detection") {
    FourierDistribution u(1, 3);
    u.set({1}, {0.5, 0.25});
    u.set({-1}, {0.5, -0.25});
    u.set({0}, {1.0, 0.0});
    CHECK(u.conjugate_symmetric());
    u.set({2}, {1.0, 1.0});
    CHECK_FALSE(u.conjugate_symmetric());
}

TEST_CASE("smoothed modulus") {
    CHECK(smoothed_modulus({0}) == 1.0);
    CHECK(smoothed_modulus({1, 0}) == doctest::Approx(std::sqrt(2.0)));
    CHECK(smoothed_modulus_sq({3, 4}) == 26.0);
}

TEST_CASE("refined norm") {
    SUBCASE("single mode equals its weight") {
        FourierDistribution u(2, 8);
        u.set({3, -4}, {1.0, 0.0});
        const param::ParamFn phi = log_multiscale({1.0});
        for (double s : {-2.0, 0.0, 1.5}) {
            const double kk = std::sqrt(26.0);
            CHECK(rel_diff(hnorm(u, {s, phi}), std::pow(kk, s) * phi(kk)) < 1e-14);
        }
    }
    SUBCASE("origin mode has weight phi(1) for every s") {
        FourierDistribution u(1, 0);
        u.set({0}, {1.0, 0.0});
        for (double s : {-3.0, 0.0, 7.0})
            CHECK(hnorm(u, {s, constant(1.0)}) == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("inverse-weight coefficients contribute 1 each") {
        const param::ParamFn phi = log_multiscale({0.5});
        const double s = 1.25;
        FourierDistribution u(1, 64);
        int count = 0;
        for (int k = -64; k <= 64; k += 8) {
            const double kk = std::sqrt(1.0 + static_cast<double>(k) * k);
            u.set({k}, Complex(1.0 / (std::pow(kk, s) * phi(kk)), 0.0));
            ++count;
        }
        CHECK(hnorm(u, {s, phi}) == doctest::Approx(std::sqrt(double(count))).epsilon(1e-13));
    }
    SUBCASE("parseval at the base point is bit-exact") {
        Rng rng(99);
        for (int i = 0; i < 20; ++i) {
            const auto u = suites::random_distribution(rng, 2, 16, 64);
            double l2_sq = 0.0;
            for (const auto& mode : u.modes()) l2_sq += std::norm(mode.coeff);
            CHECK(hnorm(u, {0.0, constant(1.0)}) == std::sqrt(l2_sq));
        }
    }
    SUBCASE("monotone in s") {
        Rng rng(100);
        for (int i = 0; i < 50; ++i) {
            const auto u = suites::random_distribution(rng, rng.uniform_int(1, 2), 32, 64);
            const auto phi = suites::random_qsv(rng);
            const double s1 = rng.uniform(-4.0, 4.0);
            const double s2 = s1 + rng.uniform(0.0, 3.0);
            CHECK(hnorm(u, {s1, phi}) <= hnorm(u, {s2, phi}) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("interpolation identity between plain Sobolev spaces") {
    SUBCASE("flat refinement reduces to the Sobolev norm") {
        Rng rng(41);
        const auto u = suites::random_distribution(rng, 2, 32, 64);
        const SmoothnessIndex idx{1.25, constant(1.0)};
        const auto pair = interp_identity_check(u, idx, 1.0, 1.0);
        CHECK(rel_diff(pair.lhs, pair.rhs) < 1e-12);
        CHECK(pair.rhs == doctest::Approx(hnorm(u, idx)).epsilon(1e-15));
    }
    SUBCASE("single mode collapses to the defining weight identity") {
        // On one mode both routes compute <k>^(s-eps) * psi(<k>^(eps+delta))
        // = <k>^s phi(<k>).
        const param::ParamFn phi = log_multiscale({1.0, -0.5});
        for (int k : {0, 1, 7, 50}) {
            FourierDistribution u(1, 64);
            u.set({k}, {1.0, 0.0});
            const SmoothnessIndex idx{-0.75, phi};
            const auto pair = interp_identity_check(u, idx, 0.5, 1.7);
            CHECK(rel_diff(pair.lhs, pair.rhs) < 1e-13);
            const double kk = std::sqrt(1.0 + static_cast<double>(k) * k);
            CHECK(rel_diff(pair.rhs, std::pow(kk, idx.s) * phi(kk)) < 1e-13);
        }
    }
    SUBCASE("500 randomized instances at 1e-12") {
        for (std::size_t i = 0; i < 500; ++i) {
            Rng rng = Rng::for_instance(2025, i);
            const int dim = rng.uniform_int(1, 2);
            const int band = rng.uniform_int(1, 64);
            const auto u = suites::random_distribution(rng, dim, band, 128);
            const SmoothnessIndex idx{rng.uniform(-4.0, 4.0), suites::random_qsv(rng)};
            const auto pair =
                interp_identity_check(u, idx, rng.uniform(0.1, 3.0), rng.uniform(0.1, 3.0));
            CHECK(rel_diff(pair.lhs, pair.rhs) < 1e-12);
        }
    }
    SUBCASE("gap parameters must be positive") {
        FourierDistribution u(1, 1);
        u.set({1}, {1.0, 0.0});
        CHECK_THROWS_AS(interp_identity_check(u, {0.0, constant(1.0)}, 0.0, 1.0),
                        NonPositiveParameter);
    }
    SUBCASE("empty distribution gives zero on both sides") {
        const FourierDistribution u(1, 4);
        const auto pair = interp_identity_check(u, {0.0, constant(1.0)}, 1.0, 1.0);
        CHECK(pair.lhs == 0.0);
        CHECK(pair.rhs == 0.0);
    }
}

TEST_CASE("interpolating between two refined spaces") {
    SUBCASE("flat endpoints at the midpoint reduce to plain interpolation") {
        Rng rng(314);
        const auto u = suites::random_distribution(rng, 1, 32, 48);
        const auto pair = target_identity_check(u, 0.0, constant(1.0), 2.0, constant(1.0), 0.5,
                                                constant(1.0));
        CHECK(rel_diff(pair.lhs, pair.rhs) < 1e-12);
        CHECK(rel_diff(pair.rhs, hnorm(u, {1.0, constant(1.0)})) < 1e-13);
    }
    SUBCASE("randomized refined endpoints agree to 1e-12") {
        for (std::size_t i = 0; i < 200; ++i) {
            Rng rng = Rng::for_instance(2718, i);
            const int dim = rng.uniform_int(1, 2);
            const auto u = suites::random_distribution(rng, dim, rng.uniform_int(1, 48), 96);
            const double s0 = rng.uniform(-3.0, 2.0);
            const double s1 = s0 + rng.uniform(0.1, 3.0);
            const auto pair =
                target_identity_check(u, s0, suites::random_qsv(rng), s1,
                                      suites::random_qsv(rng), rng.uniform(0.05, 0.95),
                                      suites::random_qsv(rng));
            CHECK(rel_diff(pair.lhs, pair.rhs) < 1e-12);
        }
    }
    SUBCASE("coincident indices with matching refinements") {
        Rng rng(112);
        const auto u = suites::random_distribution(rng, 1, 16, 24);
        const param::ParamFn phi = log_multiscale({0.75});
        const auto pair = target_identity_check(u, 1.0, phi, 1.0, phi, 0.3,
                                                log_multiscale({0.4}));
        CHECK(rel_diff(pair.lhs, pair.rhs) < 1e-12);
    }
    SUBCASE("order violation propagates") {
        const FourierDistribution u(1, 2);
        CHECK_THROWS_AS(target_identity_check(u, 2.0, constant(1.0), 1.0, constant(1.0), 0.5,
                                              constant(1.0)),
                        OrderViolation);
    }
}

TEST_CASE("inclusion constants") {
    SUBCASE("flat refinement attains 1 at the origin") {
        const auto inc = inclusion_constants({0.0, constant(1.0)}, 0.5, 64, 2);
        CHECK(inc.upper == 1.0);
        CHECK(inc.lower == 1.0);
        CHECK(inc.upper_mode == std::vector<int>{0, 0});
        CHECK(inc.lower_mode == std::vector<int>{0, 0});
    }
    SUBCASE("log refinement yields finite constants with reported modes") {
        const auto inc = inclusion_constants({0.0, log_multiscale({1.0})}, 0.5, 256, 1);
        CHECK(std::isfinite(inc.upper));
        CHECK(std::isfinite(inc.lower));
        CHECK(inc.upper > 1.0);        // the log beats <k>^eps at small k
        CHECK(inc.lower_mode[0] == 0); // 1/(phi <k>^eps) peaks at the origin
        // Brute-force oracle over the band.
        double upper = 0.0, lower = 0.0;
        for (int k = 0; k <= 256; ++k) {
            const double kk = std::sqrt(1.0 + static_cast<double>(k) * k);
            const double phi = std::log(kk + 2.718281828459045);
            upper = std::max(upper, phi / std::pow(kk, 0.5));
            lower = std::max(lower, 1.0 / (std::pow(kk, 0.5) * phi));
        }
        CHECK(inc.upper == doctest::Approx(upper).epsilon(1e-14));
        CHECK(inc.lower == doctest::Approx(lower).epsilon(1e-14));
    }
    SUBCASE("growing eps shrinks the upper constant") {
        double prev = 1e300;
        for (double eps : {0.25, 0.5, 1.0, 2.0}) {
            const auto inc = inclusion_constants({0.0, log_multiscale({1.0})}, eps, 256, 1);
            CHECK(inc.upper <= prev + 1e-15);
            prev = inc.upper;
        }
    }
}

TEST_CASE("scale refinement separates from the power backbone") {
    // Single high modes: the ratio against the flat refinement is exactly
    // phi(<k>), which grows without bound (logarithmically for phi = log).
    const param::ParamFn log_phi = log_multiscale({1.0});
    double prev = 0.0;
    for (int exponent = 1; exponent <= 6; ++exponent) {
        const int k = static_cast<int>(std::pow(10.0, exponent));
        FourierDistribution u(1, k);
        u.set({k}, {1.0, 0.0});
        const double ratio = hnorm(u, {1.0, log_phi}) / hnorm(u, {1.0, constant(1.0)});
        const double kk = std::sqrt(1.0 + static_cast<double>(k) * static_cast<double>(k));
        CHECK(rel_diff(ratio, log_phi(kk)) < 1e-12);
        CHECK(ratio > prev);
        prev = ratio;
    }
    CHECK(prev > 10.0); // ln(1e6) = 13.8 at the top of the sampled band
}

TEST_CASE("distribution serialization") {
    Rng rng(7);
    const auto u = suites::random_distribution(rng, 2, 12, 24);
    const auto text = to_json(u);
    const auto back = parse_fourier(text);
    CHECK(back.dim() == u.dim());
    CHECK(back.band_limit() == u.band_limit());
    REQUIRE(back.active_modes() == u.active_modes());
    for (std::size_t m = 0; m < u.modes().size(); ++m) {
        CHECK(back.modes()[m].k == u.modes()[m].k);
        CHECK(back.modes()[m].coeff == u.modes()[m].coeff);
    }
    CHECK_THROWS_AS(parse_fourier("{not json"), DeserializationError);
    CHECK_THROWS_AS(parse_fourier("{\"n\":1}"), DeserializationError);
}
