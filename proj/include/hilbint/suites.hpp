#ifndef HILBINT_SUITES_HPP
#define HILBINT_SUITES_HPP

#include <cstdint>
#include <vector>

#include "hilbint/charts.hpp"
#include "hilbint/config.hpp"
#include "hilbint/couple.hpp"
#include "hilbint/fourier.hpp"
#include "hilbint/param.hpp"
#include "hilbint/report.hpp"
#include "hilbint/rng.hpp"

namespace hilbint::suites {

// ---- seeded instance generators (shared by the CLI suites and the
// acceptance tests, so both face the same distributions) ----

// Quasislowly varying refinement from the catalog (declared index 0).
param::ParamFn random_qsv(Rng& rng);

// Interpolation parameter with declared index drawn from [lo, hi].
param::ParamFn random_interp_param(Rng& rng, double lo = 0.0, double hi = 1.0);

// Eigenvalues log-uniform in [1, 1e8], dimension in [1, max_dim].
couple::SpectralCouple random_couple(Rng& rng, std::size_t max_dim);

couple::SpectralVector random_vector(Rng& rng, std::size_t dim);

// Sparse band-limited distribution with at most max_modes active modes.
hormander::FourierDistribution random_distribution(Rng& rng, int dim, int band_limit,
                                                   std::size_t max_modes);

// ---- suite runners; one record per executed check ----

std::vector<ReportRecord> run_param_suite(const SuiteConfig& cfg);
std::vector<ReportRecord> run_couple_suite(const SuiteConfig& cfg);
std::vector<ReportRecord> run_hormander_suite(const SuiteConfig& cfg);
std::vector<ReportRecord> run_elliptic_suite(const SuiteConfig& cfg);
std::vector<ReportRecord> run_charts_suite(const SuiteConfig& cfg);

// Dispatch on cfg.suite ("all" concatenates in module order).
std::vector<ReportRecord> run_suite(const SuiteConfig& cfg);

// Atlas geometry from the configuration's atlas_* keys.
charts::AtlasParams atlas_from(const SuiteConfig& cfg);

} // namespace hilbint::suites

#endif
