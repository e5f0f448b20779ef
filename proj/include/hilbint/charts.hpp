#ifndef HILBINT_CHARTS_HPP
#define HILBINT_CHARTS_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "hilbint/fourier.hpp"
#include "hilbint/param.hpp"

namespace hilbint::charts {

using Complex = std::complex<double>;
using hormander::FourierDistribution;
using hormander::SmoothnessIndex;

// Geometry and grids of the two-chart circle atlas. Each chart maps the line
// onto an open arc through x -> center + L tanh(x / scale); the partition of
// unity comes from normalized smooth bumps supported on the inner
// support_fraction of each arc, and the line-side cutoffs are plateau bumps
// that are exactly 1 on the rectified partition supports.
struct AtlasParams {
    double center0 = 0.0;
    double center1 = 3.141592653589793;
    double arc_half_length = 2.356194490192345; // 0.75 pi
    double support_fraction = 0.75;
    double chart_scale = 4.0;
    double cutoff_pad = 1.5;          // eta transition width in line units
    std::size_t circle_points = 4096; // M, power of two
    double line_length = 64.0;        // R, the line grid spans [-R/2, R/2)
    std::size_t line_points = 8192;   // P, power of two
};

class ChartAtlas {
  public:
    explicit ChartAtlas(const AtlasParams& params = {});

    static constexpr int chart_count = 2;

    const AtlasParams& params() const { return params_; }

    double center(int chart) const;
    double chart_to_circle(int chart, double x) const;     // alpha_j
    double circle_to_chart(int chart, double theta) const; // alpha_j^{-1}
    bool in_chart(int chart, double theta) const;

    double partition(int chart, double theta) const; // chi_j, chi_0 + chi_1 = 1
    double cutoff(double x) const;                   // eta (same profile both charts)

    // Plateau radius of eta: cutoff(x) == 1 exactly for |x| <= this value,
    // which contains the rectified partition support.
    double cutoff_plateau() const { return plateau_; }
    double cutoff_support() const { return plateau_ + params_.cutoff_pad; }

    double circle_node(std::size_t m) const;                      // 2 pi m / M
    double line_node(std::size_t p, std::size_t points) const;    // -R/2 + p R / points
    double line_spacing(std::size_t points) const;

  private:
    AtlasParams params_;
    double plateau_;
};

// A smooth function on the circle, either band-limited spectral data or
// samples on the uniform M-grid. Conversions are exact for band-limited
// inputs once the grid oversamples the band (M > 2K).
class CircleFunction {
  public:
    static CircleFunction from_spectral(FourierDistribution u); // dim 1 required
    static CircleFunction from_samples(std::vector<Complex> samples);
    static CircleFunction single_mode(int k, Complex coeff = Complex(1.0, 0.0));

    bool is_spectral() const { return spectral_; }
    const FourierDistribution& spectrum() const; // spectral form only
    Complex evaluate(double theta) const;        // spectral form only

    // Values on the uniform grid of `count` nodes; a sample-form function
    // only reproduces its own grid.
    std::vector<Complex> sample(std::size_t count) const;

    // Trapezoid-exact Fourier coefficients from the stored samples (size must
    // be a power of two exceeding 2 * band_limit); identity on spectral form.
    FourierDistribution to_spectral(int band_limit) const;

  private:
    CircleFunction() : spectral_(true), data_(1, 0) {}
    bool spectral_;
    FourierDistribution data_;
    std::vector<Complex> samples_;
};

// The two rectified pieces (chi_j f) o alpha_j sampled on the line grid.
struct RectifiedPair {
    std::array<std::vector<Complex>, 2> pieces;
    std::size_t points = 0;
};

RectifiedPair rectify(const ChartAtlas& atlas, const CircleFunction& f);
RectifiedPair rectify_at(const ChartAtlas& atlas, const CircleFunction& f, std::size_t points);

// Left inverse of rectify: multiplies each piece by the cutoff, pulls it back
// through the chart and sums the extensions by zero, sampled on the circle
// grid. Pieces carrying more than 1e-8 of their mass outside the cutoff
// support raise SupportLeak.
CircleFunction sew(const ChartAtlas& atlas, const RectifiedPair& h);

// Chart norm of Definition-by-charts type: the root of the sum over charts of
// squared line-side (s, phi) norms of the rectified pieces, computed by a
// windowed discrete Fourier transform on the (R, P) grid. value is taken at
// the configured resolution, refined_value at doubled resolution, and their
// difference is the reported error estimate.
struct ChartNormResult {
    double value = 0.0;
    double refined_value = 0.0;
    double error_estimate = 0.0;
    std::array<double, 2> per_chart{0.0, 0.0};
};

ChartNormResult chart_norm(const ChartAtlas& atlas, const CircleFunction& f,
                           const SmoothnessIndex& idx);

// Ratios chart_norm / hnorm over a family of nonzero smooth functions, at the
// base and doubled line resolutions.
struct EquivalenceStudy {
    std::vector<double> ratios;
    std::vector<double> refined_ratios;
    double ratio_min = 0.0;
    double ratio_max = 0.0;
    double refined_ratio_min = 0.0;
    double refined_ratio_max = 0.0;
};

EquivalenceStudy equivalence_study(const ChartAtlas& atlas,
                                   const std::vector<CircleFunction>& family,
                                   const SmoothnessIndex& idx);

} // namespace hilbint::charts

#endif
