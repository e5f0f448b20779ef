#include "hilbint/charts.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hilbint/fft.hpp"

namespace hilbint::charts {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

double wrap_angle(double d) { return std::remainder(d, kTwoPi); } // [-pi, pi]

// exp(-1/(1-y^2)) on (-1, 1), zero outside; smooth across the edges.
double bump(double y) {
    const double y2 = y * y;
    if (y2 >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - y2));
}

// Smooth monotone step: 0 at u <= 0, 1 at u >= 1.
double smoothstep(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / u);
    const double b = std::exp(-1.0 / (1.0 - u));
    return a / (a + b);
}

} // namespace

ChartAtlas::ChartAtlas(const AtlasParams& params) : params_(params) {
    const auto& p = params_;
    if (!is_power_of_two(p.circle_points) || !is_power_of_two(p.line_points))
        throw InvalidParameter("ChartAtlas: circle_points and line_points must be powers of two");
    if (!(p.arc_half_length > 0.0) || p.arc_half_length >= kPi)
        throw InvalidParameter("ChartAtlas: arc half length must lie in (0, pi)");
    if (!(p.support_fraction > 0.0) || p.support_fraction >= 1.0)
        throw InvalidParameter("ChartAtlas: support fraction must lie in (0, 1)");
    if (!(p.chart_scale > 0.0) || !(p.cutoff_pad > 0.0) || !(p.line_length > 0.0))
        throw NonPositiveParameter("ChartAtlas: scale, pad and line length must be positive");

    plateau_ = p.chart_scale * std::atanh(p.support_fraction);

    // The cutoff support plus a two-cell margin must fit the line domain.
    const double spacing = p.line_length / static_cast<double>(p.line_points);
    if (cutoff_support() + 2.0 * spacing > 0.5 * p.line_length)
        throw InvalidParameter("ChartAtlas: cutoff support " + std::to_string(cutoff_support()) +
                               " does not fit inside the half-domain " +
                               std::to_string(0.5 * p.line_length));

    // Partition support strictly inside the arc with >= 2 circle cells spare.
    const double margin = (1.0 - p.support_fraction) * p.arc_half_length;
    const double cell = kTwoPi / static_cast<double>(p.circle_points);
    if (margin < 2.0 * cell)
        throw InvalidParameter("ChartAtlas: partition support margin " + std::to_string(margin) +
                               " below two circle cells");

    // The two partition bumps must cover the circle: their normalizing sum
    // stays well above the underflow floor at every node.
    for (std::size_t m = 0; m < p.circle_points; ++m) {
        const double theta = circle_node(m);
        double total = 0.0;
        for (int j = 0; j < chart_count; ++j) {
            const double y = wrap_angle(theta - center(j)) / (p.support_fraction * p.arc_half_length);
            total += bump(y);
        }
        if (!(total > 1e-300))
            throw InvalidParameter("ChartAtlas: partition bumps vanish near theta=" +
                                   std::to_string(theta) + "; arcs do not overlap enough");
    }

    // eta == 1 on the rectified partition support at every covered line node.
    for (std::size_t q = 0; q < p.line_points; ++q) {
        const double x = line_node(q, p.line_points);
        if (std::abs(x) <= plateau_ && cutoff(x) != 1.0)
            throw InvalidParameter("ChartAtlas: cutoff not exactly 1 on the plateau");
    }
}

double ChartAtlas::center(int chart) const {
    return chart == 0 ? params_.center0 : params_.center1;
}

double ChartAtlas::chart_to_circle(int chart, double x) const {
    return center(chart) + params_.arc_half_length * std::tanh(x / params_.chart_scale);
}

double ChartAtlas::circle_to_chart(int chart, double theta) const {
    const double y = wrap_angle(theta - center(chart)) / params_.arc_half_length;
    if (!(std::abs(y) < 1.0))
        throw InvalidParameter("circle_to_chart: angle outside the chart arc");
    return params_.chart_scale * std::atanh(y);
}

bool ChartAtlas::in_chart(int chart, double theta) const {
    return std::abs(wrap_angle(theta - center(chart))) < params_.arc_half_length;
}

double ChartAtlas::partition(int chart, double theta) const {
    const double radius = params_.support_fraction * params_.arc_half_length;
    const double b0 = bump(wrap_angle(theta - center(0)) / radius);
    const double b1 = bump(wrap_angle(theta - center(1)) / radius);
    return (chart == 0 ? b0 : b1) / (b0 + b1);
}

double ChartAtlas::cutoff(double x) const {
    const double a = std::abs(x);
    if (a <= plateau_) return 1.0;
    return smoothstep((plateau_ + params_.cutoff_pad - a) / params_.cutoff_pad);
}

double ChartAtlas::circle_node(std::size_t m) const {
    return kTwoPi * static_cast<double>(m) / static_cast<double>(params_.circle_points);
}

double ChartAtlas::line_node(std::size_t p, std::size_t points) const {
    return -0.5 * params_.line_length +
           params_.line_length * static_cast<double>(p) / static_cast<double>(points);
}

double ChartAtlas::line_spacing(std::size_t points) const {
    return params_.line_length / static_cast<double>(points);
}

// -------------------------------------------------------------- CircleFunction

CircleFunction CircleFunction::from_spectral(FourierDistribution u) {
    if (u.dim() != 1)
        throw InvalidParameter("CircleFunction: spectral form must be one-dimensional");
    CircleFunction f;
    f.spectral_ = true;
    f.data_ = std::move(u);
    return f;
}

CircleFunction CircleFunction::from_samples(std::vector<Complex> samples) {
    if (samples.empty()) throw InvalidParameter("CircleFunction: empty sample vector");
    CircleFunction f;
    f.spectral_ = false;
    f.samples_ = std::move(samples);
    return f;
}

CircleFunction CircleFunction::single_mode(int k, Complex coeff) {
    FourierDistribution u(1, std::abs(k));
    u.set({k}, coeff);
    return from_spectral(std::move(u));
}

const FourierDistribution& CircleFunction::spectrum() const {
    if (!spectral_) throw InvalidParameter("CircleFunction: not in spectral form");
    return data_;
}

Complex CircleFunction::evaluate(double theta) const {
    if (!spectral_) throw InvalidParameter("CircleFunction: pointwise evaluation needs spectral form");
    return data_.evaluate({theta});
}

std::vector<Complex> CircleFunction::sample(std::size_t count) const {
    if (!spectral_) {
        if (count != samples_.size())
            throw InvalidParameter("CircleFunction: sample-form cannot be resampled");
        return samples_;
    }
    const int band = data_.band_limit();
    if (is_power_of_two(count) && count > 2 * static_cast<std::size_t>(band)) {
        std::vector<Complex> bins(count, Complex(0.0, 0.0));
        for (const auto& mode : data_.modes()) {
            const int k = mode.k[0];
            bins[(k >= 0 ? k : static_cast<int>(count) + k)] = mode.coeff;
        }
        fft_radix2(bins, +1);
        return bins;
    }
    std::vector<Complex> out(count);
    for (std::size_t m = 0; m < count; ++m)
        out[m] = data_.evaluate({kTwoPi * static_cast<double>(m) / static_cast<double>(count)});
    return out;
}

FourierDistribution CircleFunction::to_spectral(int band_limit) const {
    if (spectral_) return data_;
    const std::size_t count = samples_.size();
    if (!is_power_of_two(count) || count <= 2 * static_cast<std::size_t>(band_limit))
        throw InvalidParameter("CircleFunction::to_spectral: need a power-of-two grid with "
                               "more than 2 * band_limit nodes");
    std::vector<Complex> bins = samples_;
    fft_radix2(bins, -1);
    FourierDistribution u(1, band_limit);
    const double scale = 1.0 / static_cast<double>(count);
    for (int k = -band_limit; k <= band_limit; ++k) {
        const Complex c = bins[(k >= 0 ? k : static_cast<int>(count) + k)] * scale;
        if (c != Complex(0.0, 0.0)) u.set({k}, c);
    }
    return u;
}

// ------------------------------------------------------------------- rectify

RectifiedPair rectify_at(const ChartAtlas& atlas, const CircleFunction& f,
                         std::size_t points) {
    if (!f.is_spectral())
        throw InvalidParameter("rectify: input must be a band-limited spectral function");
    if (!is_power_of_two(points)) throw InvalidParameter("rectify: points must be a power of two");

    // Support of each rectified piece must sit >= 2 cells inside the domain.
    const double spacing = atlas.line_spacing(points);
    if (atlas.cutoff_support() + 2.0 * spacing > 0.5 * atlas.params().line_length)
        throw ResolutionTooLow("rectify: support margin below two grid cells at " +
                               std::to_string(points) + " points");

    RectifiedPair out;
    out.points = points;
    for (int j = 0; j < ChartAtlas::chart_count; ++j) {
        auto& piece = out.pieces[j];
        piece.assign(points, Complex(0.0, 0.0));
        for (std::size_t p = 0; p < points; ++p) {
            const double x = atlas.line_node(p, points);
            if (std::abs(x) > atlas.cutoff_plateau()) continue; // chi == 0 out there
            const double theta = atlas.chart_to_circle(j, x);
            const double chi = atlas.partition(j, theta);
            if (chi == 0.0) continue;
            piece[p] = chi * f.evaluate(theta);
        }
    }
    return out;
}

RectifiedPair rectify(const ChartAtlas& atlas, const CircleFunction& f) {
    return rectify_at(atlas, f, atlas.params().line_points);
}

// ----------------------------------------------------------------------- sew

namespace {

// Truncated trigonometric interpolant of periodic samples on [-R/2, R/2).
struct TrigSeries {
    int half_band = 0;             // q ranges over [-half_band, half_band]
    std::vector<Complex> coeff;    // index q + half_band, scaled by 1/P
    double length = 1.0;

    Complex eval(double x) const {
        const double phase = kTwoPi * (x / length + 0.5);
        Complex rotor = std::polar(1.0, phase);
        Complex current = std::polar(1.0, -static_cast<double>(half_band) * phase);
        Complex acc(0.0, 0.0);
        for (const auto& c : coeff) {
            acc += c * current;
            current *= rotor;
        }
        return acc;
    }
};

TrigSeries build_series(std::vector<Complex> samples, double length) {
    const std::size_t points = samples.size();
    fft_radix2(samples, -1);
    double max_abs = 0.0;
    for (const auto& c : samples) max_abs = std::max(max_abs, std::abs(c));
    const double threshold = 1e-15 * max_abs;
    const int limit = static_cast<int>(points / 2) - 1;
    int half_band = 0;
    for (int q = 1; q <= limit; ++q) {
        if (std::abs(samples[static_cast<std::size_t>(q)]) > threshold ||
            std::abs(samples[points - static_cast<std::size_t>(q)]) > threshold)
            half_band = q;
    }
    TrigSeries series;
    series.half_band = half_band;
    series.length = length;
    series.coeff.resize(2 * static_cast<std::size_t>(half_band) + 1);
    const double scale = 1.0 / static_cast<double>(points);
    for (int q = -half_band; q <= half_band; ++q) {
        const std::size_t bin = q >= 0 ? static_cast<std::size_t>(q)
                                       : points - static_cast<std::size_t>(-q);
        series.coeff[static_cast<std::size_t>(q + half_band)] = samples[bin] * scale;
    }
    return series;
}

} // namespace

CircleFunction sew(const ChartAtlas& atlas, const RectifiedPair& h) {
    const std::size_t points = h.points;
    if (points == 0 || h.pieces[0].size() != points || h.pieces[1].size() != points)
        throw DimensionMismatch("sew: inconsistent rectified pair");

    std::array<TrigSeries, 2> series;
    for (int j = 0; j < ChartAtlas::chart_count; ++j) {
        const auto& piece = h.pieces[j];
        double inside_sq = 0.0, outside_sq = 0.0;
        std::vector<Complex> windowed(points);
        for (std::size_t p = 0; p < points; ++p) {
            const double x = atlas.line_node(p, points);
            const double eta = atlas.cutoff(x);
            windowed[p] = eta * piece[p];
            if (eta == 0.0) outside_sq += std::norm(piece[p]);
            else inside_sq += std::norm(piece[p]);
        }
        const double total_sq = inside_sq + outside_sq;
        if (total_sq > 0.0 && std::sqrt(outside_sq) > 1e-8 * std::sqrt(total_sq))
            throw SupportLeak("sew: piece " + std::to_string(j) + " carries " +
                              std::to_string(std::sqrt(outside_sq / total_sq)) +
                              " of its mass outside the cutoff support");
        series[j] = build_series(std::move(windowed), atlas.params().line_length);
    }

    const std::size_t circle_points = atlas.params().circle_points;
    std::vector<Complex> glued(circle_points, Complex(0.0, 0.0));
    const double reach = atlas.cutoff_support();
    for (std::size_t m = 0; m < circle_points; ++m) {
        const double theta = atlas.circle_node(m);
        Complex value(0.0, 0.0);
        for (int j = 0; j < ChartAtlas::chart_count; ++j) {
            if (!atlas.in_chart(j, theta)) continue;
            const double x = atlas.circle_to_chart(j, theta);
            if (std::abs(x) >= reach) continue; // eta h vanishes there
            value += series[j].eval(x);
        }
        glued[m] = value;
    }
    return CircleFunction::from_samples(std::move(glued));
}

// ---------------------------------------------------------------- chart norm

namespace {

// Line-side (s, phi) norm of one rectified piece via the windowed transform
// on `points` nodes: |hat h(xi_q)|^2 summed against the smoothness weight.
double line_norm_sq(const ChartAtlas& atlas, const std::vector<Complex>& piece,
                    const SmoothnessIndex& idx, std::size_t points) {
    const double length = atlas.params().line_length;
    const double spacing = length / static_cast<double>(points);

    double piece_max = 0.0;
    for (const auto& c : piece) piece_max = std::max(piece_max, std::abs(c));
    if (piece_max > 0.0) {
        const double edge = std::max(std::abs(piece.front()), std::abs(piece.back()));
        if (edge > 1e-10 * piece_max)
            throw GridUnderResolved("chart_norm: rectified piece does not decay below 1e-10 "
                                    "at the grid boundary");
    }

    std::vector<Complex> hat = piece;
    fft_radix2(hat, -1);

    // xi_q = 2 pi q / R; the weight depends on |q| only.
    std::vector<double> weight_sq(points / 2 + 1);
    for (std::size_t a = 0; a <= points / 2; ++a) {
        const double xi = kTwoPi * static_cast<double>(a) / length;
        const double sm = std::sqrt(1.0 + xi * xi);
        const double w = std::pow(sm, idx.s) * idx.phi(sm);
        weight_sq[a] = w * w;
    }

    const double transform_scale = spacing / std::sqrt(kTwoPi); // windowed FT amplitude
    const double measure = kTwoPi / length;                     // d xi
    double acc = 0.0;
    const int half = static_cast<int>(points / 2);
    for (int q = -half; q < half; ++q) {
        const std::size_t bin = q >= 0 ? static_cast<std::size_t>(q)
                                       : points - static_cast<std::size_t>(-q);
        const std::size_t a = static_cast<std::size_t>(q >= 0 ? q : -q);
        acc += weight_sq[a] * std::norm(transform_scale * hat[bin]);
    }
    return acc * measure;
}

double chart_norm_at(const ChartAtlas& atlas, const CircleFunction& f,
                     const SmoothnessIndex& idx, std::size_t points,
                     std::array<double, 2>* per_chart) {
    const RectifiedPair h = rectify_at(atlas, f, points);
    double total = 0.0;
    for (int j = 0; j < ChartAtlas::chart_count; ++j) {
        const double part = line_norm_sq(atlas, h.pieces[j], idx, points);
        if (per_chart) (*per_chart)[static_cast<std::size_t>(j)] = std::sqrt(part);
        total += part;
    }
    return std::sqrt(total);
}

} // namespace

ChartNormResult chart_norm(const ChartAtlas& atlas, const CircleFunction& f,
                           const SmoothnessIndex& idx) {
    ChartNormResult out;
    const std::size_t points = atlas.params().line_points;
    out.value = chart_norm_at(atlas, f, idx, points, &out.per_chart);
    out.refined_value = chart_norm_at(atlas, f, idx, 2 * points, nullptr);
    out.error_estimate = std::abs(out.refined_value - out.value);
    if (out.error_estimate > 0.01 * std::max(out.value, out.refined_value))
        throw GridUnderResolved("chart_norm: refinement difference " +
                                std::to_string(out.error_estimate) + " exceeds 1% of the value " +
                                std::to_string(out.value));
    return out;
}

EquivalenceStudy equivalence_study(const ChartAtlas& atlas,
                                   const std::vector<CircleFunction>& family,
                                   const SmoothnessIndex& idx) {
    if (family.empty()) throw InvalidParameter("equivalence_study: empty family");
    EquivalenceStudy out;
    for (const auto& f : family) {
        const double reference = hormander::hnorm(f.spectrum(), idx);
        if (reference == 0.0)
            throw InvalidParameter("equivalence_study: zero member excluded by precondition");
        const ChartNormResult cn = chart_norm(atlas, f, idx);
        out.ratios.push_back(cn.value / reference);
        out.refined_ratios.push_back(cn.refined_value / reference);
    }
    out.ratio_min = *std::min_element(out.ratios.begin(), out.ratios.end());
    out.ratio_max = *std::max_element(out.ratios.begin(), out.ratios.end());
    out.refined_ratio_min = *std::min_element(out.refined_ratios.begin(), out.refined_ratios.end());
    out.refined_ratio_max = *std::max_element(out.refined_ratios.begin(), out.refined_ratios.end());
    return out;
}

} // namespace hilbint::charts
