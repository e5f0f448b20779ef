#include "hilbint/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hilbint::hormander {

double smoothed_modulus_sq(const std::vector<int>& k) {
    double acc = 1.0;
    for (int ki : k) acc += static_cast<double>(ki) * static_cast<double>(ki);
    return acc;
}

double smoothed_modulus(const std::vector<int>& k) { return std::sqrt(smoothed_modulus_sq(k)); }

FourierDistribution::FourierDistribution(int dim, int band_limit)
    : dim_(dim), band_limit_(band_limit) {
    if (dim < 1) throw InvalidParameter("FourierDistribution: dimension must be >= 1");
    if (band_limit < 0) throw InvalidParameter("FourierDistribution: band limit must be >= 0");
}

namespace {

bool mode_less(const Mode& a, const std::vector<int>& k) {
    return std::lexicographical_compare(a.k.begin(), a.k.end(), k.begin(), k.end());
}

} // namespace

void FourierDistribution::set(const std::vector<int>& k, Complex coeff) {
    if (static_cast<int>(k.size()) != dim_)
        throw InvalidParameter("FourierDistribution::set: mode arity " +
                               std::to_string(k.size()) + " does not match dimension " +
                               std::to_string(dim_));
    for (int ki : k)
        if (ki > band_limit_ || ki < -band_limit_)
            throw InvalidParameter("FourierDistribution::set: component " +
                                   std::to_string(ki) + " outside band " +
                                   std::to_string(band_limit_));
    auto it = std::lower_bound(modes_.begin(), modes_.end(), k, mode_less);
    if (it != modes_.end() && it->k == k) {
        if (coeff == Complex(0.0, 0.0)) modes_.erase(it);
        else it->coeff = coeff;
        return;
    }
    if (coeff == Complex(0.0, 0.0)) return;
    modes_.insert(it, Mode{k, coeff});
}

Complex FourierDistribution::at(const std::vector<int>& k) const {
    auto it = std::lower_bound(modes_.begin(), modes_.end(), k, mode_less);
    if (it != modes_.end() && it->k == k) return it->coeff;
    return {0.0, 0.0};
}

bool FourierDistribution::conjugate_symmetric(double tol) const {
    for (const auto& mode : modes_) {
        std::vector<int> neg(mode.k.size());
        for (std::size_t i = 0; i < mode.k.size(); ++i) neg[i] = -mode.k[i];
        if (std::abs(at(neg) - std::conj(mode.coeff)) > tol) return false;
    }
    return true;
}

Complex FourierDistribution::evaluate(const std::vector<double>& theta) const {
    if (static_cast<int>(theta.size()) != dim_)
        throw DimensionMismatch("FourierDistribution::evaluate: point arity mismatch");
    Complex acc(0.0, 0.0);
    for (const auto& mode : modes_) {
        double phase = 0.0;
        for (std::size_t i = 0; i < mode.k.size(); ++i) phase += mode.k[i] * theta[i];
        acc += mode.coeff * std::polar(1.0, phase);
    }
    return acc;
}

FourierDistribution FourierDistribution::scaled(Complex factor) const {
    FourierDistribution out(dim_, band_limit_);
    out.modes_ = modes_;
    for (auto& mode : out.modes_) mode.coeff *= factor;
    if (factor == Complex(0.0, 0.0)) out.modes_.clear();
    return out;
}

FourierDistribution operator+(const FourierDistribution& a, const FourierDistribution& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("FourierDistribution: dimension mismatch in sum");
    FourierDistribution out(a.dim(), std::max(a.band_limit(), b.band_limit()));
    out.modes_ = a.modes_;
    for (const auto& mode : b.modes_) {
        auto it = std::lower_bound(out.modes_.begin(), out.modes_.end(), mode.k, mode_less);
        if (it != out.modes_.end() && it->k == mode.k) {
            it->coeff += mode.coeff;
            if (it->coeff == Complex(0.0, 0.0)) out.modes_.erase(it);
        } else {
            out.modes_.insert(it, mode);
        }
    }
    return out;
}

double hnorm_sq(const FourierDistribution& u, const SmoothnessIndex& idx) {
    double acc = 0.0;
    for (const auto& mode : u.modes()) {
        const double kk = smoothed_modulus(mode.k);
        const double weight = std::pow(kk, idx.s) * idx.phi(kk);
        acc += weight * weight * std::norm(mode.coeff);
    }
    return acc;
}

double hnorm(const FourierDistribution& u, const SmoothnessIndex& idx) {
    return std::sqrt(hnorm_sq(u, idx));
}

NormPair interp_identity_check(const FourierDistribution& u, const SmoothnessIndex& idx,
                               double eps, double delta) {
    if (!(eps > 0.0) || !(delta > 0.0))
        throw NonPositiveParameter("interp_identity_check: eps and delta must be positive");
    if (u.modes().empty()) return {0.0, 0.0};

    // Couple route: the generating spectrum of [H^{s-eps}, H^{s+delta}] is
    // <k>^(eps+delta); the base space weight <k>^(s-eps) folds into the
    // coefficients.
    std::vector<double> spectrum;
    std::vector<Complex> coeffs;
    spectrum.reserve(u.modes().size());
    coeffs.reserve(u.modes().size());
    for (const auto& mode : u.modes()) {
        const double kk = smoothed_modulus(mode.k);
        spectrum.push_back(std::pow(kk, eps + delta));
        coeffs.push_back(std::pow(kk, idx.s - eps) * mode.coeff);
    }
    const couple::SpectralCouple c(std::move(spectrum), 1.0);
    const param::ParamFn psi = param::interp_parameter(idx.phi, eps, delta);

    NormPair out;
    out.lhs = couple::interpolated_norm(c, psi, couple::SpectralVector(std::move(coeffs)));
    out.rhs = hnorm(u, idx);
    return out;
}

NormPair target_identity_check(const FourierDistribution& u, double s0,
                               const param::ParamFn& phi0, double s1,
                               const param::ParamFn& phi1, double theta,
                               const param::ParamFn& chi) {
    const param::TargetSpace target = param::interpolation_target(phi0, phi1, s0, s1, theta, chi);
    if (u.modes().empty()) return {0.0, 0.0};

    std::vector<double> spectrum;
    std::vector<Complex> coeffs;
    spectrum.reserve(u.modes().size());
    coeffs.reserve(u.modes().size());
    double bound = 0.0;
    for (const auto& mode : u.modes()) {
        const double kk = smoothed_modulus(mode.k);
        const double lam = std::pow(kk, s1 - s0) * phi1(kk) / phi0(kk);
        spectrum.push_back(lam);
        coeffs.push_back(std::pow(kk, s0) * phi0(kk) * mode.coeff);
        bound = bound == 0.0 ? lam : std::min(bound, lam);
    }
    const couple::SpectralCouple c(std::move(spectrum), bound);
    const param::ParamFn psi = param::product(param::power(theta), chi);

    NormPair out;
    out.lhs = couple::interpolated_norm(c, psi, couple::SpectralVector(std::move(coeffs)));
    out.rhs = hnorm(u, {target.s, target.phi});
    return out;
}

InclusionConstants inclusion_constants(const SmoothnessIndex& idx, double eps, int band_limit,
                                       int dim) {
    if (!(eps > 0.0)) throw NonPositiveParameter("inclusion_constants: eps must be positive");
    if (band_limit < 0 || dim < 1)
        throw InvalidParameter("inclusion_constants: need band_limit >= 0 and dim >= 1");

    InclusionConstants out;
    out.upper_mode.assign(dim, 0);
    out.lower_mode.assign(dim, 0);

    // Weights depend on |k| only, so the nonnegative orthant of the band is
    // exhaustive.
    std::vector<int> k(dim, 0);
    auto visit = [&](const std::vector<int>& mode) {
        const double kk = smoothed_modulus(mode);
        const double upper = idx.phi(kk) / std::pow(kk, eps);
        const double lower = 1.0 / (std::pow(kk, eps) * idx.phi(kk));
        if (upper > out.upper) {
            out.upper = upper;
            out.upper_mode = mode;
        }
        if (lower > out.lower) {
            out.lower = lower;
            out.lower_mode = mode;
        }
    };
    for (;;) {
        visit(k);
        int axis = dim - 1;
        while (axis >= 0 && k[axis] == band_limit) k[axis--] = 0;
        if (axis < 0) break;
        ++k[axis];
    }
    return out;
}

} // namespace hilbint::hormander
