#ifndef HILBINT_FOURIER_HPP
#define HILBINT_FOURIER_HPP

#include <complex>
#include <vector>

#include "hilbint/couple.hpp"
#include "hilbint/errors.hpp"
#include "hilbint/param.hpp"

namespace hilbint::hormander {

using Complex = std::complex<double>;

// One Fourier mode of a distribution on the n-torus.
struct Mode {
    std::vector<int> k;
    Complex coeff;
};

// 1 + |k|^2 and its square root <k>.
double smoothed_modulus_sq(const std::vector<int>& k);
double smoothed_modulus(const std::vector<int>& k);

// Band-limited trigonometric polynomial on the n-torus, stored sparsely as
// its nonzero Fourier coefficients in lexicographic mode order. Immutable
// iteration order keeps every norm a fixed-order sum.
class FourierDistribution {
  public:
    FourierDistribution(int dim, int band_limit);

    int dim() const { return dim_; }
    int band_limit() const { return band_limit_; }

    // Inserts or replaces a coefficient; throws InvalidParameter when the
    // mode leaves the band or has the wrong arity.
    void set(const std::vector<int>& k, Complex coeff);
    Complex at(const std::vector<int>& k) const; // zero when absent

    const std::vector<Mode>& modes() const { return modes_; }
    std::size_t active_modes() const { return modes_.size(); }

    // c_{-k} == conj(c_k) within tol for every stored mode.
    bool conjugate_symmetric(double tol = 1e-12) const;

    // Value at a point of the torus (theta has one angle per dimension).
    Complex evaluate(const std::vector<double>& theta) const;

    FourierDistribution scaled(Complex factor) const;

    // Sum with bands merged: the result's band limit is the larger of the two.
    friend FourierDistribution operator+(const FourierDistribution& a,
                                         const FourierDistribution& b);

  private:
    int dim_;
    int band_limit_;
    std::vector<Mode> modes_;
};

// The (s, phi) smoothness index of the refined scale. phi is a positive
// quasislowly varying refinement of the power smoothness s.
struct SmoothnessIndex {
    double s;
    param::ParamFn phi;
};

// (sum_k <k>^{2s} phi(<k>)^2 |c_k|^2)^{1/2} over the stored modes, in mode
// order.
double hnorm_sq(const FourierDistribution& u, const SmoothnessIndex& idx);
double hnorm(const FourierDistribution& u, const SmoothnessIndex& idx);

// Both routes to the refined norm. lhs realizes u inside the couple of plain
// Sobolev spaces with gap (eps, delta): one eigenvalue <k>^(eps+delta) per
// active mode, base weight <k>^(s-eps), interpolation parameter built from
// phi. rhs is hnorm. Equal to 1e-12.
NormPair interp_identity_check(const FourierDistribution& u, const SmoothnessIndex& idx,
                               double eps, double delta);

// Both routes to interpolating between two refined spaces with parameter
// t^theta chi(t): lhs realizes u inside the couple of the (s0, phi0) and
// (s1, phi1) spaces (spectrum <k>^(s1-s0) phi1/phi0 over the base weight
// <k>^s0 phi0); rhs evaluates the refined norm at the target index from
// interpolation_target. Equal to 1e-12.
NormPair target_identity_check(const FourierDistribution& u, double s0,
                               const param::ParamFn& phi0, double s1,
                               const param::ParamFn& phi1, double theta,
                               const param::ParamFn& chi);

// Embedding constants between the refined space and the plain Sobolev spaces
// eps away, maximized over the band of radius K in dimension n; the attaining
// modes are reported with nonnegative components (the weights depend only on
// |k|).
struct InclusionConstants {
    double upper = 0.0; // H^{s+eps} -> H^{s,phi}
    std::vector<int> upper_mode;
    double lower = 0.0; // H^{s,phi} -> H^{s-eps}
    std::vector<int> lower_mode;
};

InclusionConstants inclusion_constants(const SmoothnessIndex& idx, double eps, int band_limit,
                                       int dim = 1);

} // namespace hilbint::hormander

#endif
