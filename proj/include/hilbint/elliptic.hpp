#ifndef HILBINT_ELLIPTIC_HPP
#define HILBINT_ELLIPTIC_HPP

#include "hilbint/fourier.hpp"
#include "hilbint/param.hpp"

namespace hilbint::elliptic {

using hormander::FourierDistribution;
using hormander::SmoothnessIndex;

// The operator 1 - Laplacian on the n-torus: order 2, diagonal on the
// Fourier basis with eigenvalue 1 + |k|^2, spectrum bounded below by 1.
class ShiftedLaplacian {
  public:
    double order() const { return 2.0; }
    double lower_bound() const { return 1.0; }
    double eigenvalue(const std::vector<int>& k) const {
        return hormander::smoothed_modulus_sq(k);
    }
};

// Mode-wise multiplication by 1 + |k|^2.
FourierDistribution apply(const ShiftedLaplacian& op, const FourierDistribution& u);

// Spectral calculus: mode-wise multiplication by f(1 + |k|^2).
FourierDistribution apply_spectral(const ShiftedLaplacian& op, const param::ParamFn& f,
                                   const FourierDistribution& u);

// L2 norm of power_scaled(phi, s, order)(op) u — the operator-calculus
// realization of the (s, phi) norm.
double calculus_norm(const ShiftedLaplacian& op, const FourierDistribution& u,
                     const SmoothnessIndex& idx);

// lhs = calculus_norm, rhs = hnorm. On the torus the two weight systems
// coincide, so the contract is equality at 1e-12.
NormPair calculus_vs_fourier_check(const FourierDistribution& u, const SmoothnessIndex& idx);

// Graph norm of the calculus weight against the plain refined norm,
// requires s >= 0 (and, for s = 0, sampled evidence that 1/phi is bounded).
// ratio lies in [1, sqrt(1 + 1/c^2)] with c = min of the weight over the
// band; zero input returns ratio 1 by convention.
struct GraphNormResult {
    double graph = 0.0;
    double hnorm_value = 0.0;
    double ratio = 1.0;
    double ratio_bound = 1.0;
    double weight_min = 0.0;
};

GraphNormResult graph_norm_check(const FourierDistribution& u, const SmoothnessIndex& idx);

// Applying the operator lifts smoothness by its order with norm equality:
// lhs = hnorm(op u, (s, phi)), rhs = hnorm(u, (s + 2, phi)).
NormPair lifting_check(const ShiftedLaplacian& op, const FourierDistribution& u,
                       const SmoothnessIndex& idx);

} // namespace hilbint::elliptic

#endif
