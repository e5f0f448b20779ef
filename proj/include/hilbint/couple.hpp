#ifndef HILBINT_COUPLE_HPP
#define HILBINT_COUPLE_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hilbint/errors.hpp"
#include "hilbint/param.hpp"

namespace hilbint {

// A two-sided quantity whose equality (to some tolerance) is the content of a
// check.
struct NormPair {
    double lhs = 0.0;
    double rhs = 0.0;
};

} // namespace hilbint

namespace hilbint::couple {

using Complex = std::complex<double>;

// Finite diagonal model of an admissible couple: the generating operator is
// diagonal in a shared orthonormal basis with eigenvalues bounded below by
// r > 0. In this model every interpolation-norm identity of the abstract
// theory holds with equality, not just equivalence.
class SpectralCouple {
  public:
    SpectralCouple(std::vector<double> eigenvalues, double lower_bound);

    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    double lower_bound() const { return lower_bound_; }
    std::size_t dim() const { return eigenvalues_.size(); }

  private:
    std::vector<double> eigenvalues_;
    double lower_bound_;
};

// Coefficient vector in the shared eigenbasis.
class SpectralVector {
  public:
    SpectralVector() = default;
    explicit SpectralVector(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {}

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    std::size_t dim() const { return coeffs_.size(); }

  private:
    std::vector<Complex> coeffs_;
};

// Dense matrix mapping couple X's basis to couple Y's basis (row-major).
class SpectralOperator {
  public:
    SpectralOperator(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

    Complex& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

  private:
    std::size_t rows_, cols_;
    std::vector<Complex> data_;
};

// Squared norm of u in the interpolated space with parameter w:
// sum_k w(lambda_k)^2 |u_k|^2, accumulated left to right. Exposed separately
// so multi-couple checks can enforce one summation order across routes.
double interpolated_norm_sq(const SpectralCouple& c, const param::ParamFn& w,
                            const SpectralVector& u);

double interpolated_norm(const SpectralCouple& c, const param::ParamFn& w,
                         const SpectralVector& u);

// Exact embedding data for the pair of interpolated spaces with parameters
// chi (source) and psi (target): norm_bound is the diagonal-model operator
// norm max_k psi(lambda_k)/chi(lambda_k); tail_sup restricts the maximum to
// eigenvalues at or above the (lower) median, a proxy for the vanishing-ratio
// compactness condition. Ties resolve to the first index.
struct EmbeddingConstants {
    double norm_bound = 0.0;
    std::size_t attained_index = 0;
    double tail_sup = 0.0;
    std::size_t tail_attained_index = 0;
    double median = 0.0;
};

EmbeddingConstants embedding_constants(const SpectralCouple& c, const param::ParamFn& chi,
                                       const param::ParamFn& psi);

struct OperatorNormOptions {
    double rel_tol = 1e-10;
    std::size_t max_iterations = 100000;
    bool force_power_iteration = false; // skip the small-dimension closed form
};

// Operator norm of T between the interpolated spaces of cX and cY with
// parameter w: the largest singular value of diag(w(lambda_Y)) T
// diag(w(lambda_X))^-1. Closed form when either side has dimension <= 2,
// otherwise power iteration on the Gram form with Rayleigh-quotient stopping.
double operator_norm(const SpectralCouple& cX, const SpectralCouple& cY,
                     const param::ParamFn& w, const SpectralOperator& T,
                     const OperatorNormOptions& options = {});

// The weighted matrix diag(w(lambda_Y)) T diag(w(lambda_X))^-1 itself
// (used by oracle comparisons).
SpectralOperator weighted_matrix(const SpectralCouple& cX, const SpectralCouple& cY,
                                 const param::ParamFn& w, const SpectralOperator& T);

// The two-point construction witnessing that non-quasiconcave parameters
// break interpolation: on the couple with eigenvalues (s, t) and the shift
// operator e0 -> e1, the interpolated operator norm is exactly
// psi(t)/psi(s), while any interpolation parameter must keep
// norm / max{1, t/s} bounded.
struct TwoPointResult {
    double norm_ratio = 0.0;          // psi(t)/psi(s), closed form
    double norm_ratio_operator = 0.0; // same quantity via operator_norm
    double bound_ratio = 0.0;         // norm_ratio / max{1, t/s}
};

TwoPointResult two_point_counterexample(const param::ParamFn& psi, double s, double t,
                                        const OperatorNormOptions& options = {});

// Both routes to the reiteration norm: lhs builds the two-stage couple
// (inner parameters f, g, then outer psi applied to the quotient spectrum);
// rhs evaluates the composed parameter omega directly. Equal to 1e-12.
NormPair reiteration_check(const SpectralCouple& c, const param::ParamFn& f,
                           const param::ParamFn& g, const param::ParamFn& psi,
                           const SpectralVector& u);

// Both routes to the dual norm: lhs uses the inverted-couple weight
// psi(lambda)/lambda, rhs the reciprocal of the dual parameter t/psi(t).
NormPair duality_check(const SpectralCouple& c, const param::ParamFn& psi,
                       const SpectralVector& u);

// Concatenation of couples. The product's lower bound defaults to the
// smallest member bound; an explicit bound must not exceed any eigenvalue.
SpectralCouple product_couple(const std::vector<SpectralCouple>& couples,
                              std::optional<double> lower_bound = std::nullopt);

// Interpolation commutes with direct products: lhs is the norm over the
// concatenated couple, rhs the root of the sum of per-couple squared norms.
// Both routes accumulate blockwise in couple order, so they perform the same
// floating-point additions and agree bit-exactly.
NormPair product_norm_check(const std::vector<SpectralCouple>& couples,
                            const param::ParamFn& w,
                            const std::vector<SpectralVector>& vectors);

// Randomized search for the uniform interpolation constant: over `trials`
// seeded random (X, Y, T) triples with eigenvalues >= 1/m, reports the
// largest observed ||T||_w / max(||T||_0, ||T||_1).
struct SweepResult {
    double max_observed_c = 0.0;
    std::size_t at_trial = 0;
};

SweepResult uniform_bound_sweep(const param::ParamFn& w, double m, std::size_t trials,
                                std::uint64_t seed, std::size_t max_dim = 12);

} // namespace hilbint::couple

#endif
