#ifndef HILBINT_PARAM_HPP
#define HILBINT_PARAM_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbint/errors.hpp"

namespace hilbint::param {

namespace detail {
struct Node;
}

// Catalog of continuous functions alpha : [r, inf) -> R with alpha(t) -> 0
// at +infinity. The log-based tags need r > 1 to stay clear of the ln t = 0
// singularity; amplitude_on(r) is the exact sup of |alpha| on [r, inf)
// (equal to |a| once r >= e for the log family, |a| once r >= 1 for powers).
class AlphaSpec {
  public:
    enum class Kind { Zero, InvLog, InvPow, SinLogOverLog };

    static AlphaSpec zero();
    static AlphaSpec inv_log(double a);           // a / ln t          (r > 1)
    static AlphaSpec inv_pow(double a, double p); // a / t^p, p > 0    (r > 0)
    static AlphaSpec sin_log_over_log(double a);  // a sin(ln t)/ln t  (r > 1)

    double operator()(double t) const;
    double min_lower_bound() const; // largest r excluded by the singularity
    double amplitude_on(double r) const;
    Kind kind() const { return kind_; }
    std::string describe() const;

  private:
    AlphaSpec(Kind kind, double a, double p) : kind_(kind), a_(a), p_(p) {}
    Kind kind_;
    double a_;
    double p_;
};

// Catalog of bounded functions beta : [r, inf) -> R with sup |beta| equal to
// the declared bound.
class BetaSpec {
  public:
    enum class Kind { Constant, SinLogLog, Step };

    static BetaSpec constant(double b);
    static BetaSpec sin_log_log(double b);      // b sin(ln ln (t + e^e))
    static BetaSpec step(double b, double t_jump);

    double operator()(double t) const;
    double bound() const;
    Kind kind() const { return kind_; }
    std::string describe() const;

  private:
    BetaSpec(Kind kind, double b, double t_jump) : kind_(kind), b_(b), t_jump_(t_jump) {}
    Kind kind_;
    double b_;
    double t_jump_;
};

// Immutable positive function on (0, inf) represented as an expression tree.
// Evaluation is pure and deterministic: the same t always yields bit-identical
// values. Construction can attach a declared variation index theta, meaning
// the function is quasiregularly varying at +infinity with that index
// (index 0 = quasislowly varying); the flag travels through combinators so
// downstream code can use by-construction arguments instead of sampling.
class ParamFn {
  public:
    // Value at t. Throws NonPositiveArgument for t <= 0 (NaN included);
    // KaramataForm leaves may throw QuadratureNonConvergence.
    double operator()(double t) const;

    std::optional<double> declared_index() const { return declared_index_; }
    bool declared_qsv() const { return declared_index_ && *declared_index_ == 0.0; }

    // Expression-syntax rendering; parse_param_fn round-trips it.
    std::string describe() const;

    ParamFn with_declared_index(std::optional<double> idx) const;

    // Internal: used by factories.
    ParamFn(std::shared_ptr<const detail::Node> node, std::optional<double> idx)
        : node_(std::move(node)), declared_index_(idx) {}

    const std::shared_ptr<const detail::Node>& node() const { return node_; }

  private:
    std::shared_ptr<const detail::Node> node_;
    std::optional<double> declared_index_;
};

// --- leaf constructors ---

ParamFn constant(double c);                            // c > 0
ParamFn power(double theta);                           // t^theta
// Product of iterated-log powers. The argument is shifted additively by the
// exponential tower of height k = exponents.size() so every iterated log is
// >= 1 for all t > 0. k <= 3: the height-4 tower overflows double.
ParamFn log_multiscale(const std::vector<double>& exponents);
// exp(beta(t) + integral_r^t alpha(tau)/tau dtau) for t >= r, frozen at its
// r-value below r. The integral runs in u = ln tau by adaptive Simpson with
// relative tolerance 1e-10, depth limit 40.
ParamFn karamata(const AlphaSpec& alpha, const BetaSpec& beta, double r);

// --- node constructors ---

ParamFn product(const ParamFn& f, const ParamFn& g);
ParamFn quotient(const ParamFn& f, const ParamFn& g);
ParamFn sum(const ParamFn& f, const ParamFn& g);
ParamFn real_power(const ParamFn& f, double sigma);
ParamFn compose(const ParamFn& outer, const ParamFn& inner); // outer(inner(t)), no declared index
// inner(max(t, t0)): freezes the value below t0.
ParamFn low_cutoff_clamp(const ParamFn& inner, double t0);

inline ParamFn operator*(const ParamFn& f, const ParamFn& g) { return product(f, g); }
inline ParamFn operator/(const ParamFn& f, const ParamFn& g) { return quotient(f, g); }
inline ParamFn operator+(const ParamFn& f, const ParamFn& g) { return sum(f, g); }

// t^(eps/(eps+delta)) * phi(t^(1/(eps+delta))) for t >= 1, phi(1) below 1.
// Declared quasiregularly varying with index eps/(eps+delta); converts the
// refinement phi of a smoothness-gap (eps, delta) couple into the parameter
// that interpolates it exactly.
ParamFn interp_parameter(const ParamFn& phi, double eps, double delta);

// t^(s/m) * phi(t^(1/m)) for t >= 1, phi(1) below 1. The weight applied to an
// order-m operator's spectrum to produce the (s, phi) norm.
ParamFn power_scaled(const ParamFn& phi, double s, double m);

// chi(t^theta * phi(t)), declared quasislowly varying. theta >= 0; for
// theta = 0 the caller asserts phi(t) -> infinity (sampled warning otherwise).
ParamFn qsv_compose(const ParamFn& chi, double theta, const ParamFn& phi,
                    std::vector<std::string>* warnings = nullptr);

// omega(t) = f(t) * psi(g(t)/f(t)). Caller asserts f/g bounded near
// +infinity; sampled evidence to the contrary lands in `warnings`.
ParamFn reiteration_omega(const ParamFn& f, const ParamFn& g, const ParamFn& psi,
                          std::vector<std::string>* warnings = nullptr);

// chi(t) = t / psi(t). Caller asserts psi(t)/t bounded near +infinity.
ParamFn dual_parameter(const ParamFn& psi, std::vector<std::string>* warnings = nullptr);

// Result index s = (1-theta) s0 + theta s1 together with the refinement
// phi0^(1-theta) phi1^theta chi(t^(s1-s0) phi1/phi0) reached by interpolating
// between the (s0, phi0) and (s1, phi1) spaces with parameter t^theta chi(t).
struct TargetSpace {
    double s;
    ParamFn phi;
};
TargetSpace interpolation_target(const ParamFn& phi0, const ParamFn& phi1, double s0,
                                 double s1, double theta, const ParamFn& chi);

// --- membership evidence ---

struct CompactBound {
    double lo = 0.0;
    double hi = 0.0;
    double sup = 0.0;
    double attained_at = 0.0;
};

// Sampled evidence for the admissible-weight class: positive, bounded on
// compacts, reciprocal bounded on [r, inf). Verdicts are evidence, never
// proof.
struct BoundednessReport {
    std::vector<CompactBound> compact_sups;
    double tail_inv_sup = 0.0;
    double tail_inv_attained_at = 0.0;
    std::vector<double> nested_inv_sups;
    bool tail_bounded_evidence = false;
    bool pass() const { return tail_bounded_evidence; }
};

BoundednessReport check_boundedness(const ParamFn& f, const std::vector<double>& grid,
                                    double r,
                                    const std::vector<std::pair<double, double>>& compacts = {});

// Evidence for the two-sided bound psi(t)/psi(s) <= c max{1, t/s} on grid
// pairs drawn from (r, inf). nested_growth holds c recomputed on nested
// sub-grids of growing extent; the verdict is "quasiconcave evidence" when
// the sequence stabilizes (last successive ratio <= 1.05).
struct QuasiconcavityCertificate {
    double c_estimate = 0.0;
    std::pair<double, double> worst_pair{0.0, 0.0}; // (t, s)
    std::vector<double> nested_growth;
    bool quasiconcave_evidence = false;
};

QuasiconcavityCertificate quasiconcavity_certificate(const ParamFn& psi, double r,
                                                     const std::vector<double>& grid);

enum class InterpVerdict { PassByConstruction, QuasiconcaveEvidence, ViolationEvidence };

struct InterpEvidence {
    InterpVerdict verdict = InterpVerdict::ViolationEvidence;
    std::optional<double> declared_index;
    std::optional<QuasiconcavityCertificate> certificate;
    bool pass() const { return verdict != InterpVerdict::ViolationEvidence; }
};

// Pass-by-construction when the function carries a declared index in (0, 1);
// otherwise falls back to the quasiconcavity certificate on a default
// geometric grid over [1, 1e8].
InterpEvidence interpolation_parameter_evidence(const ParamFn& psi);

// Shared stabilization rule for nested-sup diagnostics.
bool nested_values_stabilize(const std::vector<double>& values, double growth_threshold = 1.05);

// --- expression syntax ---

// Grammar (whitespace insensitive):
//   expr    := term (('+') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := primary ('^' NUMBER)?
//   primary := '(' expr ')' | CALL
//   CALL    := const(c) | pow(theta) | logms(r1,...) |
//              karamata(alpha=ALPHA, beta=BETA, r=NUM) |
//              clamp(expr, t0) | iparam(expr, eps, delta) |
//              pscale(expr, s, m) | qsvcomp(expr, theta, expr) |
//              comp(expr, expr) | reiterate(expr, expr, expr) | dual(expr)
//   ALPHA   := zero | inv_log(a) | inv_pow(a, p) | sin_log(a)
//   BETA    := const(b) | sin_loglog(b) | step(b, t0)
ParamFn parse_param_fn(const std::string& text);

} // namespace hilbint::param

#endif
