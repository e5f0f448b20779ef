#include "hilbint/param.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "hilbint/grid.hpp"
#include "hilbint/quadrature.hpp"

namespace hilbint::param {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

constexpr double kE = 2.718281828459045;

} // namespace

// ---------------------------------------------------------------- AlphaSpec

AlphaSpec AlphaSpec::zero() { return AlphaSpec(Kind::Zero, 0.0, 0.0); }

AlphaSpec AlphaSpec::inv_log(double a) { return AlphaSpec(Kind::InvLog, a, 0.0); }

AlphaSpec AlphaSpec::inv_pow(double a, double p) {
    if (p <= 0.0) throw NonPositiveParameter("AlphaSpec::inv_pow: p must be positive");
    return AlphaSpec(Kind::InvPow, a, p);
}

AlphaSpec AlphaSpec::sin_log_over_log(double a) {
    return AlphaSpec(Kind::SinLogOverLog, a, 0.0);
}

double AlphaSpec::operator()(double t) const {
    switch (kind_) {
    case Kind::Zero: return 0.0;
    case Kind::InvLog: return a_ / std::log(t);
    case Kind::InvPow: return a_ / std::pow(t, p_);
    case Kind::SinLogOverLog: {
        const double l = std::log(t);
        return a_ * std::sin(l) / l;
    }
    }
    return 0.0;
}

double AlphaSpec::min_lower_bound() const {
    switch (kind_) {
    case Kind::Zero: return 0.0;
    case Kind::InvLog:
    case Kind::SinLogOverLog: return 1.0; // strict: ln r must be positive
    case Kind::InvPow: return 0.0;
    }
    return 0.0;
}

double AlphaSpec::amplitude_on(double r) const {
    switch (kind_) {
    case Kind::Zero: return 0.0;
    case Kind::InvLog:
    case Kind::SinLogOverLog: return std::abs(a_) / std::log(r); // decreasing in t
    case Kind::InvPow: return std::abs(a_) * std::pow(r, -p_);
    }
    return 0.0;
}

std::string AlphaSpec::describe() const {
    switch (kind_) {
    case Kind::Zero: return "zero";
    case Kind::InvLog: return "inv_log(" + fmt(a_) + ")";
    case Kind::InvPow: return "inv_pow(" + fmt(a_) + "," + fmt(p_) + ")";
    case Kind::SinLogOverLog: return "sin_log(" + fmt(a_) + ")";
    }
    return "zero";
}

// ----------------------------------------------------------------- BetaSpec

BetaSpec BetaSpec::constant(double b) { return BetaSpec(Kind::Constant, b, 0.0); }

BetaSpec BetaSpec::sin_log_log(double b) { return BetaSpec(Kind::SinLogLog, b, 0.0); }

BetaSpec BetaSpec::step(double b, double t_jump) {
    if (t_jump <= 0.0) throw NonPositiveParameter("BetaSpec::step: t_jump must be positive");
    return BetaSpec(Kind::Step, b, t_jump);
}

double BetaSpec::operator()(double t) const {
    switch (kind_) {
    case Kind::Constant: return b_;
    case Kind::SinLogLog: return b_ * std::sin(std::log(std::log(t + std::exp(kE))));
    case Kind::Step: return t >= t_jump_ ? b_ : 0.0;
    }
    return 0.0;
}

double BetaSpec::bound() const { return std::abs(b_); }

std::string BetaSpec::describe() const {
    switch (kind_) {
    case Kind::Constant: return "const(" + fmt(b_) + ")";
    case Kind::SinLogLog: return "sin_loglog(" + fmt(b_) + ")";
    case Kind::Step: return "step(" + fmt(b_) + "," + fmt(t_jump_) + ")";
    }
    return "const(0)";
}

// -------------------------------------------------------------------- nodes

namespace detail {

struct Node {
    virtual ~Node() = default;
    virtual double eval(double t) const = 0; // caller guarantees t > 0
    virtual std::string describe() const = 0;
};

namespace {

struct ConstantNode final : Node {
    double c;
    explicit ConstantNode(double c) : c(c) {}
    double eval(double) const override { return c; }
    std::string describe() const override { return "const(" + fmt(c) + ")"; }
};

struct PowerNode final : Node {
    double theta;
    explicit PowerNode(double theta) : theta(theta) {}
    double eval(double t) const override { return std::pow(t, theta); }
    std::string describe() const override { return "pow(" + fmt(theta) + ")"; }
};

struct LogMultiscaleNode final : Node {
    std::vector<double> exponents;
    double shift; // exp tower of height exponents.size()
    explicit LogMultiscaleNode(std::vector<double> ex) : exponents(std::move(ex)) {
        shift = 1.0;
        for (std::size_t i = 0; i < exponents.size(); ++i) shift = std::exp(shift);
    }
    double eval(double t) const override {
        double level = t + shift;
        double value = 1.0;
        for (double r : exponents) {
            level = std::log(level); // >= 1 by the tower shift
            value *= std::pow(level, r);
        }
        return value;
    }
    std::string describe() const override {
        std::string s = "logms(";
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (i) s += ",";
            s += fmt(exponents[i]);
        }
        return s + ")";
    }
};

struct KaramataNode final : Node {
    AlphaSpec alpha;
    BetaSpec beta;
    double r;
    KaramataNode(AlphaSpec a, BetaSpec b, double r) : alpha(a), beta(b), r(r) {}
    double eval(double t) const override {
        if (t <= r) return std::exp(beta(r)); // frozen below r
        const double integral = adaptive_simpson(
            [this](double u) { return alpha(std::exp(u)); }, std::log(r), std::log(t));
        return std::exp(beta(t) + integral);
    }
    std::string describe() const override {
        return "karamata(alpha=" + alpha.describe() + ",beta=" + beta.describe() +
               ",r=" + fmt(r) + ")";
    }
};

struct ProductNode final : Node {
    ParamFn f, g;
    ProductNode(ParamFn f, ParamFn g) : f(std::move(f)), g(std::move(g)) {}
    double eval(double t) const override { return f(t) * g(t); }
    std::string describe() const override {
        return "(" + f.describe() + "*" + g.describe() + ")";
    }
};

struct QuotientNode final : Node {
    ParamFn f, g;
    QuotientNode(ParamFn f, ParamFn g) : f(std::move(f)), g(std::move(g)) {}
    double eval(double t) const override { return f(t) / g(t); }
    std::string describe() const override {
        return "(" + f.describe() + "/" + g.describe() + ")";
    }
};

struct SumNode final : Node {
    ParamFn f, g;
    SumNode(ParamFn f, ParamFn g) : f(std::move(f)), g(std::move(g)) {}
    double eval(double t) const override { return f(t) + g(t); }
    std::string describe() const override {
        return "(" + f.describe() + "+" + g.describe() + ")";
    }
};

struct RealPowerNode final : Node {
    ParamFn f;
    double sigma;
    RealPowerNode(ParamFn f, double sigma) : f(std::move(f)), sigma(sigma) {}
    double eval(double t) const override { return std::pow(f(t), sigma); }
    std::string describe() const override {
        return "(" + f.describe() + "^" + fmt(sigma) + ")";
    }
};

struct ComposeNode final : Node {
    ParamFn outer, inner;
    ComposeNode(ParamFn outer, ParamFn inner)
        : outer(std::move(outer)), inner(std::move(inner)) {}
    double eval(double t) const override { return outer(inner(t)); }
    std::string describe() const override {
        return "comp(" + outer.describe() + "," + inner.describe() + ")";
    }
};

struct PowerScaledNode final : Node {
    ParamFn phi;
    double s, m;
    bool interp_form; // render as iparam(phi, eps, delta) with eps = s, delta = m - s
    PowerScaledNode(ParamFn phi, double s, double m, bool interp_form)
        : phi(std::move(phi)), s(s), m(m), interp_form(interp_form) {}
    double eval(double t) const override {
        if (t < 1.0) return phi(1.0);
        return std::pow(t, s / m) * phi(std::pow(t, 1.0 / m));
    }
    std::string describe() const override {
        if (interp_form)
            return "iparam(" + phi.describe() + "," + fmt(s) + "," + fmt(m - s) + ")";
        return "pscale(" + phi.describe() + "," + fmt(s) + "," + fmt(m) + ")";
    }
};

struct ClampNode final : Node {
    ParamFn inner;
    double t0;
    ClampNode(ParamFn inner, double t0) : inner(std::move(inner)), t0(t0) {}
    double eval(double t) const override { return inner(std::max(t, t0)); }
    std::string describe() const override {
        return "clamp(" + inner.describe() + "," + fmt(t0) + ")";
    }
};

} // namespace
} // namespace detail

// ------------------------------------------------------------------ ParamFn

double ParamFn::operator()(double t) const {
    if (!(t > 0.0)) throw NonPositiveArgument("ParamFn: argument must be positive, got " + fmt(t));
    return node_->eval(t);
}

std::string ParamFn::describe() const { return node_->describe(); }

ParamFn ParamFn::with_declared_index(std::optional<double> idx) const {
    return ParamFn(node_, idx);
}

// ---------------------------------------------------------------- factories

ParamFn constant(double c) {
    if (!(c > 0.0)) throw NonPositiveParameter("constant: value must be positive");
    return ParamFn(std::make_shared<detail::ConstantNode>(c), 0.0);
}

ParamFn power(double theta) {
    return ParamFn(std::make_shared<detail::PowerNode>(theta), theta);
}

ParamFn log_multiscale(const std::vector<double>& exponents) {
    if (exponents.empty())
        throw InvalidParameter("log_multiscale: at least one exponent required");
    if (exponents.size() > 3)
        throw InvalidParameter("log_multiscale: at most 3 iterated logs supported "
                               "(the height-4 shift tower overflows double)");
    return ParamFn(std::make_shared<detail::LogMultiscaleNode>(exponents), 0.0);
}

ParamFn karamata(const AlphaSpec& alpha, const BetaSpec& beta, double r) {
    if (!(r > 0.0)) throw NonPositiveParameter("karamata: r must be positive");
    if (!(r > alpha.min_lower_bound()))
        throw InvalidParameter("karamata: r=" + fmt(r) + " inside the singular range of alpha=" +
                               alpha.describe() + " (need r > " +
                               fmt(alpha.min_lower_bound()) + ")");
    return ParamFn(std::make_shared<detail::KaramataNode>(alpha, beta, r), 0.0);
}

namespace {

std::optional<double> combine(const ParamFn& f, const ParamFn& g, double wf, double wg) {
    if (f.declared_index() && g.declared_index())
        return wf * *f.declared_index() + wg * *g.declared_index();
    return std::nullopt;
}

} // namespace

ParamFn product(const ParamFn& f, const ParamFn& g) {
    return ParamFn(std::make_shared<detail::ProductNode>(f, g), combine(f, g, 1.0, 1.0));
}

ParamFn quotient(const ParamFn& f, const ParamFn& g) {
    return ParamFn(std::make_shared<detail::QuotientNode>(f, g), combine(f, g, 1.0, -1.0));
}

ParamFn sum(const ParamFn& f, const ParamFn& g) {
    // For positive quasiregularly varying summands the larger index dominates.
    std::optional<double> idx;
    if (f.declared_index() && g.declared_index())
        idx = std::max(*f.declared_index(), *g.declared_index());
    return ParamFn(std::make_shared<detail::SumNode>(f, g), idx);
}

ParamFn real_power(const ParamFn& f, double sigma) {
    std::optional<double> idx;
    if (f.declared_index()) idx = sigma * *f.declared_index();
    return ParamFn(std::make_shared<detail::RealPowerNode>(f, sigma), idx);
}

ParamFn compose(const ParamFn& outer, const ParamFn& inner) {
    return ParamFn(std::make_shared<detail::ComposeNode>(outer, inner), std::nullopt);
}

ParamFn low_cutoff_clamp(const ParamFn& inner, double t0) {
    if (!(t0 > 0.0)) throw NonPositiveParameter("low_cutoff_clamp: t0 must be positive");
    return ParamFn(std::make_shared<detail::ClampNode>(inner, t0), inner.declared_index());
}

ParamFn interp_parameter(const ParamFn& phi, double eps, double delta) {
    if (!(eps > 0.0) || !(delta > 0.0))
        throw NonPositiveParameter("interp_parameter: eps and delta must be positive");
    return ParamFn(std::make_shared<detail::PowerScaledNode>(phi, eps, eps + delta, true),
                   eps / (eps + delta));
}

ParamFn power_scaled(const ParamFn& phi, double s, double m) {
    if (!(m > 0.0)) throw NonPositiveParameter("power_scaled: m must be positive");
    return ParamFn(std::make_shared<detail::PowerScaledNode>(phi, s, m, false), s / m);
}

namespace {

// Sampled tail-growth evidence used by the caller-asserted preconditions.
// True when sup over nested windows of `value` keeps growing.
bool tail_grows(const ParamFn& f, double lo, double hi) {
    const auto grid = geometric_grid(lo, hi, 64);
    std::vector<double> sups;
    double sup = 0.0;
    std::size_t next_mark = 16;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        sup = std::max(sup, f(grid[i]));
        if (i + 1 == next_mark || i + 1 == grid.size()) {
            sups.push_back(sup);
            next_mark *= 2;
        }
    }
    return !nested_values_stabilize(sups);
}

} // namespace

ParamFn qsv_compose(const ParamFn& chi, double theta, const ParamFn& phi,
                    std::vector<std::string>* warnings) {
    if (theta < 0.0) throw InvalidParameter("qsv_compose: theta must be >= 0");
    if (theta == 0.0 && warnings) {
        // The slow-variation conclusion needs phi -> infinity when theta = 0.
        if (!tail_grows(phi, 1e3, 1e9))
            warnings->push_back("qsv_compose: theta=0 but sampled phi shows no growth "
                                "toward +infinity; composed declaration may be unsound");
    }
    ParamFn argument = theta == 0.0 ? phi : product(power(theta), phi);
    return compose(chi, argument).with_declared_index(0.0);
}

ParamFn reiteration_omega(const ParamFn& f, const ParamFn& g, const ParamFn& psi,
                          std::vector<std::string>* warnings) {
    if (warnings && tail_grows(quotient(f, g), 1e3, 1e9))
        warnings->push_back("reiteration_omega: sampled f/g grows near +infinity; "
                            "the bounded-ratio hypothesis looks violated");
    ParamFn omega = product(f, compose(psi, quotient(g, f)));
    std::optional<double> idx;
    if (f.declared_index() && g.declared_index() && psi.declared_index() &&
        *g.declared_index() > *f.declared_index()) {
        const double tf = *f.declared_index();
        const double tg = *g.declared_index();
        const double tp = *psi.declared_index();
        idx = (1.0 - tp) * tf + tp * tg;
    }
    return omega.with_declared_index(idx);
}

ParamFn dual_parameter(const ParamFn& psi, std::vector<std::string>* warnings) {
    if (warnings && tail_grows(quotient(psi, power(1.0)), 1e3, 1e9))
        warnings->push_back("dual_parameter: sampled psi(t)/t grows near +infinity; "
                            "the bounded-ratio hypothesis looks violated");
    ParamFn chi = quotient(power(1.0), psi);
    std::optional<double> idx;
    if (psi.declared_index()) idx = 1.0 - *psi.declared_index();
    return chi.with_declared_index(idx);
}

TargetSpace interpolation_target(const ParamFn& phi0, const ParamFn& phi1, double s0,
                                 double s1, double theta, const ParamFn& chi) {
    if (s0 > s1) throw OrderViolation("interpolation_target: need s0 <= s1");
    if (!(theta > 0.0 && theta < 1.0))
        throw InvalidParameter("interpolation_target: theta must lie in (0,1)");
    const double s = (1.0 - theta) * s0 + theta * s1;
    ParamFn ratio_arg = product(power(s1 - s0), quotient(phi1, phi0));
    ParamFn phi = product(product(real_power(phi0, 1.0 - theta), real_power(phi1, theta)),
                          compose(chi, ratio_arg))
                      .with_declared_index(0.0);
    return {s, phi};
}

// ----------------------------------------------------------------- evidence

bool nested_values_stabilize(const std::vector<double>& values, double growth_threshold) {
    if (values.size() < 2) return true;
    const double prev = values[values.size() - 2];
    const double last = values.back();
    if (prev <= 0.0) return last <= 0.0;
    return last / prev <= growth_threshold;
}

BoundednessReport check_boundedness(const ParamFn& f, const std::vector<double>& grid,
                                    double r,
                                    const std::vector<std::pair<double, double>>& compacts) {
    if (grid.empty()) throw EmptyGrid("check_boundedness: empty grid");
    if (!(r > 0.0)) throw NonPositiveParameter("check_boundedness: r must be positive");

    std::vector<double> pts = grid;
    std::sort(pts.begin(), pts.end());

    BoundednessReport report;

    std::vector<std::pair<double, double>> boxes = compacts;
    if (boxes.empty()) boxes.push_back({pts.front(), pts.back()});
    for (const auto& [a, b] : boxes) {
        CompactBound cb{a, b, 0.0, a};
        for (double t : pts) {
            if (t < a || t > b) continue;
            const double v = f(t);
            if (v > cb.sup) {
                cb.sup = v;
                cb.attained_at = t;
            }
        }
        report.compact_sups.push_back(cb);
    }

    std::vector<double> tail;
    for (double t : pts)
        if (t >= r) tail.push_back(t);
    if (tail.empty()) throw EmptyGrid("check_boundedness: no grid points at or above r");

    // Nested windows of growing extent expose tails where 1/f is unbounded.
    const double extent = tail.back() / tail.front();
    constexpr int kWindows = 4;
    double sup = 0.0, at = tail.front();
    std::size_t i = 0;
    for (int w = 1; w <= kWindows; ++w) {
        const double hi = tail.front() * std::pow(extent, static_cast<double>(w) / kWindows);
        for (; i < tail.size() && tail[i] <= hi * (1.0 + 1e-12); ++i) {
            const double v = 1.0 / f(tail[i]);
            if (v > sup) {
                sup = v;
                at = tail[i];
            }
        }
        report.nested_inv_sups.push_back(sup);
    }
    report.tail_inv_sup = sup;
    report.tail_inv_attained_at = at;
    report.tail_bounded_evidence = nested_values_stabilize(report.nested_inv_sups);
    return report;
}

QuasiconcavityCertificate quasiconcavity_certificate(const ParamFn& psi, double r,
                                                     const std::vector<double>& grid) {
    if (grid.empty()) throw EmptyGrid("quasiconcavity_certificate: empty grid");
    std::vector<double> pts;
    for (double t : grid)
        if (t > r) pts.push_back(t);
    if (pts.size() < 2)
        throw InsufficientGrid("quasiconcavity_certificate: fewer than 2 grid points above r");
    std::sort(pts.begin(), pts.end());

    std::vector<double> values(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) values[i] = psi(pts[i]);

    QuasiconcavityCertificate cert;
    const double extent = pts.back() / pts.front();
    constexpr int kWindows = 4;
    std::size_t window_end = 0;
    double c = 0.0;
    std::pair<double, double> worst{pts.front(), pts.front()};
    for (int w = 1; w <= kWindows; ++w) {
        const double hi = pts.front() * std::pow(extent, static_cast<double>(w) / kWindows);
        std::size_t new_end = window_end;
        while (new_end < pts.size() && pts[new_end] <= hi * (1.0 + 1e-12)) ++new_end;
        // Pairs with at least one point in the freshly added slab.
        for (std::size_t i = window_end; i < new_end; ++i) {
            for (std::size_t j = 0; j < new_end; ++j) {
                for (auto [ti, si] : {std::pair{i, j}, std::pair{j, i}}) {
                    const double ratio =
                        values[ti] / (values[si] * std::max(1.0, pts[ti] / pts[si]));
                    if (ratio > c) {
                        c = ratio;
                        worst = {pts[ti], pts[si]};
                    }
                }
            }
        }
        window_end = new_end;
        cert.nested_growth.push_back(c);
    }
    cert.c_estimate = c;
    cert.worst_pair = worst;
    cert.quasiconcave_evidence = nested_values_stabilize(cert.nested_growth);
    return cert;
}

InterpEvidence interpolation_parameter_evidence(const ParamFn& psi) {
    InterpEvidence ev;
    if (psi.declared_index() && *psi.declared_index() > 0.0 && *psi.declared_index() < 1.0) {
        ev.verdict = InterpVerdict::PassByConstruction;
        ev.declared_index = psi.declared_index();
        return ev;
    }
    ev.certificate = quasiconcavity_certificate(psi, 0.0, geometric_grid(1.0, 1e8, 512));
    ev.verdict = ev.certificate->quasiconcave_evidence ? InterpVerdict::QuasiconcaveEvidence
                                                       : InterpVerdict::ViolationEvidence;
    return ev;
}

} // namespace hilbint::param
