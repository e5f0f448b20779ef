#include "hilbint/elliptic.hpp"

#include <cmath>
#include <unordered_map>

#include "hilbint/grid.hpp"

namespace hilbint::elliptic {

FourierDistribution apply(const ShiftedLaplacian& op, const FourierDistribution& u) {
    FourierDistribution out(u.dim(), u.band_limit());
    for (const auto& mode : u.modes()) out.set(mode.k, op.eigenvalue(mode.k) * mode.coeff);
    return out;
}

FourierDistribution apply_spectral(const ShiftedLaplacian& op, const param::ParamFn& f,
                                   const FourierDistribution& u) {
    FourierDistribution out(u.dim(), u.band_limit());
    for (const auto& mode : u.modes()) out.set(mode.k, f(op.eigenvalue(mode.k)) * mode.coeff);
    return out;
}

double calculus_norm(const ShiftedLaplacian& op, const FourierDistribution& u,
                     const SmoothnessIndex& idx) {
    const param::ParamFn weight = param::power_scaled(idx.phi, idx.s, op.order());
    const FourierDistribution weighted = apply_spectral(op, weight, u);
    double acc = 0.0;
    for (const auto& mode : weighted.modes()) acc += std::norm(mode.coeff);
    return std::sqrt(acc);
}

NormPair calculus_vs_fourier_check(const FourierDistribution& u, const SmoothnessIndex& idx) {
    const ShiftedLaplacian op;
    return {calculus_norm(op, u, idx), hormander::hnorm(u, idx)};
}

GraphNormResult graph_norm_check(const FourierDistribution& u, const SmoothnessIndex& idx) {
    if (idx.s < 0.0)
        throw InvalidParameter("graph_norm_check: defined for s >= 0 only");
    if (idx.s == 0.0) {
        // s = 0 needs 1/phi bounded near +infinity for the graph norm to
        // dominate; sampled evidence with a 1e6 cap.
        for (double t : geometric_grid(1.0, 1e9, 128))
            if (1.0 / idx.phi(t) > 1e6)
                throw HypothesisViolation("graph_norm_check: sampled 1/phi exceeds 1e6 at t=" +
                                          std::to_string(t));
    }
    const ShiftedLaplacian op;
    const param::ParamFn weight = param::power_scaled(idx.phi, idx.s, op.order());

    GraphNormResult out;
    // Minimum of the calculus weight over the full band of u; values depend
    // on |k|^2 only.
    {
        const int K = u.band_limit();
        const int dim = u.dim();
        std::unordered_map<long long, double> memo;
        double wmin = 0.0;
        bool seen = false;
        std::vector<int> k(dim, 0);
        for (;;) {
            long long m2 = 0;
            for (int ki : k) m2 += static_cast<long long>(ki) * ki;
            auto it = memo.find(m2);
            double wk;
            if (it == memo.end()) {
                wk = weight(1.0 + static_cast<double>(m2));
                memo.emplace(m2, wk);
            } else {
                wk = it->second;
            }
            if (!seen || wk < wmin) {
                wmin = wk;
                seen = true;
            }
            int axis = dim - 1;
            while (axis >= 0 && k[axis] == K) k[axis--] = 0;
            if (axis < 0) break;
            ++k[axis];
        }
        out.weight_min = wmin;
    }
    out.ratio_bound = std::sqrt(1.0 + 1.0 / (out.weight_min * out.weight_min));

    double l2_sq = 0.0;
    for (const auto& mode : u.modes()) l2_sq += std::norm(mode.coeff);
    const double calc = calculus_norm(ShiftedLaplacian{}, u, idx);
    out.graph = std::sqrt(l2_sq + calc * calc);
    out.hnorm_value = hormander::hnorm(u, idx);
    out.ratio = out.hnorm_value == 0.0 ? 1.0 : out.graph / out.hnorm_value;
    return out;
}

NormPair lifting_check(const ShiftedLaplacian& op, const FourierDistribution& u,
                       const SmoothnessIndex& idx) {
    NormPair out;
    out.lhs = hormander::hnorm(apply(op, u), idx);
    out.rhs = hormander::hnorm(u, SmoothnessIndex{idx.s + op.order(), idx.phi});
    return out;
}

} // namespace hilbint::elliptic
