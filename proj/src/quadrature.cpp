#include "hilbint/quadrature.hpp"

#include <cmath>

namespace hilbint {

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double refine(const std::function<double(double)>& f, double a, double b, double fa,
              double fm, double fb, double whole, double abs_tol, int depth, int max_depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * abs_tol)
        return left + right + delta / 15.0;
    if (depth >= max_depth)
        throw QuadratureNonConvergence("adaptive_simpson: depth limit exceeded");
    return refine(f, a, m, fa, flm, fm, left, 0.5 * abs_tol, depth + 1, max_depth) +
           refine(f, m, b, fm, frm, fb, right, 0.5 * abs_tol, depth + 1, max_depth);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, int max_depth) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = simpson(fa, fm, fb, b - a);
    // Relative tolerance with an absolute floor so near-zero integrals
    // (e.g. identically vanishing integrands) terminate immediately.
    const double abs_tol = rel_tol * std::max(1.0, std::abs(whole));
    return refine(f, a, b, fa, fm, fb, whole, abs_tol, 0, max_depth);
}

} // namespace hilbint
