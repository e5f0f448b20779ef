#ifndef HILBINT_QUADRATURE_HPP
#define HILBINT_QUADRATURE_HPP

#include <cmath>
#include <functional>

#include "hilbint/errors.hpp"

namespace hilbint {

// Adaptive Simpson on [a, b] to relative tolerance `rel_tol`. The error
// budget is split between halves in the usual way; refinement past
// `max_depth` throws QuadratureNonConvergence.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-10, int max_depth = 40);

} // namespace hilbint

#endif
