#ifndef HILBINT_GRID_HPP
#define HILBINT_GRID_HPP

#include <cmath>
#include <vector>

#include "hilbint/errors.hpp"

namespace hilbint {

// Geometric grid of `count` points from lo to hi inclusive, lo, hi > 0.
inline std::vector<double> geometric_grid(double lo, double hi, std::size_t count) {
    if (lo <= 0.0 || hi <= 0.0) throw NonPositiveArgument("geometric_grid: endpoints must be positive");
    if (hi <= lo) throw InvalidParameter("geometric_grid: hi must exceed lo");
    if (count < 2) throw InsufficientGrid("geometric_grid: need at least 2 points");
    std::vector<double> g(count);
    const double step = std::log(hi / lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        g[i] = lo * std::exp(step * static_cast<double>(i));
    g.front() = lo;
    g.back() = hi;
    return g;
}

// Default sampling grid for membership evidence: 512 points on (1e-3, 1e9).
inline std::vector<double> default_evidence_grid() {
    return geometric_grid(1e-3, 1e9, 512);
}

} // namespace hilbint

#endif
