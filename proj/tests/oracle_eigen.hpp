#ifndef HILBINT_TESTS_ORACLE_EIGEN_HPP
#define HILBINT_TESTS_ORACLE_EIGEN_HPP

// Dense eigensolve oracle for small operator-norm cross-checks. Kept in test
// code so the library's power iteration is never checked against itself.

#include <cmath>
#include <complex>
#include <vector>

#include "hilbint/couple.hpp"

namespace hilbint::test_oracle {

// Jacobi eigenvalue sweeps for a real symmetric matrix (row-major, n x n).
// Returns the largest eigenvalue.
inline double jacobi_max_eigenvalue(std::vector<double> a, std::size_t n) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    double best = at(0, 0);
    for (std::size_t i = 1; i < n; ++i) best = std::max(best, at(i, i));
    return best;
}

// Largest singular value of a complex matrix via the real 2n x 2n embedding
// of its Hermitian Gram matrix.
inline double sigma_max_oracle(const couple::SpectralOperator& b) {
    const std::size_t rows = b.rows(), cols = b.cols();
    // Gram g = b^H b (cols x cols), Hermitian.
    std::vector<std::complex<double>> g(cols * cols);
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::complex<double> acc(0.0, 0.0);
            for (std::size_t k = 0; k < rows; ++k) acc += std::conj(b.at(k, i)) * b.at(k, j);
            g[i * cols + j] = acc;
        }
    // Embed as [[Re, -Im], [Im, Re]]; eigenvalues double up.
    const std::size_t n = 2 * cols;
    std::vector<double> m(n * n, 0.0);
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const auto z = g[i * cols + j];
            m[i * n + j] = z.real();
            m[i * n + (cols + j)] = -z.imag();
            m[(cols + i) * n + j] = z.imag();
            m[(cols + i) * n + (cols + j)] = z.real();
        }
    const double top = jacobi_max_eigenvalue(std::move(m), n);
    return std::sqrt(std::max(0.0, top));
}

} // namespace hilbint::test_oracle

#endif
