#ifndef HILBINT_RNG_HPP
#define HILBINT_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace hilbint {

// splitmix64 stream. Self-contained so that report bytes depend only on the
// seed, never on the standard library's distribution internals.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Derives an independent stream for instance `index` of a suite.
    static Rng for_instance(std::uint64_t seed, std::uint64_t index) {
        Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        mix.next_u64();
        return mix;
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Log-uniform on [lo, hi], lo, hi > 0.
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    int uniform_int(int lo, int hi) { // inclusive
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Standard complex gaussian via Box-Muller.
    std::complex<double> gaussian() {
        double u1 = uniform();
        while (u1 == 0.0) u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        return {radius * std::cos(6.283185307179586 * u2),
                radius * std::sin(6.283185307179586 * u2)};
    }

  private:
    std::uint64_t state_;
};

} // namespace hilbint

#endif
