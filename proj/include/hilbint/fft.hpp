#ifndef HILBINT_FFT_HPP
#define HILBINT_FFT_HPP

#include <complex>
#include <vector>

namespace hilbint {

// In-place radix-2 complex FFT; size must be a power of two. sign = -1 gives
// the forward transform sum_p a_p e^{-2 pi i p q / n}, sign = +1 the
// unnormalized inverse.
void fft_radix2(std::vector<std::complex<double>>& a, int sign);

bool is_power_of_two(std::size_t n);

} // namespace hilbint

#endif
