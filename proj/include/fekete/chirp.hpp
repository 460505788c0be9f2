#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fekete {

using cplx = std::complex<double>;

/// exp(2*pi*i*turns), with the fractional part taken in extended precision.
cplx unit_from_turns(long double turns);

/// In-place radix-2 FFT, sign convention exp(-2*pi*i*jk/n) forward.
/// size must be a power of two. The inverse is unnormalized.
void fft_pow2(std::vector<cplx>& data, bool inverse);

/// Chirp-z transform by Bluestein's convolution:
///   out[j] = sum_k a[k] * exp(2*pi*i*(start + step*j)*k),  j = 0..count-1
/// Angles are given in turns (fractions of a full circle). Any step and count
/// are allowed; internally one power-of-two convolution of length
/// >= count + a.size() - 1 is used.
std::vector<cplx> chirp_z(std::span<const cplx> a, long double start_turns,
                          long double step_turns, std::size_t count);

/// Same sums by direct Horner evaluation at every node, O(count * a.size()).
std::vector<cplx> direct_z(std::span<const cplx> a, long double start_turns,
                           long double step_turns, std::size_t count);

}  // namespace fekete
