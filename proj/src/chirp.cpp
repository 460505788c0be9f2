#include "fekete/chirp.hpp"

#include <cmath>
#include <numbers>

namespace fekete {

namespace {

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

long double frac(long double x) { return x - std::floor(x); }

}  // namespace

cplx unit_from_turns(long double turns) {
  const long double angle = 2.0L * std::numbers::pi_v<long double> * frac(turns);
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

void fft_pow2(std::vector<cplx>& data, bool inverse) {
  const std::size_t n = data.size();
  if (n <= 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  // Twiddles from exact angles; the recurrence w *= w_step drifts at 1e6 points.
  std::vector<cplx> twiddle(n / 2);
  const long double sign = inverse ? 1.0L : -1.0L;
  for (std::size_t k = 0; k < n / 2; ++k) {
    twiddle[k] = unit_from_turns(sign * static_cast<long double>(k) / static_cast<long double>(n));
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const cplx u = data[i + k];
        const cplx v = data[i + k + half] * twiddle[k * stride];
        data[i + k] = u + v;
        data[i + k + half] = u - v;
      }
    }
  }
}

std::vector<cplx> chirp_z(std::span<const cplx> a, long double start_turns,
                          long double step_turns, std::size_t count) {
  const std::size_t n_in = a.size();
  if (count == 0) return {};
  if (n_in == 0) return std::vector<cplx>(count);

  // jk = (j^2 + k^2 - (j-k)^2) / 2
  auto chirp = [&](long double n) {
    return unit_from_turns(step_turns * n * n / 2.0L);
  };

  const std::size_t len = next_pow2(n_in + count - 1);
  std::vector<cplx> x(len), h(len);
  for (std::size_t k = 0; k < n_in; ++k) {
    const auto kl = static_cast<long double>(k);
    x[k] = a[k] * unit_from_turns(start_turns * kl) * chirp(kl);
  }
  const std::size_t span = std::max(n_in, count);
  for (std::size_t n = 0; n < span; ++n) {
    const cplx c = std::conj(chirp(static_cast<long double>(n)));
    if (n < count) h[n] = c;
    if (n > 0 && n < n_in) h[len - n] = c;
  }

  fft_pow2(x, false);
  fft_pow2(h, false);
  for (std::size_t i = 0; i < len; ++i) x[i] *= h[i];
  fft_pow2(x, true);

  const double scale = 1.0 / static_cast<double>(len);
  std::vector<cplx> out(count);
  for (std::size_t j = 0; j < count; ++j) {
    out[j] = x[j] * scale * chirp(static_cast<long double>(j));
  }
  return out;
}

std::vector<cplx> direct_z(std::span<const cplx> a, long double start_turns,
                           long double step_turns, std::size_t count) {
  std::vector<cplx> out(count);
  for (std::size_t j = 0; j < count; ++j) {
    const cplx z = unit_from_turns(start_turns + step_turns * static_cast<long double>(j));
    cplx acc = 0.0;
    for (std::size_t k = a.size(); k-- > 0;) acc = acc * z + a[k];
    out[j] = acc;
  }
  return out;
}

}  // namespace fekete
