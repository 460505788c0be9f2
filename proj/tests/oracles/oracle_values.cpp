// Independent brute-force oracles. Run once; the printed values are frozen
// into the unit and acceptance tests. Deliberately shares no code with the
// library: plain products, plain Riemann sums, plain Horner loops.

#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

namespace {

using ld = long double;
constexpr ld kPi = 3.141592653589793238462643383279502884L;

// C(x) = prod_{k>=0} cos^2(2x/(2k+1)): K factors directly, the rest through
// the leading term of -log cos^2(u) ~ u^2 summed over k > K.
ld c_product_brute(ld x) {
  constexpr int K = 20000;
  ld log_sum = 0.0L;
  for (int k = 0; k <= K; ++k) {
    const ld c = std::cos(2.0L * x / (2.0L * k + 1.0L));
    if (c == 0.0L) return 0.0L;
    log_sum += std::log(c * c);
  }
  // sum_{k > K} (2k+1)^{-2}: direct summation far out plus the integral beyond
  static const ld tail = [] {
    constexpr int K2 = 2000000;
    ld t = 0.0L;
    for (int k = K + 1; k <= K2; ++k) t += 1.0L / ((2.0L * k + 1.0L) * (2.0L * k + 1.0L));
    return t + 1.0L / (2.0L * (2.0L * K2 + 2.0L));
  }();
  log_sum -= 4.0L * x * x * tail;
  return std::exp(log_sum);
}

// c_delta = 1/2 + (1/pi) int_0^X sin(delta pi x) C(x) / x dx, midpoint Riemann sum.
ld c_delta_brute(ld delta, ld X, ld h) {
  const long n = std::lround(X / h);
  ld acc = 0.0L;
  for (long i = 0; i < n; ++i) {
    const ld x = (i + 0.5L) * h;
    acc += std::sin(delta * kPi * x) * c_product_brute(x) / x;
  }
  return 0.5L + acc * h / kPi;
}

int legendre_brute(long k, long p) {
  k %= p;
  if (k == 0) return 0;
  for (long x = 1; x < p; ++x) {
    if ((x * x) % p == k) return 1;
  }
  return -1;
}

// M_0(f_p) by a midpoint rule on M nodes with plain Horner in long double.
ld m0_fekete_brute(long p, long M) {
  std::vector<ld> a(p);
  for (long k = 0; k < p; ++k) a[k] = legendre_brute(k, p);
  ld acc = 0.0L;
  for (long j = 0; j < M; ++j) {
    const ld t = 2.0L * kPi * (j + 0.5L) / M;
    const std::complex<ld> z(std::cos(t), std::sin(t));
    std::complex<ld> v = 0.0L;
    for (long k = p - 1; k >= 0; --k) v = v * z + a[k];
    acc += std::log(std::abs(v));
  }
  return std::exp(acc / M);
}

}  // namespace

int main() {
  std::printf("C(1)   = %.15Lg\n", c_product_brute(1.0L));
  std::printf("C(2.5) = %.15Lg\n", c_product_brute(2.5L));
  std::printf("C(5)   = %.15Lg\n", c_product_brute(5.0L));
  std::printf("c_0.5 (h=1e-3, X=40) = %.12Lg\n", c_delta_brute(0.5L, 40.0L, 1e-3L));
  std::printf("c_0.5 (h=5e-4, X=40) = %.12Lg\n", c_delta_brute(0.5L, 40.0L, 5e-4L));
  std::printf("c_1.0 (h=1e-3, X=40) = %.12Lg\n", c_delta_brute(1.0L, 40.0L, 1e-3L));
  for (long p : {7L, 13L, 29L, 37L}) {
    std::printf("M0(f_%ld) M=2^22 %.12Lg  M=2^23 %.12Lg\n", p, m0_fekete_brute(p, 1L << 22),
                m0_fekete_brute(p, 1L << 23));
  }
}
