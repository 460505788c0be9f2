#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "fekete/chirp.hpp"
#include "fekete/errors.hpp"
#include "fekete/numtheory.hpp"
#include "fekete/polynomial.hpp"

namespace fekete::test {

namespace {

constexpr double kPi = std::numbers::pi;

IntPolynomial poly(std::vector<std::int64_t> c) { return IntPolynomial(std::move(c)); }

// Schoolbook product, used as the reconstruction oracle for deflation.
std::vector<std::int64_t> times_z_minus_one(const std::vector<std::int64_t>& a) {
  std::vector<std::int64_t> out(a.size() + 1, 0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    out[k + 1] += a[k];
    out[k] -= a[k];
  }
  return out;
}

// Naive DFT-style evaluation in long double, independent of the chirp code.
cplx naive_eval(const std::vector<cplx>& c, long double turns) {
  std::complex<long double> acc = 0.0L;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const long double a = 2.0L * std::numbers::pi_v<long double> * turns * static_cast<long double>(k);
    acc += std::complex<long double>(c[k].real(), c[k].imag()) *
           std::complex<long double>(std::cos(a), std::sin(a));
  }
  return cplx(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
}

}  // namespace

TEST_CASE("IntPolynomial trims trailing zeros") {
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
  CHECK(poly({0, 0}).is_zero());
  CHECK(poly({}).is_zero());
  CHECK(IntPolynomial().is_zero());
  CHECK(poly({3, -4}).l1_norm() == 7.0);
  CHECK(poly({3, -4}).l2_norm_squared() == 25.0);
}

TEST_CASE("fekete coefficients: worked values") {
  CHECK(fekete(Prime(5)).coeffs() == std::vector<std::int64_t>{0, 1, -1, -1, 1});
  CHECK(fekete(Prime(7)).coeffs() == std::vector<std::int64_t>{0, 1, 1, -1, 1, -1, -1});
  for (const auto& p : odd_primes_in_range(3, 2000)) {
    const auto f = fekete(p);
    CHECK(f.degree() == p.value() - 1);
    CHECK(f.value_at_one() == 0);
  }
}

TEST_CASE("Rudin-Shapiro recursion") {
  auto [p0, q0] = rudin_shapiro(0);
  CHECK(p0.coeffs() == std::vector<std::int64_t>{1});
  CHECK(q0.coeffs() == std::vector<std::int64_t>{1});
  auto [p1, q1] = rudin_shapiro(1);
  CHECK(p1.coeffs() == std::vector<std::int64_t>{1, 1});
  CHECK(q1.coeffs() == std::vector<std::int64_t>{1, -1});
  auto [p2, q2] = rudin_shapiro(2);
  CHECK(p2.coeffs() == std::vector<std::int64_t>{1, 1, 1, -1});
  CHECK(q2.coeffs() == std::vector<std::int64_t>{1, 1, -1, 1});
  CHECK_THROWS_AS(rudin_shapiro(kRudinShapiroMaxOrder + 1), SizeError);
}

TEST_CASE("Rudin-Shapiro identity at n = 10 on arbitrary circle points") {
  auto [p, q] = rudin_shapiro(10);
  CHECK(p.degree() == 1023);
  for (int j = 0; j < 50; ++j) {
    const cplx z = std::polar(1.0, 0.1234 + 0.37 * j);
    const double s = std::norm(eval_point(p, z)) + std::norm(eval_point(q, z));
    CHECK(s == doctest::Approx(2048.0).epsilon(1e-10));
  }
}

TEST_CASE("random Littlewood polynomials are deterministic and balanced") {
  const auto a = random_littlewood(40, 99);
  CHECK(a == random_littlewood(40, 99));
  CHECK_FALSE(a == random_littlewood(40, 100));
  CHECK(a.coeffs().size() == 41);
  for (auto c : a.coeffs()) CHECK((c == 1 || c == -1));
  CHECK(random_littlewood(0, 5).coeffs().size() == 1);

  // Monte Carlo oracle: mean coefficient at a fixed index over 10^4 draws.
  double mean = 0.0;
  for (std::uint64_t s = 0; s < 10000; ++s) mean += random_littlewood(8, derive_seed(7, s)).coeffs()[3];
  mean /= 10000.0;
  CHECK(std::abs(mean) <= 0.05);
}

TEST_CASE("splitmix64 reference output") {
  // Reference values of the published splitmix64 generator from seed 0.
  SplitMix64 g(0);
  CHECK(g.next() == 0xe220a8397b1dcdafULL);
  CHECK(g.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(g.next() == 0x06c45d188009454fULL);
  SplitMix64 u(42);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK((x >= 0.0 && x < 1.0));
  }
}

TEST_CASE("eval_point: worked values") {
  CHECK(std::abs(eval_point(fekete(Prime(5)), cplx(-1.0, 0.0))) == 0.0);
  const cplx v = eval_point(fekete(Prime(7)), std::polar(1.0, 2.0 * kPi / 7.0));
  CHECK(std::abs(v - cplx(0.0, std::sqrt(7.0))) < 1e-10);
}

TEST_CASE("eval_roots_of_unity: Gauss sums and the cyclotomic product") {
  for (std::uint64_t pv : {5, 7, 13, 101, 4099, 10007}) {
    const Prime p(pv);
    const auto g = eval_roots_of_unity(fekete(p), pv, 0.0);
    REQUIRE(g.values.size() == pv);
    CHECK(std::abs(g.values[0]) < 1e-9);
    double worst = 0.0;
    for (std::size_t j = 1; j < pv; ++j) {
      worst = std::max(worst, std::abs(std::abs(g.values[j]) - std::sqrt(double(pv))));
    }
    CHECK(worst < 1e-8 * std::sqrt(double(pv)));
  }
  const auto lin = eval_roots_of_unity(poly({-1, 1}), 11, 0.0);
  double log_prod = 0.0;
  for (std::size_t j = 1; j < 11; ++j) log_prod += std::log(std::abs(lin.values[j]));
  CHECK(std::exp(log_prod) == doctest::Approx(11.0).epsilon(1e-12));
}

TEST_CASE("grid paths agree with each other and with single-point evaluation") {
  for (std::size_t deg : {1, 17, 300, 2000}) {
    const auto q = random_littlewood(deg, deg * 7919);
    const auto c = q.complex_coeffs();
    for (std::size_t m : {7, 64, 1000, 4097}) {
      for (double phi : {0.0, kPi, 0.3}) {
        const auto d = eval_roots_of_unity(c, m, phi, GridPath::Direct);
        const auto z = eval_roots_of_unity(c, m, phi, GridPath::Chirp);
        double scale = 0.0;
        for (auto x : c) scale += std::abs(x);
        for (std::size_t j = 0; j < m; j += std::max<std::size_t>(1, m / 37)) {
          CHECK(std::abs(d.values[j] - z.values[j]) <= 1e-8 * scale);
          const cplx ref = eval_point(c, std::polar(1.0, (2.0 * kPi * j + phi) / m));
          CHECK(std::abs(z.values[j] - ref) <= 1e-9 * (deg + 1));
        }
      }
    }
  }
}

TEST_CASE("chirp transform matches a naive long-double sum") {
  std::vector<cplx> a(257);
  SplitMix64 g(3);
  for (auto& x : a) x = cplx(g.uniform() - 0.5, g.uniform() - 0.5);
  const auto out = chirp_z(a, 0.123L, 1.0L / 1001.0L, 1001);
  for (std::size_t j = 0; j < out.size(); j += 50) {
    CHECK(std::abs(out[j] - naive_eval(a, 0.123L + static_cast<long double>(j) / 1001.0L)) < 1e-11);
  }
}

TEST_CASE("fft_pow2 inverts up to the length factor") {
  std::vector<cplx> a(1024), b;
  SplitMix64 g(11);
  for (auto& x : a) x = cplx(g.uniform(), g.uniform());
  b = a;
  fft_pow2(b, false);
  fft_pow2(b, true);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(b[i] / 1024.0 - a[i]) < 1e-12);
}

TEST_CASE("arc midpoints") {
  const auto c = fekete(Prime(13)).complex_coeffs();
  const auto v = eval_arc_midpoints(c, 0.5, 1.5, 40);
  REQUIRE(v.size() == 40);
  for (std::size_t j = 0; j < 40; ++j) {
    const double t = 0.5 + (j + 0.5) / 40.0;
    CHECK(std::abs(v[j] - eval_point(c, std::polar(1.0, t))) < 1e-12);
  }
}

TEST_CASE("derivative: worked values") {
  CHECK(derivative(fekete(Prime(5))).coeffs() == std::vector<std::int64_t>{1, -2, -3, 4});
  CHECK(derivative(poly({7})).is_zero());
  CHECK(derivative(fekete(Prime(7))).value_at_one() == -7);
}

TEST_CASE("deflate_at_one: worked values") {
  const auto d5 = deflate_at_one(fekete(Prime(5)));
  CHECK(d5.multiplicity == 2);
  CHECK(d5.quotient.coeffs() == std::vector<std::int64_t>{0, 1, 1});
  CHECK(d5.quotient.value_at_one() == 2);
  const auto d7 = deflate_at_one(fekete(Prime(7)));
  CHECK(d7.multiplicity == 1);
  CHECK(d7.quotient.value_at_one() == -7);
  const auto d3 = deflate_at_one(poly({-1, 3, -3, 1}));
  CHECK(d3.multiplicity == 3);
  CHECK(d3.quotient.coeffs() == std::vector<std::int64_t>{1});
  CHECK_THROWS_AS(deflate_at_one(IntPolynomial()), DomainError);
}

TEST_CASE("deflation reconstructs the input exactly") {
  for (const auto& p : odd_primes_in_range(3, 1500)) {
    const auto f = fekete(p);
    const auto d = deflate_at_one(f);
    CHECK(d.multiplicity >= 1);
    CHECK(d.quotient.value_at_one() != 0);
    auto c = d.quotient.coeffs();
    for (unsigned i = 0; i < d.multiplicity; ++i) c = times_z_minus_one(c);
    CHECK(IntPolynomial(c) == f);
  }
}

TEST_CASE("exact arithmetic refuses to wrap") {
  std::vector<std::int64_t> big(4, std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(IntPolynomial(big).value_at_one(), ExactArithmeticError);
  CHECK_THROWS_AS(derivative(IntPolynomial(big)), ExactArithmeticError);
}

}  // namespace fekete::test
