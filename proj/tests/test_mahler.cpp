#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "fekete/errors.hpp"
#include "fekete/mahler.hpp"
#include "fekete/numtheory.hpp"
#include "fekete/polynomial.hpp"

namespace fekete::test {

namespace {

constexpr double kPi = std::numbers::pi;

// Frozen from tests/oracles/oracle_values.cpp: plain long-double midpoint
// rule on 2^23 nodes with direct Horner evaluation (2^22 nodes agree to 1e-6).
constexpr double ORACLE_M0_F7 = 1.88320378594;
constexpr double ORACLE_M0_F13 = 2.25673057955;
constexpr double ORACLE_M0_F29 = 3.59840099179;
constexpr double ORACLE_M0_F37 = 4.28136759796;

IntPolynomial poly(std::vector<std::int64_t> c) { return IntPolynomial(std::move(c)); }

bool contains_root(const RootSet& r, cplx z, double tol) {
  return std::any_of(r.roots.begin(), r.roots.end(), [&](cplx w) { return std::abs(w - z) < tol; });
}

}  // namespace

TEST_CASE("M_q on constants and Parseval exactness") {
  const auto c = poly({-3});
  for (double q : {0.5, 1.0, 2.0, 4.0}) {
    CHECK(mq_uniform(c, q, Arc{0.2, 1.7}, 64).value == doctest::Approx(3.0).epsilon(1e-14));
  }
  for (const auto& p : odd_primes_in_range(3, 1009)) {
    const auto m2 = mq_uniform(fekete(p), 2.0, Arc{}, std::max<std::size_t>(16, 2 * p.value() + 2));
    CHECK(std::abs(m2.value - std::sqrt(p.value() - 1.0)) <= 1e-10 * std::sqrt(p.value() - 1.0));
  }
}

TEST_CASE("M_1 stays below sqrt(p - 1)") {
  for (const auto& p : odd_primes_in_range(3, 400)) {
    CHECK(mq_uniform(fekete(p), 1.0, Arc{}, 4096).value < std::sqrt(p.value() - 1.0));
  }
}

TEST_CASE("mq_uniform preconditions") {
  const auto f = fekete(Prime(7));
  CHECK_THROWS_AS(mq_uniform(f, 0.0, Arc{}, 64), DomainError);
  CHECK_THROWS_AS(mq_uniform(f, -1.0, Arc{}, 64), DomainError);
  CHECK_THROWS_AS(mq_uniform(f, 2.0, Arc{1.0, 1.0}, 64), DomainError);
  CHECK_THROWS_AS(mq_uniform(f, 2.0, Arc{}, 8), DomainError);
}

TEST_CASE("m0_uniform: worked values") {
  CHECK(m0_uniform(poly({-1, 1}), Arc{}, 1 << 14).value == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(m0_uniform(fekete(Prime(5)), Arc{}, 1 << 14).value == doctest::Approx(1.0).epsilon(1e-2));
  const auto q = random_littlewood(30, 5);
  const double a = m0_uniform(q, Arc{}, 4096).value;
  std::vector<std::int64_t> scaled = q.coeffs();
  for (auto& x : scaled) x *= -7;
  CHECK(m0_uniform(IntPolynomial(scaled), Arc{}, 4096).value == doctest::Approx(7.0 * a).epsilon(1e-9));
}

TEST_CASE("find_roots: worked values") {
  const auto r = find_roots(poly({-4, 0, 1}));
  REQUIRE(r.roots.size() == 2);
  CHECK(contains_root(r, 2.0, 1e-12));
  CHECK(contains_root(r, -2.0, 1e-12));
  CHECK(m0_from_roots(r).value == doctest::Approx(4.0).epsilon(1e-12));

  const auto r5 = find_roots(fekete(Prime(5)));
  REQUIRE(r5.roots.size() == 4);
  CHECK(contains_root(r5, 0.0, 1e-8));
  CHECK(contains_root(r5, -1.0, 1e-8));
  std::size_t near_one = 0;
  for (auto z : r5.roots) near_one += std::abs(z - 1.0) < 1e-6;  // double root: sqrt(eps) accuracy
  CHECK(near_one == 2);
  CHECK(m0_from_roots(r5).value == doctest::Approx(1.0).epsilon(1e-6));

  const auto r7 = find_roots(fekete(Prime(7)));
  CHECK(r7.roots.size() == 6);
  CHECK(r7.max_residual <= 1e-8 * 7);
}

TEST_CASE("roots satisfy Vieta on random Littlewood polynomials") {
  for (std::size_t n : {5, 20, 64}) {
    const auto q = random_littlewood(n, n);
    const auto r = find_roots(q);
    REQUIRE(r.roots.size() == n);
    cplx sum = 0.0, prod = 1.0;
    for (auto z : r.roots) {
      sum += z;
      prod *= z;
    }
    const auto& c = q.coeffs();
    CHECK(std::abs(sum + double(c[n - 1]) / double(c[n])) < 1e-9);
    CHECK(std::abs(prod - (n % 2 ? -1.0 : 1.0) * double(c[0]) / double(c[n])) < 1e-9);
  }
}

TEST_CASE("root-based M_0 agrees with independent brute-force quadrature") {
  struct Ref {
    std::uint64_t p;
    double m0;
  };
  for (const auto& ref : {Ref{7, ORACLE_M0_F7}, Ref{13, ORACLE_M0_F13}, Ref{29, ORACLE_M0_F29},
                          Ref{37, ORACLE_M0_F37}}) {
    CHECK(mahler_measure_roots(fekete(Prime(ref.p)).complex_coeffs()) ==
          doctest::Approx(ref.m0).epsilon(1e-5));
  }
}

TEST_CASE("mahler measure of constants and monomials") {
  CHECK(mahler_measure_roots(poly({0, 0, -5}).complex_coeffs()) == doctest::Approx(5.0));
  CHECK(mahler_measure_roots(poly({3}).complex_coeffs()) == doctest::Approx(3.0));
  CHECK(mahler_measure_roots(poly({2, 1}).complex_coeffs()) == doctest::Approx(2.0));
}

TEST_CASE("find_roots guards") {
  RootFinderOptions small;
  small.max_degree = 10;
  CHECK_THROWS_AS(find_roots(random_littlewood(11, 1), small), DomainError);
  RootFinderOptions starved;
  starved.max_iterations = 1;
  CHECK_THROWS_AS(find_roots(random_littlewood(50, 1), starved), NumericalFailure);
}

TEST_CASE("Jensen and power-mean ordering for Fekete polynomials") {
  for (const auto& p : odd_primes_in_range(3, 199)) {
    const auto f = fekete(p);
    const double m0 = mahler_measure_roots(f.complex_coeffs());
    const double mh = mq_uniform(f, 0.5, Arc{}, 1 << 14).value;
    const double m1 = mq_uniform(f, 1.0, Arc{}, 1 << 14).value;
    const double m2 = std::sqrt(p.value() - 1.0);
    const double m4 = mq_uniform(f, 4.0, Arc{}, 1 << 14).value;
    CHECK(m0 <= mh);
    CHECK(mh <= m1);
    CHECK(m1 <= m2);
    CHECK(m2 <= m4);
  }
}

TEST_CASE("product over roots of unity: worked values") {
  const auto z = poly({0, 1}).complex_coeffs();
  for (std::uint64_t p : {5, 67, 101}) {
    const auto c = check_unity_product_bound(z, Prime(p));
    CHECK(c.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.rhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c.holds);
  }
  const auto f = check_unity_product_bound(fekete(Prime(13)).complex_coeffs(), Prime(13));
  CHECK(f.lhs == 0.0);
  CHECK(f.holds);
  CHECK_THROWS_AS(check_unity_product_bound(random_littlewood(8, 1).complex_coeffs(), Prime(7)),
                  DomainError);
}

TEST_CASE("product bound with circle zeros") {
  // k = 0 reduces to the plain bound.
  const auto q = random_littlewood(20, 17).complex_coeffs();
  const auto plain = check_unity_product_bound(q, Prime(23));
  const auto none = check_unity_product_bound_with_zeros(q, Prime(23), 0.5, {});
  CHECK(none.lhs == plain.lhs);
  CHECK(none.rhs == doctest::Approx(plain.rhs).epsilon(1e-15));

  // z^2 - z has its circle zero at angle 0, outside every forbidden arc.
  const auto g = IntPolynomial({0, -1, 1}).complex_coeffs();
  const std::vector<double> at_zero{0.0};
  const auto c = check_unity_product_bound_with_zeros(g, Prime(5), 0.1, at_zero);
  CHECK(c.zeros_used == 1);
  CHECK(c.rhs == doctest::Approx(2.0 * std::pow(std::cos(0.05), 0.2)).epsilon(1e-9));
  CHECK(c.holds);
}

TEST_CASE("product bound with zeros rejects forbidden or non-zero angles") {
  // The zero of z + z^2 at -1 = e^{i pi} is the centre of a forbidden arc for
  // every odd p, so it can never be supplied.
  const auto g5 = IntPolynomial({0, 1, 1}).complex_coeffs();
  const std::vector<double> minus_one{kPi};
  CHECK_THROWS_AS(check_unity_product_bound_with_zeros(g5, Prime(5), 0.01, minus_one), DomainError);
  CHECK(in_forbidden_arc(kPi, Prime(5), 0.01));
  CHECK_FALSE(in_forbidden_arc(0.0, Prime(5), 0.5));

  const std::vector<double> not_a_zero{0.3};
  CHECK_THROWS_AS(check_unity_product_bound_with_zeros(g5, Prime(5), 0.01, not_a_zero), DomainError);
  CHECK_THROWS_AS(check_unity_product_bound_with_zeros(g5, Prime(5), 0.0, {}), DomainError);
  CHECK_THROWS_AS(check_unity_product_bound_with_zeros(g5, Prime(5), 2.0, {}), DomainError);
}

TEST_CASE("Littlewood ensemble is deterministic and near its limits") {
  const auto a = littlewood_ensemble(32, 2.0, 500, 9, 1);
  const auto b = littlewood_ensemble(32, 2.0, 500, 9, 3);
  CHECK(a.mean_ratio == b.mean_ratio);
  CHECK(a.stderr_ratio == b.stderr_ratio);
  CHECK(a.samples == 500);
  CHECK(std::abs(a.mean_ratio - 1.0) < 0.06);
  CHECK_THROWS_AS(littlewood_ensemble(32, 2.0, 99, 9, 1), DomainError);
}

}  // namespace fekete::test
