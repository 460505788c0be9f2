#include <cmath>

#include "doctest.h"
#include "fekete/certify.hpp"
#include "fekete/errors.hpp"
#include "fekete/mahler.hpp"
#include "fekete/numtheory.hpp"
#include "fekete/polynomial.hpp"

namespace fekete::test {

TEST_CASE("certificate at p = 13: Gauss product identity") {
  const auto c = build_certificate(Prime(13));
  CHECK(c.gauss_product == doctest::Approx(std::pow(13.0, 12.0 / 26.0)).epsilon(1e-8));
  CHECK(c.gauss_expected == doctest::Approx(std::pow(13.0, 12.0 / 26.0)).epsilon(1e-15));
  CHECK(c.holds);
}

TEST_CASE("certificate at p = 101 with automatic eta") {
  const auto c = build_certificate(Prime(101));
  CHECK(c.eta_auto);
  CHECK(c.holds);
  CHECK(c.k_zeros >= 26);
  CHECK(c.ratio > 0.5);
  CHECK(c.direct_method == "roots_jensen");
  CHECK(c.estimator_gap < 1e-2);
  CHECK(c.unity_holds);
  CHECK(c.g_at_one != 0);
  CHECK(c.bound <= c.direct_m0 * (1.0 + 1e-6));
  CHECK(c.direct_m0 <= c.jensen_bound);
  CHECK(c.k_zeros + c.excluded_at_one + c.excluded_forbidden + c.excluded_unverified ==
        c.zeros_located);
}

TEST_CASE("certificates with a fixed eta, for the pipeline oracle primes") {
  for (std::uint64_t p : {101, 103}) {
    CertificateOptions o;
    o.eta = 0.5;
    const auto c = build_certificate(Prime(p), o);
    CHECK_FALSE(c.eta_auto);
    CHECK(c.eta == 0.5);
    CHECK(c.unity_holds);
    CHECK(c.holds);
  }
}

TEST_CASE("certificate bound assembles as documented") {
  const auto c = build_certificate(Prime(31));
  const double p = 31.0;
  const double expected = std::pow(p, (p - 1) / (2 * p)) * std::pow(p, -double(c.m) / p) /
                          (2.0 * std::pow(std::cos(c.eta / 2), double(c.k_zeros) / p));
  CHECK(c.bound == doctest::Approx(expected).epsilon(1e-12));
  CHECK(c.ratio == doctest::Approx(c.direct_m0 / std::sqrt(p)).epsilon(1e-15));
}

TEST_CASE("certificate preconditions") {
  CHECK_THROWS_AS(build_certificate(Prime(7)), DomainError);
  CertificateOptions o;
  o.eta = 2.0;
  CHECK_THROWS_AS(build_certificate(Prime(101), o), DomainError);
}

TEST_CASE("sweep over [11, 97]: every certificate holds") {
  CertificateOptions o;
  o.threads = 2;
  const auto s = certificate_sweep(11, 97, o);
  CHECK(s.rows.size() == 21);
  CHECK(s.summary.failures == 0);
  for (const auto& row : s.rows) {
    REQUIRE(row.certificate);
    CHECK(row.certificate->holds);
  }
}

TEST_CASE("sweep edge cases") {
  CHECK(certificate_sweep(114, 126).rows.empty());
  CHECK(certificate_sweep(2, 10).rows.empty());
  CHECK_THROWS_AS(certificate_sweep(50, 40), DomainError);
}

TEST_CASE("sweep results do not depend on the thread count") {
  CertificateOptions one, three;
  three.threads = 3;
  const auto a = certificate_sweep(101, 151, one);
  const auto b = certificate_sweep(101, 151, three);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].certificate->direct_m0 == b.rows[i].certificate->direct_m0);
    CHECK(a.rows[i].certificate->k_zeros == b.rows[i].certificate->k_zeros);
  }
}

}  // namespace fekete::test
