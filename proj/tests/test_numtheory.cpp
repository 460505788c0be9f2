#include <cstdint>
#include <set>

#include "doctest.h"
#include "fekete/errors.hpp"
#include "fekete/numtheory.hpp"

namespace fekete::test {

namespace {

bool trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int legendre_by_squares(std::int64_t k, std::int64_t p) {
  const std::int64_t r = ((k % p) + p) % p;
  if (r == 0) return 0;
  std::set<std::int64_t> squares;
  for (std::int64_t x = 1; x < p; ++x) squares.insert(x * x % p);
  return squares.count(r) ? 1 : -1;
}

}  // namespace

TEST_CASE("Prime accepts odd primes only") {
  CHECK(Prime(3).value() == 3);
  CHECK(Prime(10007).value() == 10007);
  CHECK_THROWS_AS(Prime(2), DomainError);
  CHECK_THROWS_AS(Prime(1), DomainError);
  CHECK_THROWS_AS(Prime(9), DomainError);
  CHECK_THROWS_AS(Prime(0), DomainError);
}

TEST_CASE("minus-one symbol follows p mod 4") {
  CHECK(Prime(5).minus_one_symbol() == 1);
  CHECK(Prime(13).minus_one_symbol() == 1);
  CHECK(Prime(3).minus_one_symbol() == -1);
  CHECK(Prime(7).minus_one_symbol() == -1);
}

TEST_CASE("is_prime agrees with trial division") {
  for (std::uint64_t n = 2; n < 20000; ++n) CHECK(is_prime(n) == trial_division(n));
  CHECK_THROWS_AS(is_prime(1), DomainError);
  CHECK_THROWS_AS(is_prime(0), DomainError);
}

TEST_CASE("is_prime on large values") {
  CHECK(is_prime(2305843009213693951ULL));       // 2^61 - 1
  CHECK(is_prime(18446744073709551557ULL));      // largest 64-bit prime
  CHECK_FALSE(is_prime(3215031751ULL));          // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime(3825123056546413051ULL)); // strong pseudoprime to bases up to 23
  CHECK_FALSE(is_prime(4294967297ULL));          // 641 * 6700417
}

TEST_CASE("powmod and mulmod near 2^64") {
  const std::uint64_t m = 18446744073709551557ULL;
  CHECK(mulmod(m - 1, m - 1, m) == 1);
  CHECK(powmod(2, m - 1, m) == 1);
  CHECK(powmod(7, 0, 13) == 1);
}

TEST_CASE("legendre symbol: worked values") {
  CHECK(legendre(2, Prime(7)) == 1);
  CHECK(legendre(3, Prime(7)) == -1);
  CHECK(legendre(0, Prime(5)) == 0);
  CHECK(legendre(14, Prime(7)) == 0);
  CHECK(legendre(-1, Prime(5)) == 1);
  CHECK(legendre(-1, Prime(7)) == -1);
}

TEST_CASE("legendre agrees with the set of squares") {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 101, 103}) {
    const Prime q(p);
    for (std::int64_t k = -2 * static_cast<std::int64_t>(p); k < 2 * static_cast<std::int64_t>(p); ++k) {
      CHECK(legendre(k, q) == legendre_by_squares(k, static_cast<std::int64_t>(p)));
    }
  }
}

TEST_CASE("legendre is completely multiplicative and periodic") {
  for (std::uint64_t p : {11, 13, 97, 101, 1009}) {
    const Prime q(p);
    for (std::int64_t a = 0; a < 60; ++a) {
      for (std::int64_t b = 0; b < 60; ++b) {
        CHECK(legendre(a * b, q) == legendre(a, q) * legendre(b, q));
      }
      CHECK(legendre(a + static_cast<std::int64_t>(p), q) == legendre(a, q));
    }
    int sum = 0;
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(p); ++k) sum += legendre(k, q);
    CHECK(sum == 0);
  }
}

TEST_CASE("prime enumeration") {
  const auto ps = primes_in_range(2, 30);
  CHECK(ps == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_in_range(24, 28).empty());
  CHECK_THROWS_AS(primes_in_range(10, 5), DomainError);
  CHECK(primes_in_range(3, 1009).size() == 168);  // pi(1009) = 169 including 2
  const auto odd = odd_primes_in_range(1, 20);
  REQUIRE(odd.size() == 7);
  CHECK(odd.front().value() == 3);
  CHECK(odd_primes_in_range(1, 2).empty());
  CHECK(odd_primes_in_range(50, 10).empty());
}

}  // namespace fekete::test
