#pragma once

#include <cstdint>
#include <vector>

namespace fekete {

/// An odd prime, validated on construction.
class Prime {
 public:
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }
  operator std::uint64_t() const noexcept { return value_; }

  /// (-1|p): +1 when p = 1 mod 4, -1 when p = 3 mod 4.
  int minus_one_symbol() const noexcept { return value_ % 4 == 1 ? 1 : -1; }

  friend bool operator==(Prime a, Prime b) noexcept = default;

 private:
  std::uint64_t value_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Deterministic Miller-Rabin over the first twelve prime bases, exact for all
/// 64-bit inputs. Throws DomainError for n < 2.
bool is_prime(std::uint64_t n);

/// Legendre symbol (k|p) by Euler's criterion.
int legendre(std::int64_t k, Prime p);

/// All primes in [lo, hi], ascending. Throws DomainError if lo < 2 or lo > hi.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Odd primes in [lo, hi] as validated values; 2 is skipped.
std::vector<Prime> odd_primes_in_range(std::uint64_t lo, std::uint64_t hi);

}  // namespace fekete
