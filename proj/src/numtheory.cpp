#include "fekete/numtheory.hpp"

#include <array>
#include <string>

#include "fekete/errors.hpp"

namespace fekete {

Prime::Prime(std::uint64_t value) : value_(value) {
  if (value < 3 || !is_prime(value)) {
    throw DomainError("not an odd prime: " + std::to_string(value));
  }
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) throw DomainError("is_prime: n must be >= 2");
  static constexpr std::array<std::uint64_t, 12> kBases = {2,  3,  5,  7,  11, 13,
                                                           17, 19, 23, 29, 31, 37};
  for (auto b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int legendre(std::int64_t k, Prime p) {
  const auto pv = static_cast<std::int64_t>(p.value());
  std::int64_t r = k % pv;
  if (r < 0) r += pv;
  if (r == 0) return 0;
  const std::uint64_t e = powmod(static_cast<std::uint64_t>(r), (p.value() - 1) / 2, p.value());
  return e == 1 ? 1 : -1;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 2) throw DomainError("primes_in_range: lo must be >= 2");
  if (lo > hi) throw DomainError("primes_in_range: lo > hi");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
    if (n == hi) break;
  }
  return out;
}

std::vector<Prime> odd_primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<Prime> out;
  if (hi < 3 || lo > hi) return out;
  for (auto q : primes_in_range(lo < 3 ? 3 : lo, hi)) out.emplace_back(q);
  return out;
}

}  // namespace fekete
