#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "fekete/chirp.hpp"
#include "fekete/numtheory.hpp"

namespace fekete {

/// Exact integer polynomial; coeffs()[i] multiplies z^i. Trailing zeros are
/// trimmed on construction, so the last entry is nonzero except for the zero
/// polynomial, which is stored as {0}.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{0} {}
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);

  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  std::int64_t leading() const noexcept { return coeffs_.back(); }

  /// Exact value at z = 1; throws ExactArithmeticError on overflow.
  std::int64_t value_at_one() const;

  /// Sum of |coeffs|.
  double l1_norm() const noexcept;
  /// Sum of coeffs^2.
  double l2_norm_squared() const noexcept;

  std::vector<cplx> complex_coeffs() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// [0, (1|p), (2|p), ..., (p-1|p)]
IntPolynomial fekete(Prime p);

inline constexpr unsigned kRudinShapiroMaxOrder = 20;

/// (P_n, Q_n) with P_0 = Q_0 = 1, P_{n+1} = P_n + z^{2^n} Q_n,
/// Q_{n+1} = P_n - z^{2^n} Q_n. Throws SizeError for n > 20.
std::pair<IntPolynomial, IntPolynomial> rudin_shapiro(unsigned n);

/// splitmix64 (Steele, Lea, Flood 2014). Every random draw in the project
/// goes through this generator.
class SplitMix64 {
 public:
  static constexpr std::string_view kName = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Independent stream for sample `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Degree-n polynomial with coefficients +-1, sign of coefficient i taken from
/// the top bit of the i-th splitmix64 output.
IntPolynomial random_littlewood(std::size_t n, std::uint64_t seed);

/// Horner evaluation from the highest degree down.
cplx eval_point(std::span<const cplx> coeffs, cplx z);
cplx eval_point(const IntPolynomial& q, cplx z);

/// values[j] = Q(exp(i*(2*pi*j + offset)/size)), j = 0..size-1.
struct ComplexSampleGrid {
  std::size_t size = 0;
  double offset = 0.0;
  std::vector<cplx> values;
};

enum class GridPath { Auto, Direct, Chirp };

/// Grids up to this size are evaluated point by point under GridPath::Auto.
inline constexpr std::size_t kDirectGridMax = 4096;

ComplexSampleGrid eval_roots_of_unity(std::span<const cplx> coeffs, std::size_t size,
                                      double offset, GridPath path = GridPath::Auto);
ComplexSampleGrid eval_roots_of_unity(const IntPolynomial& q, std::size_t size, double offset,
                                      GridPath path = GridPath::Auto);

/// Q at midpoint nodes t_j = alpha + (beta - alpha)(j + 1/2)/count on an arc.
std::vector<cplx> eval_arc_midpoints(std::span<const cplx> coeffs, double alpha, double beta,
                                     std::size_t count, GridPath path = GridPath::Auto);

IntPolynomial derivative(const IntPolynomial& q);

struct Deflation {
  IntPolynomial quotient;
  unsigned multiplicity = 0;
};

/// Strips every factor (z - 1) by exact synthetic division.
/// Throws DomainError for the zero polynomial and ExactArithmeticError when an
/// intermediate leaves the 64-bit range.
Deflation deflate_at_one(const IntPolynomial& q);

}  // namespace fekete
