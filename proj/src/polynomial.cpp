#include "fekete/polynomial.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "fekete/errors.hpp"

namespace fekete {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ExactArithmeticError("integer overflow in exact polynomial arithmetic");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ExactArithmeticError("integer overflow in exact polynomial arithmetic");
  }
  return r;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

std::int64_t IntPolynomial::value_at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s = checked_add(s, c);
  return s;
}

double IntPolynomial::l1_norm() const noexcept {
  double s = 0.0;
  for (auto c : coeffs_) s += std::abs(static_cast<double>(c));
  return s;
}

double IntPolynomial::l2_norm_squared() const noexcept {
  double s = 0.0;
  for (auto c : coeffs_) s += static_cast<double>(c) * static_cast<double>(c);
  return s;
}

std::vector<cplx> IntPolynomial::complex_coeffs() const {
  std::vector<cplx> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = static_cast<double>(coeffs_[i]);
  return out;
}

IntPolynomial fekete(Prime p) {
  const auto n = static_cast<std::size_t>(p.value());
  std::vector<std::int64_t> c(n, 0);
  for (std::size_t k = 1; k < n; ++k) c[k] = legendre(static_cast<std::int64_t>(k), p);
  return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, IntPolynomial> rudin_shapiro(unsigned n) {
  if (n > kRudinShapiroMaxOrder) {
    throw SizeError("rudin_shapiro: order " + std::to_string(n) + " exceeds guard " +
                    std::to_string(kRudinShapiroMaxOrder));
  }
  std::vector<std::int64_t> p{1}, q{1};
  for (unsigned step = 0; step < n; ++step) {
    const std::size_t half = p.size();
    std::vector<std::int64_t> np(2 * half), nq(2 * half);
    for (std::size_t i = 0; i < half; ++i) {
      np[i] = p[i];
      nq[i] = p[i];
      np[half + i] = q[i];
      nq[half + i] = -q[i];
    }
    p = std::move(np);
    q = std::move(nq);
  }
  return {IntPolynomial(std::move(p)), IntPolynomial(std::move(q))};
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  SplitMix64 g(seed ^ (0xd1b54a32d192ed03ULL * (index + 1)));
  return g.next();
}

IntPolynomial random_littlewood(std::size_t n, std::uint64_t seed) {
  SplitMix64 g(seed);
  std::vector<std::int64_t> c(n + 1);
  for (auto& x : c) x = (g.next() >> 63) ? 1 : -1;
  return IntPolynomial(std::move(c));
}

cplx eval_point(std::span<const cplx> coeffs, cplx z) {
  cplx acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
  return acc;
}

cplx eval_point(const IntPolynomial& q, cplx z) {
  const auto& c = q.coeffs();
  cplx acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + static_cast<double>(c[k]);
  return acc;
}

namespace {

std::vector<cplx> eval_nodes(std::span<const cplx> coeffs, long double start_turns,
                             long double step_turns, std::size_t count, GridPath path) {
  const bool direct =
      path == GridPath::Direct || (path == GridPath::Auto && count <= kDirectGridMax);
  return direct ? direct_z(coeffs, start_turns, step_turns, count)
                : chirp_z(coeffs, start_turns, step_turns, count);
}

}  // namespace

ComplexSampleGrid eval_roots_of_unity(std::span<const cplx> coeffs, std::size_t size,
                                      double offset, GridPath path) {
  if (size == 0) throw DomainError("eval_roots_of_unity: grid size must be >= 1");
  const long double m = static_cast<long double>(size);
  const long double start = static_cast<long double>(offset) /
                            (2.0L * std::numbers::pi_v<long double> * m);
  ComplexSampleGrid grid;
  grid.size = size;
  grid.offset = offset;
  grid.values = eval_nodes(coeffs, start, 1.0L / m, size, path);
  return grid;
}

ComplexSampleGrid eval_roots_of_unity(const IntPolynomial& q, std::size_t size, double offset,
                                      GridPath path) {
  const auto c = q.complex_coeffs();
  return eval_roots_of_unity(c, size, offset, path);
}

std::vector<cplx> eval_arc_midpoints(std::span<const cplx> coeffs, double alpha, double beta,
                                     std::size_t count, GridPath path) {
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const long double step = (static_cast<long double>(beta) - alpha) / count / two_pi;
  const long double start = static_cast<long double>(alpha) / two_pi + step / 2.0L;
  return eval_nodes(coeffs, start, step, count, path);
}

IntPolynomial derivative(const IntPolynomial& q) {
  const auto& c = q.coeffs();
  if (c.size() == 1) return IntPolynomial();
  std::vector<std::int64_t> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) {
    d[k - 1] = checked_mul(static_cast<std::int64_t>(k), c[k]);
  }
  return IntPolynomial(std::move(d));
}

Deflation deflate_at_one(const IntPolynomial& q) {
  if (q.is_zero()) throw DomainError("deflate_at_one: zero polynomial");
  Deflation out{q, 0};
  while (out.quotient.degree() > 0 && out.quotient.value_at_one() == 0) {
    // Synthetic division by (z - 1): b_{k-1} = a_k + b_k.
    const auto& a = out.quotient.coeffs();
    std::vector<std::int64_t> b(a.size() - 1);
    std::int64_t carry = 0;
    for (std::size_t k = a.size() - 1; k >= 1; --k) {
      carry = checked_add(carry, a[k]);
      b[k - 1] = carry;
    }
    out.quotient = IntPolynomial(std::move(b));
    ++out.multiplicity;
  }
  return out;
}

}  // namespace fekete
