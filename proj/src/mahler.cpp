#include "fekete/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fekete/errors.hpp"
#include "fekete/parallel.hpp"
#include "fekete/summation.hpp"

namespace fekete {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTinyModulus = 1e-300;

void check_arc(Arc arc, std::size_t samples) {
  if (!(arc.alpha < arc.beta) || arc.beta - arc.alpha > kTwoPi * (1.0 + 1e-15)) {
    throw DomainError("arc must satisfy alpha < beta <= alpha + 2 pi");
  }
  if (samples < 16) throw DomainError("at least 16 quadrature samples are required");
}

bool is_zero_poly(std::span<const cplx> c) {
  return std::all_of(c.begin(), c.end(), [](cplx x) { return x == cplx(0.0); });
}

// Plain complex arithmetic in long double, without the Annex G inf/nan
// recovery that std::complex<long double> pays for on every product.
struct LDComplex {
  long double re = 0.0L, im = 0.0L;

  friend LDComplex operator+(LDComplex a, LDComplex b) { return {a.re + b.re, a.im + b.im}; }
  friend LDComplex operator-(LDComplex a, LDComplex b) { return {a.re - b.re, a.im - b.im}; }
  friend LDComplex operator*(LDComplex a, LDComplex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend LDComplex operator/(LDComplex a, LDComplex b) {
    const long double d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  long double abs() const { return std::hypot(re, im); }
};

}  // namespace

const char* to_string(MahlerMethod m) noexcept {
  switch (m) {
    case MahlerMethod::UniformQuadrature: return "uniform_quadrature";
    case MahlerMethod::RootsJensen: return "roots_jensen";
    case MahlerMethod::ProductBound: return "product_bound";
  }
  return "unknown";
}

std::size_t default_m0_samples(std::size_t degree) noexcept {
  return std::max<std::size_t>(std::size_t{1} << 14, 64 * degree);
}

MahlerEstimate mq_uniform(std::span<const cplx> coeffs, double q, Arc arc, std::size_t samples) {
  if (!(q > 0.0)) throw DomainError("mq_uniform: q must be positive (use m0_uniform for q = 0)");
  check_arc(arc, samples);
  const auto values = eval_arc_midpoints(coeffs, arc.alpha, arc.beta, samples);
  CompensatedSum all, even;
  for (std::size_t j = 0; j < samples; ++j) {
    const double term = std::pow(std::abs(values[j]), q);
    all.add(term);
    if (j % 2 == 0) even.add(term);
  }
  const double n_even = static_cast<double>((samples + 1) / 2);
  const double value = std::pow(all.value() / static_cast<double>(samples), 1.0 / q);
  const double coarse = std::pow(even.value() / n_even, 1.0 / q);

  MahlerEstimate est;
  est.value = value;
  est.method = MahlerMethod::UniformQuadrature;
  est.arc = arc;
  est.samples_or_iters = samples;
  est.residual = std::abs(value - coarse);
  return est;
}

MahlerEstimate mq_uniform(const IntPolynomial& p, double q, Arc arc, std::size_t samples) {
  const auto c = p.complex_coeffs();
  return mq_uniform(c, q, arc, samples);
}

MahlerEstimate m0_uniform(std::span<const cplx> coeffs, Arc arc, std::size_t samples) {
  check_arc(arc, samples);
  if (is_zero_poly(coeffs)) throw DomainError("m0_uniform: Q is identically zero");
  const auto values = eval_arc_midpoints(coeffs, arc.alpha, arc.beta, samples);
  const double h = (arc.beta - arc.alpha) / static_cast<double>(samples);

  CompensatedSum all, even;
  std::size_t used = 0, used_even = 0, perturbed = 0;
  for (std::size_t j = 0; j < samples; ++j) {
    double modulus = std::abs(values[j]);
    if (modulus < kTinyModulus) {
      ++perturbed;
      const double t = arc.alpha + h * (static_cast<double>(j) + 0.75);
      modulus = std::abs(eval_point(coeffs, std::polar(1.0, t)));
      if (modulus < kTinyModulus) continue;
    }
    const double l = std::log(modulus);
    all.add(l);
    ++used;
    if (j % 2 == 0) {
      even.add(l);
      ++used_even;
    }
  }
  if (used == 0 || used_even == 0) {
    throw NumericalFailure("m0_uniform: every quadrature node is degenerate", 0.0);
  }
  const double value = std::exp(all.value() / static_cast<double>(used));
  const double coarse = std::exp(even.value() / static_cast<double>(used_even));

  MahlerEstimate est;
  est.value = value;
  est.method = MahlerMethod::UniformQuadrature;
  est.arc = arc;
  est.samples_or_iters = samples;
  est.residual = std::abs(value - coarse);
  est.perturbed_nodes = perturbed;
  return est;
}

MahlerEstimate m0_uniform(const IntPolynomial& p, Arc arc, std::size_t samples) {
  const auto c = p.complex_coeffs();
  return m0_uniform(c, arc, samples);
}

RootSet find_roots(std::span<const cplx> coeffs, const RootFinderOptions& opts) {
  std::size_t top = coeffs.size();
  while (top > 0 && coeffs[top - 1] == cplx(0.0)) --top;
  if (top <= 1) throw DomainError("find_roots: degree must be >= 1");
  const std::size_t degree = top - 1;
  if (degree > opts.max_degree) {
    throw DomainError("find_roots: degree " + std::to_string(degree) + " exceeds guard " +
                      std::to_string(opts.max_degree));
  }

  std::size_t low = 0;
  while (coeffs[low] == cplx(0.0)) ++low;
  const std::size_t n = degree - low;  // nonzero roots

  RootSet out;
  out.leading = coeffs[degree];
  out.roots.assign(low, cplx(0.0));
  if (n == 0) return out;

  std::vector<LDComplex> a(n + 1);
  std::vector<long double> abs_a(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    a[k] = {coeffs[low + k].real(), coeffs[low + k].imag()};
    abs_a[k] = a[k].abs();
  }

  const long double radius = 1.0L + 1.0L / static_cast<long double>(n);
  const long double golden = 2.0L * std::numbers::pi_v<long double> *
                             (1.0L - 1.0L / std::numbers::phi_v<long double>);
  std::vector<LDComplex> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long double angle = golden * static_cast<long double>(i) + 0.25L;
    z[i] = {radius * std::cos(angle), radius * std::sin(angle)};
  }

  const long double eps = std::numeric_limits<long double>::epsilon();
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  std::size_t iter = 0;
  for (; iter < opts.max_iterations && remaining > 0; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      LDComplex pv = a[n], dp{};
      long double bound = abs_a[n];
      const long double r = z[i].abs();
      for (std::size_t k = n; k-- > 0;) {
        dp = dp * z[i] + pv;
        pv = pv * z[i] + a[k];
        bound = bound * r + abs_a[k];
      }
      // Value indistinguishable from zero at the working precision.
      if (pv.abs() <= static_cast<long double>(4 * n + 1) * eps * bound) {
        done[i] = true;
        --remaining;
        continue;
      }
      const LDComplex ratio = pv / dp;
      LDComplex s{};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) s = s + LDComplex{1.0L, 0.0L} / (z[i] - z[j]);
      }
      const LDComplex w = ratio / (LDComplex{1.0L, 0.0L} - ratio * s);
      z[i] = z[i] - w;
      if (w.abs() < static_cast<long double>(opts.correction_tol) * (1.0L + z[i].abs())) {
        done[i] = true;
        --remaining;
      }
    }
  }

  out.iterations = iter;
  for (const auto& r : z) out.roots.emplace_back(static_cast<double>(r.re), static_cast<double>(r.im));
  // Outside the unit disk the residual is taken on the reversed polynomial at
  // 1/z, i.e. |Q(z)| / |z|^deg, which keeps it on the scale of ||Q||_1.
  for (const auto& r : out.roots) {
    double v = std::abs(eval_point(coeffs.first(top), r));
    const double m = std::abs(r);
    if (m > 1.0) v /= std::pow(m, static_cast<double>(degree));
    out.max_residual = std::max(out.max_residual, v);
  }
  if (remaining > 0) {
    throw NumericalFailure("find_roots: " + std::to_string(remaining) + " of " +
                               std::to_string(n) + " roots unconverged after " +
                               std::to_string(iter) + " iterations",
                           out.max_residual);
  }
  return out;
}

RootSet find_roots(const IntPolynomial& p, const RootFinderOptions& opts) {
  const auto c = p.complex_coeffs();
  return find_roots(c, opts);
}

MahlerEstimate m0_from_roots(const RootSet& roots) {
  CompensatedSum log_sum;
  log_sum.add(std::log(std::abs(roots.leading)));
  for (const auto& r : roots.roots) {
    const double m = std::abs(r);
    if (m > 1.0) log_sum.add(std::log(m));
  }
  MahlerEstimate est;
  est.value = std::exp(log_sum.value());
  est.method = MahlerMethod::RootsJensen;
  est.samples_or_iters = roots.iterations;
  est.residual = roots.max_residual;
  return est;
}

double mahler_measure_roots(std::span<const cplx> coeffs) {
  std::size_t top = coeffs.size();
  while (top > 0 && coeffs[top - 1] == cplx(0.0)) --top;
  if (top == 0) return 0.0;
  std::size_t low = 0;
  while (coeffs[low] == cplx(0.0)) ++low;
  if (low + 1 == top) return std::abs(coeffs[low]);
  return m0_from_roots(find_roots(coeffs.first(top))).value;
}

namespace {

double unity_product_lhs(std::span<const cplx> coeffs, Prime p) {
  const auto pn = static_cast<std::size_t>(p.value());
  const auto grid = eval_roots_of_unity(coeffs, pn, 0.0);
  double l1 = 0.0;
  for (auto c : coeffs) l1 += std::abs(c);
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * l1;
  CompensatedSum log_sum;
  for (const auto& v : grid.values) {
    const double m = std::abs(v);
    if (m <= floor) return 0.0;
    log_sum.add(std::log(m));
  }
  return std::exp(log_sum.value() / static_cast<double>(pn));
}

}  // namespace

UnityProductCheck check_unity_product_bound(std::span<const cplx> coeffs, Prime p) {
  std::size_t top = coeffs.size();
  while (top > 1 && coeffs[top - 1] == cplx(0.0)) --top;
  if (top - 1 > p.value()) throw DomainError("unity product bound: deg Q must be <= p");
  UnityProductCheck r;
  r.lhs = unity_product_lhs(coeffs.first(top), p);
  r.rhs = 2.0 * mahler_measure_roots(coeffs.first(top));
  r.holds = r.lhs <= r.rhs * (1.0 + kInequalitySlack);
  return r;
}

bool in_forbidden_arc(double t, Prime p, double eta, double margin) noexcept {
  const double pv = static_cast<double>(p.value());
  double u = std::fmod(t, kTwoPi);
  if (u < 0) u += kTwoPi;
  // Centres (2v+1) pi/p are spaced 2 pi/p apart.
  const double spacing = kTwoPi / pv;
  const double nu = std::floor(u / spacing);
  const double centre = (2.0 * nu + 1.0) * std::numbers::pi / pv;
  const double d = std::abs(u - centre);
  return d < eta / pv + margin;
}

UnityProductCheck check_unity_product_bound_with_zeros(std::span<const cplx> coeffs, Prime p,
                                                       double eta,
                                                       std::span<const double> zero_angles,
                                                       double zero_tol) {
  if (!(eta > 0.0) || eta > std::numbers::pi / 2) {
    throw DomainError("unity product bound: eta must lie in (0, pi/2]");
  }
  std::size_t top = coeffs.size();
  while (top > 1 && coeffs[top - 1] == cplx(0.0)) --top;
  const auto q = coeffs.first(top);
  if (top - 1 > p.value()) throw DomainError("unity product bound: deg Q must be <= p");

  double l1 = 0.0;
  for (auto c : q) l1 += std::abs(c);
  const double tol = zero_tol > 0.0 ? zero_tol : 1e-7 * l1;
  for (double t : zero_angles) {
    if (in_forbidden_arc(t, p, eta)) {
      throw DomainError("unity product bound: zero angle " + std::to_string(t) +
                        " lies inside a forbidden arc");
    }
    const double v = std::abs(eval_point(q, std::polar(1.0, t)));
    if (!(v < tol)) {
      throw DomainError("unity product bound: angle " + std::to_string(t) +
                        " is not a zero of Q (|Q| = " + std::to_string(v) + ")");
    }
  }

  UnityProductCheck r;
  r.zeros_used = zero_angles.size();
  r.lhs = unity_product_lhs(q, p);
  const double k_over_p = static_cast<double>(r.zeros_used) / static_cast<double>(p.value());
  r.rhs = 2.0 * std::pow(std::cos(eta / 2.0), k_over_p) * mahler_measure_roots(q);
  r.holds = r.lhs <= r.rhs * (1.0 + kInequalitySlack);
  return r;
}

EnsembleResult littlewood_ensemble(std::size_t n, double q, std::size_t samples,
                                   std::uint64_t seed, unsigned threads) {
  if (samples < 100) throw DomainError("littlewood_ensemble: at least 100 samples required");
  if (n < 1) throw DomainError("littlewood_ensemble: degree must be >= 1");
  if (q < 0.0) throw DomainError("littlewood_ensemble: q must be >= 0");

  const double root_n = std::sqrt(static_cast<double>(n));
  const std::size_t nodes = std::max<std::size_t>(256, 16 * (n + 1));
  std::vector<double> ratio(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    const auto f = random_littlewood(n, derive_seed(seed, i));
    const double m = q == 0.0 ? m0_from_roots(find_roots(f)).value
                              : mq_uniform(f, q, Arc{}, nodes).value;
    ratio[i] = m / root_n;
  });

  CompensatedSum sum;
  for (double r : ratio) sum.add(r);
  const double mean = sum.value() / static_cast<double>(samples);
  CompensatedSum sq;
  for (double r : ratio) sq.add((r - mean) * (r - mean));
  const double var = sq.value() / static_cast<double>(samples - 1);

  EnsembleResult res;
  res.mean_ratio = mean;
  res.stderr_ratio = std::sqrt(var / static_cast<double>(samples));
  res.samples = samples;
  return res;
}

}  // namespace fekete
