#include "fekete/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fekete/circle_zeros.hpp"
#include "fekete/errors.hpp"
#include "fekete/mahler.hpp"
#include "fekete/parallel.hpp"
#include "fekete/polynomial.hpp"
#include "fekete/summation.hpp"

namespace fekete {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kCertificateSlack = 1e-6;

double gauss_product(const IntPolynomial& f, std::size_t p) {
  const auto grid = eval_roots_of_unity(f, p, 0.0);
  CompensatedSum s;
  for (std::size_t j = 1; j < p; ++j) s.add(std::log(std::abs(grid.values[j])));
  return std::exp(s.value() / static_cast<double>(p));
}

}  // namespace

Certificate build_certificate(Prime p, const CertificateOptions& opts) {
  if (p.value() < 11) throw DomainError("build_certificate: p must be >= 11");
  if (opts.eta && !(*opts.eta > 0.0 && *opts.eta < std::numbers::pi / 2)) {
    throw DomainError("build_certificate: eta must lie in (0, pi/2)");
  }
  const auto pn = static_cast<std::size_t>(p.value());
  const double pd = static_cast<double>(pn);

  Certificate c;
  c.p = p.value();
  c.jensen_bound = std::sqrt(pd - 1.0);

  const auto f = fekete(p);
  const auto deflated = deflate_at_one(f);
  c.m = deflated.multiplicity;
  c.g_at_one = deflated.quotient.value_at_one();
  const auto g = deflated.quotient.complex_coeffs();

  if (opts.eta) {
    c.eta = *opts.eta;
  } else {
    const auto schedule = auto_arc_schedule(p);
    c.eta = schedule.eta;
    c.delta = schedule.delta;
    c.schedule_met = schedule.target_met;
    c.eta_auto = true;
  }

  const auto zeros = locate_zeros(p, opts.refinement, opts.bisect_tol);
  c.zeros_located = zeros.angles.size();
  double g_l1 = 0.0;
  for (auto a : g) g_l1 += std::abs(a);
  const double zero_tol = 1e-7 * g_l1;
  const double margin = kTwoPi * 2.0 * opts.bisect_tol;

  std::vector<double> kept;
  for (double t : zeros.angles) {
    // the root 1 belongs to (z - 1)^m, not to g_p
    if (c.m > 0 && std::min(t, 1.0 - t) < 1e-9) {
      ++c.excluded_at_one;
      continue;
    }
    const double angle = kTwoPi * t;
    if (in_forbidden_arc(angle, p, c.eta, margin)) {
      ++c.excluded_forbidden;
      continue;
    }
    if (!(std::abs(eval_point(g, std::polar(1.0, angle))) < zero_tol)) {
      ++c.excluded_unverified;
      continue;
    }
    kept.push_back(angle);
  }
  c.k_zeros = kept.size();
  c.degenerate = c.k_zeros == 0;

  const auto unity = check_unity_product_bound_with_zeros(g, p, c.eta, kept, zero_tol);
  c.unity_lhs = unity.lhs;
  c.unity_rhs = unity.rhs;
  c.unity_holds = unity.holds;

  c.gauss_product = gauss_product(f, pn);
  c.gauss_expected = std::pow(pd, (pd - 1.0) / (2.0 * pd));
  const double k_over_p = static_cast<double>(c.k_zeros) / pd;
  c.bound = c.gauss_expected * std::pow(pd, -static_cast<double>(c.m) / pd) /
            (2.0 * std::pow(std::cos(c.eta / 2.0), k_over_p));

  c.quadrature_m0 = m0_uniform(f, Arc{}, 64 * pn).value;
  if (pn <= opts.roots_max_p) {
    c.direct_m0 = m0_from_roots(find_roots(f)).value;
    c.direct_method = to_string(MahlerMethod::RootsJensen);
    c.estimator_gap = std::abs(c.direct_m0 - c.quadrature_m0) / c.direct_m0;
  } else {
    c.direct_m0 = c.quadrature_m0;
    c.direct_method = to_string(MahlerMethod::UniformQuadrature);
  }
  c.ratio = c.direct_m0 / std::sqrt(pd);
  c.holds = c.direct_m0 >= c.bound * (1.0 - kCertificateSlack);
  return c;
}

Sweep certificate_sweep(std::uint64_t pmin, std::uint64_t pmax, const CertificateOptions& opts) {
  if (pmin > pmax) throw DomainError("certificate_sweep: pmin > pmax");
  Sweep sweep;
  const auto primes = odd_primes_in_range(std::max<std::uint64_t>(pmin, 11), pmax);
  sweep.rows.resize(primes.size());
  CertificateOptions single = opts;
  single.threads = 1;
  parallel_for(primes.size(), opts.threads, [&](std::size_t i) {
    auto& row = sweep.rows[i];
    row.p = primes[i].value();
    try {
      row.certificate = build_certificate(primes[i], single);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });

  auto& s = sweep.summary;
  s.primes = sweep.rows.size();
  s.min_ratio = std::numeric_limits<double>::infinity();
  s.min_k_over_p = std::numeric_limits<double>::infinity();
  for (const auto& row : sweep.rows) {
    if (!row.certificate) {
      ++s.failures;
      continue;
    }
    const auto& c = *row.certificate;
    if (!c.holds) ++s.failures;
    s.min_ratio = std::min(s.min_ratio, c.ratio);
    s.min_k_over_p = std::min(s.min_k_over_p, static_cast<double>(c.k_zeros) / c.p);
    s.max_m = std::max(s.max_m, c.m);
  }
  if (sweep.rows.empty()) s.min_ratio = s.min_k_over_p = 0.0;
  return sweep;
}

}  // namespace fekete
