#include "fekete/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>

#include "fekete/errors.hpp"
#include "fekete/polynomial.hpp"
#include "fekete/summation.hpp"

namespace fekete {

namespace {

constexpr double kPi = std::numbers::pi;

// sum_{k > K} (2k+1)^{-2s} by Euler-Maclaurin from N = K + 1.
double odd_power_tail(std::size_t K, int s) {
  const double b = 2.0 * static_cast<double>(K + 1) + 1.0;  // 2N + 1
  const double e = 2.0 * s;
  const double integral = std::pow(b, 1.0 - e) / (2.0 * (e - 1.0));
  const double f = std::pow(b, -e);
  const double f1 = -2.0 * e * std::pow(b, -e - 1.0);
  const double f3 = -8.0 * e * (e + 1.0) * (e + 2.0) * std::pow(b, -e - 3.0);
  return integral + f / 2.0 - f1 / 12.0 + f3 / 720.0;
}

// -log cos^2(u) = u^2 + u^4/6 + 2u^6/45 + 17u^8/1260 + 62u^10/14175 + ...
constexpr std::array<double, 5> kLogCosSq = {1.0, 1.0 / 6.0, 2.0 / 45.0, 17.0 / 1260.0,
                                             62.0 / 14175.0};

}  // namespace

CProductValue c_product(double x, double tol) {
  if (!(x >= 0.0)) throw DomainError("c_product: x must be >= 0");
  if (!(tol > 0.0)) throw DomainError("c_product: tol must be positive");
  CProductValue out;
  if (x == 0.0) {
    out.value = 1.0;
    return out;
  }

  std::size_t K = std::max<std::size_t>(64, static_cast<std::size_t>(std::ceil(20.0 * x)));
  const double two_x = 2.0 * x;
  auto remainder = [&](std::size_t k) {
    // the u^10 term, doubled to cover everything after it (u <= 1/20 here)
    return 2.0 * kLogCosSq[4] * std::pow(two_x, 10) * odd_power_tail(k, 5);
  };
  while (remainder(K) >= tol) K *= 2;

  CompensatedSum log_sum;
  for (std::size_t k = 0; k <= K; ++k) {
    const double c = std::cos(two_x / (2.0 * static_cast<double>(k) + 1.0));
    if (c == 0.0) {
      out.truncation_K = K;
      return out;
    }
    log_sum.add(2.0 * std::log(std::abs(c)));
  }
  for (int s = 1; s <= 4; ++s) {
    log_sum.add(-kLogCosSq[s - 1] * std::pow(two_x, 2 * s) * odd_power_tail(K, s));
  }
  out.truncation_K = K;
  out.remainder_bound = remainder(K);
  const double l = log_sum.value();
  out.value = l < -745.0 ? 0.0 : std::exp(l);
  return out;
}

double calibrated_envelope_c1() { return c_product(1.0).value * std::pow(2.0, 3.0 / kPi); }

namespace {

struct Simpson {
  std::function<double(double)> f;
  std::size_t max_depth = 48;
  bool failed = false;

  double whole(double a, double b, double fa, double fm, double fb) const {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }

  double refine(double a, double b, double fa, double fm, double fb, double s, double eps,
                std::size_t depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = whole(a, m, fa, flm, fm);
    const double right = whole(m, b, fm, frm, fb);
    const double diff = left + right - s;
    if (std::abs(diff) <= 15.0 * eps) return left + right + diff / 15.0;
    if (depth >= max_depth) {
      failed = true;
      return left + right + diff / 15.0;
    }
    return refine(a, m, fa, flm, fm, left, eps / 2.0, depth + 1) +
           refine(m, b, fm, frm, fb, right, eps / 2.0, depth + 1);
  }

  double integrate(double a, double b, double eps) {
    const double fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
    return refine(a, b, fa, fm, fb, whole(a, b, fa, fm, fb), eps, 0);
  }
};

}  // namespace

CdeltaResult c_delta(double delta, double tol) {
  if (delta == 0.0 || !std::isfinite(delta)) throw DomainError("c_delta: delta must be nonzero");
  if (!(tol > 1e-12 && tol < 1e-2)) throw DomainError("c_delta: tol must lie in (1e-12, 1e-2)");

  CdeltaResult r;
  r.delta = delta;
  r.quad_tol = tol;

  // (1/pi) int_X^inf C(x)/x dx <= c1 2^{-3X/pi} / (3 X log 2)
  auto tail = [](double X) {
    return kEnvelopeC1 * std::pow(2.0, -3.0 * X / kPi) / (3.0 * X * std::numbers::ln2);
  };
  double X = 1.0;
  while (tail(X) >= tol / 4.0) X += 0.5;
  r.cutoff_X = X;
  r.tail_bound = tail(X);

  const double c_tol = tol / 16.0;
  Simpson simpson;
  simpson.f = [&](double x) {
    ++r.evaluations;
    if (x == 0.0) return delta * kPi;
    const auto c = c_product(x, c_tol);
    r.truncation_K = std::max(r.truncation_K, c.truncation_K);
    return std::sin(delta * kPi * x) * c.value / x;
  };

  const double period = 1.0 / std::abs(delta);
  std::vector<double> cuts{0.0};
  for (double c = period; c < X; c += period) cuts.push_back(c);
  cuts.push_back(X);

  CompensatedSum integral;
  const double budget = tol / 4.0 * kPi;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    const double share = budget * (cuts[i] - cuts[i - 1]) / X;
    integral.add(simpson.integrate(cuts[i - 1], cuts[i], share));
  }
  if (simpson.failed) {
    throw NumericalFailure("c_delta: adaptive Simpson hit its depth limit", tol);
  }
  r.value = 0.5 + integral.value() / kPi;
  return r;
}

MidpointFraction empirical_midpoint_fraction(Prime p, double delta) {
  if (p.value() < 100) throw DomainError("empirical_midpoint_fraction: p must be >= 100");
  const auto pn = static_cast<std::size_t>(p.value());
  const auto grid = eval_roots_of_unity(fekete(p), pn, kPi);
  const cplx c = pn % 4 == 1 ? cplx(1.0, 0.0) : cplx(0.0, -1.0);
  const double root_p = std::sqrt(static_cast<double>(pn));
  const double threshold = delta * root_p;

  MidpointFraction out;
  for (std::size_t k = 1; k <= pn; ++k) {
    // H_p((k + 1/2)/p) = c e^{-i pi (k + 1/2)} f_p(e^{i (2k+1) pi / p})
    const cplx w = unit_from_turns(-(static_cast<long double>(k) + 0.5L) / 2.0L);
    const double h = (c * w * grid.values[k % pn]).real();
    if (std::abs(h - threshold) <= 1e-9 * root_p) {
      ++out.ties;
      continue;
    }
    if (h < threshold) ++out.below;
  }
  out.fraction = static_cast<double>(out.below) / static_cast<double>(pn);
  return out;
}

}  // namespace fekete
