#include "fekete/circle_zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fekete/errors.hpp"
#include "fekete/polynomial.hpp"
#include "fekete/summation.hpp"

namespace fekete {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Evaluates H_p(t) = 2 Re/Im( e^{-i pi p t} S(e^{2 pi i t}) ) with
// S(u) = sum_{a=1}^{(p-1)/2} (a|p) u^a by Horner.
class HalfSum {
 public:
  explicit HalfSum(Prime p) : p_(p), symbols_((p.value() - 1) / 2 + 1, 0.0) {
    for (std::size_t a = 1; a < symbols_.size(); ++a) {
      symbols_[a] = legendre(static_cast<std::int64_t>(a), p);
    }
  }

  double operator()(double t) const {
    const long double tl = t;
    const cplx u = unit_from_turns(tl);
    double re = 0.0, im = 0.0;
    const double ur = u.real(), ui = u.imag();
    for (std::size_t a = symbols_.size(); a-- > 0;) {
      const double nr = re * ur - im * ui + symbols_[a];
      im = re * ui + im * ur;
      re = nr;
    }
    const cplx w = unit_from_turns(-static_cast<long double>(p_.value()) * tl / 2.0L);
    const cplx v = w * cplx(re, im);
    return 2.0 * (p_.value() % 4 == 1 ? v.real() : v.imag());
  }

 private:
  Prime p_;
  std::vector<double> symbols_;
};

// centre value and sampled derivative max per arc I_k
struct ArcSamples {
  std::vector<double> center;
  std::vector<double> deriv_max;
  std::vector<double> deriv_argmax;
};

constexpr std::size_t kDerivSubdivision = 64;  // grid 64p: 33 nodes per arc

ArcSamples sample_arcs(Prime p) {
  const auto pn = static_cast<std::size_t>(p.value());
  const auto f = fekete(p);
  ArcSamples s;
  const auto centres = eval_roots_of_unity(f, pn, kPi);
  s.center.resize(pn);
  for (std::size_t k = 0; k < pn; ++k) s.center[k] = std::abs(centres.values[k]);

  const std::size_t m = kDerivSubdivision * pn;
  const auto d = eval_roots_of_unity(derivative(f), m, 0.0);
  s.deriv_max.assign(pn, 0.0);
  s.deriv_argmax.assign(pn, 0.0);
  const std::size_t quarter = kDerivSubdivision / 4;
  for (std::size_t k = 0; k < pn; ++k) {
    const std::size_t lo = kDerivSubdivision * k + quarter;
    for (std::size_t j = lo; j <= lo + 2 * quarter; ++j) {
      const double v = std::abs(d.values[j]);
      if (v > s.deriv_max[k]) {
        s.deriv_max[k] = v;
        s.deriv_argmax[k] = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
      }
    }
  }
  return s;
}

std::size_t count_big_centres(const std::vector<double>& centre, double threshold) {
  return static_cast<std::size_t>(
      std::count_if(centre.begin(), centre.end(), [&](double v) { return v > threshold; }));
}

}  // namespace

double h_eval(Prime p, double t) { return HalfSum(p)(t); }

cplx h_eval_complex(Prime p, double t) {
  const auto f = fekete(p);
  const long double tl = t;
  const cplx fz = eval_point(f, unit_from_turns(tl));
  const cplx w = unit_from_turns(-static_cast<long double>(p.value()) * tl / 2.0L);
  const cplx c = p.value() % 4 == 1 ? cplx(1.0, 0.0) : cplx(0.0, -1.0);
  return c * w * fz;
}

HGrid h_grid(Prime p, std::size_t refinement) {
  if (refinement < 1) throw DomainError("h_grid: refinement must be >= 1");
  const auto pn = static_cast<std::size_t>(p.value());
  const std::size_t m = refinement * pn;
  const auto grid = eval_roots_of_unity(fekete(p), m, 0.0);
  const cplx c = pn % 4 == 1 ? cplx(1.0, 0.0) : cplx(0.0, -1.0);

  HGrid h{p, refinement, std::vector<double>(m), kZeroThreshold * std::sqrt(double(pn)), 0.0};
  for (std::size_t j = 0; j < m; ++j) {
    // p t = j / N
    const cplx w = unit_from_turns(-static_cast<long double>(j) /
                                   (2.0L * static_cast<long double>(refinement)));
    const cplx v = c * w * grid.values[j];
    h.values[j] = v.real();
    h.max_imag = std::max(h.max_imag, std::abs(v.imag()));
  }
  return h;
}

std::size_t sign_agreements(Prime p) {
  if (p.value() < 5) throw DomainError("sign_agreements: p must be >= 5");
  std::size_t count = 0;
  int prev = legendre(1, p);
  for (std::uint64_t k = 2; k <= p.value() - 1; ++k) {
    const int cur = legendre(static_cast<std::int64_t>(k), p);
    if (cur == prev) ++count;
    prev = cur;
  }
  return count;
}

ZeroSet locate_zeros(Prime p, std::size_t refinement, double bisect_tol) {
  if (refinement < 2) throw DomainError("locate_zeros: refinement must be >= 2");
  if (!(bisect_tol > 0.0)) throw DomainError("locate_zeros: bisect_tol must be positive");
  const HGrid grid = h_grid(p, refinement);
  const HalfSum h(p);
  const std::size_t m = grid.values.size();
  const double step = 1.0 / static_cast<double>(m);
  const double root_p = std::sqrt(static_cast<double>(p.value()));

  ZeroSet out;
  out.bisect_tol = bisect_tol;
  auto is_zero = [&](double v) { return std::abs(v) < grid.tol_zero; };
  for (std::size_t j = 0; j < m; ++j) {
    const double a = grid.values[j];
    // H(1) = -H(0) closes the cycle.
    const double b = j + 1 < m ? grid.values[j + 1] : -grid.values[0];
    if (is_zero(a)) {
      out.angles.push_back(static_cast<double>(j) * step);
      ++out.grid_node_zeros;
      continue;
    }
    if (is_zero(b) || (a > 0) == (b > 0)) continue;

    double lo = static_cast<double>(j) * step, hi = lo + step;
    double f_lo = a;
    for (int it = 0; it < 60 && hi - lo >= bisect_tol; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double f_mid = h(mid);
      if (f_mid == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((f_mid > 0) == (f_lo > 0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
    }
    double t = 0.5 * (lo + hi);
    if (t >= 1.0) t -= 1.0;
    out.angles.push_back(t);
    ++out.bisected;
  }

  std::sort(out.angles.begin(), out.angles.end());
  std::vector<double> unique;
  for (double t : out.angles) {
    if (unique.empty() || t - unique.back() >= bisect_tol) unique.push_back(t);
  }
  out.angles = std::move(unique);
  for (double t : out.angles) {
    out.max_residual = std::max(out.max_residual, std::abs(h(t)) / root_p);
  }
  return out;
}

std::vector<double> to_radians(std::span<const double> turns) {
  std::vector<double> out(turns.size());
  for (std::size_t i = 0; i < turns.size(); ++i) out[i] = kTwoPi * turns[i];
  return out;
}

ArcClassification arc_classify(Prime p, double delta, double gamma, double eta,
                               std::span<const double> zeros) {
  if (!(delta > 0.0) || !(gamma > 0.0)) {
    throw DomainError("arc_classify: delta and gamma must be positive");
  }
  if (!(eta > 0.0) || !(eta < std::min(delta / gamma, kPi / 2))) {
    throw DomainError("arc_classify: need 0 < eta < min(delta/gamma, pi/2)");
  }
  const auto pn = static_cast<std::size_t>(p.value());
  const double pd = static_cast<double>(pn);
  const double centre_threshold = delta * std::sqrt(pd);
  const double deriv_threshold = gamma * std::pow(pd, 1.5);
  const auto samples = sample_arcs(p);

  ArcClassification out;
  out.delta = delta;
  out.gamma = gamma;
  out.eta = eta;
  out.samples_per_arc = kDerivSubdivision / 2 + 1;
  out.arcs.resize(pn);
  for (std::size_t k = 0; k < pn; ++k) {
    auto& arc = out.arcs[k];
    arc.k = k;
    arc.center_value = samples.center[k];
    arc.deriv_max = samples.deriv_max[k];
    arc.deriv_argmax = samples.deriv_argmax[k];
    const bool big = arc.center_value > centre_threshold;
    const bool small = arc.deriv_max <= deriv_threshold;
    out.n_big_center += big;
    out.n_small_deriv += small;
    out.n_qualifying += big && small;
    arc.nonvanishing = big && small && eta < delta / gamma;
  }

  for (double t : zeros) {
    double u = t - std::floor(t);
    const double scaled = u * pd;  // zero between k/p and (k+1)/p
    const auto k = std::min(pn - 1, static_cast<std::size_t>(scaled));
    if (scaled > static_cast<double>(k)) out.arcs[k].has_zero_in_Ik = true;
    const double centre = (static_cast<double>(k) + 0.5) / pd;
    if (kTwoPi * std::abs(u - centre) < eta / pd) out.arcs[k].zero_in_eta_arc = true;
  }
  for (const auto& arc : out.arcs) out.inconsistent += arc.nonvanishing && arc.zero_in_eta_arc;
  return out;
}

ArcSchedule auto_arc_schedule(Prime p) {
  ArcSchedule s;
  s.gamma = std::sqrt(8.0);
  const auto pn = static_cast<std::size_t>(p.value());
  const auto f = fekete(p);
  const auto centres = eval_roots_of_unity(f, pn, kPi);
  std::vector<double> centre(pn);
  for (std::size_t k = 0; k < pn; ++k) centre[k] = std::abs(centres.values[k]);

  const double target = (1.0 - s.epsilon / 2.0) * static_cast<double>(pn);
  const double root_p = std::sqrt(static_cast<double>(pn));
  for (double delta : {0.5, 0.4, 0.3, 0.2, 0.1, 0.05}) {
    s.delta = delta;
    s.n_big_center = count_big_centres(centre, delta * root_p);
    if (static_cast<double>(s.n_big_center) >= target) {
      s.target_met = true;
      break;
    }
  }
  s.eta = std::min(0.9 * s.delta / s.gamma, kPi / 2 - 1e-6);
  return s;
}

SieveCheck large_sieve_check(std::span<const cplx> coeffs, std::span<const double> angles) {
  if (coeffs.size() % 2 == 0) {
    throw DomainError("large_sieve_check: need 2n+1 coefficients a_{-n..n}");
  }
  if (angles.empty()) throw DomainError("large_sieve_check: at least one angle required");
  for (std::size_t j = 0; j < angles.size(); ++j) {
    if (angles[j] < 0.0 || angles[j] > kTwoPi) {
      throw DomainError("large_sieve_check: angle outside [0, 2 pi]");
    }
    if (j > 0 && !(angles[j] > angles[j - 1])) {
      throw DomainError("large_sieve_check: angles must be strictly increasing");
    }
  }
  const std::size_t n = coeffs.size() / 2;

  SieveCheck r;
  r.separation = kTwoPi;
  if (angles.size() > 1) {
    r.separation = kTwoPi - (angles.back() - angles.front());
    for (std::size_t j = 1; j < angles.size(); ++j) {
      r.separation = std::min(r.separation, angles[j] - angles[j - 1]);
    }
  }
  CompensatedSum lhs, l2;
  for (double t : angles) lhs.add(std::norm(eval_point(coeffs, std::polar(1.0, t))));
  for (auto a : coeffs) l2.add(std::norm(a));
  r.lhs = lhs.value();
  r.rhs = ((2.0 * static_cast<double>(n) + 1.0) / kTwoPi + 1.0 / r.separation) * kTwoPi *
          l2.value();
  r.holds = r.lhs <= r.rhs * (1.0 + 1e-9);
  return r;
}

DerivativeSieveChain derivative_sieve_chain(Prime p, double gamma) {
  if (!(gamma > 0.0)) throw DomainError("derivative_sieve_chain: gamma must be positive");
  const auto pn = static_cast<std::size_t>(p.value());
  const double pd = static_cast<double>(pn);

  // z^{(3-p)/2} f_p'(z): coefficient index k (of a_{-n..n}, n = (p-1)/2) is k (k|p).
  std::vector<cplx> g(pn, 0.0);
  for (std::size_t k = 1; k < pn; ++k) {
    g[k] = static_cast<double>(k) * legendre(static_cast<std::int64_t>(k), p);
  }

  const auto samples = sample_arcs(p);
  const double threshold = gamma * std::pow(pd, 1.5);
  std::vector<double> bad_points;
  double max_deriv = 0.0;
  for (std::size_t k = 0; k < pn; ++k) {
    if (samples.deriv_max[k] >= threshold) bad_points.push_back(samples.deriv_argmax[k]);
    max_deriv = std::max(max_deriv, samples.deriv_max[k]);
  }

  DerivativeSieveChain c;
  c.gamma = gamma;
  c.bad_arcs = bad_points.size();
  c.count_bound = pd / (2.0 * gamma * gamma);
  std::vector<double> centres(pn);
  for (std::size_t k = 0; k < pn; ++k) centres[k] = (2.0 * k + 1.0) * kPi / pd;
  c.at_centres = large_sieve_check(g, centres);
  c.l2_bound = 3.0 * pd * (pd - 1.0) * pd * (2.0 * pd - 1.0) / 6.0;
  c.quartic_bound = pd * pd * pd * pd / 2.0;
  c.corrected_quartic_bound = pd * pd * pd * pd;
  c.max_deriv_ratio = max_deriv / std::pow(pd, 1.5);

  const double slack = 1.0 + 1e-9;
  c.quartic_link_holds = c.l2_bound <= c.quartic_bound * slack;
  bool ok = c.at_centres.holds && c.l2_bound <= c.corrected_quartic_bound * slack &&
            static_cast<double>(c.bad_arcs) <= c.count_bound * slack;
  if (!bad_points.empty()) {
    c.at_bad_points = large_sieve_check(g, bad_points);
    const double floor = static_cast<double>(c.bad_arcs) * gamma * gamma * pd * pd * pd;
    ok = ok && c.at_bad_points.holds && floor <= c.at_bad_points.lhs * slack &&
         c.at_bad_points.separation >= kPi / pd * (1.0 - 1e-12) &&
         c.at_bad_points.rhs <= c.l2_bound * slack;
  } else {
    c.at_bad_points = SieveCheck{0.0, 0.0, kTwoPi, true};
  }
  c.chain_holds = ok;
  return c;
}

ModulusRange max_modulus(Prime p, std::size_t samples) {
  if (samples < 4 * p.value()) throw DomainError("max_modulus: need at least 4p samples");
  const auto grid = eval_roots_of_unity(fekete(p), samples, kPi);
  ModulusRange r{0.0, std::abs(grid.values[0])};
  for (const auto& v : grid.values) {
    const double m = std::abs(v);
    r.max_val = std::max(r.max_val, m);
    r.min_val = std::min(r.min_val, m);
  }
  return r;
}

}  // namespace fekete
