#include "fekete/suites.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "fekete/asymptotics.hpp"
#include "fekete/certify.hpp"
#include "fekete/circle_zeros.hpp"
#include "fekete/errors.hpp"
#include "fekete/mahler.hpp"
#include "fekete/numtheory.hpp"
#include "fekete/parallel.hpp"
#include "fekete/polynomial.hpp"

namespace fekete {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string prime_list_detail(const std::vector<std::uint64_t>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size() && i < 20; ++i) {
    if (i) s += ' ';
    s += std::to_string(ps[i]);
  }
  if (ps.size() > 20) s += " ...";
  return s;
}

std::string violations_detail(const std::vector<std::uint64_t>& bad, const char* what) {
  if (bad.empty()) return {};
  return std::string(what) + ": " + prime_list_detail(bad);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

double ensemble_limit(double q) {
  if (q == 0.0) return std::exp(-std::numbers::egamma / 2.0);
  return std::pow(std::tgamma(1.0 + q / 2.0), 1.0 / q);
}

// ---------------------------------------------------------------------------
// Gauss evaluations at the p-th roots of unity.

RunReport run_gauss(const GaussParams& prm) {
  RunReport r;
  r.command = "gauss";
  r.params = {{"pmin", prm.pmin}, {"pmax", prm.pmax}, {"tol", prm.tol}};

  const auto primes = odd_primes_in_range(prm.pmin, prm.pmax);
  struct Row {
    double max_abs = 0.0, at_one = 0.0, sign_err = 0.0;
  };
  std::vector<Row> rows(primes.size());
  parallel_for(primes.size(), prm.threads, [&](std::size_t i) {
    const Prime p = primes[i];
    const double sp = std::sqrt(static_cast<double>(p.value()));
    const auto grid = eval_roots_of_unity(fekete(p), p.value(), 0.0);
    Row row;
    for (std::size_t j = 1; j < grid.values.size(); ++j) {
      row.max_abs = std::max(row.max_abs, std::abs(std::abs(grid.values[j]) - sp));
    }
    row.at_one = std::abs(grid.values[0]);
    const cplx expected = p.minus_one_symbol() == 1 ? cplx(sp, 0.0) : cplx(0.0, sp);
    row.sign_err = std::abs(grid.values[1] - expected);
    rows[i] = row;
  });

  CsvTable t{"gauss", {"p", "p_mod_4", "max_abs_error", "max_rel_error", "f_at_one", "sign_error"}, {}};
  double worst_mod = 0.0, worst_one = 0.0, worst_sign = 0.0;
  std::vector<std::uint64_t> bad_mod, bad_one, bad_sign;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i].value();
    const double sp = std::sqrt(static_cast<double>(p));
    const Row& row = rows[i];
    t.add_row({fmt(p), fmt(p % 4), fmt(row.max_abs), fmt(row.max_abs / sp), fmt(row.at_one),
               fmt(row.sign_err)});
    worst_mod = std::max(worst_mod, row.max_abs / sp);
    worst_one = std::max(worst_one, row.at_one / sp);
    worst_sign = std::max(worst_sign, row.sign_err / sp);
    if (!(row.max_abs <= prm.tol * sp)) bad_mod.push_back(p);
    if (!(row.at_one <= prm.tol * sp)) bad_one.push_back(p);
    if (!(row.sign_err <= prm.tol * sp)) bad_sign.push_back(p);
  }
  r.add(check("L3.1-modulus", bad_mod.empty(), worst_mod, 0.0, prm.tol,
              violations_detail(bad_mod, "primes exceeding tolerance")));
  r.add(check("L3.1-root-at-one", bad_one.empty(), worst_one, 0.0, prm.tol,
              violations_detail(bad_one, "primes exceeding tolerance")));
  r.add(check("L3.1-sign", bad_sign.empty(), worst_sign, 0.0, prm.tol,
              violations_detail(bad_sign, "primes exceeding tolerance")));
  r.results = {{"primes", primes.size()},
               {"worst_rel_modulus_error", worst_mod},
               {"worst_rel_value_at_one", worst_one},
               {"worst_rel_sign_error", worst_sign}};
  r.tables.push_back(std::move(t));
  return r;
}

// ---------------------------------------------------------------------------
// Mahler measures of f_p, estimator agreement, and the product inequalities.

namespace {

struct MahlerRow {
  double m2 = 0.0, parseval_err = 0.0;
  double m0_quad = 0.0, m0_quad_residual = 0.0;
  std::size_t perturbed = 0;
  bool have_roots = false;
  double m0_roots = 0.0, root_residual = 0.0, gap = 0.0;
  double mhalf = 0.0, m1 = 0.0, m4 = 0.0;
  bool power_mean_ok = false, jensen_ok = false;
  double max_mod = 0.0, min_mod = 0.0, modulus_constant = 0.0;
  bool bracket_ok = false, sqrtp_ok = false;
  bool unity_ok = true;
  double unity_lhs = 0.0, unity_rhs = 0.0;
};

struct InstanceOutcome {
  std::size_t degree = 0;
  std::size_t zeros = 0;
  double ratio32 = 0.0, ratio33 = 0.0;
  bool holds32 = false, holds33 = false;
};

std::vector<cplx> multiply_linear(const std::vector<cplx>& c, cplx root) {
  // (z - root) * sum c_k z^k
  std::vector<cplx> out(c.size() + 1, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    out[k + 1] += c[k];
    out[k] -= root * c[k];
  }
  return out;
}

InstanceOutcome product_instance(std::size_t index, const MahlerParams& prm, Prime p) {
  SplitMix64 g(derive_seed(prm.seed, index));
  InstanceOutcome out;
  const std::size_t k = g.next() % 4;
  const std::size_t span = prm.max_degree > k ? prm.max_degree - k : 1;
  const std::size_t deg = 1 + g.next() % span;
  const auto littlewood = random_littlewood(deg, g.next());
  auto coeffs = littlewood.complex_coeffs();

  const auto c32 = check_unity_product_bound(coeffs, p);
  out.ratio32 = c32.rhs > 0.0 ? c32.lhs / c32.rhs : 0.0;
  out.holds32 = c32.holds;

  std::vector<double> angles;
  while (angles.size() < k) {
    const double t = kTwoPi * g.uniform();
    if (in_forbidden_arc(t, p, prm.suite_eta, 1e-6)) continue;
    bool close = false;
    for (double a : angles) close = close || std::abs(a - t) < 1e-6;
    if (close) continue;
    angles.push_back(t);
    coeffs = multiply_linear(coeffs, std::polar(1.0, t));
  }
  std::sort(angles.begin(), angles.end());
  const auto c33 = check_unity_product_bound_with_zeros(coeffs, p, prm.suite_eta, angles);
  out.degree = coeffs.size() - 1;
  out.zeros = c33.zeros_used;
  out.ratio33 = c33.rhs > 0.0 ? c33.lhs / c33.rhs : 0.0;
  out.holds33 = c33.holds;
  return out;
}

}  // namespace

RunReport run_mahler(const MahlerParams& prm) {
  RunReport r;
  r.command = "mahler";
  r.params = {{"pmin", prm.pmin},          {"pmax", prm.pmax},
              {"roots_pmax", prm.roots_pmax}, {"samples", prm.samples},
              {"agree_tol", prm.agree_tol}, {"parseval_tol", prm.parseval_tol},
              {"instances", prm.instances}, {"max_degree", prm.max_degree},
              {"suite_p", prm.suite_p},     {"suite_eta", prm.suite_eta},
              {"inequality_slack", kInequalitySlack}};
  r.seed = prm.seed;
  r.generator = std::string(SplitMix64::kName);

  const auto primes = odd_primes_in_range(prm.pmin, prm.pmax);
  std::vector<MahlerRow> rows(primes.size());
  parallel_for(primes.size(), prm.threads, [&](std::size_t i) {
    const Prime p = primes[i];
    const double pd = static_cast<double>(p.value());
    const auto f = fekete(p);
    MahlerRow row;
    row.m2 = mq_uniform(f, 2.0, Arc{}, std::max<std::size_t>(16, 2 * p.value() + 2)).value;
    row.parseval_err = rel(row.m2, std::sqrt(pd - 1.0));
    const auto quad = m0_uniform(f, Arc{}, prm.samples);
    row.m0_quad = quad.value;
    row.m0_quad_residual = quad.residual;
    row.perturbed = quad.perturbed_nodes;
    double m0 = quad.value;
    if (p.value() <= prm.roots_pmax) {
      const auto roots = find_roots(f);
      row.have_roots = true;
      row.m0_roots = m0_from_roots(roots).value;
      row.root_residual = roots.max_residual;
      row.gap = rel(row.m0_quad, row.m0_roots);
      m0 = row.m0_roots;
      const auto coeffs = f.complex_coeffs();
      const auto unity = check_unity_product_bound(coeffs, p);
      row.unity_lhs = unity.lhs;
      row.unity_rhs = unity.rhs;
      row.unity_ok = unity.holds && unity.lhs == 0.0;
    }
    const std::size_t qs = std::max<std::size_t>(prm.samples, 2 * p.value() + 2);
    row.mhalf = mq_uniform(f, 0.5, Arc{}, qs).value;
    row.m1 = mq_uniform(f, 1.0, Arc{}, qs).value;
    row.m4 = mq_uniform(f, 4.0, Arc{}, qs).value;
    const double s = 1.0 + kInequalitySlack;
    row.power_mean_ok = m0 <= row.mhalf * s && row.mhalf <= row.m1 * s && row.m1 <= row.m2 * s &&
                        row.m2 <= row.m4 * s;
    row.jensen_ok = m0 <= std::sqrt(pd - 1.0) * s;
    const auto mod = max_modulus(p, 16 * p.value());
    row.max_mod = mod.max_val;
    row.min_mod = mod.min_val;
    row.bracket_ok = mod.min_val < std::sqrt(pd - 1.0) && std::sqrt(pd - 1.0) < mod.max_val;
    row.sqrtp_ok = mod.max_val >= std::sqrt(pd);
    row.modulus_constant = mod.max_val / (std::sqrt(pd) * std::log(pd));
    rows[i] = row;
  });

  CsvTable t{"mahler",
             {"p", "m2", "parseval_rel_error", "m0_quadrature", "m0_quadrature_residual",
              "perturbed_nodes", "m0_roots", "root_residual", "estimator_rel_gap", "m_half", "m1",
              "m4", "power_mean_ok", "jensen_ok", "max_modulus", "min_modulus",
              "modulus_constant", "unity_lhs", "unity_rhs", "unity_ok"},
             {}};
  double worst_parseval = 0.0, worst_gap = 0.0, max_constant = 0.0;
  std::vector<std::uint64_t> bad_parseval, bad_gap, bad_pm, bad_jensen, bad_bracket, bad_sqrtp,
      bad_unity;
  std::optional<double> m0_f5;
  std::size_t roots_primes = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i].value();
    const MahlerRow& w = rows[i];
    auto opt = [&](double v) { return w.have_roots ? fmt(v) : std::string(); };
    t.add_row({fmt(p), fmt(w.m2), fmt(w.parseval_err), fmt(w.m0_quad), fmt(w.m0_quad_residual),
               fmt(static_cast<std::uint64_t>(w.perturbed)), opt(w.m0_roots), opt(w.root_residual),
               opt(w.gap), fmt(w.mhalf), fmt(w.m1), fmt(w.m4), fmt(w.power_mean_ok),
               fmt(w.jensen_ok), fmt(w.max_mod), fmt(w.min_mod), fmt(w.modulus_constant),
               opt(w.unity_lhs), opt(w.unity_rhs), w.have_roots ? fmt(w.unity_ok) : std::string()});
    worst_parseval = std::max(worst_parseval, w.parseval_err);
    if (!(w.parseval_err <= prm.parseval_tol)) bad_parseval.push_back(p);
    if (w.have_roots) {
      ++roots_primes;
      worst_gap = std::max(worst_gap, w.gap);
      if (!(w.gap <= prm.agree_tol)) bad_gap.push_back(p);
      if (!w.unity_ok) bad_unity.push_back(p);
      if (p == 5) m0_f5 = w.m0_roots;
    }
    if (!w.power_mean_ok) bad_pm.push_back(p);
    if (!w.jensen_ok) bad_jensen.push_back(p);
    if (!w.bracket_ok) bad_bracket.push_back(p);
    if (!w.sqrtp_ok) bad_sqrtp.push_back(p);
    max_constant = std::max(max_constant, w.modulus_constant);
  }
  r.add(check("S1-parseval", bad_parseval.empty(), worst_parseval, 0.0, prm.parseval_tol,
              violations_detail(bad_parseval, "primes exceeding tolerance")));
  if (roots_primes > 0) {
    r.add(check("S1-estimator-agreement", bad_gap.empty(), worst_gap, 0.0, prm.agree_tol,
                violations_detail(bad_gap, "primes exceeding tolerance")));
    r.add(check("L3.2-fekete", bad_unity.empty(), static_cast<double>(bad_unity.size()), 0.0,
                kInequalitySlack, violations_detail(bad_unity, "violations")));
  }
  if (m0_f5) {
    r.add(check("S1-m0-f5", std::abs(*m0_f5 - 1.0) <= 1e-6, *m0_f5, 1.0, 1e-6));
  }
  r.add(check("S1-power-mean", bad_pm.empty(), static_cast<double>(bad_pm.size()), 0.0,
              kInequalitySlack, violations_detail(bad_pm, "violations")));
  r.add(check("S1-jensen", bad_jensen.empty(), static_cast<double>(bad_jensen.size()), 0.0,
              kInequalitySlack, violations_detail(bad_jensen, "violations")));
  r.add(check("T1.1-modulus-bracket", bad_bracket.empty(), static_cast<double>(bad_bracket.size()),
              0.0, 0.0, violations_detail(bad_bracket, "violations")));
  r.add(check("T1.1-max-at-least-sqrtp", bad_sqrtp.empty(), static_cast<double>(bad_sqrtp.size()),
              0.0, 0.0, violations_detail(bad_sqrtp, "violations")));
  r.add(observe("T1.1-modulus-constant", max_constant, 0.0,
                "max over primes of max|f_p| / (sqrt(p) log p)"));

  // Randomised product-inequality suite on Littlewood polynomials.
  CsvTable inst{"mahler_random",
                {"instance", "degree", "circle_zeros", "unity_ratio", "unity_holds",
                 "zeros_ratio", "zeros_holds"},
                {}};
  if (prm.instances > 0) {
    const Prime sp(prm.suite_p);
    if (prm.max_degree < 1 || prm.max_degree > sp.value()) {
      throw DomainError("mahler: max_degree must lie in [1, suite_p]");
    }
    std::vector<InstanceOutcome> outs(prm.instances);
    parallel_for(prm.instances, prm.threads,
                 [&](std::size_t i) { outs[i] = product_instance(i, prm, sp); });
    std::size_t fail32 = 0, fail33 = 0;
    double max32 = 0.0, max33 = 0.0;
    for (std::size_t i = 0; i < outs.size(); ++i) {
      const auto& o = outs[i];
      inst.add_row({fmt(static_cast<std::uint64_t>(i)), fmt(static_cast<std::uint64_t>(o.degree)),
                    fmt(static_cast<std::uint64_t>(o.zeros)), fmt(o.ratio32), fmt(o.holds32),
                    fmt(o.ratio33), fmt(o.holds33)});
      fail32 += !o.holds32;
      fail33 += !o.holds33;
      max32 = std::max(max32, o.ratio32);
      max33 = std::max(max33, o.ratio33);
    }
    r.add(check("L3.2-random", fail32 == 0, max32, 1.0, kInequalitySlack,
                "measured: max lhs/rhs; violations " + std::to_string(fail32)));
    r.add(check("L3.3-random", fail33 == 0, max33, 1.0, kInequalitySlack,
                "measured: max lhs/rhs; violations " + std::to_string(fail33)));
  }

  r.results = {{"primes", primes.size()},
               {"primes_with_roots", roots_primes},
               {"worst_parseval_rel_error", worst_parseval},
               {"worst_estimator_rel_gap", worst_gap},
               {"max_modulus_constant", max_constant},
               {"random_instances", prm.instances}};
  r.tables.push_back(std::move(t));
  if (prm.instances > 0) r.tables.push_back(std::move(inst));
  return r;
}

// ---------------------------------------------------------------------------
// Zeros of f_p on the unit circle.

RunReport run_zeros(const ZerosParams& prm) {
  RunReport r;
  r.command = "zeros";
  r.params = {{"pmin", prm.pmin},
              {"pmax", prm.pmax},
              {"refinement", prm.refinement},
              {"bisect_tol", prm.bisect_tol},
              {"zero_threshold", kZeroThreshold},
              {"agree_pmin", prm.agree_pmin},
              {"agree_pmax", prm.agree_pmax},
              {"fraction_min_p", prm.fraction_min_p},
              {"fraction_lo", prm.fraction_lo},
              {"fraction_hi", prm.fraction_hi}};

  const auto primes = odd_primes_in_range(std::max<std::uint64_t>(prm.pmin, 5), prm.pmax);
  struct Row {
    std::size_t count = 0, agreements = 0, node_zeros = 0, bisected = 0;
    double residual = 0.0, grid_err = 0.0;
  };
  std::vector<Row> rows(primes.size());
  parallel_for(primes.size(), prm.threads, [&](std::size_t i) {
    const Prime p = primes[i];
    Row row;
    const auto zs = locate_zeros(p, prm.refinement, prm.bisect_tol);
    row.count = zs.angles.size();
    row.node_zeros = zs.grid_node_zeros;
    row.bisected = zs.bisected;
    row.residual = zs.max_residual;
    row.agreements = sign_agreements(p);
    const auto grid = h_grid(p, prm.refinement);
    const double sp = std::sqrt(static_cast<double>(p.value()));
    for (std::uint64_t k = 1; k < p.value(); ++k) {
      const double expect = (k % 2 ? -1.0 : 1.0) * legendre(static_cast<std::int64_t>(k), p) * sp;
      row.grid_err = std::max(row.grid_err, std::abs(grid.values[k * prm.refinement] - expect) / sp);
    }
    rows[i] = row;
  });

  CsvTable t{"zeros",
             {"p", "refinement", "zeros", "lower_bound", "sign_agreements", "grid_node_zeros",
              "bisected", "max_residual", "grid_identity_error", "zero_fraction"},
             {}};
  std::vector<std::uint64_t> bad_count, bad_vs_agree, bad_grid, bad_fraction;
  double min_margin = 0.0, worst_grid = 0.0, worst_residual = 0.0;
  double min_frac = 1.0, max_frac = 0.0;
  bool first = true, fraction_checked = false;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i].value();
    const Row& w = rows[i];
    const std::size_t lb = (p - 3) / 2;
    const double frac = static_cast<double>(w.count) / static_cast<double>(p);
    t.add_row({fmt(p), fmt(static_cast<std::uint64_t>(prm.refinement)),
               fmt(static_cast<std::uint64_t>(w.count)), fmt(static_cast<std::uint64_t>(lb)),
               fmt(static_cast<std::uint64_t>(w.agreements)),
               fmt(static_cast<std::uint64_t>(w.node_zeros)),
               fmt(static_cast<std::uint64_t>(w.bisected)), fmt(w.residual), fmt(w.grid_err),
               fmt(frac)});
    const double margin = static_cast<double>(w.count) - static_cast<double>(lb);
    min_margin = first ? margin : std::min(min_margin, margin);
    first = false;
    if (w.count < lb) bad_count.push_back(p);
    if (w.count < w.agreements) bad_vs_agree.push_back(p);
    worst_grid = std::max(worst_grid, w.grid_err);
    if (!(w.grid_err <= kZeroThreshold)) bad_grid.push_back(p);
    worst_residual = std::max(worst_residual, w.residual);
    min_frac = std::min(min_frac, frac);
    max_frac = std::max(max_frac, frac);
    if (p >= prm.fraction_min_p) {
      fraction_checked = true;
      if (!(frac >= prm.fraction_lo && frac <= prm.fraction_hi)) bad_fraction.push_back(p);
    }
  }
  if (!primes.empty()) {
    r.add(check("L3.7-count", bad_count.empty(), min_margin, 0.0, 0.0,
                "measured: min over primes of count - (p-3)/2" +
                    (bad_count.empty() ? std::string() : "; " + violations_detail(bad_count, "violations"))));
    r.add(check("L3.7-count-vs-agreements", bad_vs_agree.empty(),
                static_cast<double>(bad_vs_agree.size()), 0.0, 0.0,
                violations_detail(bad_vs_agree, "violations")));
    r.add(check("L3.7-grid-identity", bad_grid.empty(), worst_grid, 0.0, kZeroThreshold,
                violations_detail(bad_grid, "violations")));
    r.add(observe("L3.7-max-residual", worst_residual, 0.0, "max |H_p| / sqrt(p) at located zeros"));
    if (fraction_checked) {
      r.add(check("S1-zero-fraction", bad_fraction.empty(), min_frac,
                  0.5 * (prm.fraction_lo + prm.fraction_hi), 0.5 * (prm.fraction_hi - prm.fraction_lo),
                  "measured: min count/p over primes >= " + std::to_string(prm.fraction_min_p) +
                      (bad_fraction.empty() ? std::string() : "; " + violations_detail(bad_fraction, "outside band"))));
    } else {
      r.add(observe("S1-zero-fraction", max_frac, 0.0, "max count/p; band applies only to large primes"));
    }
  }

  // The exact sign-agreement identity over its own (cheaper) range.
  const auto agree_primes = odd_primes_in_range(std::max<std::uint64_t>(prm.agree_pmin, 5), prm.agree_pmax);
  std::vector<std::size_t> agree(agree_primes.size());
  parallel_for(agree_primes.size(), prm.threads,
               [&](std::size_t i) { agree[i] = sign_agreements(agree_primes[i]); });
  CsvTable ta{"sign_agreements", {"p", "sign_agreements", "expected"}, {}};
  std::vector<std::uint64_t> bad_agree;
  for (std::size_t i = 0; i < agree_primes.size(); ++i) {
    const std::uint64_t p = agree_primes[i].value();
    ta.add_row({fmt(p), fmt(static_cast<std::uint64_t>(agree[i])), fmt((p - 3) / 2)});
    if (agree[i] != (p - 3) / 2) bad_agree.push_back(p);
  }
  if (!agree_primes.empty()) {
    r.add(check("L3.7-agreements", bad_agree.empty(), static_cast<double>(bad_agree.size()), 0.0,
                0.0, violations_detail(bad_agree, "mismatches")));
  }

  r.results = {{"primes", primes.size()},
               {"agreement_primes", agree_primes.size()},
               {"min_count_margin", min_margin},
               {"min_zero_fraction", primes.empty() ? 0.0 : min_frac},
               {"max_zero_fraction", max_frac},
               {"worst_grid_identity_error", worst_grid},
               {"worst_residual", worst_residual}};
  r.tables.push_back(std::move(t));
  r.tables.push_back(std::move(ta));
  return r;
}

// ---------------------------------------------------------------------------
// Arc classification: large centre values and small derivatives.

RunReport run_arcs(const ArcsParams& prm) {
  RunReport r;
  r.command = "arcs";
  r.params = {{"pmin", prm.pmin},
              {"pmax", prm.pmax},
              {"delta", prm.delta ? ordered_json(*prm.delta) : ordered_json("auto")},
              {"gamma", prm.gamma},
              {"eta", prm.eta ? ordered_json(*prm.eta) : ordered_json("auto")},
              {"refinement", prm.refinement}};

  const auto primes = odd_primes_in_range(std::max<std::uint64_t>(prm.pmin, 5), prm.pmax);
  struct Row {
    ArcClassification cls;
    bool schedule_met = true;
  };
  std::vector<Row> rows(primes.size());
  parallel_for(primes.size(), prm.threads, [&](std::size_t i) {
    const Prime p = primes[i];
    Row row;
    double delta = 0.0, gamma = prm.gamma;
    if (prm.delta) {
      delta = *prm.delta;
    } else {
      const auto s = auto_arc_schedule(p);
      delta = s.delta;
      gamma = s.gamma;
      row.schedule_met = s.target_met;
    }
    const double eta = prm.eta ? *prm.eta : std::min(0.9 * delta / gamma, kPi / 2 - 1e-6);
    const auto zs = locate_zeros(p, prm.refinement);
    row.cls = arc_classify(p, delta, gamma, eta, zs.angles);
    rows[i] = std::move(row);
  });

  CsvTable t{"arcs",
             {"p", "delta", "gamma", "eta", "n_big_center", "n_small_deriv", "n_qualifying",
              "inconsistent", "qualifying_fraction", "small_deriv_floor", "schedule_met"},
             {}};
  CsvTable detail{"arc_detail",
                  {"p", "k", "center_value", "deriv_max", "deriv_argmax", "nonvanishing",
                   "has_zero_in_Ik", "zero_in_eta_arc"},
                  {}};
  std::vector<std::uint64_t> bad_count, bad_consistent;
  double min_qual = 1.0, min_small_margin = 0.0;
  std::size_t unmet = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i].value();
    const auto& c = rows[i].cls;
    const double pd = static_cast<double>(p);
    const double floor = pd - pd / (2.0 * c.gamma * c.gamma);
    const double qual = static_cast<double>(c.n_qualifying) / pd;
    t.add_row({fmt(p), fmt(c.delta), fmt(c.gamma), fmt(c.eta),
               fmt(static_cast<std::uint64_t>(c.n_big_center)),
               fmt(static_cast<std::uint64_t>(c.n_small_deriv)),
               fmt(static_cast<std::uint64_t>(c.n_qualifying)),
               fmt(static_cast<std::uint64_t>(c.inconsistent)), fmt(qual), fmt(floor),
               fmt(rows[i].schedule_met)});
    if (prm.per_arc) {
      for (const auto& a : c.arcs) {
        detail.add_row({fmt(p), fmt(static_cast<std::uint64_t>(a.k)), fmt(a.center_value),
                        fmt(a.deriv_max), fmt(a.deriv_argmax), fmt(a.nonvanishing),
                        fmt(a.has_zero_in_Ik), fmt(a.zero_in_eta_arc)});
      }
    }
    const double margin = static_cast<double>(c.n_small_deriv) - floor;
    min_small_margin = i == 0 ? margin : std::min(min_small_margin, margin);
    if (margin < 0.0) bad_count.push_back(p);
    if (c.inconsistent != 0) bad_consistent.push_back(p);
    min_qual = std::min(min_qual, qual);
    unmet += !rows[i].schedule_met;
  }
  if (!primes.empty()) {
    r.add(check("L3.10-count", bad_count.empty(), min_small_margin, 0.0, 0.0,
                "measured: min of n_small_deriv - (p - p/(2 gamma^2))" +
                    (bad_count.empty() ? std::string() : "; " + violations_detail(bad_count, "violations"))));
    r.add(check("L3.11-consistency", bad_consistent.empty(),
                static_cast<double>(bad_consistent.size()), 0.0, 0.0,
                violations_detail(bad_consistent, "primes with a zero inside a nonvanishing arc")));
    r.add(observe("L3.11-qualifying-fraction", min_qual, 0.0, "min n_qualifying / p"));
    r.add(observe("L3.9-schedule-unmet", static_cast<double>(unmet), 0.0,
                  "primes where no scheduled delta reached the centre-value target"));
  }
  r.results = {{"primes", primes.size()},
               {"min_qualifying_fraction", primes.empty() ? 0.0 : min_qual},
               {"min_small_deriv_margin", min_small_margin}};
  r.tables.push_back(std::move(t));
  if (prm.per_arc) r.tables.push_back(std::move(detail));
  return r;
}

// ---------------------------------------------------------------------------
// Large sieve inequality: random instances plus the derivative chain.

RunReport run_sieve(const SieveParams& prm) {
  RunReport r;
  r.command = "sieve";
  r.params = {{"instances", prm.instances}, {"max_n", prm.max_n}, {"pmin", prm.pmin},
              {"pmax", prm.pmax},           {"gamma", prm.gamma}};
  r.seed = prm.seed;
  r.generator = std::string(SplitMix64::kName);
  if (prm.max_n < 1) throw DomainError("sieve: max_n must be at least 1");

  struct Inst {
    std::size_t n = 0, points = 0;
    SieveCheck c;
  };
  std::vector<Inst> inst(prm.instances);
  parallel_for(prm.instances, prm.threads, [&](std::size_t i) {
    SplitMix64 g(derive_seed(prm.seed, i));
    Inst out;
    out.n = 1 + g.next() % prm.max_n;
    std::vector<cplx> coeffs(2 * out.n + 1);
    for (auto& c : coeffs) {
      const double re = 2.0 * g.uniform() - 1.0;
      const double im = 2.0 * g.uniform() - 1.0;
      c = cplx(re, im);
    }
    const std::size_t m = 1 + g.next() % (4 * out.n + 2);
    std::vector<double> angles(m);
    for (auto& a : angles) a = kTwoPi * g.uniform();
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
    out.points = angles.size();
    out.c = large_sieve_check(coeffs, angles);
    inst[i] = out;
  });
  CsvTable tr{"sieve_random", {"instance", "n", "points", "separation", "lhs", "rhs", "holds"}, {}};
  std::size_t fails = 0;
  double max_ratio = 0.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto& s = inst[i];
    tr.add_row({fmt(static_cast<std::uint64_t>(i)), fmt(static_cast<std::uint64_t>(s.n)),
                fmt(static_cast<std::uint64_t>(s.points)), fmt(s.c.separation), fmt(s.c.lhs),
                fmt(s.c.rhs), fmt(s.c.holds)});
    fails += !s.c.holds;
    max_ratio = std::max(max_ratio, s.c.lhs / s.c.rhs);
  }
  if (prm.instances > 0) {
    r.add(check("L3.6-random", fails == 0, max_ratio, 1.0, kInequalitySlack,
                "measured: max lhs/rhs; violations " + std::to_string(fails)));
  }

  const auto primes = odd_primes_in_range(std::max<std::uint64_t>(prm.pmin, 5), prm.pmax);
  std::vector<DerivativeSieveChain> chains(primes.size());
  parallel_for(primes.size(), prm.threads,
               [&](std::size_t i) { chains[i] = derivative_sieve_chain(primes[i], prm.gamma); });
  CsvTable tc{"sieve_chain",
              {"p", "gamma", "bad_arcs", "count_bound", "bad_lhs", "bad_rhs", "centre_lhs",
               "centre_rhs", "l2_bound", "quartic_bound", "corrected_quartic_bound",
               "quartic_link_holds", "max_deriv_ratio", "chain_holds"},
              {}};
  std::vector<std::uint64_t> bad_centre, bad_chain, bad_bound;
  double max_count_ratio = 0.0, max_deriv_ratio = 0.0;
  std::size_t printed_quartic_failures = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i].value();
    const auto& c = chains[i];
    tc.add_row({fmt(p), fmt(c.gamma), fmt(static_cast<std::uint64_t>(c.bad_arcs)),
                fmt(c.count_bound), fmt(c.at_bad_points.lhs), fmt(c.at_bad_points.rhs),
                fmt(c.at_centres.lhs), fmt(c.at_centres.rhs), fmt(c.l2_bound),
                fmt(c.quartic_bound), fmt(c.corrected_quartic_bound), fmt(c.quartic_link_holds),
                fmt(c.max_deriv_ratio), fmt(c.chain_holds)});
    printed_quartic_failures += !c.quartic_link_holds;
    max_deriv_ratio = std::max(max_deriv_ratio, c.max_deriv_ratio);
    if (!c.at_centres.holds) bad_centre.push_back(p);
    if (!c.chain_holds) bad_chain.push_back(p);
    if (static_cast<double>(c.bad_arcs) > c.count_bound) bad_bound.push_back(p);
    max_count_ratio = std::max(max_count_ratio, static_cast<double>(c.bad_arcs) / c.count_bound);
  }
  if (!primes.empty()) {
    r.add(check("L3.6-centres", bad_centre.empty(), static_cast<double>(bad_centre.size()), 0.0,
                kInequalitySlack, violations_detail(bad_centre, "violations")));
    r.add(check("L3.10-chain", bad_chain.empty(), static_cast<double>(bad_chain.size()), 0.0,
                kInequalitySlack, violations_detail(bad_chain, "violations")));
    r.add(check("L3.10-count-bound", bad_bound.empty(), max_count_ratio, 1.0, 0.0,
                "measured: max bad_arcs / (p / (2 gamma^2))" +
                    (bad_bound.empty() ? std::string() : "; " + violations_detail(bad_bound, "violations"))));
    r.add(observe("L3.10-printed-quartic-constant", static_cast<double>(printed_quartic_failures), 0.0,
                  "primes where 3p(p-1)p(2p-1)/6 exceeds p^4/2; the chain is checked against p^4"));
    r.add(observe("L3.10-max-derivative-ratio", max_deriv_ratio, prm.gamma,
                  "max over primes and arcs of sampled max |f_p'| / p^{3/2}"));
  }
  r.results = {{"random_instances", prm.instances},
               {"random_max_ratio", max_ratio},
               {"chain_primes", primes.size()},
               {"max_count_ratio", max_count_ratio}};
  if (prm.instances > 0) r.tables.push_back(std::move(tr));
  r.tables.push_back(std::move(tc));
  return r;
}

// ---------------------------------------------------------------------------
// The distribution constant c_delta.

RunReport run_cdelta(const CdeltaParams& prm) {
  RunReport r;
  r.command = "cdelta";
  r.params = {{"deltas", prm.deltas}, {"tol", prm.tol}, {"reflection_tol", prm.reflection_tol}};

  CsvTable t{"cdelta",
             {"delta", "value", "value_reflected", "reflection_error", "truncation_K",
              "cutoff_X", "tail_bound", "evaluations"},
             {}};
  ordered_json values = ordered_json::array();
  double worst_reflection = 0.0;
  bool in_range = true;
  std::vector<double> bad;
  for (double d : prm.deltas) {
    const auto a = c_delta(d, prm.tol);
    const auto b = c_delta(-d, prm.tol);
    const double err = std::abs(a.value + b.value - 1.0);
    worst_reflection = std::max(worst_reflection, err);
    if (!(err <= prm.reflection_tol)) bad.push_back(d);
    in_range = in_range && a.value >= 0.0 && a.value <= 1.0 && b.value >= 0.0 && b.value <= 1.0;
    t.add_row({fmt(d), fmt(a.value), fmt(b.value), fmt(err),
               fmt(static_cast<std::uint64_t>(a.truncation_K)), fmt(a.cutoff_X), fmt(a.tail_bound),
               fmt(static_cast<std::uint64_t>(a.evaluations))});
    values.push_back({{"delta", d},
                      {"value", a.value},
                      {"truncation_K", a.truncation_K},
                      {"cutoff_X", a.cutoff_X},
                      {"quad_tol", a.quad_tol},
                      {"tail_bound", a.tail_bound},
                      {"evaluations", a.evaluations},
                      {"value_reflected", b.value},
                      {"reflection_error", err}});
  }
  std::string detail;
  for (double d : bad) detail += (detail.empty() ? "deltas failing: " : " ") + fmt(d);
  if (!prm.deltas.empty()) {
    r.add(check("L3.8-reflection", bad.empty(), worst_reflection, 0.0, prm.reflection_tol, detail));
    r.add(check("L3.8-range", in_range, in_range ? 1.0 : 0.0, 1.0, 0.0, "all values in [0, 1]"));
  }
  const auto small = c_delta(0.001, prm.tol);
  r.add(check("L3.9-small-delta", std::abs(small.value - 0.5) < 0.01, small.value, 0.5, 0.01,
              "c_delta at delta = 0.001"));

  if (prm.deltas.size() == 1) {
    for (const auto& [k, v] : values[0].items()) r.results[k] = v;
  }
  r.results["values"] = std::move(values);
  r.results["calibrated_envelope_c1"] = calibrated_envelope_c1();
  r.results["envelope_c1"] = kEnvelopeC1;
  r.tables.push_back(std::move(t));
  return r;
}

RunReport run_distribution(const DistributionParams& prm) {
  RunReport r;
  r.command = "distribution";
  r.params = {{"p", prm.p}, {"delta", prm.delta}, {"band", prm.band}, {"tol", prm.tol}};
  const Prime p(prm.p);
  const auto frac = empirical_midpoint_fraction(p, prm.delta);
  const auto c = c_delta(prm.delta, prm.tol);
  const double diff = std::abs(frac.fraction - c.value);
  r.add(check("L3.8-distribution", diff <= prm.band, frac.fraction, c.value, prm.band,
              "empirical midpoint fraction against c_delta"));
  r.results = {{"fraction", frac.fraction},
               {"below", frac.below},
               {"ties", frac.ties},
               {"c_delta", c.value},
               {"abs_difference", diff}};
  return r;
}

RunReport run_ensemble(const EnsembleParams& prm) {
  RunReport r;
  r.command = "ensemble";
  r.params = {{"n", prm.n}, {"q", prm.q}, {"samples", prm.samples}, {"band", prm.band}};
  r.seed = prm.seed;
  r.generator = std::string(SplitMix64::kName);
  const auto a = littlewood_ensemble(prm.n, prm.q, prm.samples, prm.seed, prm.threads);
  const auto b = littlewood_ensemble(prm.n, prm.q, prm.samples, prm.seed, prm.threads);
  const double limit = ensemble_limit(prm.q);
  r.add(check("S1-ensemble-limit", std::abs(a.mean_ratio - limit) <= prm.band, a.mean_ratio, limit,
              prm.band, prm.q == 0.0 ? "mean M_0/sqrt(n)" : "mean M_q/sqrt(n)"));
  r.add(check("S1-ensemble-determinism", a.mean_ratio == b.mean_ratio && a.stderr_ratio == b.stderr_ratio,
              b.mean_ratio, a.mean_ratio, 0.0, "second run under the same seed"));
  r.results = {{"mean_ratio", a.mean_ratio},
               {"stderr_ratio", a.stderr_ratio},
               {"samples", a.samples},
               {"limit", limit}};
  return r;
}

// ---------------------------------------------------------------------------
// Rudin-Shapiro pairs.

RunReport run_rs(const RsParams& prm) {
  RunReport r;
  r.command = "rs";
  r.params = {{"nmax", prm.nmax},
              {"tol", prm.tol},
              {"floor", prm.floor},
              {"roots_max_degree", prm.roots_max_degree}};
  CsvTable t{"rs",
             {"n", "N", "degree", "coefficients_ok", "identity_rel_error", "m0", "m0_method",
              "m0_over_sqrtN"},
             {}};
  bool coeff_ok = true, degree_ok = true;
  double worst_identity = 0.0, min_ratio = 0.0;
  for (unsigned n = 0; n <= prm.nmax; ++n) {
    const auto [P, Q] = rudin_shapiro(n);
    const std::size_t N = std::size_t{1} << n;
    bool ok = true;
    for (auto c : P.coeffs()) ok = ok && (c == 1 || c == -1);
    for (auto c : Q.coeffs()) ok = ok && (c == 1 || c == -1);
    ok = ok && P.coeffs().size() == N && Q.coeffs().size() == N;
    coeff_ok = coeff_ok && ok;
    degree_ok = degree_ok && P.degree() == N - 1 && Q.degree() == N - 1;
    const auto gp = eval_roots_of_unity(P, 4 * N, 0.0);
    const auto gq = eval_roots_of_unity(Q, 4 * N, 0.0);
    const double target = std::ldexp(1.0, static_cast<int>(n) + 1);
    double err = 0.0;
    for (std::size_t j = 0; j < 4 * N; ++j) {
      err = std::max(err, std::abs(std::norm(gp.values[j]) + std::norm(gq.values[j]) - target) / target);
    }
    worst_identity = std::max(worst_identity, err);
    double m0 = 0.0;
    std::string method;
    if (P.degree() <= prm.roots_max_degree) {
      m0 = mahler_measure_roots(P.complex_coeffs());
      method = to_string(MahlerMethod::RootsJensen);
    } else {
      m0 = m0_uniform(P, Arc{}, default_m0_samples(P.degree())).value;
      method = to_string(MahlerMethod::UniformQuadrature);
    }
    const double ratio = m0 / std::sqrt(static_cast<double>(N));
    min_ratio = n == 0 ? ratio : std::min(min_ratio, ratio);
    t.add_row({fmt(static_cast<std::uint64_t>(n)), fmt(static_cast<std::uint64_t>(N)),
               fmt(static_cast<std::uint64_t>(P.degree())), fmt(ok), fmt(err), fmt(m0), method,
               fmt(ratio)});
  }
  r.add(check("T1.5-coefficients", coeff_ok, coeff_ok ? 1.0 : 0.0, 1.0, 0.0,
              "all coefficients of P_n and Q_n in {-1, 1}"));
  r.add(check("T1.5-degree", degree_ok, degree_ok ? 1.0 : 0.0, 1.0, 0.0, "deg P_n = deg Q_n = 2^n - 1"));
  r.add(check("T1.5-identity", worst_identity <= prm.tol, worst_identity, 0.0, prm.tol,
              "|P_n|^2 + |Q_n|^2 = 2^{n+1} on a 4N grid"));
  r.add(check("T1.5-m0-floor", min_ratio >= prm.floor, min_ratio, prm.floor, 0.0,
              "min over n of M_0(P_n)/sqrt(N)"));
  r.results = {{"orders", prm.nmax + 1},
               {"worst_identity_rel_error", worst_identity},
               {"min_m0_over_sqrtN", min_ratio}};
  r.tables.push_back(std::move(t));
  return r;
}

// ---------------------------------------------------------------------------
// Per-prime certificates for the lower bound on M_0(f_p).

RunReport run_certify(const CertifyParams& prm) {
  RunReport r;
  r.command = "certify";
  r.params = {{"pmin", prm.pmin},
              {"pmax", prm.pmax},
              {"eta", prm.eta ? ordered_json(*prm.eta) : ordered_json("auto")},
              {"refinement", prm.refinement},
              {"bisect_tol", prm.bisect_tol},
              {"roots_max_p", prm.roots_max_p},
              {"asymptotic_min_p", prm.asymptotic_min_p}};
  if (prm.pmin > prm.pmax) throw DomainError("certify: pmin must not exceed pmax");
  CertificateOptions opts;
  opts.eta = prm.eta;
  opts.refinement = prm.refinement;
  opts.bisect_tol = prm.bisect_tol;
  opts.roots_max_p = prm.roots_max_p;
  opts.threads = prm.threads;
  const auto sweep = certificate_sweep(prm.pmin, prm.pmax, opts);

  CsvTable t{"certificates",
             {"p", "m", "g_at_one", "eta", "delta", "eta_auto", "schedule_met", "zeros_located",
              "k_zeros", "k_over_p", "excluded_at_one", "excluded_forbidden",
              "excluded_unverified", "gauss_product", "gauss_expected", "unity_lhs", "unity_rhs",
              "unity_holds", "bound", "direct_m0", "direct_method", "quadrature_m0",
              "estimator_gap", "ratio", "jensen_bound", "degenerate", "holds", "error"},
             {}};
  std::vector<std::uint64_t> bad_hold, bad_ratio, bad_k, bad_mult, bad_jensen, bad_gauss,
      bad_unity, errors, degenerate;
  double min_ratio = 0.0, min_k = 0.0, min_mult = 1.0, worst_gauss = 0.0, max_gap = 0.0;
  bool any_asym = false;
  for (const auto& row : sweep.rows) {
    if (!row.certificate) {
      errors.push_back(row.p);
      std::vector<std::string> cells(t.header.size());
      cells.front() = fmt(row.p);
      cells.back() = row.error;
      for (char& ch : cells.back()) {
        if (ch == ',' || ch == '\n') ch = ';';
      }
      t.add_row(std::move(cells));
      continue;
    }
    const auto& c = *row.certificate;
    const double pd = static_cast<double>(c.p);
    const double kp = static_cast<double>(c.k_zeros) / pd;
    const double mult = std::pow(pd, -static_cast<double>(c.m) / pd);
    const double gauss_err = rel(c.gauss_product, c.gauss_expected);
    t.add_row({fmt(c.p), fmt(static_cast<std::uint64_t>(c.m)), fmt(c.g_at_one), fmt(c.eta),
               fmt(c.delta), fmt(c.eta_auto), fmt(c.schedule_met),
               fmt(static_cast<std::uint64_t>(c.zeros_located)),
               fmt(static_cast<std::uint64_t>(c.k_zeros)), fmt(kp),
               fmt(static_cast<std::uint64_t>(c.excluded_at_one)),
               fmt(static_cast<std::uint64_t>(c.excluded_forbidden)),
               fmt(static_cast<std::uint64_t>(c.excluded_unverified)), fmt(c.gauss_product),
               fmt(c.gauss_expected), fmt(c.unity_lhs), fmt(c.unity_rhs), fmt(c.unity_holds),
               fmt(c.bound), fmt(c.direct_m0), c.direct_method, fmt(c.quadrature_m0),
               fmt(c.estimator_gap), fmt(c.ratio), fmt(c.jensen_bound), fmt(c.degenerate),
               fmt(c.holds), ""});
    if (!c.holds) bad_hold.push_back(c.p);
    if (c.degenerate) degenerate.push_back(c.p);
    if (!c.unity_holds) bad_unity.push_back(c.p);
    if (!(c.direct_m0 <= c.jensen_bound * (1.0 + kInequalitySlack))) bad_jensen.push_back(c.p);
    worst_gauss = std::max(worst_gauss, gauss_err);
    if (!(gauss_err <= 1e-8)) bad_gauss.push_back(c.p);
    max_gap = std::max(max_gap, c.estimator_gap);
    if (c.p >= prm.asymptotic_min_p) {
      min_ratio = any_asym ? std::min(min_ratio, c.ratio) : c.ratio;
      min_k = any_asym ? std::min(min_k, kp) : kp;
      min_mult = std::min(min_mult, mult);
      any_asym = true;
      if (!(c.ratio > 0.5)) bad_ratio.push_back(c.p);
      if (!(kp >= 0.25)) bad_k.push_back(c.p);
      if (!(mult >= 0.9 && mult <= 1.0)) bad_mult.push_back(c.p);
    }
  }

  if (!sweep.rows.empty()) {
    r.add(check("T2.1-certificate", bad_hold.empty() && errors.empty(),
                static_cast<double>(bad_hold.size() + errors.size()), 0.0, 1e-6,
                violations_detail(bad_hold, "bound exceeds direct M_0") +
                    (errors.empty() ? std::string() : " " + violations_detail(errors, "pipeline errors"))));
    r.add(check("L3.1-gauss-product", bad_gauss.empty(), worst_gauss, 0.0, 1e-8,
                violations_detail(bad_gauss, "violations")));
    r.add(check("L3.3-fekete", bad_unity.empty(), static_cast<double>(bad_unity.size()), 0.0,
                kInequalitySlack, violations_detail(bad_unity, "violations")));
    r.add(check("S1-jensen", bad_jensen.empty(), static_cast<double>(bad_jensen.size()), 0.0,
                kInequalitySlack, violations_detail(bad_jensen, "violations")));
    r.add(observe("T2.1-degenerate", static_cast<double>(degenerate.size()), 0.0,
                  violations_detail(degenerate, "certificates with no usable zeros")));
    r.add(observe("T2.1-estimator-gap", max_gap, 0.0, "max relative gap between M_0 estimators"));
    if (any_asym) {
      r.add(check("T2.1-ratio", bad_ratio.empty(), min_ratio, 0.5, 0.0,
                  "min M_0(f_p)/sqrt(p)" +
                      (bad_ratio.empty() ? std::string() : "; " + violations_detail(bad_ratio, "violations"))));
      r.add(check("T2.1-k-fraction", bad_k.empty(), min_k, 0.25, 0.0,
                  "min k_zeros/p" +
                      (bad_k.empty() ? std::string() : "; " + violations_detail(bad_k, "violations"))));
      r.add(check("T2.1-multiplicity-factor", bad_mult.empty(), min_mult, 0.9, 0.0,
                  "min p^{-m/p}" +
                      (bad_mult.empty() ? std::string() : "; " + violations_detail(bad_mult, "violations"))));
    }
  }
  r.results = {{"primes", sweep.summary.primes},
               {"failures", sweep.summary.failures},
               {"min_ratio", sweep.summary.min_ratio},
               {"min_k_over_p", sweep.summary.min_k_over_p},
               {"max_m", sweep.summary.max_m}};
  r.tables.push_back(std::move(t));
  return r;
}

// ---------------------------------------------------------------------------

RunReport run_full(std::uint64_t seed, unsigned threads) {
  RunReport r;
  r.command = "report";
  r.seed = seed;
  r.generator = std::string(SplitMix64::kName);
  r.results = ordered_json::object();
  auto add = [&](RunReport sub, const char* name) {
    sub.command = name;
    r.merge(sub);
  };
  GaussParams gauss;
  gauss.threads = threads;
  add(run_gauss(gauss), "gauss");
  MahlerParams mahler;
  mahler.seed = seed;
  mahler.threads = threads;
  add(run_mahler(mahler), "mahler");
  ZerosParams zeros;
  zeros.threads = threads;
  add(run_zeros(zeros), "zeros");
  ArcsParams arcs;
  arcs.threads = threads;
  add(run_arcs(arcs), "arcs");
  SieveParams sieve;
  sieve.seed = seed;
  sieve.threads = threads;
  add(run_sieve(sieve), "sieve");
  CdeltaParams cdelta;
  cdelta.deltas = {0.1, 0.25, 0.5, 1.0};
  add(run_cdelta(cdelta), "cdelta");
  add(run_distribution(DistributionParams{}), "distribution");
  EnsembleParams ens;
  ens.seed = seed;
  ens.threads = threads;
  add(run_ensemble(ens), "ensemble_n32_q2");
  ens.n = 64;
  ens.q = 0.0;
  add(run_ensemble(ens), "ensemble_n64_q0");
  add(run_rs(RsParams{}), "rs");
  CertifyParams cert;
  cert.pmin = 11;
  cert.threads = threads;
  add(run_certify(cert), "certify");
  return r;
}

}  // namespace fekete
