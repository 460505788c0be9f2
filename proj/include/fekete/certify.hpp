#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fekete/numtheory.hpp"

namespace fekete {

/// Numeric replay, for one prime, of the lower bound
///   M_0(f_p) = M_0(g_p) >= (2 cos(eta/2)^{k/p})^{-1} p^{(p-1)/(2p)} p^{-m/p}
/// where f_p = (z - 1)^m g_p and k counts circle zeros of g_p kept clear of the
/// arcs of half-width eta/p around the odd multiples of pi/p.
struct Certificate {
  std::uint64_t p = 0;
  unsigned m = 0;               // multiplicity of the root 1
  std::int64_t g_at_one = 0;    // g_p(1), a nonzero integer
  double eta = 0.0;
  double delta = 0.0;           // schedule delta when eta was chosen automatically
  bool eta_auto = false;
  bool schedule_met = false;
  std::size_t zeros_located = 0;
  std::size_t k_zeros = 0;
  std::size_t excluded_at_one = 0;
  std::size_t excluded_forbidden = 0;
  std::size_t excluded_unverified = 0;
  double gauss_product = 0.0;   // (prod_{j=1}^{p-1} |f_p(zeta^j)|)^{1/p}
  double gauss_expected = 0.0;  // p^{(p-1)/(2p)}
  double unity_lhs = 0.0;       // (prod_{j<p} |g_p(zeta^j)|)^{1/p}
  double unity_rhs = 0.0;       // 2 cos(eta/2)^{k/p} M_0(g_p)
  bool unity_holds = false;
  double bound = 0.0;
  double direct_m0 = 0.0;
  std::string direct_method;
  double quadrature_m0 = 0.0;
  double estimator_gap = 0.0;   // |roots - quadrature| / roots when both ran
  double ratio = 0.0;           // direct_m0 / sqrt(p)
  double jensen_bound = 0.0;    // sqrt(p - 1)
  bool degenerate = false;      // k_zeros == 0
  bool holds = false;           // direct_m0 >= bound (1 - 1e-6)
};

struct CertificateOptions {
  std::optional<double> eta;    // nullopt: automatic schedule
  std::size_t refinement = 8;
  double bisect_tol = 1e-12;
  std::size_t roots_max_p = 512;
  unsigned threads = 1;
};

/// Requires p >= 11 and, when given, eta in (0, pi/2).
Certificate build_certificate(Prime p, const CertificateOptions& opts = {});

struct SweepRow {
  std::uint64_t p = 0;
  std::optional<Certificate> certificate;
  std::string error;  // set when the pipeline threw for this prime
};

struct SweepSummary {
  std::size_t primes = 0;
  std::size_t failures = 0;  // errors plus certificates that do not hold
  double min_ratio = 0.0;
  double min_k_over_p = 0.0;
  unsigned max_m = 0;
};

struct Sweep {
  std::vector<SweepRow> rows;
  SweepSummary summary;
};

/// One certificate per prime in [pmin, pmax] (primes below 11 are skipped).
/// Per-prime errors are recorded and the sweep continues.
Sweep certificate_sweep(std::uint64_t pmin, std::uint64_t pmax, const CertificateOptions& opts = {});

}  // namespace fekete
