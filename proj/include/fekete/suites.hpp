#pragma once

// One verification suite per CLI subcommand. Each suite is deterministic for
// fixed parameters; `threads` only changes wall time.

#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "fekete/report.hpp"

namespace fekete {

inline constexpr std::uint64_t kDefaultSeed = 1;

struct GaussParams {
  std::uint64_t pmin = 3;
  std::uint64_t pmax = 1009;
  double tol = 1e-8;  // relative to sqrt(p)
  unsigned threads = 1;
};

struct MahlerParams {
  std::uint64_t pmin = 3;
  std::uint64_t pmax = 1009;
  std::uint64_t roots_pmax = 199;  // root-based estimator up to here
  std::size_t samples = 16384;     // M_0 quadrature nodes
  double agree_tol = 1e-3;         // estimator cross-validation, relative
  double parseval_tol = 1e-10;
  std::size_t instances = 1000;    // random Littlewood inequality suite
  std::size_t max_degree = 64;
  std::uint64_t suite_p = 67;
  double suite_eta = 0.5;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
};

struct ZerosParams {
  std::uint64_t pmin = 11;
  std::uint64_t pmax = 1009;
  std::size_t refinement = 4;
  double bisect_tol = 1e-12;
  std::uint64_t agree_pmin = 5;
  std::uint64_t agree_pmax = 5000;
  std::uint64_t fraction_min_p = 10000;  // zero-fraction band applies from here
  double fraction_lo = 0.49;
  double fraction_hi = 0.52;
  unsigned threads = 1;
};

struct ArcsParams {
  std::uint64_t pmin = 101;
  std::uint64_t pmax = 499;
  std::optional<double> delta;  // nullopt: automatic schedule
  double gamma = 2.0 * std::numbers::sqrt2;
  std::optional<double> eta;    // nullopt: 0.9 delta / gamma
  std::size_t refinement = 8;
  bool per_arc = false;         // also emit one CSV row per arc
  unsigned threads = 1;
};

struct SieveParams {
  std::size_t instances = 1000;
  std::size_t max_n = 32;        // trigonometric degree of random instances
  std::uint64_t pmin = 5;
  std::uint64_t pmax = 499;
  double gamma = 2.0 * std::numbers::sqrt2;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
};

struct CdeltaParams {
  std::vector<double> deltas{0.5};
  double tol = 1e-8;
  double reflection_tol = 2e-8;
};

struct DistributionParams {
  std::uint64_t p = 10007;
  double delta = 0.5;
  double band = 0.05;
  double tol = 1e-8;
};

struct EnsembleParams {
  std::size_t n = 32;
  double q = 2.0;
  std::size_t samples = 2000;
  double band = 0.05;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
};

struct RsParams {
  unsigned nmax = 12;
  double tol = 1e-8;
  double floor = 0.5;
  std::size_t roots_max_degree = 1024;
};

struct CertifyParams {
  std::uint64_t pmin = 101;
  std::uint64_t pmax = 499;
  std::optional<double> eta;
  std::size_t refinement = 8;
  double bisect_tol = 1e-12;
  std::uint64_t roots_max_p = 512;
  std::uint64_t asymptotic_min_p = 101;  // ratio, k/p and multiplicity bands apply from here
  unsigned threads = 1;
};

/// Limit of the normalised ensemble mean: Gamma(1 + q/2)^{1/q}, or
/// exp(-gamma_E / 2) for q = 0.
double ensemble_limit(double q);

RunReport run_gauss(const GaussParams& prm);
RunReport run_mahler(const MahlerParams& prm);
RunReport run_zeros(const ZerosParams& prm);
RunReport run_arcs(const ArcsParams& prm);
RunReport run_sieve(const SieveParams& prm);
RunReport run_cdelta(const CdeltaParams& prm);
RunReport run_distribution(const DistributionParams& prm);
RunReport run_ensemble(const EnsembleParams& prm);
RunReport run_rs(const RsParams& prm);
RunReport run_certify(const CertifyParams& prm);

/// Every suite at its default parameters, merged into one report.
RunReport run_full(std::uint64_t seed, unsigned threads);

}  // namespace fekete
