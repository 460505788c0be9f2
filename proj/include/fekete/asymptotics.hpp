#pragma once

#include <cstddef>

#include "fekete/numtheory.hpp"

namespace fekete {

struct CProductValue {
  double value = 0.0;
  std::size_t truncation_K = 0;
  double remainder_bound = 0.0;  // bound on the neglected part of log C(x)
};

/// C(x) = prod_{k>=0} cos^2(2x/(2k+1)).
///
/// Factors k <= K are multiplied in log space; the tail k > K is summed
/// analytically from the Taylor series of log cos^2 through u^8, with the
/// odd-reciprocal power sums taken by Euler-Maclaurin. K starts at
/// max(64, ceil(20 x)) and doubles until the u^10 remainder bound is below tol.
/// Returns exactly 0 when a factor vanishes or the product underflows.
CProductValue c_product(double x, double tol = 1e-12);

/// c1 with C(x) <= c1 2^{-3x/pi} for x >= 1: at least 3x/(2 pi) - 1 factors
/// have |cos| < 1/2, giving c1 = 4.
inline constexpr double kEnvelopeC1 = 4.0;

/// C(1) 2^{3/pi}: the envelope constant fitted at x = 1.
double calibrated_envelope_c1();

struct CdeltaResult {
  double delta = 0.0;
  double value = 0.0;
  std::size_t truncation_K = 0;  // largest K used by any integrand evaluation
  double cutoff_X = 0.0;
  double quad_tol = 0.0;
  double tail_bound = 0.0;       // certified bound on (1/pi) int_X^inf |integrand|
  std::size_t evaluations = 0;
};

/// c_delta = 1/2 + (1/pi) int_0^inf sin(delta pi x) C(x) dx/x.
///
/// The integral is cut at X, the first multiple of 1/2 where the exponential
/// envelope bounds the tail by tol/4, and [0, X] is split at multiples of
/// 1/|delta| and integrated by adaptive Simpson. Requires delta != 0 and
/// 1e-12 < tol < 1e-2; throws NumericalFailure if refinement does not settle.
CdeltaResult c_delta(double delta, double tol = 1e-8);

struct MidpointFraction {
  double fraction = 0.0;
  std::size_t below = 0;  // k in 1..p with H_p((k + 1/2)/p) < delta sqrt(p)
  std::size_t ties = 0;   // |H_p - delta sqrt(p)| within 1e-9 sqrt(p), counted as not below
};

/// Share of midpoints (k + 1/2)/p, k = 1..p, where H_p < delta sqrt(p).
/// Requires p >= 100.
MidpointFraction empirical_midpoint_fraction(Prime p, double delta);

}  // namespace fekete
