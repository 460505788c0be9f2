#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fekete/chirp.hpp"
#include "fekete/numtheory.hpp"

namespace fekete {

// Throughout this module t is measured in turns: the point of the unit circle
// is exp(2 pi i t), and H_p is the real renormalisation of f_p there:
//   H_p(t) = 2 sum_{a=1}^{(p-1)/2} (a|p) cos((2a - p) pi t)   p = 1 mod 4
//   H_p(t) = 2 sum_{a=1}^{(p-1)/2} (a|p) sin((2a - p) pi t)   p = 3 mod 4
// so that |H_p(t)| = |f_p(exp(2 pi i t))| and H_p(t + 1) = -H_p(t).

/// H_p(t) from the half-length cosine/sine sum.
double h_eval(Prime p, double t);

/// H_p(t) from f_p itself: c * exp(-i pi p t) * f_p(exp(2 pi i t)) with
/// c = 1 or -i. The imaginary part is rounding noise.
cplx h_eval_complex(Prime p, double t);

struct HGrid {
  Prime p;
  std::size_t refinement = 1;
  std::vector<double> values;  // values[j] = H_p(j / (N p))
  double tol_zero = 0.0;       // |H| below this counts as an exact zero
  double max_imag = 0.0;       // largest discarded imaginary part
};

/// Relative zero threshold: |H| < kZeroThreshold * sqrt(p) is a zero.
inline constexpr double kZeroThreshold = 1e-8;

/// H_p on the N p-point grid, through one chirp evaluation of f_p.
HGrid h_grid(Prime p, std::size_t refinement);

/// Number of k in [1, p-2] with (k|p) = (k+1|p). Requires p >= 5.
std::size_t sign_agreements(Prime p);

struct ZeroSet {
  std::vector<double> angles;  // turns in [0, 1), ascending
  std::size_t grid_node_zeros = 0;
  std::size_t bisected = 0;
  double max_residual = 0.0;  // max |H_p(t)| / sqrt(p) at the returned angles
  double bisect_tol = 0.0;
};

/// Zeros of H_p in [0, 1) found from sign changes on the N p-point grid and
/// refined by bisection until the bracket is narrower than bisect_tol (at most
/// 60 halvings). Grid nodes under the zero threshold are reported once as they
/// are; zeros of even multiplicity between nodes are not seen.
ZeroSet locate_zeros(Prime p, std::size_t refinement, double bisect_tol = 1e-12);

/// Angles in radians of the located zeros.
std::vector<double> to_radians(std::span<const double> turns);

struct ArcReport {
  std::size_t k = 0;
  double center_value = 0.0;  // |f_p(exp(i (2k+1) pi / p))|
  double deriv_max = 0.0;     // sampled max |f_p'| over |t - (2k+1)pi/p| <= pi/(2p)
  double deriv_argmax = 0.0;  // radians
  bool nonvanishing = false;  // verdict for the open arc of half-width eta/p
  bool has_zero_in_Ik = false;     // located zero with k/p < t < (k+1)/p
  bool zero_in_eta_arc = false;    // located zero within eta/p of the centre
};

struct ArcClassification {
  double delta = 0.0;
  double gamma = 0.0;
  double eta = 0.0;
  std::size_t samples_per_arc = 33;
  std::vector<ArcReport> arcs;
  std::size_t n_big_center = 0;   // centre value > delta sqrt(p)
  std::size_t n_small_deriv = 0;  // sampled derivative max <= gamma p^{3/2}
  std::size_t n_qualifying = 0;   // both
  std::size_t inconsistent = 0;   // nonvanishing arcs holding a located zero
};

/// Per-arc centre values, sampled derivative maxima (33 points per arc) and
/// nonvanishing verdicts. Requires delta > 0, gamma > 0 and
/// 0 < eta < min(delta/gamma, pi/2). `zeros` (turns) fills the zero flags.
ArcClassification arc_classify(Prime p, double delta, double gamma, double eta,
                               std::span<const double> zeros = {});

/// delta/gamma/eta chosen per prime for the certificate pipeline.
struct ArcSchedule {
  double epsilon = 0.125;
  double gamma = 0.0;
  double delta = 0.0;
  double eta = 0.0;
  std::size_t n_big_center = 0;
  bool target_met = false;  // n_big_center >= (1 - epsilon/2) p
};

/// epsilon = 1/8, gamma = sqrt(8), delta the largest of {0.5, 0.4, 0.3, 0.2,
/// 0.1, 0.05} with n_big_center >= (1 - epsilon/2) p (0.05 if none is),
/// eta = min(0.9 delta/gamma, pi/2 - 1e-6).
ArcSchedule auto_arc_schedule(Prime p);

struct SieveCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double separation = 0.0;
  bool holds = false;
};

/// Large sieve inequality for P(z) = sum_{k=-n}^{n} a_k z^k given as the
/// 2n+1 coefficients a_{-n..n}, at angles 0 <= t_1 < ... < t_m <= 2 pi.
/// The L2 integral is taken exactly from the coefficients.
SieveCheck large_sieve_check(std::span<const cplx> coeffs, std::span<const double> angles);

struct DerivativeSieveChain {
  double gamma = 0.0;
  std::size_t bad_arcs = 0;      // arcs whose sampled |f_p'| reaches gamma p^{3/2}
  double count_bound = 0.0;      // gamma^{-2} p / 2
  SieveCheck at_bad_points;      // sieve at one maximising point per bad arc
  SieveCheck at_centres;         // sieve at all p arc centres
  double l2_bound = 0.0;         // 3p (p-1)p(2p-1)/6
  double quartic_bound = 0.0;    // p^4 / 2, the constant as printed
  double corrected_quartic_bound = 0.0;  // p^4: what 3p (p-1)p(2p-1)/6 actually obeys
  bool quartic_link_holds = false;       // l2_bound <= p^4 / 2 (false for every p >= 3)
  double max_deriv_ratio = 0.0;  // max over arcs of sampled max |f_p'| / p^{3/2}
  bool chain_holds = false;      // every link, with the corrected final constant
};

/// Large sieve applied to z^{(3-p)/2} f_p'(z), reproducing the bound on the
/// number of arcs with a large derivative.
DerivativeSieveChain derivative_sieve_chain(Prime p, double gamma);

struct ModulusRange {
  double max_val = 0.0;
  double min_val = 0.0;
};

/// Extremes of |f_p| over the `samples`-point midpoint grid. samples >= 4p.
ModulusRange max_modulus(Prime p, std::size_t samples);

}  // namespace fekete
