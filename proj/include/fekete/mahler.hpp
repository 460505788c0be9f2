#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "fekete/chirp.hpp"
#include "fekete/numtheory.hpp"
#include "fekete/polynomial.hpp"

namespace fekete {

/// Closed arc [alpha, beta] of the unit circle, in radians.
struct Arc {
  double alpha = 0.0;
  double beta = 2.0 * std::numbers::pi;
};

enum class MahlerMethod { UniformQuadrature, RootsJensen, ProductBound };

const char* to_string(MahlerMethod m) noexcept;

struct MahlerEstimate {
  double value = 0.0;
  MahlerMethod method = MahlerMethod::UniformQuadrature;
  Arc arc;
  std::size_t samples_or_iters = 0;
  // Quadrature: |estimate - estimate on the even-indexed half of the nodes|.
  // Roots: max |Q(root)| over the computed roots.
  double residual = 0.0;
  // Quadrature nodes that sat on (numerical) zeros of Q and were moved.
  std::size_t perturbed_nodes = 0;
};

/// Default quadrature size for M_0: max(2^14, 64 * degree).
std::size_t default_m0_samples(std::size_t degree) noexcept;

/// ((1/M) sum_j |Q(e^{i t_j})|^q)^{1/q} at midpoint nodes
/// t_j = alpha + (beta - alpha)(j + 1/2)/M. Requires q > 0, M >= 16 and
/// alpha < beta <= alpha + 2 pi.
MahlerEstimate mq_uniform(std::span<const cplx> coeffs, double q, Arc arc, std::size_t samples);
MahlerEstimate mq_uniform(const IntPolynomial& p, double q, Arc arc, std::size_t samples);

/// exp of the midpoint-rule mean of log|Q| over the arc. Nodes where
/// |Q| < 1e-300 are shifted by a quarter step and counted in perturbed_nodes.
MahlerEstimate m0_uniform(std::span<const cplx> coeffs, Arc arc, std::size_t samples);
MahlerEstimate m0_uniform(const IntPolynomial& p, Arc arc, std::size_t samples);

struct RootSet {
  std::vector<cplx> roots;  // with multiplicity; exact zeros listed as 0
  cplx leading = 1.0;
  // max |Q(z)| / max(1, |z|)^deg over the roots
  double max_residual = 0.0;
  std::size_t iterations = 0;
};

struct RootFinderOptions {
  std::size_t max_degree = 4096;
  std::size_t max_iterations = 200;
  double correction_tol = 1e-13;
};

/// All roots by Aberth-Ehrlich simultaneous iteration, carried out in
/// extended precision. Roots at the origin are split off exactly first.
/// Throws DomainError for degree 0 or above the guard, NumericalFailure when
/// some root has not converged after max_iterations.
RootSet find_roots(std::span<const cplx> coeffs, const RootFinderOptions& opts = {});
RootSet find_roots(const IntPolynomial& p, const RootFinderOptions& opts = {});

/// Jensen's product |c| * prod max(1, |z_k|).
MahlerEstimate m0_from_roots(const RootSet& roots);

/// M_0 of a polynomial of any degree (constants included) through its roots.
double mahler_measure_roots(std::span<const cplx> coeffs);

struct UnityProductCheck {
  double lhs = 0.0;  // (prod_{j<p} |Q(zeta_p^j)|)^{1/p}
  double rhs = 0.0;  // 2 (cos(eta/2))^{k/p} M_0(Q)
  std::size_t zeros_used = 0;
  bool holds = false;
};

/// Relative slack allowed on every inequality check before it is a violation.
inline constexpr double kInequalitySlack = 1e-9;

/// Geometric mean of |Q| over the p-th roots of unity against 2 M_0(Q).
/// Requires deg Q <= p.
UnityProductCheck check_unity_product_bound(std::span<const cplx> coeffs, Prime p);

/// The same product against 2 (cos(eta/2))^{k/p} M_0(Q), where k counts the
/// supplied circle zeros of Q (angles in radians). Each angle must be a zero
/// of Q to within zero_tol (default 1e-7 * ||Q||_1) and must lie outside
/// every open arc ((2v+1) pi/p - eta/p, (2v+1) pi/p + eta/p).
UnityProductCheck check_unity_product_bound_with_zeros(std::span<const cplx> coeffs, Prime p,
                                                       double eta,
                                                       std::span<const double> zero_angles,
                                                       double zero_tol = -1.0);

/// True when angle t (radians) is inside one of the open arcs of half-width
/// eta/p centred at the odd multiples of pi/p, widened by margin.
bool in_forbidden_arc(double t, Prime p, double eta, double margin = 0.0) noexcept;

struct EnsembleResult {
  double mean_ratio = 0.0;
  double stderr_ratio = 0.0;
  std::size_t samples = 0;
};

/// Mean of M_q(f)/sqrt(n) (q > 0) or M_0(f)/sqrt(n) (q = 0) over `samples`
/// random Littlewood polynomials of degree n. Sample i uses the stream
/// derive_seed(seed, i); the reduction runs in index order, so the result does
/// not depend on `threads`.
EnsembleResult littlewood_ensemble(std::size_t n, double q, std::size_t samples,
                                   std::uint64_t seed, unsigned threads = 1);

}  // namespace fekete
