#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gw/gaudin.hpp"
#include "gw/scalar.hpp"
#include "gw/sl2.hpp"

namespace gw {

/// Pass thresholds for eigenpair verification, pinned once for the whole
/// artifact (tests and reports all read these).
inline constexpr double kEigenpairResidualTol = 1e-8;
inline constexpr double kHessianMarginTol = 1e-8;

/// One instance of the model: weights, marked points, and the level k of the
/// singular subspace under study.
struct ModelConfig {
  WeightVector weights;
  PointConfig z;
  int k;

  ModelConfig(WeightVector m, PointConfig points, int level)
      : weights(std::move(m)), z(std::move(points)), k(level) {
    if (z.n() != weights.n()) {
      throw std::invalid_argument(
          "ModelConfig: point count must match the number of factors");
    }
    if (k < 0 || 2LL * k > weights.total()) {
      throw std::invalid_argument(
          "ModelConfig: level must satisfy 0 <= k <= |M|/2");
    }
  }
};

/// Multi-start solver knobs. max_starts = 0 means 200 * target count.
struct SolverOptions {
  double tol = 1e-11;
  double cluster_eps = 1e-7;
  double radius_factor = 3.0;
  long long max_starts = 0;
  unsigned long long seed = 123456789ull;
};

/// One unordered solution of the Bethe system: coordinates in canonical order
/// (sorted by real part, then imaginary part), the max-norm residual, and the
/// smallest singular value of the Hessian of the master function. The k = 0
/// orbit is empty with residual 0 and an infinite Hessian margin.
struct CriticalOrbit {
  std::vector<Complex> t;
  double residual = 0.0;
  double hessian_min_singular = 0.0;
};

/// Orbits found plus the bookkeeping that makes under-counts visible:
/// complete == (orbits found == target). Domain collapses count starts
/// abandoned because iterates left the admissible domain for good.
struct SolveResult {
  std::vector<CriticalOrbit> orbits;
  long long target = 0;
  long long starts_used = 0;
  long long domain_collapses = 0;
  bool complete = false;
};

/// Diagnostics of H_j v = mu_j v checks for one orbit.
struct EigenpairReport {
  std::vector<Complex> mu;
  std::vector<double> residuals;  // r_j = |H_j v - mu_j v| / |v|, sup norm
  double max_residual = 0.0;
  double hessian_min_singular = 0.0;
  double vector_norm = 0.0;
  bool pass = false;
};

/// Number of orbits to expect: dim Sing_k, from the alternating-sum formula
/// (n >= 2) or the enumeration oracle (n = 1, where the formula is undefined).
long long target_dimension(const ModelConfig& cfg);

/// Left-hand sides of the Bethe system:
/// component i = sum_l m_l/(t_i - z_l) - sum_{j != i} 2/(t_i - t_j).
/// Throws a domain violation when coordinates collide with each other or z.
std::vector<Complex> bethe_residual(const ModelConfig& cfg,
                                    const std::vector<Complex>& t);

/// Master function on the principal log branch:
/// S = sum_{i<j} (m_i m_j/2) ln(z_i-z_j) - sum_{i,l} m_l ln(t_i-z_l)
///   + sum_{i<j} 2 ln(t_i-t_j).
Complex master_log_value(const ModelConfig& cfg, const std::vector<Complex>& t);

/// Single-valued companion Phi = prod (t_i-z_l)^{-m_l} prod (t_i-t_j)^2;
/// equals discriminant(F)/resultant(W, F) for F = prod(x - t_i).
Complex master_value_phi(const ModelConfig& cfg, const std::vector<Complex>& t);

/// Hessian of the master function at t (k x k, complex symmetric):
/// d2S/dt_i2 = sum_l m_l/(t_i-z_l)^2 - sum_{j != i} 2/(t_i-t_j)^2,
/// d2S/dt_i dt_j = 2/(t_i-t_j)^2.
Eigen::MatrixXcd bethe_hessian(const ModelConfig& cfg,
                               const std::vector<Complex>& t);

/// Smallest singular value of the Hessian; +infinity for k = 0.
double hessian_min_singular(const ModelConfig& cfg,
                            const std::vector<Complex>& t);

/// Multi-start damped Newton on the residual system. Iterations run on the
/// pole-cleared polynomial form of the equations (which grows at infinity, so
/// steps cannot drift toward the rational map's spurious zero there) while
/// convergence is measured on the rational residual itself. Starts are drawn
/// uniformly from the disc of radius radius_factor * spread(z) around the
/// centroid of z, with per-start deterministic seeding; orbits are
/// deduplicated by nearest-coordinate matching below cluster_eps and the
/// search stops at the target count.
SolveResult solve_bethe(const ModelConfig& cfg, const SolverOptions& opts = {});

/// Distance between unordered coordinate tuples: each entry of `a` is matched
/// greedily to the nearest unused entry of `b` and the largest matched
/// distance is returned (+infinity when the sizes differ).
double orbit_distance(const std::vector<Complex>& a,
                      const std::vector<Complex>& b);

/// Eigenvalues mu_j = sum_{l != j} m_l m_j/(2(z_j-z_l)) - sum_i m_j/(z_j-t_i).
std::vector<Complex> eigenvalues_mu(const ModelConfig& cfg,
                                    const CriticalOrbit& orbit);

/// Bethe vector sum_{|J|=k} A_J f^J v_M, with A_J the symmetrized product of
/// 1/(t_i - z_l); computed by summing over all assignments of coordinates to
/// factors. Rejects k > 8 (exact symmetrization bound).
TensorVector<Complex> bethe_vector(const ModelConfig& cfg,
                                   const CriticalOrbit& orbit);

/// |e_total v| / |v| in the coefficient sup norm (0 for the zero vector).
double singular_residual(const TensorVector<Complex>& v);

/// Builds the Bethe vector and eigenvalues, applies every hamiltonian on the
/// level block, and reports the residuals r_j plus the nondegeneracy margin.
/// pass = (max_j r_j <= 1e-8) and (hessian margin > 1e-8).
EigenpairReport verify_eigenpair(const ModelConfig& cfg,
                                 const CriticalOrbit& orbit);

}  // namespace gw
