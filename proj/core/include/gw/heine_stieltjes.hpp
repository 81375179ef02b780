#pragma once

#include <vector>

#include "gw/bethe.hpp"
#include "gw/plane.hpp"
#include "gw/polynomial.hpp"
#include "gw/scalar.hpp"

namespace gw {

/// Pinned thresholds for the plane bridge (tests and reports read these).
inline constexpr double kWronskianFidelityTol = 1e-9;
inline constexpr double kNodeRatioTol = 1e-8;
inline constexpr double kDivisionRemainderTol = 1e-8;
inline constexpr double kMuSeparationTol = 1e-6;
inline constexpr double kInterpolationTol = 1e-8;

/// Marked points with multiplicities and the polynomial they define:
/// W = prod (x - z_j)^{m_j}, monic of degree |M|. The constructor verifies the
/// factorization coefficient-wise (relative tolerance 1e-10).
struct WronskianSpec {
  WeightVector m;
  PointConfig z;
  Polynomial<Complex> W;

  WronskianSpec(WeightVector weights, PointConfig points,
                Polynomial<Complex> w);
};

/// Builds the spec with W computed from its factorization.
WronskianSpec make_wronskian_spec(const WeightVector& m, const PointConfig& z);

/// Second-order equation node_poly u'' + first_order_coeff u' + van_vleck u= 0
/// with regular singular points at the nodes: node_poly = prod (x - z_j),
/// first_order_coeff / node_poly = sum -m_j/(x - z_j), and an accessory
/// polynomial of degree <= n-2 (so the exponents at z_j are 0 and m_j + 1).
struct FuchsianEquation {
  Polynomial<Complex> node_poly;
  Polynomial<Complex> first_order_coeff;
  Polynomial<Complex> van_vleck;

  FuchsianEquation(Polynomial<Complex> nodes, Polynomial<Complex> first_order,
                   Polynomial<Complex> accessory);
};

/// Monic prod (x - t_i); the empty orbit gives the constant 1.
Polynomial<Complex> orbit_to_small_polynomial(const CriticalOrbit& orbit);

/// The unique plane whose small member has the orbit as its roots and whose
/// Wronskian is spec.W; order k, degree |M| + 1 - k. For k = 0 the plane is
/// spanned by 1 and the scaled antiderivative of W. Raises a runtime error
/// when no such plane exists (the orbit is not critical) or when the
/// recovered Wronskian misses spec.W beyond 1e-9 relative.
PolyPlane<Complex> orbit_to_plane(const WronskianSpec& spec,
                                  const CriticalOrbit& orbit, int k);

/// Roots of the small member in canonical order. Each root is checked against
/// the Wronskian of the plane: W'(t)/W(t) = F''(t)/F'(t) to 1e-8. The
/// residual field stores the worst such mismatch; the Hessian margin is not
/// computed here (it needs the model data) and is left at zero.
CriticalOrbit plane_to_orbit(const PolyPlane<Complex>& v);

/// Constructs the equation solved by the members of v: the accessory
/// polynomial is -(node_poly f'' + first_order_coeff f')/f for the small
/// member f, by polynomial division. A division remainder above 1e-8
/// relative signals inconsistent inputs.
FuchsianEquation fuchsian_from_plane(const WronskianSpec& spec,
                                     const PolyPlane<Complex>& v);

/// Values of the accessory polynomial at the marked points, directly from the
/// orbit: H(z_j) = m_j (f'(z_j)/f(z_j)) prod_{l != j} (z_j - z_l).
std::vector<Complex> van_vleck_at_nodes(const ModelConfig& cfg,
                                        const CriticalOrbit& orbit);

/// Lagrange interpolation through distinct sample points (degree < #points).
Polynomial<Complex> lagrange_interpolate(const std::vector<Complex>& xs,
                                         const std::vector<Complex>& ys);

/// Separation of eigenvalue tuples across orbits, plus the interpolation
/// consistency that forces the separation: the accessory polynomial has
/// degree <= n-2, so its n node values overdetermine it by one, and equal
/// eigenvalue tuples would force equal equations and hence equal orbits.
struct InjectivityReport {
  long long orbit_count = 0;
  double min_orbit_separation = 0.0;  // +inf with fewer than two orbits
  double min_mu_separation = 0.0;     // +inf with fewer than two orbits
  double max_interpolation_error = 0.0;
  bool pass = false;
};

InjectivityReport eigenvalue_injectivity_check(
    const ModelConfig& cfg, const std::vector<CriticalOrbit>& orbits);

/// Full preimage of one Wronskian under the plane-to-Wronskian map at order
/// k, with the intersection-number bound it is checked against.
struct CensusReport {
  WeightVector m;
  std::vector<Complex> z;
  int k = 0;
  std::vector<CriticalOrbit> orbits;
  std::vector<PolyPlane<Complex>> planes;
  std::vector<double> wronskian_errors;
  std::vector<int> plane_degrees;
  long long count = 0;
  long long bound = 0;
  bool equality = false;
  bool solver_complete = false;
  bool trivial_level = false;      // k = 0, included for completeness
  bool smaller_degree_seen = false;
};

/// Solves the critical-point system, maps every orbit to its plane, verifies
/// Wronskian fidelity, and compares the census to the product bound
/// sigma_{m_1} ... sigma_{m_n} sigma_{|M|-2k}. Solver under-counts are
/// reported through solver_complete, never raised.
CensusReport preimage_census(const WronskianSpec& spec, int k,
                             const SolverOptions& opts = {});

}  // namespace gw
