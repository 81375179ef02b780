#include "gw/heine_stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gw/counting.hpp"
#include "gw/roots.hpp"

namespace gw {

namespace {

double max_coeff_abs(const Polynomial<Complex>& p) {
  double m = 0.0;
  for (int i = 0; i <= p.degree(); ++i) m = std::max(m, std::abs(p.coeff(i)));
  return m;
}

/// Largest coefficient difference relative to the target's coefficient scale.
double coeff_rel_error(const Polynomial<Complex>& got,
                       const Polynomial<Complex>& want) {
  const double scale = std::max(1.0, max_coeff_abs(want));
  double worst = 0.0;
  const int top = std::max(got.degree(), want.degree());
  for (int i = 0; i <= top; ++i) {
    worst = std::max(worst, std::abs(got.coeff(i) - want.coeff(i)));
  }
  return worst / scale;
}

Polynomial<Complex> node_product(const PointConfig& z) {
  return Polynomial<Complex>::from_roots(z.points());
}

}  // namespace

WronskianSpec::WronskianSpec(WeightVector weights, PointConfig points,
                             Polynomial<Complex> w)
    : m(std::move(weights)), z(std::move(points)), W(std::move(w)) {
  if (z.n() != m.n()) {
    throw std::invalid_argument(
        "WronskianSpec: point count must match the number of factors");
  }
  Polynomial<Complex> expected = Polynomial<Complex>::constant(1.0);
  for (int j = 0; j < z.n(); ++j) {
    for (int p = 0; p < m.m(j); ++p) {
      expected = expected * Polynomial<Complex>::from_roots({z.z(j)});
    }
  }
  if (coeff_rel_error(W, expected) > 1e-10) {
    throw std::invalid_argument(
        "WronskianSpec: polynomial does not factor over the marked points "
        "with the stated multiplicities");
  }
}

WronskianSpec make_wronskian_spec(const WeightVector& m, const PointConfig& z) {
  Polynomial<Complex> w = Polynomial<Complex>::constant(1.0);
  for (int j = 0; j < z.n(); ++j) {
    for (int p = 0; p < m.m(j); ++p) {
      w = w * Polynomial<Complex>::from_roots({z.z(j)});
    }
  }
  return WronskianSpec(m, z, std::move(w));
}

FuchsianEquation::FuchsianEquation(Polynomial<Complex> nodes,
                                   Polynomial<Complex> first_order,
                                   Polynomial<Complex> accessory)
    : node_poly(std::move(nodes)),
      first_order_coeff(std::move(first_order)),
      van_vleck(std::move(accessory)) {
  if (van_vleck.degree() > node_poly.degree() - 2) {
    throw std::invalid_argument(
        "FuchsianEquation: accessory degree exceeds node count - 2");
  }
}

Polynomial<Complex> orbit_to_small_polynomial(const CriticalOrbit& orbit) {
  return Polynomial<Complex>::from_roots(orbit.t);
}

PolyPlane<Complex> orbit_to_plane(const WronskianSpec& spec,
                                  const CriticalOrbit& orbit, int k) {
  if (static_cast<int>(orbit.t.size()) != k) {
    throw std::invalid_argument(
        "orbit_to_plane: orbit size must equal the stated order");
  }
  const int d = static_cast<int>(spec.m.total()) + 1 - k;

  if (k == 0) {
    // The unique plane through the constants: span{1, P} has Wronskian P'/d,
    // so P is the antiderivative of W scaled to be monic (P(0) = 0).
    std::vector<Complex> p(d + 1, Complex(0.0));
    for (int i = 0; i <= spec.W.degree(); ++i) {
      p[i + 1] = static_cast<double>(d) * spec.W.coeff(i) /
                 static_cast<double>(i + 1);
    }
    return PolyPlane<Complex>(Polynomial<Complex>::constant(1.0),
                              Polynomial<Complex>(std::move(p)), d);
  }

  const Polynomial<Complex> f = orbit_to_small_polynomial(orbit);
  std::optional<PolyPlane<Complex>> plane = recover_plane(f, spec.W);
  if (!plane) {
    throw std::runtime_error(
        "orbit_to_plane: no plane has the prescribed Wronskian through this "
        "orbit (false critical point)");
  }
  const double err = coeff_rel_error(plane_wronskian(*plane), spec.W);
  if (err > kWronskianFidelityTol) {
    throw std::runtime_error(
        "orbit_to_plane: recovered plane misses the Wronskian beyond "
        "tolerance");
  }
  return *std::move(plane);
}

CriticalOrbit plane_to_orbit(const PolyPlane<Complex>& v) {
  if (!is_nondegenerate_plane(v)) {
    throw std::invalid_argument("plane_to_orbit: degenerate plane");
  }
  CriticalOrbit orbit;
  if (v.small_degree() == 0) return orbit;  // constants span: empty orbit

  orbit.t = poly_roots(v.small());
  std::sort(orbit.t.begin(), orbit.t.end(),
            [](const Complex& a, const Complex& b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });

  const Polynomial<Complex> w = plane_wronskian(v);
  const Polynomial<Complex> wd = w.derivative();
  const Polynomial<Complex> fd = v.small().derivative();
  const Polynomial<Complex> fdd = fd.derivative();
  double worst = 0.0;
  for (const Complex& t : orbit.t) {
    const Complex lhs = wd(t) / w(t);
    const Complex rhs = fdd(t) / fd(t);
    const double err = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
    worst = std::max(worst, err);
  }
  if (!(worst <= kNodeRatioTol)) {
    throw std::runtime_error(
        "plane_to_orbit: logarithmic-derivative identity fails at a root");
  }
  orbit.residual = worst;
  return orbit;
}

FuchsianEquation fuchsian_from_plane(const WronskianSpec& spec,
                                     const PolyPlane<Complex>& v) {
  if (!is_nondegenerate_plane(v)) {
    throw std::invalid_argument("fuchsian_from_plane: degenerate plane");
  }
  if (coeff_rel_error(plane_wronskian(v), spec.W) > kWronskianFidelityTol) {
    throw std::invalid_argument(
        "fuchsian_from_plane: plane's Wronskian does not match the spec");
  }

  const Polynomial<Complex> nodes = node_product(spec.z);
  Polynomial<Complex> first_order;
  for (int j = 0; j < spec.z.n(); ++j) {
    std::vector<Complex> others;
    for (int l = 0; l < spec.z.n(); ++l) {
      if (l != j) others.push_back(spec.z.z(l));
    }
    first_order -= static_cast<double>(spec.m.m(j)) *
                   Polynomial<Complex>::from_roots(others);
  }

  const Polynomial<Complex>& f = v.small();
  const Polynomial<Complex> numerator =
      Complex(-1.0) * (nodes * f.derivative().derivative() +
                       first_order * f.derivative());
  auto [quotient, remainder] = numerator.divmod(f);
  const double rem_scale = std::max(1.0, max_coeff_abs(numerator));
  if (max_coeff_abs(remainder) > kDivisionRemainderTol * rem_scale) {
    throw std::runtime_error(
        "fuchsian_from_plane: accessory division leaves a remainder "
        "(inconsistent inputs)");
  }
  return FuchsianEquation(nodes, std::move(first_order), std::move(quotient));
}

std::vector<Complex> van_vleck_at_nodes(const ModelConfig& cfg,
                                        const CriticalOrbit& orbit) {
  if (static_cast<int>(orbit.t.size()) != cfg.k) {
    throw std::invalid_argument(
        "van_vleck_at_nodes: orbit size must equal the level");
  }
  const Polynomial<Complex> f = orbit_to_small_polynomial(orbit);
  const Polynomial<Complex> fd = f.derivative();
  std::vector<Complex> values(cfg.z.n());
  for (int j = 0; j < cfg.z.n(); ++j) {
    const Complex zj = cfg.z.z(j);
    Complex prod = 1.0;
    for (int l = 0; l < cfg.z.n(); ++l) {
      if (l != j) prod *= zj - cfg.z.z(l);
    }
    const Complex fz = f(zj);
    if (fz == Complex(0.0)) {
      throw std::domain_error(
          "van_vleck_at_nodes: orbit coordinate collides with a marked point");
    }
    values[j] = static_cast<double>(cfg.weights.m(j)) * (fd(zj) / fz) * prod;
  }
  return values;
}

Polynomial<Complex> lagrange_interpolate(const std::vector<Complex>& xs,
                                         const std::vector<Complex>& ys) {
  if (xs.empty() || xs.size() != ys.size()) {
    throw std::invalid_argument(
        "lagrange_interpolate: need equally many distinct points and values");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) {
        throw std::invalid_argument(
            "lagrange_interpolate: sample points must be distinct");
      }
    }
  }
  Polynomial<Complex> sum;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    std::vector<Complex> others;
    Complex denom = 1.0;
    for (std::size_t l = 0; l < xs.size(); ++l) {
      if (l == j) continue;
      others.push_back(xs[l]);
      denom *= xs[j] - xs[l];
    }
    sum += (ys[j] / denom) * Polynomial<Complex>::from_roots(others);
  }
  return sum;
}

InjectivityReport eigenvalue_injectivity_check(
    const ModelConfig& cfg, const std::vector<CriticalOrbit>& orbits) {
  InjectivityReport report;
  report.orbit_count = static_cast<long long>(orbits.size());
  report.min_orbit_separation = std::numeric_limits<double>::infinity();
  report.min_mu_separation = std::numeric_limits<double>::infinity();

  std::vector<std::vector<Complex>> mus;
  mus.reserve(orbits.size());
  for (const CriticalOrbit& orbit : orbits) {
    mus.push_back(eigenvalues_mu(cfg, orbit));
  }

  bool separated = true;
  const double cluster_eps = SolverOptions{}.cluster_eps;
  for (std::size_t a = 0; a < orbits.size(); ++a) {
    for (std::size_t b = a + 1; b < orbits.size(); ++b) {
      const double dist = orbit_distance(orbits[a].t, orbits[b].t);
      report.min_orbit_separation =
          std::min(report.min_orbit_separation, dist);
      double mu_dist = 0.0;
      for (int j = 0; j < cfg.z.n(); ++j) {
        mu_dist = std::max(mu_dist, std::abs(mus[a][j] - mus[b][j]));
      }
      report.min_mu_separation = std::min(report.min_mu_separation, mu_dist);
      if (dist > cluster_eps && mu_dist <= kMuSeparationTol) separated = false;
    }
  }

  // The mechanism behind the separation: the accessory polynomial has degree
  // <= n-2 yet is pinned down by its n node values, which are functions of
  // mu. Interpolating the node values must therefore reproduce it exactly.
  const WronskianSpec spec = make_wronskian_spec(cfg.weights, cfg.z);
  for (const CriticalOrbit& orbit : orbits) {
    const PolyPlane<Complex> plane = orbit_to_plane(spec, orbit, cfg.k);
    const FuchsianEquation equation = fuchsian_from_plane(spec, plane);
    const std::vector<Complex> nodes = van_vleck_at_nodes(cfg, orbit);
    const Polynomial<Complex> interp =
        lagrange_interpolate(cfg.z.points(), nodes);
    report.max_interpolation_error =
        std::max(report.max_interpolation_error,
                 coeff_rel_error(interp, equation.van_vleck));
  }

  report.pass =
      separated && report.max_interpolation_error <= kInterpolationTol;
  return report;
}

CensusReport preimage_census(const WronskianSpec& spec, int k,
                             const SolverOptions& opts) {
  const ModelConfig cfg(spec.m, spec.z, k);  // validates the level range
  CensusReport report{spec.m, spec.z.points(), k};
  report.trivial_level = k == 0;

  const SolveResult sol = solve_bethe(cfg, opts);
  report.solver_complete = sol.complete;
  report.orbits = sol.orbits;

  const int d = static_cast<int>(spec.m.total()) + 1 - k;
  for (const CriticalOrbit& orbit : report.orbits) {
    PolyPlane<Complex> plane = orbit_to_plane(spec, orbit, k);
    report.wronskian_errors.push_back(
        coeff_rel_error(plane_wronskian(plane), spec.W));
    report.plane_degrees.push_back(plane.big_degree());
    if (plane.big_degree() < d) report.smaller_degree_seen = true;
    report.planes.push_back(std::move(plane));
  }

  std::vector<int> classes;
  for (int j = 0; j < spec.m.n(); ++j) classes.push_back(spec.m.m(j));
  classes.push_back(static_cast<int>(spec.m.total()) - 2 * k);
  report.bound = schubert_special_intersection(classes, d);
  report.count = static_cast<long long>(report.orbits.size());
  report.equality = report.count == report.bound;
  return report;
}

}  // namespace gw
