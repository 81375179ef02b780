#include "gw/heine_stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"

#include "gw/bethe.hpp"
#include "gw/plane.hpp"
#include "gw/polynomial.hpp"

using gw::Complex;

namespace {

gw::WronskianSpec canonical_spec() {
  return gw::make_wronskian_spec(gw::WeightVector({1, 1}),
                                 gw::PointConfig({Complex(0.0), Complex(1.0)}));
}

gw::CriticalOrbit orbit_at(std::vector<Complex> t) {
  gw::CriticalOrbit orbit;
  orbit.t = std::move(t);
  return orbit;
}

double poly_rel_error(const gw::Polynomial<Complex>& got,
                      const gw::Polynomial<Complex>& want) {
  double scale = 1.0;
  for (int i = 0; i <= want.degree(); ++i) {
    scale = std::max(scale, std::abs(want.coeff(i)));
  }
  double worst = 0.0;
  for (int i = 0; i <= std::max(got.degree(), want.degree()); ++i) {
    worst = std::max(worst, std::abs(got.coeff(i) - want.coeff(i)));
  }
  return worst / scale;
}

}  // namespace

TEST_CASE("wronskian spec validates its factorization") {
  const gw::WeightVector m({1, 1});
  const gw::PointConfig z({Complex(0.0), Complex(1.0)});
  const gw::WronskianSpec spec = gw::make_wronskian_spec(m, z);
  CHECK(spec.W.degree() == 2);
  CHECK(spec.W.coeff(2) == Complex(1.0));
  CHECK(spec.W.coeff(1) == Complex(-1.0));
  CHECK(spec.W.coeff(0) == Complex(0.0));

  CHECK_THROWS_AS(
      gw::WronskianSpec(m, z, gw::Polynomial<Complex>({1.0, 0.0, 1.0})),
      std::invalid_argument);
  CHECK_THROWS_AS(gw::WronskianSpec(gw::WeightVector({1}), z, spec.W),
                  std::invalid_argument);
}

TEST_CASE("small polynomial of an orbit") {
  CHECK(gw::orbit_to_small_polynomial(orbit_at({Complex(0.5)})) ==
        gw::Polynomial<Complex>({-0.5, 1.0}));
  CHECK(gw::orbit_to_small_polynomial(orbit_at({})) ==
        gw::Polynomial<Complex>::constant(1.0));
  const Complex a(0.3, 1.0), b(-2.0, 0.25);
  const auto f = gw::orbit_to_small_polynomial(orbit_at({a, b}));
  CHECK(f.degree() == 2);
  CHECK(std::abs(f.coeff(1) - (-(a + b))) < 1e-15);
  CHECK(std::abs(f.coeff(0) - a * b) < 1e-15);
}

TEST_CASE("the canonical orbit recovers its plane") {
  const gw::WronskianSpec spec = canonical_spec();
  const gw::PolyPlane<Complex> plane =
      gw::orbit_to_plane(spec, orbit_at({Complex(0.5)}), 1);
  CHECK(plane.small() == gw::Polynomial<Complex>({-0.5, 1.0}));
  CHECK(poly_rel_error(plane.big(), gw::Polynomial<Complex>::monomial(2)) <
        1e-12);
  CHECK(plane.ambient_degree() == 2);
  CHECK(poly_rel_error(gw::plane_wronskian(plane), spec.W) < 1e-12);
}

TEST_CASE("level-zero plane is spanned by constants and the primitive") {
  const gw::WronskianSpec spec = gw::make_wronskian_spec(
      gw::WeightVector({2, 1}), gw::PointConfig({Complex(0.0), Complex(2.0)}));
  const gw::PolyPlane<Complex> plane = gw::orbit_to_plane(spec, orbit_at({}), 0);
  CHECK(plane.small_degree() == 0);
  CHECK(plane.big_degree() == 4);
  CHECK(poly_rel_error(gw::plane_wronskian(plane), spec.W) < 1e-12);
}

TEST_CASE("a false critical point has no plane") {
  const gw::WronskianSpec spec = canonical_spec();
  CHECK_THROWS_AS(gw::orbit_to_plane(spec, orbit_at({Complex(0.3)}), 1),
                  std::runtime_error);
  CHECK_THROWS_AS(gw::orbit_to_plane(spec, orbit_at({Complex(0.5)}), 2),
                  std::invalid_argument);
}

TEST_CASE("planes map back to orbits") {
  SUBCASE("linear small member") {
    const gw::PolyPlane<Complex> plane(gw::Polynomial<Complex>({-0.5, 1.0}),
                                       gw::Polynomial<Complex>::monomial(2));
    const gw::CriticalOrbit orbit = gw::plane_to_orbit(plane);
    REQUIRE(orbit.t.size() == 1);
    CHECK(std::abs(orbit.t[0] - Complex(0.5)) < 1e-12);
  }
  SUBCASE("constant small member gives the empty orbit") {
    const gw::PolyPlane<Complex> plane(gw::Polynomial<Complex>::constant(1.0),
                                       gw::Polynomial<Complex>::monomial(1));
    CHECK(gw::plane_to_orbit(plane).t.empty());
  }
  SUBCASE("degenerate planes are rejected") {
    const gw::PolyPlane<Complex> shared(gw::Polynomial<Complex>::monomial(1),
                                        gw::Polynomial<Complex>::monomial(2));
    CHECK_THROWS_AS(gw::plane_to_orbit(shared), std::invalid_argument);
  }
}

TEST_CASE("orbit to plane to orbit is the identity") {
  const gw::WeightVector m({2, 1, 1});
  const gw::PointConfig z({Complex(0.0), Complex(1.0), Complex(-0.4, 0.9)});
  const gw::WronskianSpec spec = gw::make_wronskian_spec(m, z);
  const gw::ModelConfig cfg(m, z, 2);
  const gw::SolveResult sol = gw::solve_bethe(cfg);
  REQUIRE(sol.complete);
  for (const gw::CriticalOrbit& orbit : sol.orbits) {
    const gw::PolyPlane<Complex> plane = gw::orbit_to_plane(spec, orbit, 2);
    const gw::CriticalOrbit back = gw::plane_to_orbit(plane);
    CHECK(gw::orbit_distance(orbit.t, back.t) <= 1e-9);
  }
}

TEST_CASE("fuchsian equation of the canonical plane") {
  const gw::WronskianSpec spec = canonical_spec();
  const gw::PolyPlane<Complex> plane(gw::Polynomial<Complex>({-0.5, 1.0}),
                                     gw::Polynomial<Complex>::monomial(2));
  const gw::FuchsianEquation eq = gw::fuchsian_from_plane(spec, plane);
  CHECK(eq.node_poly == gw::Polynomial<Complex>({0.0, -1.0, 1.0}));
  CHECK(poly_rel_error(eq.first_order_coeff,
                       gw::Polynomial<Complex>({1.0, -2.0})) < 1e-12);
  REQUIRE(eq.van_vleck.degree() == 0);
  CHECK(std::abs(eq.van_vleck.coeff(0) - Complex(2.0)) < 1e-12);

  // The big member x^2: x(x-1)*2 - (2x-1)*2x + 2*x^2 = 0.
  const gw::Polynomial<Complex> big = gw::Polynomial<Complex>::monomial(2);
  const gw::Polynomial<Complex> residual =
      eq.node_poly * big.derivative().derivative() +
      eq.first_order_coeff * big.derivative() + eq.van_vleck * big;
  CHECK(poly_rel_error(residual, gw::Polynomial<Complex>::zero()) < 1e-12);
}

TEST_CASE("both basis members satisfy the constructed equation") {
  const gw::WeightVector m({2, 2, 1});
  const gw::PointConfig z({Complex(0.0), Complex(1.0), Complex(2.5, -0.6)});
  const gw::WronskianSpec spec = gw::make_wronskian_spec(m, z);
  const gw::ModelConfig cfg(m, z, 2);
  const gw::SolveResult sol = gw::solve_bethe(cfg);
  REQUIRE(sol.complete);
  REQUIRE(!sol.orbits.empty());

  std::mt19937_64 rng(555);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (const gw::CriticalOrbit& orbit : sol.orbits) {
    const gw::PolyPlane<Complex> plane = gw::orbit_to_plane(spec, orbit, 2);
    const gw::FuchsianEquation eq = gw::fuchsian_from_plane(spec, plane);
    CHECK(eq.van_vleck.degree() <= m.n() - 2);
    for (const gw::Polynomial<Complex>* u : {&plane.small(), &plane.big()}) {
      for (int s = 0; s < 20; ++s) {
        const Complex x(coord(rng), coord(rng));
        const Complex val = eq.node_poly(x) * u->derivative().derivative()(x) +
                            eq.first_order_coeff(x) * u->derivative()(x) +
                            eq.van_vleck(x) * (*u)(x);
        // Scale by the sizes of the three summands at x.
        const double scale =
            std::max({1.0, std::abs(eq.node_poly(x)) *
                               std::abs(u->derivative().derivative()(x)),
                      std::abs(eq.first_order_coeff(x)) *
                          std::abs(u->derivative()(x)),
                      std::abs(eq.van_vleck(x)) * std::abs((*u)(x))});
        CHECK(std::abs(val) / scale <= 1e-8);
      }
    }
  }
}

TEST_CASE("fuchsian construction rejects mismatched inputs") {
  const gw::WronskianSpec spec = canonical_spec();
  // A plane whose Wronskian is x^2, not x^2 - x.
  const gw::PolyPlane<Complex> other(gw::Polynomial<Complex>({0.0, 1.0}),
                                     gw::Polynomial<Complex>({1.0, 0.0, -1.0}));
  CHECK_THROWS_AS(gw::fuchsian_from_plane(spec, other), std::invalid_argument);
}

TEST_CASE("accessory values at the nodes") {
  const gw::ModelConfig cfg(gw::WeightVector({1, 1}),
                            gw::PointConfig({Complex(0.0), Complex(1.0)}), 1);
  const auto values = gw::van_vleck_at_nodes(cfg, orbit_at({Complex(0.5)}));
  REQUIRE(values.size() == 2);
  CHECK(std::abs(values[0] - Complex(2.0)) < 1e-12);
  CHECK(std::abs(values[1] - Complex(2.0)) < 1e-12);
  // n = 2 forces a constant accessory polynomial, hence equal node values.
  CHECK(std::abs(values[0] - values[1]) < 1e-12);
}

TEST_CASE("node values agree with the constructed accessory polynomial") {
  const gw::WeightVector m({1, 2, 1});
  const gw::PointConfig z({Complex(0.0), Complex(1.0), Complex(-1.0, 0.7)});
  const gw::WronskianSpec spec = gw::make_wronskian_spec(m, z);
  const gw::ModelConfig cfg(m, z, 1);
  const gw::SolveResult sol = gw::solve_bethe(cfg);
  REQUIRE(sol.complete);
  for (const gw::CriticalOrbit& orbit : sol.orbits) {
    const gw::PolyPlane<Complex> plane = gw::orbit_to_plane(spec, orbit, 1);
    const gw::FuchsianEquation eq = gw::fuchsian_from_plane(spec, plane);
    const auto values = gw::van_vleck_at_nodes(cfg, orbit);
    for (int j = 0; j < m.n(); ++j) {
      const Complex direct = eq.van_vleck(z.z(j));
      CHECK(std::abs(values[j] - direct) /
                std::max(1.0, std::abs(direct)) <=
            1e-8);
    }
  }
}

TEST_CASE("logarithmic derivative identity") {
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  const std::vector<Complex> t = {Complex(0.5, 0.1), Complex(-1.0, -0.4),
                                  Complex(2.0, 0.9)};
  const auto f = gw::orbit_to_small_polynomial(orbit_at(t));
  const auto fd = f.derivative();
  for (int s = 0; s < 10; ++s) {
    const Complex x(coord(rng), coord(rng));
    Complex expected = 0.0;
    for (const Complex& ti : t) expected += 1.0 / (x - ti);
    CHECK(std::abs(fd(x) / f(x) - expected) /
              std::max(1.0, std::abs(expected)) <
          1e-10);
  }
}

TEST_CASE("lagrange interpolation reproduces polynomials") {
  const gw::Polynomial<Complex> p({Complex(1.0, 2.0), Complex(-0.5), 3.0});
  const std::vector<Complex> xs = {Complex(0.0), Complex(1.0), Complex(-1.5),
                                   Complex(0.3, 0.8)};
  std::vector<Complex> ys;
  for (const Complex& x : xs) ys.push_back(p(x));
  const auto interp = gw::lagrange_interpolate(xs, ys);
  CHECK(poly_rel_error(interp, p) < 1e-12);
  CHECK_THROWS_AS(
      gw::lagrange_interpolate({Complex(0.0), Complex(0.0)}, {1.0, 2.0}),
      std::invalid_argument);
}

TEST_CASE("distinct orbits have distinct eigenvalue tuples") {
  const gw::WeightVector m({1, 1, 1, 1});
  const gw::PointConfig z(
      {Complex(0.0), Complex(1.0), Complex(2.3, 0.4), Complex(-1.1, -0.8)});
  const gw::ModelConfig cfg(m, z, 2);
  const gw::SolveResult sol = gw::solve_bethe(cfg);
  REQUIRE(sol.complete);
  REQUIRE(sol.orbits.size() == 2);

  const gw::InjectivityReport report =
      gw::eigenvalue_injectivity_check(cfg, sol.orbits);
  CHECK(report.orbit_count == 2);
  CHECK(report.min_orbit_separation > 1e-7);
  CHECK(report.min_mu_separation > 1e-6);
  CHECK(report.max_interpolation_error <= 1e-8);
  CHECK(report.pass);

  SUBCASE("single orbits pass vacuously") {
    const gw::InjectivityReport lone =
        gw::eigenvalue_injectivity_check(cfg, {sol.orbits[0]});
    CHECK(lone.pass);
    CHECK(lone.min_mu_separation ==
          std::numeric_limits<double>::infinity());
  }
}

TEST_CASE("preimage census matches the intersection bound") {
  SUBCASE("two simple points at order one") {
    const gw::WronskianSpec spec = canonical_spec();
    const gw::CensusReport report = gw::preimage_census(spec, 1);
    CHECK(report.count == 1);
    CHECK(report.bound == 1);
    CHECK(report.equality);
    CHECK(report.solver_complete);
    CHECK_FALSE(report.trivial_level);
    REQUIRE(report.planes.size() == 1);
    CHECK(report.wronskian_errors[0] <= 1e-9);
    CHECK(report.plane_degrees[0] == 2);
    CHECK_FALSE(report.smaller_degree_seen);
  }
  SUBCASE("the four-lines instance") {
    const gw::WronskianSpec spec = gw::make_wronskian_spec(
        gw::WeightVector({1, 1, 1, 1}),
        gw::PointConfig({Complex(0.0), Complex(1.0), Complex(1.7, 0.6),
                         Complex(-0.9, 1.1)}));
    const gw::CensusReport report = gw::preimage_census(spec, 2);
    CHECK(report.count == 2);
    CHECK(report.bound == 2);
    CHECK(report.equality);
    for (double err : report.wronskian_errors) CHECK(err <= 1e-9);
    for (int deg : report.plane_degrees) CHECK(deg == 3);
  }
  SUBCASE("double points fold to a single plane") {
    const gw::WronskianSpec spec = gw::make_wronskian_spec(
        gw::WeightVector({2, 2}), gw::PointConfig({Complex(0.0), Complex(1.0)}));
    const gw::CensusReport report = gw::preimage_census(spec, 1);
    CHECK(report.bound == 1);
    CHECK(report.count == 1);
    CHECK(report.equality);
  }
  SUBCASE("order zero is included but flagged") {
    const gw::WronskianSpec spec = canonical_spec();
    const gw::CensusReport report = gw::preimage_census(spec, 0);
    CHECK(report.trivial_level);
    CHECK(report.count == 1);
    CHECK(report.bound == 1);
    CHECK(report.equality);
  }
  SUBCASE("count never exceeds the bound") {
    const gw::WronskianSpec spec = gw::make_wronskian_spec(
        gw::WeightVector({2, 1, 1}),
        gw::PointConfig({Complex(0.0), Complex(1.0), Complex(0.4, 1.3)}));
    for (int k = 0; 2 * k <= 4; ++k) {
      const gw::CensusReport report = gw::preimage_census(spec, k);
      CHECK(report.count <= report.bound);
      CHECK(report.equality);
    }
  }
}

TEST_CASE("census planes contain the flag member at every node") {
  const gw::WronskianSpec spec = gw::make_wronskian_spec(
      gw::WeightVector({2, 2}), gw::PointConfig({Complex(0.0), Complex(1.0)}));
  const gw::CensusReport report = gw::preimage_census(spec, 1);
  REQUIRE(report.count == 1);
  for (const gw::PolyPlane<Complex>& plane : report.planes) {
    for (int j = 0; j < spec.m.n(); ++j) {
      const Complex zj = spec.z.z(j);
      // Reduce the basis at z_j: the member vanishing there must do so to
      // order m_j + 1 (the order jump of the plane at a Wronskian root).
      const Complex ratio = plane.big()(zj) / plane.small()(zj);
      const gw::Polynomial<Complex> member =
          plane.big() - ratio * plane.small();
      CHECK(gw::root_multiplicity(member, zj) == spec.m.m(j) + 1);
    }
  }
}
