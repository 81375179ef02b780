#include <random>
#include <vector>

#include "doctest.h"
#include "gw/gaudin.hpp"
#include "gw/sl2.hpp"

using gw::Complex;
using gw::OperatorMatrix;
using gw::PointConfig;
using gw::WeightVector;

namespace {

PointConfig random_points(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::vector<Complex> z;
  while (static_cast<int>(z.size()) < n) {
    Complex candidate(coord(rng), coord(rng));
    bool separated = true;
    for (const auto& p : z) separated = separated && std::abs(p - candidate) > 0.3;
    if (separated) z.push_back(candidate);
  }
  return PointConfig(std::move(z));
}

}  // namespace

TEST_SUITE("casimir exchange operator") {
  TEST_CASE("two spins half, explicit matrices") {
    WeightVector m({1, 1});

    auto level0 = gw::casimir_pair(m, 0, 1, 2);
    REQUIRE(level0.mat.rows() == 1);
    CHECK(std::abs(level0.mat(0, 0) - Complex(0.5, 0)) < 1e-15);

    // Level-1 basis in lexicographic order: (0,1) = v x fv, (1,0) = fv x v.
    auto level1 = gw::casimir_pair(m, 1, 1, 2);
    REQUIRE(level1.mat.rows() == 2);
    CHECK(std::abs(level1.mat(0, 1) - Complex(1, 0)) < 1e-15);   // v x fv part
    CHECK(std::abs(level1.mat(1, 1) - Complex(-0.5, 0)) < 1e-15);
    CHECK(std::abs(level1.mat(1, 0) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(level1.mat(0, 0) - Complex(-0.5, 0)) < 1e-15);
  }

  TEST_CASE("factor validation") {
    WeightVector m({1, 1, 1});
    CHECK_THROWS_AS(gw::casimir_pair(m, 1, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(gw::casimir_pair(m, 1, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(gw::casimir_pair(m, 1, 1, 4), std::invalid_argument);
  }

  TEST_CASE("weight level is preserved by construction") {
    WeightVector m({2, 1, 2});
    for (int level : {1, 2, 3}) {
      auto block = gw::casimir_pair(m, level, 1, 3);
      CHECK(block.mat.rows() == block.mat.cols());
      CHECK(block.level == level);
      CHECK(gw::max_abs(block.mat) > 0.0);
    }
  }
}

TEST_SUITE("gaudin hamiltonians") {
  TEST_CASE("two spins half at z = (0, 1)") {
    WeightVector m({1, 1});
    PointConfig z({Complex(0, 0), Complex(1, 0)});

    auto h1 = gw::hamiltonian(m, 1, z, 1);
    auto omega = gw::casimir_pair(m, 1, 1, 2);
    CHECK(gw::max_abs(h1.mat + omega.mat) < 1e-15);  // H_1 = -Omega_12

    // u = fv x v - v x fv is an eigenvector with eigenvalue 3/2.
    Eigen::VectorXcd u(2);
    u << Complex(-1, 0), Complex(1, 0);
    Eigen::VectorXcd image = h1.mat * u;
    CHECK((image - 1.5 * u).cwiseAbs().maxCoeff() < 1e-15);
  }

  TEST_CASE("highest weight vector is an eigenvector of each hamiltonian") {
    std::mt19937_64 rng(9001);
    WeightVector m({2, 1, 3});
    PointConfig z = random_points(rng, m.n());
    for (int i = 1; i <= m.n(); ++i) {
      auto h = gw::hamiltonian(m, 0, z, i);
      REQUIRE(h.mat.rows() == 1);
      Complex expected(0, 0);
      for (int j = 1; j <= m.n(); ++j) {
        if (j == i) continue;
        expected += Complex(0.5 * m.m(i - 1) * m.m(j - 1), 0) /
                    (z.z(i - 1) - z.z(j - 1));
      }
      CHECK(std::abs(h.mat(0, 0) - expected) < 1e-12);
    }
  }

  TEST_CASE("hamiltonians sum to zero") {
    // The pair terms cancel in the full sum: Omega_ij enters H_i and H_j with
    // opposite coefficients 1/(z_i - z_j) and 1/(z_j - z_i).
    std::mt19937_64 rng(9002);
    WeightVector m({1, 2, 2});
    PointConfig z = random_points(rng, m.n());
    for (int level : {0, 1, 2}) {
      const int dim =
          static_cast<int>(gw::level_basis_indices(m, level).size());
      Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(dim, dim);
      for (int i = 1; i <= m.n(); ++i) {
        total += gw::hamiltonian(m, level, z, i).mat;
      }
      CHECK(gw::max_abs(total) < 1e-12);
    }
  }

  TEST_CASE("hamiltonians commute on random instances") {
    std::mt19937_64 rng(9003);
    for (const auto& weights :
         {std::vector<int>{2, 1, 3}, {1, 1, 1, 1}, {3, 2, 1, 2}}) {
      WeightVector m(weights);
      PointConfig z = random_points(rng, m.n());
      std::uniform_int_distribution<int> level_dist(
          1, static_cast<int>(m.total()) / 2);
      const int level = level_dist(rng);
      std::vector<OperatorMatrix> h;
      for (int i = 1; i <= m.n(); ++i) {
        h.push_back(gw::hamiltonian(m, level, z, i));
      }
      for (size_t a = 0; a < h.size(); ++a) {
        for (size_t b = a + 1; b < h.size(); ++b) {
          CHECK(gw::commutator_residual(h[a], h[b]) < 1e-10);
        }
      }
    }
  }

  TEST_CASE("hamiltonians are symmetric for the shapovalov form") {
    std::mt19937_64 rng(9004);
    WeightVector m({2, 2, 1});
    PointConfig z = random_points(rng, m.n());
    for (int level : {0, 1, 2}) {
      for (int i = 1; i <= m.n(); ++i) {
        auto h = gw::hamiltonian(m, level, z, i);
        CHECK(gw::shapovalov_symmetry_residual(h) < 1e-10);
      }
    }
  }

  TEST_CASE("input validation") {
    WeightVector m({1, 1});
    CHECK_THROWS_AS(PointConfig({Complex(1, 0), Complex(1, 0)}),
                    std::invalid_argument);
    PointConfig z({Complex(0, 0), Complex(1, 0)});
    CHECK_THROWS_AS(gw::hamiltonian(m, 1, z, 3), std::invalid_argument);
    CHECK_THROWS_AS(
        gw::hamiltonian(m, 1, PointConfig({Complex(0, 0)}), 1),
        std::invalid_argument);
  }
}

TEST_SUITE("restriction to singular subspaces") {
  TEST_CASE("two spins half restriction is the 3/2 eigenvalue") {
    WeightVector m({1, 1});
    PointConfig z({Complex(0, 0), Complex(1, 0)});
    auto basis = gw::singular_basis_numeric(m, 1);
    auto h1 = gw::restrict_to_singular(gw::hamiltonian(m, 1, z, 1), basis);
    REQUIRE(h1.mat.rows() == 1);
    CHECK(std::abs(h1.mat(0, 0) - Complex(1.5, 0)) < 1e-12);
    CHECK(h1.singular_frame);
  }

  TEST_CASE("level zero restriction gives the pair sums") {
    std::mt19937_64 rng(9005);
    WeightVector m({3, 1, 2});
    PointConfig z = random_points(rng, m.n());
    auto basis = gw::singular_basis_numeric(m, 0);
    for (int i = 1; i <= m.n(); ++i) {
      auto h = gw::restrict_to_singular(gw::hamiltonian(m, 0, z, i), basis);
      Complex expected(0, 0);
      for (int j = 1; j <= m.n(); ++j) {
        if (j == i) continue;
        expected += Complex(0.5 * m.m(i - 1) * m.m(j - 1), 0) /
                    (z.z(i - 1) - z.z(j - 1));
      }
      CHECK(std::abs(h.mat(0, 0) - expected) < 1e-12);
    }
  }

  TEST_CASE("restricted hamiltonians still commute") {
    std::mt19937_64 rng(9006);
    WeightVector m({1, 1, 1, 1});
    PointConfig z = random_points(rng, m.n());
    auto basis = gw::singular_basis_numeric(m, 2);
    REQUIRE(basis.size() == 2);
    std::vector<OperatorMatrix> restricted;
    for (int i = 1; i <= m.n(); ++i) {
      restricted.push_back(
          gw::restrict_to_singular(gw::hamiltonian(m, 2, z, i), basis));
    }
    for (size_t a = 0; a < restricted.size(); ++a) {
      for (size_t b = a + 1; b < restricted.size(); ++b) {
        CHECK(gw::commutator_residual(restricted[a], restricted[b]) < 1e-10);
      }
    }
  }

  TEST_CASE("non-invariant spans are rejected") {
    WeightVector m({1, 1});
    PointConfig z({Complex(0, 0), Complex(1, 0)});
    auto h1 = gw::hamiltonian(m, 1, z, 1);
    std::vector<gw::TensorVector<Complex>> bogus = {
        gw::TensorVector<Complex>::basis_vector(m, {1, 0})};
    CHECK_THROWS_AS(gw::restrict_to_singular(h1, bogus), std::runtime_error);
  }

  TEST_CASE("singular subspace invariance across random instances") {
    std::mt19937_64 rng(9007);
    for (const auto& weights : {std::vector<int>{2, 2, 2}, {1, 2, 1, 2}}) {
      WeightVector m(weights);
      PointConfig z = random_points(rng, m.n());
      for (int k = 1; 2 * k <= m.total(); ++k) {
        auto basis = gw::singular_basis_numeric(m, k);
        if (basis.empty()) continue;
        for (int i = 1; i <= m.n(); ++i) {
          CHECK_NOTHROW(
              gw::restrict_to_singular(gw::hamiltonian(m, k, z, i), basis));
        }
      }
    }
  }
}
