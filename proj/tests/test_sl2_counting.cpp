#include <random>
#include <vector>

#include "doctest.h"
#include "gw/counting.hpp"
#include "gw/scalar.hpp"
#include "gw/sl2.hpp"

using gw::Complex;
using gw::Rational;
using gw::TensorIndex;
using gw::TensorVector;
using gw::WeightVector;

namespace {

using RatVec = TensorVector<Rational>;

RatVec random_vector(std::mt19937_64& rng, const WeightVector& m, int level) {
  auto indices = gw::level_basis_indices(m, level);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  RatVec v(m, level);
  for (const auto& j : indices) {
    Rational c(num(rng), den(rng));
    if (c != 0) v.add_term(j, c);
  }
  return v;
}

RatVec act_h_total(const RatVec& v) {
  RatVec out(v.weights(), v.level());
  for (int i = 1; i <= v.weights().n(); ++i) out += gw::act_h(v, i);
  return out;
}

}  // namespace

TEST_SUITE("sl2 actions on tensor products") {
  TEST_CASE("raising operator examples") {
    WeightVector one({1});
    auto fv = gw::act_f(RatVec::highest(one), 1);
    CHECK(gw::act_e(fv, 1) == RatVec::highest(one));
    CHECK(gw::act_e(RatVec::highest(WeightVector({3, 2})), 1).is_zero());

    WeightVector two({2});
    auto f2v = gw::act_f(gw::act_f(RatVec::highest(two), 1), 1);
    auto expected = Rational(2) * gw::act_f(RatVec::highest(two), 1);
    CHECK(gw::act_e(f2v, 1) == expected);
  }

  TEST_CASE("lowering operator examples") {
    WeightVector one({1});
    auto fv = gw::act_f(RatVec::highest(one), 1);
    CHECK_FALSE(fv.is_zero());
    CHECK(gw::act_f(fv, 1).is_zero());  // top of the string
  }

  TEST_CASE("h acts by the weight on every level") {
    std::mt19937_64 rng(8001);
    WeightVector m({2, 1, 3});
    for (int k = 0; k <= 3; ++k) {
      auto v = random_vector(rng, m, k);
      auto scaled = Rational(m.total() - 2 * k) * v;
      CHECK(act_h_total(v) == scaled);
    }
  }

  TEST_CASE("factor index is validated") {
    auto v = RatVec::highest(WeightVector({1, 1}));
    CHECK_THROWS_AS(gw::act_e(v, 0), std::invalid_argument);
    CHECK_THROWS_AS(gw::act_f(v, 3), std::invalid_argument);
  }

  TEST_CASE("commutation relations on random vectors") {
    std::mt19937_64 rng(8002);
    WeightVector m({2, 3, 1});
    for (int trial = 0; trial < 10; ++trial) {
      std::uniform_int_distribution<int> level(1, 3);
      int k = level(rng);
      auto v = random_vector(rng, m, k);
      for (int i = 1; i <= m.n(); ++i) {
        auto ef = gw::act_e(gw::act_f(v, i), i);
        auto fe = gw::act_f(gw::act_e(v, i), i);
        CHECK(ef - fe == gw::act_h(v, i));

        auto he = gw::act_h(gw::act_e(v, i), i);
        auto eh = gw::act_e(gw::act_h(v, i), i);
        CHECK(he - eh == Rational(2) * gw::act_e(v, i));

        auto hf = gw::act_h(gw::act_f(v, i), i);
        auto fh = gw::act_f(gw::act_h(v, i), i);
        CHECK(hf - fh == Rational(-2) * gw::act_f(v, i));
      }
    }
  }
}

TEST_SUITE("shapovalov form") {
  TEST_CASE("normalization and single string") {
    WeightVector one({1});
    auto v = RatVec::highest(one);
    CHECK(gw::shapovalov_inner(v, v) == 1);
    auto fv = gw::act_f(v, 1);
    CHECK(gw::shapovalov_inner(fv, fv) == 1);
  }

  TEST_CASE("monomial basis is orthogonal") {
    WeightVector m({2, 2});
    auto u = RatVec::basis_vector(m, {2, 0});
    auto v = RatVec::basis_vector(m, {1, 1});
    CHECK(gw::shapovalov_inner(u, v) == 0);
    auto w = RatVec::basis_vector(m, {0, 1});
    CHECK(gw::shapovalov_inner(u, w) == 0);  // different levels
  }

  TEST_CASE("per-factor norms are positive and start at one") {
    WeightVector m({3, 4});
    auto data = gw::shapovalov_data(m);
    for (const auto& factor : data.per_factor) {
      CHECK(factor.front() == 1);
      for (const auto& norm : factor) CHECK(norm > 0);
    }
  }

  TEST_CASE("e and f are adjoint") {
    std::mt19937_64 rng(8003);
    WeightVector m({2, 1, 2});
    for (int trial = 0; trial < 10; ++trial) {
      std::uniform_int_distribution<int> level(1, 2);
      std::uniform_int_distribution<int> factor(1, m.n());
      int k = level(rng);
      int i = factor(rng);
      auto u = random_vector(rng, m, k);
      auto v = random_vector(rng, m, k - 1);
      CHECK(gw::shapovalov_inner(gw::act_e(u, i), v) ==
            gw::shapovalov_inner(u, gw::act_f(v, i)));
    }
    auto u = RatVec::highest(m);
    auto other = RatVec::highest(WeightVector({2, 1}));
    CHECK_THROWS_AS(gw::shapovalov_inner(u, other), std::invalid_argument);
  }
}

TEST_SUITE("singular vectors") {
  TEST_CASE("two spins half") {
    WeightVector m({1, 1});
    auto basis = gw::singular_basis_exact(m, 1);
    REQUIRE(basis.size() == 1);
    // Proportional to fv x v - v x fv.
    const auto& v = basis[0];
    Rational a = v.coeff({1, 0});
    Rational b = v.coeff({0, 1});
    CHECK(a != 0);
    CHECK(a == -b);
  }

  TEST_CASE("level zero is the highest weight line") {
    WeightVector m({3, 2, 4});
    auto basis = gw::singular_basis_exact(m, 0);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == RatVec::highest(m));
  }

  TEST_CASE("four spins half at level two") {
    auto basis = gw::singular_basis_exact(WeightVector({1, 1, 1, 1}), 2);
    CHECK(basis.size() == 2);
  }

  TEST_CASE("members are singular h-eigenvectors") {
    for (const auto& weights :
         {std::vector<int>{2, 2}, {1, 2, 3}, {2, 2, 1, 1}}) {
      WeightVector m(weights);
      for (int k = 0; 2 * k <= m.total(); ++k) {
        for (const auto& v : gw::singular_basis_exact(m, k)) {
          CHECK(gw::act_e_total(v).is_zero());
          CHECK(act_h_total(v) == Rational(m.total() - 2 * k) * v);
        }
      }
    }
  }

  TEST_CASE("numeric variant matches the exact ranks") {
    WeightVector m({2, 1, 2});
    for (int k = 0; 2 * k <= m.total(); ++k) {
      auto exact = gw::singular_basis_exact(m, k);
      auto numeric = gw::singular_basis_numeric(m, k);
      CHECK(exact.size() == numeric.size());
      // Forcing the dense float path must not change the rank.
      auto forced = gw::singular_basis_numeric(m, k, 0);
      CHECK(forced.size() == exact.size());
      for (const auto& v : forced) {
        auto image = gw::act_e_total(v);
        for (const auto& [j, c] : image.coords()) {
          CHECK(std::abs(c) < 1e-9);
        }
      }
    }
  }

  TEST_CASE("level range is validated") {
    WeightVector m({1, 1});
    CHECK_THROWS_AS(gw::singular_basis_exact(m, -1), std::invalid_argument);
    CHECK_THROWS_AS(gw::singular_basis_exact(m, 2), std::invalid_argument);
  }
}

TEST_SUITE("dimension counts") {
  TEST_CASE("formula examples") {
    CHECK(gw::dim_sing_formula(WeightVector({1, 1}), 1) == 1);
    CHECK(gw::dim_sing_formula(WeightVector({1, 1, 1, 1}), 2) == 2);
    CHECK(gw::dim_sing_formula(WeightVector({3, 2, 4}), 0) == 1);
    CHECK_THROWS_AS(gw::dim_sing_formula(WeightVector({4}), 1),
                    std::domain_error);
  }

  TEST_CASE("bruteforce examples") {
    CHECK(gw::dim_sing_bruteforce(WeightVector({1, 1}), 1) == 1);
    CHECK(gw::dim_sing_bruteforce(WeightVector({1, 1, 1, 1}), 2) == 2);
    CHECK(gw::dim_sing_bruteforce(WeightVector({2}), 1) == 0);
  }

  TEST_CASE("triple agreement on a moderate sweep") {
    // The full acceptance sweep (n up to 5, weights up to 4) runs in the
    // dedicated acceptance binary; this covers the smaller corner densely.
    for (int n = 2; n <= 4; ++n) {
      std::vector<int> m(static_cast<size_t>(n), 0);
      while (true) {
        WeightVector weights(m);
        for (int k = 0; 2 * k <= weights.total(); ++k) {
          const long long formula = gw::dim_sing_formula(weights, k);
          const long long brute = gw::dim_sing_bruteforce(weights, k);
          const long long rank =
              static_cast<long long>(gw::singular_basis_exact(weights, k).size());
          CHECK(formula == brute);
          CHECK(formula == rank);
        }
        int pos = n - 1;
        while (pos >= 0 && m[static_cast<size_t>(pos)] == 3) {
          m[static_cast<size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++m[static_cast<size_t>(pos)];
      }
    }
  }
}

TEST_SUITE("clebsch-gordan and schubert numbers") {
  TEST_CASE("cg examples") {
    CHECK(gw::cg_multiplicity({1, 1}, 0) == 1);
    CHECK(gw::cg_multiplicity({1, 1, 1, 1}, 0) == 2);
    CHECK(gw::cg_multiplicity({2}, 2) == 1);
    CHECK(gw::cg_multiplicity({2}, 1) == 0);
    CHECK_THROWS_AS(gw::cg_multiplicity({-1}, 0), std::invalid_argument);
  }

  TEST_CASE("special intersection examples") {
    CHECK(gw::schubert_special_intersection({1, 1, 1, 1}, 3) == 2);
    for (int d = 2; d <= 6; ++d) {
      CHECK(gw::schubert_special_intersection({d - 1, d - 1}, d) == 1);
    }
    CHECK(gw::schubert_special_intersection({2, 1, 1}, 3) == 1);
    CHECK_THROWS_AS(gw::schubert_special_intersection({1, 1, 1}, 3),
                    std::invalid_argument);
    // Classes wider than d-1 do not exist in G_2(d+1): zero class, product 0.
    CHECK(gw::schubert_special_intersection({4, 1, 1}, 4) == 0);
  }

  TEST_CASE("formula examples") {
    CHECK(gw::schubert_formula({1, 1, 1, 1}, 3) == 2);
    CHECK(gw::schubert_formula({2, 1, 1}, 3) == 1);
    CHECK_THROWS_AS(gw::schubert_formula({2, 2}, 3), std::domain_error);
    CHECK_THROWS_AS(gw::schubert_formula({4, 1, 1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(gw::schubert_formula({2, 2, 1, 1}, 3),
                    std::invalid_argument);
  }

  TEST_CASE("formula matches the representation count on admissible tuples") {
    // Moderate sweep here; the acceptance binary extends it to s<=6, d<=10.
    for (int d = 2; d <= 7; ++d) {
      for (int s = 3; s <= 5; ++s) {
        std::vector<int> q(static_cast<size_t>(s), 0);
        while (true) {
          long long sum = 0;
          for (int qi : q) sum += qi;
          if (sum == 2 * d - 2) {
            CHECK(gw::schubert_formula(q, d) ==
                  gw::schubert_special_intersection(q, d));
          }
          int pos = s - 1;
          while (pos >= 0 && q[static_cast<size_t>(pos)] == d - 1) {
            q[static_cast<size_t>(pos)] = 0;
            --pos;
          }
          if (pos < 0) break;
          ++q[static_cast<size_t>(pos)];
        }
      }
    }
  }

  TEST_CASE("formula is symmetric in the classes") {
    std::vector<int> q = {3, 2, 1, 2};  // sum 8 = 2d-2 at d = 5
    long long base = gw::schubert_formula(q, 5);
    std::sort(q.begin(), q.end());
    do {
      CHECK(gw::schubert_formula(q, 5) == base);
    } while (std::next_permutation(q.begin(), q.end()));
  }

  TEST_CASE("bridge from singular dimensions to intersection numbers") {
    for (const auto& weights :
         {std::vector<int>{1, 1}, {2, 2}, {1, 2, 3}, {2, 2, 1, 1}, {4, 1}}) {
      WeightVector m(weights);
      for (int k = 1; 2 * k <= m.total(); ++k) {
        std::vector<int> q = weights;
        q.push_back(static_cast<int>(m.total()) - 2 * k);
        const int d = static_cast<int>(m.total()) + 1 - k;
        CHECK(gw::dim_sing_formula(m, k) ==
              gw::schubert_special_intersection(q, d));
      }
    }
  }
}
