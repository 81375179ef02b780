#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "gw/bethe.hpp"
#include "gw/plane.hpp"
#include "gw/polynomial.hpp"
#include "gw/roots.hpp"
#include "gw/sl2.hpp"

namespace {

gw::Polynomial<gw::Complex> random_monic(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::vector<gw::Complex> c(degree + 1);
  for (int i = 0; i < degree; ++i) c[i] = {coeff(rng), coeff(rng)};
  c[degree] = {1.0, 0.0};
  return gw::Polynomial<gw::Complex>(std::move(c));
}

void BM_PolyRoots(benchmark::State& state) {
  std::mt19937_64 rng(42);
  auto p = random_monic(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gw::poly_roots(p));
  }
}
BENCHMARK(BM_PolyRoots)->Arg(10)->Arg(20)->Arg(40);

void BM_ResultantComplex(benchmark::State& state) {
  std::mt19937_64 rng(43);
  auto p = random_monic(rng, static_cast<int>(state.range(0)));
  auto q = random_monic(rng, static_cast<int>(state.range(0)) / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gw::resultant(p, q));
  }
}
BENCHMARK(BM_ResultantComplex)->Arg(10)->Arg(20)->Arg(40);

void BM_RecoverPlane(benchmark::State& state) {
  std::mt19937_64 rng(44);
  const int k = 4;
  const int d = static_cast<int>(state.range(0));
  auto small = random_monic(rng, k);
  auto big = random_monic(rng, d);
  auto w = gw::wronskian_pair(small, big, k, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gw::recover_plane(small, w));
  }
}
BENCHMARK(BM_RecoverPlane)->Arg(8)->Arg(16)->Arg(32);

// Desk-scale worst case of the exact nullspace extraction: five weight-4
// factors at the middle level.
void BM_SingularBasisExact(benchmark::State& state) {
  const gw::WeightVector m({4, 4, 4, 4, 4});
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gw::singular_basis_exact(m, k));
  }
}
BENCHMARK(BM_SingularBasisExact)->Arg(4)->Arg(7)->Arg(10);

void BM_SolveBethe(benchmark::State& state) {
  const gw::WeightVector m({2, 2, 2, 2});
  const int k = static_cast<int>(state.range(0));
  const gw::PointConfig z({gw::Complex(0.0), gw::Complex(1.0),
                           gw::Complex(1.7, 0.6), gw::Complex(-0.9, 1.1)});
  const gw::ModelConfig cfg(m, z, k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gw::solve_bethe(cfg, gw::SolverOptions{}));
  }
}
BENCHMARK(BM_SolveBethe)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

}  // namespace
