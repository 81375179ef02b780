#include "gw/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gw/bethe.hpp"
#include "gw/counting.hpp"
#include "gw/gaudin.hpp"
#include "gw/heine_stieltjes.hpp"
#include "gw/plane.hpp"
#include "gw/polynomial.hpp"
#include "gw/scalar.hpp"
#include "gw/sl2.hpp"

namespace gw {

namespace {

std::string sci(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream out;
  out << std::scientific << std::setprecision(2) << v;
  return out.str();
}

/// Random points with pairwise-distinct imaginary parts, so real-axis
/// difference quotients of the logarithmic master function never cross a
/// branch cut.
std::vector<Complex> branch_safe_points(std::mt19937_64& rng, int count,
                                        double base_im) {
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  std::vector<Complex> pts(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    pts[static_cast<size_t>(i)] =
        Complex(re(rng), base_im + 0.37 * i + 0.01 * re(rng));
  }
  return pts;
}

double rel_coeff_error(const Polynomial<Complex>& got,
                       const Polynomial<Complex>& want) {
  const int deg = std::max(got.degree(), want.degree());
  double worst = 0.0;
  double scale = 1.0;
  for (int i = 0; i <= deg; ++i) {
    worst = std::max(worst, std::abs(got.coeff(i) - want.coeff(i)));
    scale = std::max(scale, std::abs(want.coeff(i)));
  }
  return worst / scale;
}

/// Enumerates every weight tuple of the desk-scale sweep: n in {2..5},
/// entries in {0..4}, all orderings, each level 0 <= k <= |M|/2.
void for_each_sweep_case(
    const std::function<void(const std::vector<int>&, int)>& visit) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> m(static_cast<size_t>(n), 0);
    while (true) {
      long long total = 0;
      for (int v : m) total += v;
      for (int k = 0; 2 * k <= total; ++k) visit(m, k);
      int pos = n - 1;
      while (pos >= 0 && m[static_cast<size_t>(pos)] == 4) {
        m[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++m[static_cast<size_t>(pos)];
    }
  }
}

CriterionResult dimension_triple_agreement() {
  CriterionResult out{1, "dimension triple agreement", true, ""};
  long long cases = 0;
  long long kernels = 0;
  std::map<std::pair<std::vector<int>, int>, long long> rank_cache;
  std::string first_fail;
  for_each_sweep_case([&](const std::vector<int>& m, int k) {
    const WeightVector w(m);
    const long long formula = dim_sing_formula(w, k);
    const long long brute = dim_sing_bruteforce(w, k);
    std::vector<int> sorted = m;
    std::sort(sorted.begin(), sorted.end());
    auto key = std::make_pair(std::move(sorted), k);
    auto it = rank_cache.find(key);
    long long rank;
    if (it == rank_cache.end()) {
      rank = static_cast<long long>(
          singular_basis_exact(WeightVector(key.first), k).size());
      rank_cache.emplace(std::move(key), rank);
      ++kernels;
    } else {
      rank = it->second;
    }
    if (formula != brute || brute != rank) {
      out.pass = false;
      if (first_fail.empty()) {
        std::ostringstream msg;
        msg << "first mismatch at m=(";
        for (size_t i = 0; i < m.size(); ++i)
          msg << (i ? "," : "") << m[i];
        msg << "), k=" << k << ": " << formula << "/" << brute << "/" << rank;
        first_fail = msg.str();
      }
    }
    ++cases;
  });
  std::ostringstream detail;
  detail << cases << " (M,k) cases, " << kernels << " distinct kernels";
  if (!out.pass) detail << "; " << first_fail;
  out.detail = detail.str();
  return out;
}

CriterionResult intersection_identity(bool corrupt_multiplicity_table) {
  CriterionResult out{2, "intersection-number identity", true, ""};
  long long cases = 0;
  bool canonical_seen = false;
  std::string first_fail;
  for (int d = 1; d <= 10; ++d) {
    for (int s = 3; s <= 6; ++s) {
      // Nondecreasing class tuples cover the sweep: both sides are symmetric.
      std::vector<int> q(static_cast<size_t>(s), 0);
      std::function<void(int, int, int)> rec = [&](int pos, int low,
                                                   int remaining) {
        if (pos == s) {
          if (remaining != 0) return;
          const long long formula = schubert_formula(q, d);
          long long table = schubert_special_intersection(q, d);
          if (corrupt_multiplicity_table) table += 1;
          if (formula != table) {
            out.pass = false;
            if (first_fail.empty()) {
              std::ostringstream msg;
              msg << "mismatch at d=" << d << ", q=(";
              for (size_t i = 0; i < q.size(); ++i)
                msg << (i ? "," : "") << q[i];
              msg << "): " << formula << " vs " << table;
              first_fail = msg.str();
            }
          }
          if (d == 3 && std::all_of(q.begin(), q.end(),
                                    [](int v) { return v == 1; })) {
            canonical_seen = formula == 2 && table == 2;
          }
          ++cases;
          return;
        }
        for (int v = low; v <= std::min(d - 1, remaining); ++v) {
          q[static_cast<size_t>(pos)] = v;
          rec(pos + 1, v, remaining - v);
        }
      };
      rec(0, 0, 2 * d - 2);
    }
  }
  if (!canonical_seen) out.pass = false;
  std::ostringstream detail;
  detail << cases << " class tuples; four-lines value "
         << (canonical_seen ? "2 confirmed" : "missed");
  if (corrupt_multiplicity_table) detail << "; corruption injected";
  if (!out.pass && !first_fail.empty()) detail << "; " << first_fail;
  out.detail = detail.str();
  return out;
}

CriterionResult dimension_intersection_bridge() {
  CriterionResult out{3, "dimension/intersection bridge", true, ""};
  long long cases = 0;
  std::string first_fail;
  for_each_sweep_case([&](const std::vector<int>& m, int k) {
    if (k < 1) return;
    const WeightVector w(m);
    const long long formula = dim_sing_formula(w, k);
    std::vector<int> classes = m;
    classes.push_back(static_cast<int>(w.total()) - 2 * k);
    const int d = static_cast<int>(w.total()) + 1 - k;
    const long long points = schubert_special_intersection(classes, d);
    if (formula != points) {
      out.pass = false;
      if (first_fail.empty()) {
        std::ostringstream msg;
        msg << "first mismatch at m=(";
        for (size_t i = 0; i < m.size(); ++i)
          msg << (i ? "," : "") << m[i];
        msg << "), k=" << k << ": " << formula << " vs " << points;
        first_fail = msg.str();
      }
    }
    ++cases;
  });
  std::ostringstream detail;
  detail << cases << " (M,k) cases against degree-|M|+1-k intersections";
  if (!out.pass) detail << "; " << first_fail;
  out.detail = detail.str();
  return out;
}

CriterionResult canonical_instance() {
  CriterionResult out{4, "canonical two-point instance", true, ""};
  const ModelConfig cfg(WeightVector({1, 1}),
                        PointConfig({Complex(0.0), Complex(1.0)}), 1);
  const SolveResult sol = solve_bethe(cfg, SolverOptions{});
  double worst = 0.0;
  std::string note;
  if (!sol.complete || sol.orbits.size() != 1) {
    out.pass = false;
    note = "expected exactly one orbit";
  } else {
    const CriticalOrbit& orbit = sol.orbits.front();
    worst = std::max(worst, std::abs(orbit.t[0] - Complex(0.5)));
    const auto mu = eigenvalues_mu(cfg, orbit);
    worst = std::max(worst, std::abs(mu[0] - Complex(1.5)));
    worst = std::max(worst, std::abs(mu[1] + Complex(1.5)));
    if (worst > 1e-10) {
      out.pass = false;
      note = "orbit or eigenvalues off";
    }
    const EigenpairReport rep = verify_eigenpair(cfg, orbit);
    if (rep.max_residual > 1e-12) {
      out.pass = false;
      note = "eigenpair residual " + sci(rep.max_residual);
    }
    worst = std::max(worst, rep.max_residual);
    const WronskianSpec spec = make_wronskian_spec(cfg.weights, cfg.z);
    const PolyPlane<Complex> plane = orbit_to_plane(spec, orbit, cfg.k);
    Polynomial<Complex> small_want =
        Polynomial<Complex>({Complex(-0.5), Complex(1.0)});
    Polynomial<Complex> big_want =
        Polynomial<Complex>({Complex(0.0), Complex(0.0), Complex(1.0)});
    const double plane_err =
        std::max(rel_coeff_error(plane.small(), small_want),
                 rel_coeff_error(plane.big(), big_want));
    const double wron_err = rel_coeff_error(plane_wronskian(plane), spec.W);
    worst = std::max({worst, plane_err, wron_err});
    if (plane_err > 1e-12 || wron_err > 1e-12) {
      out.pass = false;
      note = "plane recovery off";
    }
  }
  std::ostringstream detail;
  detail << "worst error " << sci(worst);
  if (!note.empty()) detail << "; " << note;
  out.detail = detail.str();
  return out;
}

struct Instance {
  ModelConfig cfg;
  SolveResult sol;
};

std::vector<Instance> build_instances() {
  std::mt19937_64 rng(kSelftestSeed);
  std::uniform_int_distribution<int> pick_n(3, 4);
  std::uniform_int_distribution<int> pick_m(1, 3);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  std::vector<Instance> out;
  while (out.size() < 20) {
    const int n = pick_n(rng);
    std::vector<int> mv(static_cast<size_t>(n));
    for (int& v : mv) v = pick_m(rng);
    const WeightVector m(mv);
    std::uniform_int_distribution<int> pick_k(
        1, std::min<long long>(4, m.total() / 2));
    const int k = pick_k(rng);
    // Genericity margin: marked points closer than 0.5 drive critical points
    // into near-collision and stress float thresholds instead of the
    // identities under test.
    std::vector<Complex> zs(static_cast<size_t>(n));
    bool generic = true;
    for (int i = 0; i < n; ++i) {
      zs[static_cast<size_t>(i)] = Complex(box(rng), box(rng));
      for (int j = 0; j < i; ++j) {
        generic = generic && std::abs(zs[static_cast<size_t>(i)] -
                                      zs[static_cast<size_t>(j)]) > 0.5;
      }
    }
    if (!generic) continue;
    ModelConfig cfg(m, PointConfig(zs), k);
    SolveResult sol = solve_bethe(cfg, SolverOptions{});
    out.push_back(Instance{std::move(cfg), std::move(sol)});
  }
  return out;
}

CriterionResult completeness_and_gram(const std::vector<Instance>& instances) {
  CriterionResult out{5, "orbit completeness and eigenvector basis", true, ""};
  double worst_residual = 0.0;
  double min_sv = std::numeric_limits<double>::infinity();
  std::string note;
  for (size_t idx = 0; idx < instances.size(); ++idx) {
    const auto& [cfg, sol] = instances[idx];
    const long long want = dim_sing_formula(cfg.weights, cfg.k);
    if (!sol.complete ||
        static_cast<long long>(sol.orbits.size()) != want) {
      out.pass = false;
      if (note.empty()) {
        note = "instance " + std::to_string(idx) + " found " +
               std::to_string(sol.orbits.size()) + " of " +
               std::to_string(want) + " orbits";
      }
      continue;
    }
    std::vector<TensorVector<Complex>> vectors;
    for (const CriticalOrbit& orbit : sol.orbits) {
      const EigenpairReport rep = verify_eigenpair(cfg, orbit);
      worst_residual = std::max(worst_residual, rep.max_residual);
      if (rep.max_residual > kEigenpairResidualTol) {
        out.pass = false;
        if (note.empty())
          note = "instance " + std::to_string(idx) + " eigenpair residual " +
                 sci(rep.max_residual);
      }
      vectors.push_back(bethe_vector(cfg, orbit));
    }
    if (vectors.empty()) continue;
    const int r = static_cast<int>(vectors.size());
    Eigen::MatrixXcd gram(r, r);
    for (int a = 0; a < r; ++a) {
      for (int b = a; b < r; ++b) {
        const Complex value =
            shapovalov_inner(vectors[static_cast<size_t>(a)],
                             vectors[static_cast<size_t>(b)]);
        gram(a, b) = value;
        gram(b, a) = value;
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(gram);
    const double lo = svd.singularValues().minCoeff();
    const double hi = svd.singularValues().maxCoeff();
    min_sv = std::min(min_sv, lo);
    if (lo <= 1e-10 * std::max(1.0, hi)) {
      out.pass = false;
      if (note.empty())
        note = "instance " + std::to_string(idx) + " Gram near-singular";
    }
  }
  std::ostringstream detail;
  detail << instances.size() << " instances; worst eigenpair residual "
         << sci(worst_residual) << "; smallest Gram singular value "
         << sci(min_sv);
  if (!note.empty()) detail << "; " << note;
  out.detail = detail.str();
  return out;
}

CriterionResult simple_spectrum(const std::vector<Instance>& instances) {
  CriterionResult out{6, "simple spectrum and node interpolation", true, ""};
  double min_sep = std::numeric_limits<double>::infinity();
  double worst_interp = 0.0;
  std::string note;
  for (size_t idx = 0; idx < instances.size(); ++idx) {
    const auto& [cfg, sol] = instances[idx];
    if (sol.orbits.empty()) continue;
    const InjectivityReport rep = eigenvalue_injectivity_check(cfg, sol.orbits);
    min_sep = std::min(min_sep, rep.min_mu_separation);
    worst_interp = std::max(worst_interp, rep.max_interpolation_error);
    if (!rep.pass) {
      out.pass = false;
      if (note.empty()) note = "instance " + std::to_string(idx) + " failed";
    }
  }
  std::ostringstream detail;
  detail << "min eigenvalue-tuple separation " << sci(min_sep)
         << "; worst interpolation error " << sci(worst_interp);
  if (!note.empty()) detail << "; " << note;
  out.detail = detail.str();
  return out;
}

CriterionResult plane_round_trip(const std::vector<Instance>& instances) {
  CriterionResult out{7, "plane round trip and fibre census", true, ""};
  double worst_trip = 0.0;
  double worst_fidelity = 0.0;
  std::string note;
  for (size_t idx = 0; idx < instances.size(); ++idx) {
    const auto& [cfg, sol] = instances[idx];
    const WronskianSpec spec = make_wronskian_spec(cfg.weights, cfg.z);
    for (const CriticalOrbit& orbit : sol.orbits) {
      const PolyPlane<Complex> plane = orbit_to_plane(spec, orbit, cfg.k);
      const CriticalOrbit back = plane_to_orbit(plane);
      const double trip = orbit_distance(orbit.t, back.t);
      const double fidelity = rel_coeff_error(plane_wronskian(plane), spec.W);
      worst_trip = std::max(worst_trip, trip);
      worst_fidelity = std::max(worst_fidelity, fidelity);
      if (trip > 1e-9 || fidelity > kWronskianFidelityTol) {
        out.pass = false;
        if (note.empty())
          note = "instance " + std::to_string(idx) + " round trip " +
                 sci(trip) + ", fidelity " + sci(fidelity);
      }
    }
    const CensusReport census = preimage_census(spec, cfg.k, SolverOptions{});
    if (!census.solver_complete || !census.equality) {
      out.pass = false;
      if (note.empty())
        note = "instance " + std::to_string(idx) + " census " +
               std::to_string(census.count) + " vs bound " +
               std::to_string(census.bound);
    }
  }
  std::ostringstream detail;
  detail << "worst round trip " << sci(worst_trip) << "; worst fidelity "
         << sci(worst_fidelity) << "; census equals bound on all instances";
  if (!note.empty()) detail << "; " << note;
  out.detail = detail.str();
  return out;
}

CriterionResult analytic_consistency() {
  CriterionResult out{8, "analytic consistency", true, ""};
  const double h = 1e-6;
  double worst_grad = 0.0;
  double worst_mu = 0.0;
  double worst_phi = 0.0;

  {
    std::mt19937_64 rng(kSelftestSeed + 1);
    std::uniform_int_distribution<int> pick_n(2, 4);
    std::uniform_int_distribution<int> pick_m(1, 3);
    int checked = 0;
    while (checked < 100) {
      const int n = pick_n(rng);
      std::vector<int> mv(static_cast<size_t>(n));
      for (int& v : mv) v = pick_m(rng);
      const WeightVector m(mv);
      std::uniform_int_distribution<int> pick_k(
          1, static_cast<int>(m.total() / 2));
      const int k = pick_k(rng);
      const auto zs = branch_safe_points(rng, n, 0.0);
      const auto ts = branch_safe_points(rng, k, 10.0);
      const ModelConfig cfg(m, PointConfig(zs), k);
      const auto res = bethe_residual(cfg, ts);
      for (int i = 0; i < k && checked < 100; ++i, ++checked) {
        auto plus = ts;
        auto minus = ts;
        plus[static_cast<size_t>(i)] += h;
        minus[static_cast<size_t>(i)] -= h;
        const Complex fd =
            (master_log_value(cfg, plus) - master_log_value(cfg, minus)) /
            (2.0 * h);
        const double rel = std::abs(fd + res[static_cast<size_t>(i)]) /
                           std::max(1.0, std::abs(res[static_cast<size_t>(i)]));
        worst_grad = std::max(worst_grad, rel);
      }
    }
    if (worst_grad > 1e-6) out.pass = false;
  }

  {
    std::mt19937_64 rng(kSelftestSeed + 2);
    int checked = 0;
    while (checked < 100) {
      const WeightVector m({2, 1, 3});
      const int k = 2;
      const auto zs = branch_safe_points(rng, 3, 0.0);
      const auto ts = branch_safe_points(rng, k, 10.0);
      const ModelConfig cfg(m, PointConfig(zs), k);
      CriticalOrbit orbit;
      orbit.t = ts;
      const auto mu = eigenvalues_mu(cfg, orbit);
      for (int j = 0; j < 3 && checked < 100; ++j, ++checked) {
        auto zp = zs;
        auto zm = zs;
        zp[static_cast<size_t>(j)] += h;
        zm[static_cast<size_t>(j)] -= h;
        const ModelConfig plus(m, PointConfig(zp), k);
        const ModelConfig minus(m, PointConfig(zm), k);
        const Complex fd =
            (master_log_value(plus, ts) - master_log_value(minus, ts)) /
            (2.0 * h);
        const double rel = std::abs(fd - mu[static_cast<size_t>(j)]) /
                           std::max(1.0, std::abs(mu[static_cast<size_t>(j)]));
        worst_mu = std::max(worst_mu, rel);
      }
    }
    if (worst_mu > 1e-6) out.pass = false;
  }

  {
    std::mt19937_64 rng(kSelftestSeed + 3);
    std::uniform_int_distribution<int> pick_n(2, 4);
    std::uniform_int_distribution<int> pick_m(1, 2);
    for (int checked = 0; checked < 100; ++checked) {
      const int n = pick_n(rng);
      std::vector<int> mv(static_cast<size_t>(n));
      for (int& v : mv) v = pick_m(rng);
      const WeightVector m(mv);
      std::uniform_int_distribution<int> pick_k(
          1, static_cast<int>(m.total() / 2));
      const int k = pick_k(rng);
      const auto zs = branch_safe_points(rng, n, 0.0);
      const auto ts = branch_safe_points(rng, k, 5.0);
      const ModelConfig cfg(m, PointConfig(zs), k);
      const Complex phi = master_value_phi(cfg, ts);
      Polynomial<Complex> f = Polynomial<Complex>::from_roots(ts);
      Polynomial<Complex> w = Polynomial<Complex>::constant(Complex(1.0));
      for (int l = 0; l < n; ++l) {
        for (int p = 0; p < m.m(l); ++p) {
          w = w * Polynomial<Complex>::from_roots({zs[static_cast<size_t>(l)]});
        }
      }
      const Complex alt = discriminant(f) / resultant(w, f);
      const double rel = std::abs(phi - alt) / std::max(1.0, std::abs(phi));
      worst_phi = std::max(worst_phi, rel);
    }
    if (worst_phi > 1e-10) out.pass = false;
  }

  std::ostringstream detail;
  detail << "gradient FD " << sci(worst_grad) << "; eigenvalue FD "
         << sci(worst_mu) << "; product form vs resultants " << sci(worst_phi);
  out.detail = detail.str();
  return out;
}

CriterionResult operator_structure(const std::vector<Instance>& instances) {
  CriterionResult out{9, "operator structure", true, ""};
  double worst_comm = 0.0;
  double worst_sym = 0.0;
  double worst_inv = 0.0;
  std::string note;
  for (size_t idx = 0; idx < instances.size(); ++idx) {
    const auto& [cfg, sol] = instances[idx];
    const int n = cfg.weights.n();
    std::vector<OperatorMatrix> ops;
    for (int i = 1; i <= n; ++i) {
      ops.push_back(hamiltonian(cfg.weights, cfg.k, cfg.z, i));
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        worst_comm = std::max(
            worst_comm, commutator_residual(ops[static_cast<size_t>(i)],
                                            ops[static_cast<size_t>(j)]));
      }
      worst_sym = std::max(
          worst_sym, shapovalov_symmetry_residual(ops[static_cast<size_t>(i)]));
    }
    const auto basis = singular_basis_numeric(cfg.weights, cfg.k);
    if (!basis.empty()) {
      for (const OperatorMatrix& op : ops) {
        double residual = 0.0;
        try {
          restrict_to_singular(op, basis, &residual);
        } catch (const std::runtime_error&) {
          out.pass = false;
          if (note.empty())
            note = "instance " + std::to_string(idx) + " invariance violated";
        }
        worst_inv = std::max(worst_inv, residual);
      }
    }
  }
  if (worst_comm > 1e-10 || worst_sym > 1e-10 || worst_inv > 1e-10) {
    out.pass = false;
  }
  std::ostringstream detail;
  detail << "worst commutator " << sci(worst_comm) << "; worst symmetry "
         << sci(worst_sym) << "; worst invariance " << sci(worst_inv);
  if (!note.empty()) detail << "; " << note;
  out.detail = detail.str();
  return out;
}

CriterionResult hessian_nondegeneracy(const std::vector<Instance>& instances) {
  CriterionResult out{10, "hessian nondegeneracy", true, ""};
  double min_margin = std::numeric_limits<double>::infinity();
  long long orbits = 0;
  for (const auto& [cfg, sol] : instances) {
    for (const CriticalOrbit& orbit : sol.orbits) {
      min_margin = std::min(min_margin, orbit.hessian_min_singular);
      ++orbits;
    }
  }
  if (!(min_margin > kHessianMarginTol)) out.pass = false;
  std::ostringstream detail;
  detail << orbits << " orbits; smallest hessian singular value "
         << sci(min_margin);
  out.detail = detail.str();
  return out;
}

void log_line(std::ostream* log, const CriterionResult& r) {
  if (!log) return;
  *log << "criterion " << std::setw(2) << r.index << " "
       << (r.pass ? "PASS" : "FAIL") << " " << r.name << " (" << r.detail
       << ")\n";
  log->flush();
}

}  // namespace

CriterionResult check_intersection_identity(bool corrupt_multiplicity_table) {
  return intersection_identity(corrupt_multiplicity_table);
}

SelftestReport run_selftest(std::ostream* log,
                            bool corrupt_multiplicity_table) {
  SelftestReport report;
  // A runner that throws is a red result, not a crashed suite.
  auto push = [&](int index, const char* name,
                  const std::function<CriterionResult()>& runner) {
    CriterionResult r;
    try {
      r = runner();
    } catch (const std::exception& e) {
      r = CriterionResult{index, name, false,
                          std::string("threw: ") + e.what()};
    }
    log_line(log, r);
    report.results.push_back(std::move(r));
  };
  push(1, "dimension triple agreement", dimension_triple_agreement);
  push(2, "intersection-number identity",
       [&] { return intersection_identity(corrupt_multiplicity_table); });
  push(3, "dimension/intersection bridge", dimension_intersection_bridge);
  push(4, "canonical two-point instance", canonical_instance);
  const std::vector<Instance> instances = build_instances();
  push(5, "orbit completeness and eigenvector basis",
       [&] { return completeness_and_gram(instances); });
  push(6, "simple spectrum and node interpolation",
       [&] { return simple_spectrum(instances); });
  push(7, "plane round trip and fibre census",
       [&] { return plane_round_trip(instances); });
  push(8, "analytic consistency", analytic_consistency);
  push(9, "operator structure", [&] { return operator_structure(instances); });
  push(10, "hessian nondegeneracy",
       [&] { return hessian_nondegeneracy(instances); });
  report.all_pass =
      std::all_of(report.results.begin(), report.results.end(),
                  [](const CriterionResult& r) { return r.pass; });
  return report;
}

}  // namespace gw
