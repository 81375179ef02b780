#include "gw/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "gw/counting.hpp"

namespace gw {

namespace {

double sup_norm(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const Complex& c : v) m = std::max(m, std::abs(c));
  return m;
}

void check_coordinate_count(const ModelConfig& cfg,
                            const std::vector<Complex>& t) {
  if (static_cast<int>(t.size()) != cfg.k) {
    throw std::invalid_argument(
        "bethe: coordinate count must equal the level");
  }
}

/// Exact coincidences make the rational expressions meaningless; anything
/// merely close evaluates to a large finite value and is handled by the
/// solver's own guards.
void check_domain(const ModelConfig& cfg, const std::vector<Complex>& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (int l = 0; l < cfg.z.n(); ++l) {
      if (t[i] == cfg.z.z(l)) {
        throw std::domain_error(
            "bethe: coordinate collides with a marked point");
      }
    }
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) {
        throw std::domain_error("bethe: coordinates must be distinct");
      }
    }
  }
}

Eigen::MatrixXcd bethe_jacobian(const ModelConfig& cfg,
                                const std::vector<Complex>& t) {
  const int k = cfg.k;
  Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    Complex diag = 0.0;
    for (int l = 0; l < cfg.z.n(); ++l) {
      const Complex d = t[i] - cfg.z.z(l);
      diag -= static_cast<double>(cfg.weights.m(l)) / (d * d);
    }
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      const Complex d = t[i] - t[j];
      const Complex val = 2.0 / (d * d);
      diag += val;
      jac(i, j) = -val;
    }
    jac(i, i) = diag;
  }
  return jac;
}

bool finite(const std::vector<Complex>& v) {
  for (const Complex& c : v) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

/// Minimum distance from any coordinate to the marked points and to the other
/// coordinates; the solver treats configurations below a hard floor as
/// outside the domain.
double min_separation(const ModelConfig& cfg, const std::vector<Complex>& t) {
  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (int l = 0; l < cfg.z.n(); ++l) {
      sep = std::min(sep, std::abs(t[i] - cfg.z.z(l)));
    }
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      sep = std::min(sep, std::abs(t[i] - t[j]));
    }
  }
  return sep;
}

void canonical_sort(std::vector<Complex>& t) {
  std::sort(t.begin(), t.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

/// Orbit equality up to reordering, robust against canonical-sort ties that
/// plain elementwise comparison of sorted tuples is not.
bool same_orbit(const std::vector<Complex>& a, const std::vector<Complex>& b,
                double eps) {
  return orbit_distance(a, b) <= eps;
}

/// The system with denominators cleared: P_i = A_i B_i R_i with
/// A_i = prod_l (t_i - z_l) and B_i = prod_{j != i} (t_i - t_j). Expanding
/// shows the collision factors cancel, so P is a polynomial map whose zero
/// set is exactly that of the rational system; unlike R it grows at infinity
/// (the leading coefficient is |M| - 2k + 2 > 0), so damped Newton steps are
/// never drawn toward the spurious zero of R at infinity.
void cleared_system(const ModelConfig& cfg, const std::vector<Complex>& t,
                    Eigen::VectorXcd& value, Eigen::MatrixXcd* jacobian) {
  const int k = cfg.k;
  const int n = cfg.z.n();
  std::vector<Complex> res(k);
  Eigen::MatrixXcd jac_res;
  if (jacobian != nullptr) jac_res = Eigen::MatrixXcd::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    Complex r = 0.0;
    Complex diag = 0.0;
    for (int l = 0; l < n; ++l) {
      const Complex d = t[i] - cfg.z.z(l);
      r += static_cast<double>(cfg.weights.m(l)) / d;
      diag -= static_cast<double>(cfg.weights.m(l)) / (d * d);
    }
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      const Complex d = t[i] - t[j];
      r -= 2.0 / d;
      const Complex v = 2.0 / (d * d);
      diag += v;
      if (jacobian != nullptr) jac_res(i, j) = -v;
    }
    if (jacobian != nullptr) jac_res(i, i) = diag;
    res[i] = r;
  }
  for (int i = 0; i < k; ++i) {
    Complex a = 1.0, a_prime = 0.0;
    for (int l = 0; l < n; ++l) {
      const Complex d = t[i] - cfg.z.z(l);
      a_prime = a_prime * d + a;
      a *= d;
    }
    Complex b = 1.0, b_prime = 0.0;
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      const Complex e = t[i] - t[j];
      b_prime = b_prime * e + b;
      b *= e;
    }
    value(i) = a * b * res[i];
    if (jacobian == nullptr) continue;
    for (int x = 0; x < k; ++x) {
      if (x == i) {
        (*jacobian)(i, i) =
            (a_prime * b + a * b_prime) * res[i] + a * b * jac_res(i, i);
      } else {
        const Complex e = t[i] - t[x];
        (*jacobian)(i, x) = -a * (b / e) * res[i] + a * b * jac_res(i, x);
      }
    }
  }
}

struct NewtonOutcome {
  bool converged = false;
  bool left_domain = false;
  std::vector<Complex> t;
  double residual_norm = 0.0;
};

NewtonOutcome newton_from(const ModelConfig& cfg, std::vector<Complex> t,
                          double tol, double sep_floor) {
  constexpr int kMaxIters = 80;
  constexpr int kPolishIters = 3;

  NewtonOutcome out;
  const int k = cfg.k;
  Eigen::VectorXcd value(k), cand_value(k);
  Eigen::MatrixXcd jac(k, k);

  double norm = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < kMaxIters; ++iter) {
    if (min_separation(cfg, t) == 0.0) {
      out.left_domain = true;  // exact collision: outside the domain
      return out;
    }
    std::vector<Complex> res = bethe_residual(cfg, t);
    norm = sup_norm(res);
    if (norm <= tol) break;

    cleared_system(cfg, t, value, &jac);
    const double merit = value.cwiseAbs().maxCoeff();
    const Eigen::VectorXcd delta = jac.partialPivLu().solve(value);
    if (!delta.allFinite()) return out;

    bool stepped = false;
    double lambda = 1.0;
    for (int half = 0; half < 30; ++half, lambda *= 0.5) {
      std::vector<Complex> cand(t.size());
      for (int i = 0; i < k; ++i) cand[i] = t[i] - lambda * delta(i);
      cleared_system(cfg, cand, cand_value, nullptr);
      if (!cand_value.allFinite()) continue;
      const double cand_merit = cand_value.cwiseAbs().maxCoeff();
      if (cand_merit < (1.0 - 0.25 * lambda) * merit) {
        t = std::move(cand);
        stepped = true;
        break;
      }
    }
    if (!stepped) return out;  // stalled in a merit basin without a zero
  }
  if (norm > tol) return out;
  std::vector<Complex> res = bethe_residual(cfg, t);

  // Full Newton steps near a simple zero converge quadratically; polish
  // toward machine precision while the residual keeps dropping.
  for (int iter = 0; iter < kPolishIters; ++iter) {
    const Eigen::MatrixXcd jac = bethe_jacobian(cfg, t);
    Eigen::Map<const Eigen::VectorXcd> rhs(res.data(), cfg.k);
    const Eigen::VectorXcd delta = jac.partialPivLu().solve(rhs);
    if (!delta.allFinite()) break;
    std::vector<Complex> cand(t.size());
    for (int i = 0; i < cfg.k; ++i) cand[i] = t[i] - delta(i);
    if (min_separation(cfg, cand) <= sep_floor) break;
    std::vector<Complex> cand_res = bethe_residual(cfg, cand);
    if (!finite(cand_res)) break;
    const double cand_norm = sup_norm(cand_res);
    if (cand_norm >= norm) break;
    t = std::move(cand);
    res = std::move(cand_res);
    norm = cand_norm;
  }

  out.converged = true;
  out.t = std::move(t);
  out.residual_norm = norm;
  return out;
}

}  // namespace

double orbit_distance(const std::vector<Complex>& a,
                      const std::vector<Complex>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const Complex& x : a) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    if (best_j == b.size()) return std::numeric_limits<double>::infinity();
    used[best_j] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

long long target_dimension(const ModelConfig& cfg) {
  if (cfg.weights.n() >= 2) return dim_sing_formula(cfg.weights, cfg.k);
  return dim_sing_bruteforce(cfg.weights, cfg.k);
}

std::vector<Complex> bethe_residual(const ModelConfig& cfg,
                                    const std::vector<Complex>& t) {
  check_coordinate_count(cfg, t);
  check_domain(cfg, t);
  std::vector<Complex> res(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    Complex r = 0.0;
    for (int l = 0; l < cfg.z.n(); ++l) {
      r += static_cast<double>(cfg.weights.m(l)) / (t[i] - cfg.z.z(l));
    }
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (j == i) continue;
      r -= 2.0 / (t[i] - t[j]);
    }
    res[i] = r;
  }
  return res;
}

Complex master_log_value(const ModelConfig& cfg,
                         const std::vector<Complex>& t) {
  check_coordinate_count(cfg, t);
  check_domain(cfg, t);
  Complex s = 0.0;
  for (int i = 0; i < cfg.z.n(); ++i) {
    for (int j = i + 1; j < cfg.z.n(); ++j) {
      const double w = 0.5 * cfg.weights.m(i) * cfg.weights.m(j);
      s += w * std::log(cfg.z.z(i) - cfg.z.z(j));
    }
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (int l = 0; l < cfg.z.n(); ++l) {
      s -= static_cast<double>(cfg.weights.m(l)) *
           std::log(t[i] - cfg.z.z(l));
    }
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      s += 2.0 * std::log(t[i] - t[j]);
    }
  }
  return s;
}

Complex master_value_phi(const ModelConfig& cfg,
                         const std::vector<Complex>& t) {
  check_coordinate_count(cfg, t);
  check_domain(cfg, t);
  Complex phi = 1.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (int l = 0; l < cfg.z.n(); ++l) {
      const Complex d = t[i] - cfg.z.z(l);
      for (int p = 0; p < cfg.weights.m(l); ++p) phi /= d;
    }
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const Complex d = t[i] - t[j];
      phi *= d * d;
    }
  }
  return phi;
}

Eigen::MatrixXcd bethe_hessian(const ModelConfig& cfg,
                               const std::vector<Complex>& t) {
  check_coordinate_count(cfg, t);
  check_domain(cfg, t);
  return -bethe_jacobian(cfg, t);
}

double hessian_min_singular(const ModelConfig& cfg,
                            const std::vector<Complex>& t) {
  if (cfg.k == 0) return std::numeric_limits<double>::infinity();
  const Eigen::MatrixXcd hess = bethe_hessian(cfg, t);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(hess);
  return svd.singularValues()(cfg.k - 1);
}

SolveResult solve_bethe(const ModelConfig& cfg, const SolverOptions& opts) {
  if (opts.tol <= 0 || opts.cluster_eps <= 0 || opts.radius_factor <= 0) {
    throw std::invalid_argument("solve_bethe: tolerances must be positive");
  }
  SolveResult result;
  result.target = target_dimension(cfg);

  if (cfg.k == 0) {
    // Sing_0 is spanned by the highest weight vector; the unique critical
    // orbit is empty and trivially nondegenerate.
    CriticalOrbit orbit;
    orbit.hessian_min_singular = std::numeric_limits<double>::infinity();
    result.orbits.push_back(std::move(orbit));
    result.complete = result.target == 1;
    return result;
  }
  if (result.target == 0) {
    result.complete = true;
    return result;
  }

  Complex centroid = 0.0;
  for (int l = 0; l < cfg.z.n(); ++l) centroid += cfg.z.z(l);
  centroid /= static_cast<double>(cfg.z.n());
  double spread = 0.0;
  double z_scale = 1.0;
  for (int l = 0; l < cfg.z.n(); ++l) {
    spread = std::max(spread, std::abs(cfg.z.z(l) - centroid));
    z_scale = std::max(z_scale, std::abs(cfg.z.z(l)));
  }
  if (spread == 0.0) spread = 1.0;
  const double radius = opts.radius_factor * spread;
  const double sep_floor = 1e-12 * z_scale;

  const long long max_starts =
      opts.max_starts > 0 ? opts.max_starts : 200 * result.target;

  for (long long start = 0; start < max_starts; ++start) {
    // Per-start seeding keeps results independent of how starts would be
    // scheduled; outcomes merge in start order.
    std::mt19937_64 rng(opts.seed +
                        0x9e3779b97f4a7c15ull * static_cast<unsigned long long>(
                                                    start + 1));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Complex> t0(cfg.k);
    for (int i = 0; i < cfg.k; ++i) {
      const double r = radius * std::sqrt(unit(rng));
      const double a = 2.0 * std::acos(-1.0) * unit(rng);
      t0[i] = centroid + Complex(r * std::cos(a), r * std::sin(a));
    }

    result.starts_used = start + 1;
    NewtonOutcome out = newton_from(cfg, std::move(t0), opts.tol, sep_floor);
    if (out.left_domain) ++result.domain_collapses;
    if (!out.converged) continue;
    if (min_separation(cfg, out.t) <= opts.cluster_eps) continue;

    canonical_sort(out.t);
    bool duplicate = false;
    for (const CriticalOrbit& seen : result.orbits) {
      if (same_orbit(out.t, seen.t, opts.cluster_eps)) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;

    CriticalOrbit orbit;
    orbit.residual = out.residual_norm;
    orbit.hessian_min_singular = hessian_min_singular(cfg, out.t);
    orbit.t = std::move(out.t);
    result.orbits.push_back(std::move(orbit));
    if (static_cast<long long>(result.orbits.size()) == result.target) break;
  }

  result.complete =
      static_cast<long long>(result.orbits.size()) == result.target;
  return result;
}

std::vector<Complex> eigenvalues_mu(const ModelConfig& cfg,
                                    const CriticalOrbit& orbit) {
  check_coordinate_count(cfg, orbit.t);
  if (cfg.k > 0) check_domain(cfg, orbit.t);
  std::vector<Complex> mu(cfg.z.n());
  for (int j = 0; j < cfg.z.n(); ++j) {
    const double mj = cfg.weights.m(j);
    Complex v = 0.0;
    for (int l = 0; l < cfg.z.n(); ++l) {
      if (l == j) continue;
      v += cfg.weights.m(l) * mj / (2.0 * (cfg.z.z(j) - cfg.z.z(l)));
    }
    for (const Complex& ti : orbit.t) {
      v -= mj / (cfg.z.z(j) - ti);
    }
    mu[j] = v;
  }
  return mu;
}

TensorVector<Complex> bethe_vector(const ModelConfig& cfg,
                                   const CriticalOrbit& orbit) {
  check_coordinate_count(cfg, orbit.t);
  if (cfg.k > 8) {
    throw std::domain_error("bethe_vector: k too large for exact symmetrization");
  }
  if (cfg.k > 0) check_domain(cfg, orbit.t);

  // The orbit is an unordered set; enumerating from the canonical order makes
  // the result bitwise-independent of how the coordinates were listed.
  std::vector<Complex> t = orbit.t;
  canonical_sort(t);

  TensorVector<Complex> v(cfg.weights, cfg.k);
  std::map<TensorIndex, Complex> coeffs;
  const int n = cfg.z.n();

  // Iterative depth-first enumeration of assignments phi : coordinates ->
  // factors with at most m_l coordinates per factor; each leaf adds
  // prod_i 1/(t_i - z_{phi(i)}) to the coefficient of f^J v_M. Summing over
  // assignments rather than permutations absorbs the 1/prod j_l!
  // normalization of the symmetrized product.
  std::vector<int> choice(cfg.k, -1);
  std::vector<Complex> partial(cfg.k + 1);
  partial[0] = 1.0;
  TensorIndex counts(n, 0);
  int pos = 0;
  while (pos >= 0) {
    if (pos == cfg.k) {
      coeffs[counts] += partial[cfg.k];
      --pos;
      continue;
    }
    if (choice[pos] >= 0) --counts[choice[pos]];
    int l = choice[pos] + 1;
    while (l < n && counts[l] == cfg.weights.m(l)) ++l;
    if (l == n) {
      choice[pos] = -1;
      --pos;
      continue;
    }
    choice[pos] = l;
    ++counts[l];
    partial[pos + 1] = partial[pos] / (t[pos] - cfg.z.z(l));
    ++pos;
  }

  for (const auto& [index, coeff] : coeffs) {
    if (coeff != Complex(0.0)) v.add_term(index, coeff);
  }
  return v;
}

double singular_residual(const TensorVector<Complex>& v) {
  double vnorm = 0.0;
  for (const auto& [index, coeff] : v.coords()) {
    vnorm = std::max(vnorm, std::abs(coeff));
  }
  if (vnorm == 0.0) return 0.0;
  const TensorVector<Complex> ev = act_e_total(v);
  double enorm = 0.0;
  for (const auto& [index, coeff] : ev.coords()) {
    enorm = std::max(enorm, std::abs(coeff));
  }
  return enorm / vnorm;
}

EigenpairReport verify_eigenpair(const ModelConfig& cfg,
                                 const CriticalOrbit& orbit) {
  EigenpairReport report;
  report.mu = eigenvalues_mu(cfg, orbit);
  report.hessian_min_singular =
      cfg.k == 0 ? std::numeric_limits<double>::infinity()
                 : hessian_min_singular(cfg, orbit.t);

  const TensorVector<Complex> v = bethe_vector(cfg, orbit);
  const LevelBasis basis = level_basis(cfg.weights, cfg.k);
  Eigen::VectorXcd coords = Eigen::VectorXcd::Zero(basis.indices.size());
  for (std::size_t b = 0; b < basis.indices.size(); ++b) {
    auto it = v.coords().find(basis.indices[b]);
    if (it != v.coords().end()) coords(b) = it->second;
  }
  report.vector_norm = coords.size() == 0 ? 0.0 : coords.cwiseAbs().maxCoeff();
  if (report.vector_norm == 0.0) {
    throw std::runtime_error("verify_eigenpair: vanishing vector");
  }

  report.residuals.resize(cfg.z.n());
  for (int j = 0; j < cfg.z.n(); ++j) {
    const OperatorMatrix hj = hamiltonian(cfg.weights, cfg.k, cfg.z, j + 1);
    const Eigen::VectorXcd diff = hj.mat * coords - report.mu[j] * coords;
    report.residuals[j] = diff.cwiseAbs().maxCoeff() / report.vector_norm;
    report.max_residual = std::max(report.max_residual, report.residuals[j]);
  }
  report.pass = report.max_residual <= kEigenpairResidualTol &&
                report.hessian_min_singular > kHessianMarginTol;
  return report;
}

}  // namespace gw
