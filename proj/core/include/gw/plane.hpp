#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "gw/polynomial.hpp"
#include "gw/roots.hpp"
#include "gw/scalar.hpp"

namespace gw {

namespace detail {

/// Coefficient-magnitude bound sum |c_i| * max(1,|x|)^i, the natural scale
/// for "p vanishes at x" tests in floating point.
inline double eval_scale(const Polynomial<Complex>& p, double xmag) {
  const double grow = std::max(1.0, xmag);
  double scale = 0.0, power = 1.0;
  for (int i = 0; i <= p.degree(); ++i) {
    scale += std::abs(p.coeff(i)) * power;
    power *= grow;
  }
  return scale;
}

template <class S>
Polynomial<S> make_monic_checked(Polynomial<S> p, const char* what) {
  if (p.is_zero()) {
    throw std::invalid_argument(std::string(what) + ": zero polynomial");
  }
  return p / p.leading();
}

}  // namespace detail

/// Two-dimensional space of polynomials spanned by a monic `small` of degree a
/// and a monic `big` of degree b, with a < b <= ambient degree d. Stored in
/// the canonical basis: big's coefficient at x^a is zeroed by subtracting a
/// multiple of small, so equal planes compare equal coefficient-wise.
template <class S>
class PolyPlane {
 public:
  PolyPlane(Polynomial<S> small, Polynomial<S> big)
      : PolyPlane(std::move(small), std::move(big), -1) {}

  PolyPlane(Polynomial<S> small, Polynomial<S> big, int ambient_degree)
      : small_(detail::make_monic_checked(std::move(small), "PolyPlane small")),
        big_(detail::make_monic_checked(std::move(big), "PolyPlane big")) {
    const int a = small_.degree();
    const int b = big_.degree();
    if (a >= b) {
      throw std::invalid_argument(
          "PolyPlane: basis degrees must satisfy small < big");
    }
    ambient_ = ambient_degree < 0 ? b : ambient_degree;
    if (b > ambient_) {
      throw std::invalid_argument(
          "PolyPlane: big degree exceeds ambient degree");
    }
    big_ -= big_.coeff(a) * small_;  // canonical form: big has no x^a term
  }

  const Polynomial<S>& small() const { return small_; }
  const Polynomial<S>& big() const { return big_; }
  int small_degree() const { return small_.degree(); }
  int big_degree() const { return big_.degree(); }
  int ambient_degree() const { return ambient_; }

  friend bool operator==(const PolyPlane& u, const PolyPlane& v) {
    return u.ambient_ == v.ambient_ && u.small_ == v.small_ && u.big_ == v.big_;
  }
  friend bool operator!=(const PolyPlane& u, const PolyPlane& v) {
    return !(u == v);
  }

 private:
  Polynomial<S> small_;
  Polynomial<S> big_;
  int ambient_ = 0;
};

inline bool approx_equal(const PolyPlane<Complex>& u,
                         const PolyPlane<Complex>& v,
                         double rel = kCoeffRelTol, double abs = kCoeffAbsTol) {
  return u.ambient_degree() == v.ambient_degree() &&
         approx_equal(u.small(), v.small(), rel, abs) &&
         approx_equal(u.big(), v.big(), rel, abs);
}

/// Monic Wronskian (f'g - fg')/(a-b) of monic f, g with deg f = a < b = deg g.
/// Its degree is a + b - 1.
template <class S>
Polynomial<S> wronskian_pair(const Polynomial<S>& f, const Polynomial<S>& g,
                             int a, int b) {
  if (a == b) {
    throw std::invalid_argument("wronskian_pair: equal degrees");
  }
  if (f.degree() != a || g.degree() != b) {
    throw std::invalid_argument("wronskian_pair: stated degrees do not match");
  }
  Polynomial<S> num = f.derivative() * g - f * g.derivative();
  return num / ScalarTraits<S>::from_int(a - b);
}

template <class S>
Polynomial<S> plane_wronskian(const PolyPlane<S>& v) {
  return wronskian_pair(v.small(), v.big(), v.small_degree(), v.big_degree());
}

/// True iff the basis polynomials share no root (there is a polynomial in the
/// plane not vanishing at any given point).
template <class S>
bool is_generic_plane(const PolyPlane<S>& v) {
  if constexpr (ScalarTraits<S>::exact) {
    return gcd_monic(v.small(), v.big()).degree() == 0;
  } else {
    if (v.small_degree() == 0) return true;
    const double tol = 1e-8;
    for (const Complex& r : poly_roots(v.small())) {
      const double big_scale = detail::eval_scale(v.big(), std::abs(r));
      if (std::abs(v.big()(r)) <= tol * big_scale) return false;
    }
    return true;
  }
}

/// True iff the plane is generic and its small member is squarefree
/// (discriminant nonzero; the float kind reads this as a minimum pairwise
/// root separation of 1e-7).
template <class S>
bool is_nondegenerate_plane(const PolyPlane<S>& v) {
  if (!is_generic_plane(v)) return false;
  if (v.small_degree() <= 1) return true;
  if constexpr (ScalarTraits<S>::exact) {
    return !ScalarTraits<S>::is_zero(discriminant(v.small()));
  } else {
    const std::vector<Complex> roots = poly_roots(v.small());
    const double min_sep = 1e-7;
    for (size_t i = 0; i < roots.size(); ++i) {
      for (size_t j = i + 1; j < roots.size(); ++j) {
        if (std::abs(roots[i] - roots[j]) <= min_sep) return false;
      }
    }
    return true;
  }
}

/// Reconstructs the unique plane with small member f and Wronskian w, if one
/// exists: solves (f'g - fg')/(k-d) = w for monic g of degree d = deg(w)+1-k
/// with the canonical constraint g[k] = 0. Returns nullopt when the
/// overdetermined system is inconsistent (f is not a member of any such
/// plane). Float-kind consistency threshold: residual <= 1e-8 relative.
template <class S>
std::optional<PolyPlane<S>> recover_plane(const Polynomial<S>& f,
                                          const Polynomial<S>& w) {
  Polynomial<S> fm = detail::make_monic_checked(f, "recover_plane f");
  Polynomial<S> wm = detail::make_monic_checked(w, "recover_plane w");
  const int k = fm.degree();
  const int d = wm.degree() + 1 - k;
  if (d <= k) {
    throw std::invalid_argument(
        "recover_plane: Wronskian degree too small for the given member");
  }
  const int rows = k + d;  // coefficients 0 .. k+d-1

  // Column for unknown coefficient g_j: f'*x^j - j*f*x^(j-1).
  auto column = [&](int j) {
    Polynomial<S> col = fm.derivative() * Polynomial<S>::monomial(j);
    if (j > 0) {
      col -= ScalarTraits<S>::from_int(j) * fm * Polynomial<S>::monomial(j - 1);
    }
    return col;
  };

  std::vector<int> unknowns;
  unknowns.reserve(d - 1);
  for (int j = 0; j < d; ++j) {
    if (j != k) unknowns.push_back(j);
  }
  Polynomial<S> rhs =
      ScalarTraits<S>::from_int(k - d) * wm - column(d);  // g_d = 1 is known

  std::vector<S> solution(unknowns.size(), ScalarTraits<S>::zero());
  if constexpr (ScalarTraits<S>::exact) {
    DenseMatrix<S> a(rows, static_cast<int>(unknowns.size()));
    std::vector<S> b(rows, ScalarTraits<S>::zero());
    for (size_t uc = 0; uc < unknowns.size(); ++uc) {
      Polynomial<S> col = column(unknowns[uc]);
      for (int r = 0; r < rows; ++r) a.at(r, static_cast<int>(uc)) = col.coeff(r);
    }
    for (int r = 0; r < rows; ++r) b[r] = rhs.coeff(r);
    auto x = solve_exact(std::move(a), std::move(b));
    if (!x) return std::nullopt;
    solution = std::move(*x);
  } else {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows, unknowns.size());
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(rows);
    for (size_t uc = 0; uc < unknowns.size(); ++uc) {
      Polynomial<S> col = column(unknowns[uc]);
      for (int r = 0; r < rows; ++r) a(r, uc) = col.coeff(r);
    }
    for (int r = 0; r < rows; ++r) b(r) = rhs.coeff(r);
    Eigen::VectorXcd x = a.colPivHouseholderQr().solve(b);
    const double residual = (a * x - b).norm();
    if (residual > 1e-8 * std::max(1.0, b.norm())) return std::nullopt;
    for (size_t uc = 0; uc < unknowns.size(); ++uc) solution[uc] = x(uc);
  }

  std::vector<S> g(d + 1, ScalarTraits<S>::zero());
  g[d] = ScalarTraits<S>::one();
  for (size_t uc = 0; uc < unknowns.size(); ++uc) {
    g[unknowns[uc]] = solution[uc];
  }
  return PolyPlane<S>(std::move(fm), Polynomial<S>(std::move(g)), d);
}

}  // namespace gw
