#include "gw/roots.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace gw {

namespace {

// Parlett–Reinsch balancing by powers of two: rescales rows/columns until the
// 1-norms of each row/column pair are roughly equal. Exact in floating point
// (radix scaling), so eigenvalues are unchanged up to conditioning.
void balance_in_place(Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  bool converged = false;
  while (!converged) {
    converged = true;
    for (int i = 0; i < n; ++i) {
      double row = 0.0, col = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        row += std::abs(a(i, j));
        col += std::abs(a(j, i));
      }
      if (row == 0.0 || col == 0.0) continue;
      double factor = 1.0;
      const double s = row + col;
      while (col < row / 2.0) {
        col *= 2.0;
        row /= 2.0;
        factor *= 2.0;
      }
      while (col > row * 2.0) {
        col /= 2.0;
        row *= 2.0;
        factor /= 2.0;
      }
      if (factor != 1.0 && row + col < 0.95 * s) {
        converged = false;
        a.row(i) /= factor;
        a.col(i) *= factor;
      }
    }
  }
}

}  // namespace

std::pair<Complex, Complex> eval_with_derivative(const Polynomial<Complex>& p,
                                                 const Complex& x) {
  Complex value(0.0, 0.0);
  Complex deriv(0.0, 0.0);
  for (int i = p.degree(); i >= 0; --i) {
    deriv = deriv * x + value;
    value = value * x + p.coeff(i);
  }
  return {value, deriv};
}

std::vector<Complex> poly_roots(const Polynomial<Complex>& p) {
  if (p.is_zero()) {
    throw std::invalid_argument("poly_roots: zero polynomial");
  }
  Polynomial<Complex> monic = p / p.leading();
  std::vector<Complex> roots;

  // Peel off exact zero roots so the companion matrix stays well-posed.
  std::vector<Complex> c = monic.coeffs();
  size_t low = 0;
  while (low < c.size() - 1 && c[low] == Complex(0.0, 0.0)) ++low;
  for (size_t i = 0; i < low; ++i) roots.emplace_back(0.0, 0.0);
  c.erase(c.begin(), c.begin() + static_cast<long>(low));

  const int d = static_cast<int>(c.size()) - 1;
  if (d >= 1) {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) {
      companion(i, d - 1) = -c[static_cast<size_t>(i)];
      if (i > 0) companion(i, i - 1) = Complex(1.0, 0.0);
    }
    balance_in_place(companion);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("poly_roots: eigenvalue iteration failed");
    }
    Polynomial<Complex> reduced((std::vector<Complex>(c)));
    for (int i = 0; i < d; ++i) {
      Complex r = solver.eigenvalues()(i);
      // Newton polish against the deflated polynomial; bail out near critical
      // points, where multiple roots make the step unreliable.
      for (int step = 0; step < 8; ++step) {
        auto [value, deriv] = eval_with_derivative(reduced, r);
        const double dmag = std::abs(deriv);
        if (dmag < 1e-12 * std::max(1.0, std::abs(value))) break;
        Complex delta = value / deriv;
        r -= delta;
        if (std::abs(delta) <= 1e-15 * std::max(1.0, std::abs(r))) break;
      }
      roots.push_back(r);
    }
  }

  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

}  // namespace gw
