#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gw/linalg.hpp"
#include "gw/scalar.hpp"

namespace gw {

/// Dense univariate polynomial, coefficients ascending by degree.
/// The zero polynomial stores no coefficients and reports degree() == -1.
template <class S>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial zero() { return Polynomial(); }

  static Polynomial constant(S value) {
    return Polynomial(std::vector<S>{std::move(value)});
  }

  static Polynomial monomial(int degree, S coeff = ScalarTraits<S>::one()) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<S> c(degree + 1, ScalarTraits<S>::zero());
    c.back() = std::move(coeff);
    return Polynomial(std::move(c));
  }

  /// Monic product of (x - r) over the given roots.
  static Polynomial from_roots(const std::vector<S>& roots) {
    Polynomial p = constant(ScalarTraits<S>::one());
    for (const S& r : roots) {
      p = p * Polynomial(std::vector<S>{-r, ScalarTraits<S>::one()});
    }
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  /// Coefficient of x^i; zero beyond the stored range.
  S coeff(int i) const {
    if (i < 0) throw std::invalid_argument("coeff: negative index");
    return i < static_cast<int>(c_.size()) ? c_[i] : ScalarTraits<S>::zero();
  }

  const std::vector<S>& coeffs() const { return c_; }

  S leading() const {
    if (is_zero()) throw std::domain_error("leading: zero polynomial");
    return c_.back();
  }

  /// Horner evaluation.
  S operator()(const S& x) const {
    S acc = ScalarTraits<S>::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<S> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
      d[i - 1] = c_[i] * ScalarTraits<S>::from_int(static_cast<long long>(i));
    }
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    std::vector<S> c(c_);
    for (S& v : c) v = -v;
    return Polynomial(std::move(c));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ScalarTraits<S>::zero());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ScalarTraits<S>::zero());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<S> c(a.c_.size() + b.c_.size() - 1, ScalarTraits<S>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (ScalarTraits<S>::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        c[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const S& s, Polynomial p) {
    for (S& v : p.c_) v *= s;
    p.trim();
    return p;
  }
  friend Polynomial operator*(Polynomial p, const S& s) { return s * std::move(p); }

  friend Polynomial operator/(Polynomial p, const S& s) {
    if (ScalarTraits<S>::is_zero(s)) {
      throw std::invalid_argument("polynomial division by zero scalar");
    }
    for (S& v : p.c_) v /= s;
    p.trim();
    return p;
  }

  /// Long division over the coefficient field: returns {quotient, remainder}.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) {
      throw std::invalid_argument("divmod: division by zero polynomial");
    }
    Polynomial rem = *this;
    const int dd = divisor.degree();
    if (rem.degree() < dd) return {Polynomial(), rem};
    std::vector<S> quot(rem.degree() - dd + 1, ScalarTraits<S>::zero());
    const S inv_lead = ScalarTraits<S>::one() / divisor.leading();
    while (!rem.is_zero() && rem.degree() >= dd) {
      const int shift = rem.degree() - dd;
      S factor = rem.leading() * inv_lead;
      quot[shift] = factor;
      // rem -= factor * x^shift * divisor, dropping the leading term exactly.
      for (int i = 0; i <= dd; ++i) {
        rem.c_[shift + i] -= factor * divisor.c_[i];
      }
      rem.c_.resize(shift + dd);  // leading term cancels by construction
      rem.trim();
    }
    return {Polynomial(std::move(quot)), rem};
  }

  /// Exact structural equality. Float-kind comparisons in tests should prefer
  /// approx_equal below.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  std::string to_string() const {
    std::ostringstream out;
    out << "poly[";
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) out << ", ";
      out << c_[i];
    }
    out << "]";
    return out.str();
  }

 private:
  void trim() {
    while (!c_.empty() && ScalarTraits<S>::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
};

template <class S>
S eval(const Polynomial<S>& p, const S& x) {
  return p(x);
}

template <class S>
Polynomial<S> derivative(const Polynomial<S>& p) {
  return p.derivative();
}

/// Monic gcd by the Euclidean algorithm; exact scalar kinds only.
template <class S>
Polynomial<S> gcd_monic(Polynomial<S> a, Polynomial<S> b) {
  static_assert(ScalarTraits<S>::exact, "gcd_monic needs exact arithmetic");
  while (!b.is_zero()) {
    Polynomial<S> r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a / a.leading();
}

namespace detail {
template <class S>
S pow_scalar(const S& base, int e) {
  S acc = ScalarTraits<S>::one();
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}
}  // namespace detail

/// Resultant with the convention
///   resultant(p, q) = lc(q)^{deg p} * prod over roots b of q of p(b),
/// so that for monic q the result is simply the product of p over q's roots.
template <class S>
S resultant(const Polynomial<S>& p, const Polynomial<S>& q) {
  if (p.is_zero() || q.is_zero()) {
    throw std::invalid_argument("resultant: zero polynomial");
  }
  const int dp = p.degree();
  const int dq = q.degree();
  if (dp == 0) return detail::pow_scalar(p.leading(), dq);
  if (dq == 0) return detail::pow_scalar(q.leading(), dp);
  // Sylvester matrix of (q, p): dp rows of q's coefficients, dq rows of p's,
  // each written descending and shifted one column per row.
  const int n = dp + dq;
  DenseMatrix<S> syl(n, n);
  for (int r = 0; r < dp; ++r) {
    for (int i = 0; i <= dq; ++i) syl.at(r, r + i) = q.coeff(dq - i);
  }
  for (int r = 0; r < dq; ++r) {
    for (int i = 0; i <= dp; ++i) syl.at(dp + r, r + i) = p.coeff(dp - i);
  }
  return determinant(std::move(syl));
}

/// Discriminant of a monic polynomial, normalized so that
///   discriminant(p) = prod_{i<j} (t_i - t_j)^2 over the roots of p.
/// Degree 1 gives the empty product 1; degree 0 is rejected.
template <class S>
S discriminant(const Polynomial<S>& p) {
  if (p.is_zero() || p.degree() < 1) {
    throw std::invalid_argument("discriminant: degree must be at least 1");
  }
  Polynomial<S> monic = p / p.leading();
  const int n = monic.degree();
  if (n == 1) return ScalarTraits<S>::one();
  S res = resultant(monic.derivative(), monic);
  return (n * (n - 1) / 2) % 2 == 0 ? res : -res;
}

/// Multiplicity of x0 as a root of p (0 when p(x0) != 0).
/// Exact kinds count exact divisions by (x - x0); the float kind counts
/// leading derivatives that vanish against a coefficient-scale threshold.
template <class S>
int root_multiplicity(const Polynomial<S>& p, const S& x0,
                      double float_tol = 1e-7) {
  if (p.is_zero()) {
    throw std::invalid_argument("root_multiplicity: zero polynomial");
  }
  if constexpr (ScalarTraits<S>::exact) {
    Polynomial<S> cur = p;
    Polynomial<S> linear(std::vector<S>{-x0, ScalarTraits<S>::one()});
    int count = 0;
    while (!cur.is_zero() && ScalarTraits<S>::is_zero(cur(x0))) {
      cur = cur.divmod(linear).first;
      ++count;
    }
    return count;
  } else {
    Polynomial<S> cur = p;
    const double grow = std::max(1.0, ScalarTraits<S>::magnitude(x0));
    int count = 0;
    while (!cur.is_zero()) {
      double scale = 0.0;
      double power = 1.0;
      for (int i = 0; i <= cur.degree(); ++i) {
        scale += ScalarTraits<S>::magnitude(cur.coeff(i)) * power;
        power *= grow;
      }
      if (ScalarTraits<S>::magnitude(cur(x0)) > float_tol * scale) break;
      cur = cur.derivative();
      ++count;
    }
    return count;
  }
}

/// Coefficient-wise comparison with relative tolerance and absolute floor.
inline bool approx_equal(const Polynomial<Complex>& a,
                         const Polynomial<Complex>& b,
                         double rel = kCoeffRelTol, double abs = kCoeffAbsTol) {
  const int top = std::max(a.degree(), b.degree());
  for (int i = 0; i <= top; ++i) {
    if (!approx_equal(a.coeff(i), b.coeff(i), rel, abs)) return false;
  }
  return true;
}

inline Polynomial<Complex> to_complex(const Polynomial<Rational>& p) {
  std::vector<Complex> c(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) c[i] = to_complex(p.coeff(i));
  return Polynomial<Complex>(std::move(c));
}

}  // namespace gw
