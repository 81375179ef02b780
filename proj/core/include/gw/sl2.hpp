#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gw/scalar.hpp"

namespace gw {

/// Tuple of nonnegative integer weights (m_1..m_n) describing the tensor
/// product L_{m_1} x ... x L_{m_n} of irreducible sl2 modules.
class WeightVector {
 public:
  explicit WeightVector(std::vector<int> m) : m_(std::move(m)) {
    if (m_.empty()) {
      throw std::invalid_argument("WeightVector: need at least one factor");
    }
    total_ = 0;
    for (int v : m_) {
      if (v < 0) throw std::invalid_argument("WeightVector: negative weight");
      total_ += v;
    }
  }

  int n() const { return static_cast<int>(m_.size()); }
  /// Weight of factor i, zero-based.
  int m(int i) const { return m_.at(static_cast<size_t>(i)); }
  const std::vector<int>& weights() const { return m_; }
  /// |M| = sum of the weights.
  long long total() const { return total_; }

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.m_ == b.m_;
  }
  friend bool operator!=(const WeightVector& a, const WeightVector& b) {
    return !(a == b);
  }

 private:
  std::vector<int> m_;
  long long total_;
};

/// Exponent tuple J = (j_1..j_n) labelling the monomial vector f^J v_M.
using TensorIndex = std::vector<int>;

inline int index_weight(const TensorIndex& j) {
  int total = 0;
  for (int v : j) total += v;
  return total;
}

/// All indices J with 0 <= j_i <= m_i and |J| = k, in lexicographic order.
std::vector<TensorIndex> level_basis_indices(const WeightVector& m, int k);

/// Element of the weight-(|M| - 2k) subspace of the tensor product, stored as
/// a sparse map from TensorIndex to coefficient (zeros pruned). All stored
/// indices share |J| = level.
template <class S>
class TensorVector {
 public:
  TensorVector(WeightVector weights, int level)
      : weights_(std::move(weights)), level_(level) {
    if (level_ < 0 || level_ > weights_.total()) {
      throw std::invalid_argument("TensorVector: level out of range");
    }
  }

  static TensorVector basis_vector(WeightVector weights, TensorIndex j) {
    TensorVector v(std::move(weights), index_weight(j));
    v.add_term(std::move(j), ScalarTraits<S>::one());
    return v;
  }

  /// The highest weight vector v_M (all exponents zero).
  static TensorVector highest(WeightVector weights) {
    TensorIndex zero(static_cast<size_t>(weights.n()), 0);
    return basis_vector(std::move(weights), std::move(zero));
  }

  const WeightVector& weights() const { return weights_; }
  int level() const { return level_; }
  bool is_zero() const { return coords_.empty(); }
  const std::map<TensorIndex, S>& coords() const { return coords_; }

  S coeff(const TensorIndex& j) const {
    auto it = coords_.find(j);
    return it == coords_.end() ? ScalarTraits<S>::zero() : it->second;
  }

  void add_term(TensorIndex j, S value) {
    validate_index(j);
    auto [it, inserted] = coords_.try_emplace(std::move(j), value);
    if (!inserted) it->second += value;
    if (ScalarTraits<S>::is_zero(it->second)) coords_.erase(it);
  }

  TensorVector& operator+=(const TensorVector& o) {
    require_compatible(o);
    if (is_zero()) level_ = o.level_;  // the zero vector is level-agnostic
    for (const auto& [j, c] : o.coords_) add_term(j, c);
    return *this;
  }
  TensorVector& operator-=(const TensorVector& o) {
    require_compatible(o);
    if (is_zero()) level_ = o.level_;
    for (const auto& [j, c] : o.coords_) add_term(j, -c);
    return *this;
  }
  friend TensorVector operator+(TensorVector a, const TensorVector& b) {
    a += b;
    return a;
  }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) {
    a -= b;
    return a;
  }
  friend TensorVector operator*(const S& s, TensorVector v) {
    if (ScalarTraits<S>::is_zero(s)) {
      v.coords_.clear();
      return v;
    }
    for (auto& [j, c] : v.coords_) c *= s;
    return v;
  }

  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    return a.weights_ == b.weights_ && a.level_ == b.level_ &&
           a.coords_ == b.coords_;
  }

 private:
  void validate_index(const TensorIndex& j) const {
    if (static_cast<int>(j.size()) != weights_.n()) {
      throw std::invalid_argument("TensorVector: index arity mismatch");
    }
    for (int i = 0; i < weights_.n(); ++i) {
      if (j[static_cast<size_t>(i)] < 0 ||
          j[static_cast<size_t>(i)] > weights_.m(i)) {
        throw std::invalid_argument("TensorVector: index out of weight range");
      }
    }
    if (index_weight(j) != level_) {
      throw std::invalid_argument("TensorVector: index level mismatch");
    }
  }

  void require_compatible(const TensorVector& o) const {
    if (!(weights_ == o.weights_)) {
      throw std::invalid_argument("TensorVector: mismatched weight vectors");
    }
    // Levels must agree unless one side is zero (which lives in every level).
    if (level_ != o.level_ && !is_zero() && !o.is_zero()) {
      throw std::invalid_argument("TensorVector: mismatched levels");
    }
  }

  WeightVector weights_;
  int level_;
  std::map<TensorIndex, S> coords_;
};

namespace detail {
inline int checked_factor(const WeightVector& m, int factor) {
  if (factor < 1 || factor > m.n()) {
    throw std::invalid_argument("tensor action: factor out of range 1..n");
  }
  return factor - 1;
}
}  // namespace detail

/// Raising operator on one tensor factor (1-based), using
/// e.f^j v_m = j(m-j+1) f^(j-1) v_m.
template <class S>
TensorVector<S> act_e(const TensorVector<S>& v, int factor) {
  const int idx = detail::checked_factor(v.weights(), factor);
  TensorVector<S> out(v.weights(), v.level() > 0 ? v.level() - 1 : 0);
  for (const auto& [j, c] : v.coords()) {
    const int ji = j[static_cast<size_t>(idx)];
    if (ji == 0) continue;
    const int m = v.weights().m(idx);
    TensorIndex target = j;
    --target[static_cast<size_t>(idx)];
    out.add_term(std::move(target),
                 c * ScalarTraits<S>::from_int(1LL * ji * (m - ji + 1)));
  }
  return out;
}

/// Lowering operator on one tensor factor (1-based): f.f^j v_m = f^(j+1) v_m,
/// zero past the top of the string.
template <class S>
TensorVector<S> act_f(const TensorVector<S>& v, int factor) {
  const int idx = detail::checked_factor(v.weights(), factor);
  const int max_level = static_cast<int>(v.weights().total());
  TensorVector<S> out(v.weights(),
                      v.level() < max_level ? v.level() + 1 : max_level);
  for (const auto& [j, c] : v.coords()) {
    const int ji = j[static_cast<size_t>(idx)];
    if (ji == v.weights().m(idx)) continue;
    TensorIndex target = j;
    ++target[static_cast<size_t>(idx)];
    out.add_term(std::move(target), c);
  }
  return out;
}

/// Cartan operator on one tensor factor (1-based):
/// h.f^j v_m = (m-2j) f^j v_m.
template <class S>
TensorVector<S> act_h(const TensorVector<S>& v, int factor) {
  const int idx = detail::checked_factor(v.weights(), factor);
  TensorVector<S> out(v.weights(), v.level());
  for (const auto& [j, c] : v.coords()) {
    const int m = v.weights().m(idx);
    const int ji = j[static_cast<size_t>(idx)];
    if (m == 2 * ji) continue;
    out.add_term(j, c * ScalarTraits<S>::from_int(m - 2LL * ji));
  }
  return out;
}

/// Total raising operator e = sum over factors.
template <class S>
TensorVector<S> act_e_total(const TensorVector<S>& v) {
  TensorVector<S> out(v.weights(), v.level() > 0 ? v.level() - 1 : 0);
  for (int factor = 1; factor <= v.weights().n(); ++factor) {
    out += act_e(v, factor);
  }
  return out;
}

/// Per-factor diagonal norms of the Shapovalov form:
/// norms[i][j] = B_{m_i}(f^j v, f^j v) = j! * m_i! / (m_i - j)!.
struct ShapovalovData {
  std::vector<std::vector<Integer>> per_factor;
};

ShapovalovData shapovalov_data(const WeightVector& m);

/// Product of the per-factor norms at index J.
Integer shapovalov_norm(const WeightVector& m, const TensorIndex& j);

/// Shapovalov form B(u, v) = sum_J u_J v_J prod_i B_{m_i}(j_i); the monomial
/// basis f^J v_M is orthogonal, so only shared indices contribute.
template <class S>
S shapovalov_inner(const TensorVector<S>& u, const TensorVector<S>& v) {
  if (!(u.weights() == v.weights())) {
    throw std::invalid_argument("shapovalov_inner: mismatched weight vectors");
  }
  S acc = ScalarTraits<S>::zero();
  if (u.level() != v.level()) return acc;  // orthogonal weight spaces
  const auto& shorter = u.coords().size() <= v.coords().size() ? u : v;
  const auto& longer = u.coords().size() <= v.coords().size() ? v : u;
  for (const auto& [j, c] : shorter.coords()) {
    S other = longer.coeff(j);
    if (ScalarTraits<S>::is_zero(other)) continue;
    acc += c * other *
           ScalarTraits<S>::from_integer(shapovalov_norm(u.weights(), j));
  }
  return acc;
}

/// Basis of Sing_k = { v at level k : e v = 0 }, by exact rational nullspace
/// extraction from the total-raising-operator matrix between the level-k and
/// level-(k-1) monomial bases. Deterministic: free columns of the reduced
/// echelon form in lexicographic index order.
std::vector<TensorVector<Rational>> singular_basis_exact(const WeightVector& m,
                                                         int k);

/// Float-facing variant: exact computation converted to complex while the
/// level dimension is at most exact_dim_limit, dense SVD nullspace beyond it.
std::vector<TensorVector<Complex>> singular_basis_numeric(
    const WeightVector& m, int k, int exact_dim_limit = 2000);

template <class S>
std::vector<TensorVector<S>> singular_basis(const WeightVector& m, int k) {
  if constexpr (ScalarTraits<S>::exact) {
    return singular_basis_exact(m, k);
  } else {
    return singular_basis_numeric(m, k);
  }
}

}  // namespace gw
