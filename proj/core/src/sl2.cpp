#include "gw/sl2.hpp"

#include <algorithm>
#include <cstdint>

#include <Eigen/Dense>

namespace gw {

namespace {

// ---------------------------------------------------------------------------
// Small-fraction arithmetic for the exact kernel fast path: int64 numerator
// and denominator, products carried in __int128, gcd reduction applied only
// when entries outgrow 32 bits. Overflow (post-reduction values beyond int64)
// raises Rat64Overflow and the caller restarts with full rationals.
// ---------------------------------------------------------------------------

struct Rat64Overflow {};

using int128 = __int128;

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Rat64 {
  long long num = 0;
  long long den = 1;

  static Rat64 from_int(long long v) { return Rat64{v, 1}; }
  bool is_zero() const { return num == 0; }
};

constexpr int128 kLazyLimit = int128(1) << 31;
constexpr int128 kStoreLimit = (int128(1) << 62) - 1;

Rat64 fit(int128 num, int128 den) {
  if (den == 0) throw std::domain_error("Rat64: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rat64{0, 1};
  int128 anum = num < 0 ? -num : num;
  if (anum >= kLazyLimit || den >= kLazyLimit) {
    int128 g = gcd128(anum, den);
    num /= g;
    den /= g;
    anum = num < 0 ? -num : num;
    if (anum > kStoreLimit || den > kStoreLimit) throw Rat64Overflow{};
  }
  return Rat64{static_cast<long long>(num), static_cast<long long>(den)};
}

Rat64 operator*(const Rat64& a, const Rat64& b) {
  return fit(int128(a.num) * b.num, int128(a.den) * b.den);
}

Rat64 operator/(const Rat64& a, const Rat64& b) {
  if (b.num == 0) throw std::domain_error("Rat64: division by zero");
  return fit(int128(a.num) * b.den, int128(a.den) * b.num);
}

Rat64 operator-(const Rat64& a, const Rat64& b) {
  return fit(int128(a.num) * b.den - int128(b.num) * a.den,
             int128(a.den) * b.den);
}

// Adapter so the elimination below can run on either scalar.
template <class Q>
struct FieldOps;

template <>
struct FieldOps<Rat64> {
  static Rat64 from_int(long long v) { return Rat64::from_int(v); }
  static bool is_zero(const Rat64& q) { return q.is_zero(); }
  static Rational to_rational(const Rat64& q) {
    return Rational(q.num, q.den);
  }
};

template <>
struct FieldOps<Rational> {
  static Rational from_int(long long v) { return Rational(v); }
  static bool is_zero(const Rational& q) { return q == 0; }
  static Rational to_rational(const Rational& q) { return q; }
};

// Right-nullspace basis of an integer matrix over the rationals: forward
// elimination to row echelon form, then one back-substitution per free
// column. Free columns are processed in ascending order, which makes the
// returned basis deterministic.
template <class Q>
std::vector<std::vector<Rational>> echelon_kernel(
    int rows, int cols, const std::vector<long long>& entries) {
  using Ops = FieldOps<Q>;
  std::vector<Q> a(static_cast<size_t>(rows) * cols);
  for (size_t i = 0; i < a.size(); ++i) a[i] = Ops::from_int(entries[i]);
  auto at = [&](int r, int c) -> Q& {
    return a[static_cast<size_t>(r) * cols + c];
  };

  std::vector<int> pivot_cols;
  pivot_cols.reserve(std::min(rows, cols));
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!Ops::is_zero(at(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = col; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
    }
    for (int r = rank + 1; r < rows; ++r) {
      if (Ops::is_zero(at(r, col))) continue;
      Q factor = at(r, col) / at(rank, col);
      at(r, col) = Ops::from_int(0);
      for (int c = col + 1; c < cols; ++c) {
        if (Ops::is_zero(at(rank, c))) continue;
        at(r, c) = at(r, c) - factor * at(rank, c);
      }
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int c : pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

  std::vector<std::vector<Rational>> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    // Solve for the pivot coordinates bottom-up; the vector is supported on
    // the free column and the pivot columns only.
    std::vector<Q> v(static_cast<size_t>(cols), Ops::from_int(0));
    v[static_cast<size_t>(free_col)] = Ops::from_int(1);
    for (int i = rank - 1; i >= 0; --i) {
      const int pc = pivot_cols[static_cast<size_t>(i)];
      if (pc > free_col) continue;  // those coordinates stay zero
      Q acc = Ops::from_int(0);
      if (free_col > pc && !Ops::is_zero(at(i, free_col))) {
        acc = acc - at(i, free_col);  // times v[free_col] = 1, moved to rhs
      }
      for (size_t l = static_cast<size_t>(i) + 1; l < pivot_cols.size(); ++l) {
        const int later = pivot_cols[l];
        if (later > free_col) break;  // later pivots beyond free_col are zero
        if (Ops::is_zero(v[static_cast<size_t>(later)]) ||
            Ops::is_zero(at(i, later))) {
          continue;
        }
        acc = acc - at(i, later) * v[static_cast<size_t>(later)];
      }
      v[static_cast<size_t>(pc)] = acc / at(i, pc);
    }
    std::vector<Rational> out(static_cast<size_t>(cols));
    for (int c = 0; c < cols; ++c) {
      out[static_cast<size_t>(c)] = Ops::to_rational(v[static_cast<size_t>(c)]);
    }
    basis.push_back(std::move(out));
  }
  return basis;
}

std::vector<std::vector<Rational>> integer_kernel(
    int rows, int cols, const std::vector<long long>& entries) {
  try {
    return echelon_kernel<Rat64>(rows, cols, entries);
  } catch (const Rat64Overflow&) {
    return echelon_kernel<Rational>(rows, cols, entries);
  }
}

void enumerate_indices(const WeightVector& m, int remaining, int position,
                       std::vector<int>& suffix_capacity, TensorIndex& current,
                       std::vector<TensorIndex>& out) {
  if (position == m.n()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const int cap_after = suffix_capacity[static_cast<size_t>(position) + 1];
  const int top = std::min(m.m(position), remaining);
  for (int j = 0; j <= top; ++j) {
    if (remaining - j > cap_after) continue;
    current[static_cast<size_t>(position)] = j;
    enumerate_indices(m, remaining - j, position + 1, suffix_capacity, current,
                      out);
  }
  current[static_cast<size_t>(position)] = 0;
}

// Raising-operator matrix between the level-k monomial basis (columns) and
// the level-(k-1) basis (rows), with integer entries j_i (m_i - j_i + 1).
struct RaisingMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> entries;  // row-major
  std::vector<TensorIndex> col_basis;
};

RaisingMatrix raising_matrix(const WeightVector& m, int k) {
  RaisingMatrix out;
  out.col_basis = level_basis_indices(m, k);
  std::vector<TensorIndex> row_basis =
      k > 0 ? level_basis_indices(m, k - 1) : std::vector<TensorIndex>{};
  out.rows = static_cast<int>(row_basis.size());
  out.cols = static_cast<int>(out.col_basis.size());
  out.entries.assign(static_cast<size_t>(out.rows) * out.cols, 0);
  for (int c = 0; c < out.cols; ++c) {
    const TensorIndex& j = out.col_basis[static_cast<size_t>(c)];
    TensorIndex target = j;
    for (int i = 0; i < m.n(); ++i) {
      const int ji = j[static_cast<size_t>(i)];
      if (ji == 0) continue;
      --target[static_cast<size_t>(i)];
      auto it =
          std::lower_bound(row_basis.begin(), row_basis.end(), target);
      const int r = static_cast<int>(it - row_basis.begin());
      out.entries[static_cast<size_t>(r) * out.cols + c] =
          1LL * ji * (m.m(i) - ji + 1);
      ++target[static_cast<size_t>(i)];
    }
  }
  return out;
}

void check_level_range(const WeightVector& m, int k) {
  if (k < 0 || 2LL * k > m.total()) {
    throw std::invalid_argument(
        "singular_basis: level must satisfy 0 <= k <= |M|/2");
  }
}

}  // namespace

std::vector<TensorIndex> level_basis_indices(const WeightVector& m, int k) {
  if (k < 0 || k > m.total()) {
    throw std::invalid_argument("level_basis_indices: level out of range");
  }
  std::vector<int> suffix_capacity(static_cast<size_t>(m.n()) + 1, 0);
  for (int i = m.n() - 1; i >= 0; --i) {
    suffix_capacity[static_cast<size_t>(i)] =
        suffix_capacity[static_cast<size_t>(i) + 1] + m.m(i);
  }
  std::vector<TensorIndex> out;
  TensorIndex current(static_cast<size_t>(m.n()), 0);
  enumerate_indices(m, k, 0, suffix_capacity, current, out);
  return out;
}

ShapovalovData shapovalov_data(const WeightVector& m) {
  ShapovalovData data;
  data.per_factor.reserve(static_cast<size_t>(m.n()));
  for (int i = 0; i < m.n(); ++i) {
    std::vector<Integer> norms(static_cast<size_t>(m.m(i)) + 1);
    norms[0] = 1;
    for (int j = 1; j <= m.m(i); ++j) {
      norms[static_cast<size_t>(j)] =
          norms[static_cast<size_t>(j) - 1] * j * (m.m(i) - j + 1);
    }
    data.per_factor.push_back(std::move(norms));
  }
  return data;
}

Integer shapovalov_norm(const WeightVector& m, const TensorIndex& j) {
  if (static_cast<int>(j.size()) != m.n()) {
    throw std::invalid_argument("shapovalov_norm: index arity mismatch");
  }
  Integer norm = 1;
  for (int i = 0; i < m.n(); ++i) {
    const int ji = j[static_cast<size_t>(i)];
    if (ji < 0 || ji > m.m(i)) {
      throw std::invalid_argument("shapovalov_norm: index out of range");
    }
    for (int l = 1; l <= ji; ++l) norm *= 1LL * l * (m.m(i) - l + 1);
  }
  return norm;
}

std::vector<TensorVector<Rational>> singular_basis_exact(const WeightVector& m,
                                                         int k) {
  check_level_range(m, k);
  RaisingMatrix a = raising_matrix(m, k);
  std::vector<std::vector<Rational>> kernel =
      integer_kernel(a.rows, a.cols, a.entries);
  std::vector<TensorVector<Rational>> basis;
  basis.reserve(kernel.size());
  for (const auto& coords : kernel) {
    TensorVector<Rational> v(m, k);
    for (int c = 0; c < a.cols; ++c) {
      if (coords[static_cast<size_t>(c)] == 0) continue;
      v.add_term(a.col_basis[static_cast<size_t>(c)],
                 coords[static_cast<size_t>(c)]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<TensorVector<Complex>> singular_basis_numeric(
    const WeightVector& m, int k, int exact_dim_limit) {
  check_level_range(m, k);
  const long long level_dim =
      static_cast<long long>(level_basis_indices(m, k).size());

  std::vector<TensorVector<Complex>> basis;
  if (level_dim <= exact_dim_limit) {
    for (const auto& exact : singular_basis_exact(m, k)) {
      TensorVector<Complex> v(m, k);
      for (const auto& [j, c] : exact.coords()) {
        v.add_term(j, to_complex(c));
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  RaisingMatrix a = raising_matrix(m, k);
  Eigen::MatrixXd dense(a.rows, a.cols);
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) {
      dense(r, c) =
          static_cast<double>(a.entries[static_cast<size_t>(r) * a.cols + c]);
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(dense);
  lu.setThreshold(1e-10);
  Eigen::MatrixXd kernel = lu.kernel();
  for (int v = 0; v < kernel.cols(); ++v) {
    TensorVector<Complex> vec(m, k);
    for (int c = 0; c < a.cols; ++c) {
      if (std::abs(kernel(c, v)) < 1e-12) continue;
      vec.add_term(a.col_basis[static_cast<size_t>(c)],
                   Complex(kernel(c, v), 0.0));
    }
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace gw
