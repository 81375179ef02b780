#include "gw/gaudin.hpp"

#include <algorithm>

namespace gw {

namespace {

int locate_index(const std::vector<TensorIndex>& basis, const TensorIndex& j) {
  auto it = std::lower_bound(basis.begin(), basis.end(), j);
  if (it == basis.end() || *it != j) {
    throw std::logic_error("operator image left the weight level");
  }
  return static_cast<int>(it - basis.begin());
}

void check_factor_pair(const WeightVector& m, int i, int j) {
  if (i < 1 || j <= i || j > m.n()) {
    throw std::invalid_argument(
        "casimir_pair: factors must satisfy 1 <= i < j <= n");
  }
}

}  // namespace

LevelBasis level_basis(const WeightVector& m, int level) {
  return LevelBasis{m, level, level_basis_indices(m, level)};
}

OperatorMatrix casimir_pair(const WeightVector& m, int level, int i, int j) {
  check_factor_pair(m, i, j);
  LevelBasis basis = level_basis(m, level);
  const int dim = static_cast<int>(basis.indices.size());
  OperatorMatrix out{Eigen::MatrixXcd::Zero(dim, dim), m, level, false};
  const Complex half(0.5, 0.0);
  for (int col = 0; col < dim; ++col) {
    auto u = TensorVector<Complex>::basis_vector(
        m, basis.indices[static_cast<size_t>(col)]);
    TensorVector<Complex> image = act_e(act_f(u, j), i);
    image += act_f(act_e(u, j), i);
    image += half * act_h(act_h(u, j), i);
    for (const auto& [index, value] : image.coords()) {
      out.mat(locate_index(basis.indices, index), col) = value;
    }
  }
  return out;
}

OperatorMatrix hamiltonian(const WeightVector& m, int level,
                           const PointConfig& z, int i) {
  if (z.n() != m.n()) {
    throw std::invalid_argument(
        "hamiltonian: point count must match the number of factors");
  }
  if (i < 1 || i > m.n()) {
    throw std::invalid_argument("hamiltonian: factor out of range 1..n");
  }
  const int dim = static_cast<int>(level_basis_indices(m, level).size());
  OperatorMatrix out{Eigen::MatrixXcd::Zero(dim, dim), m, level, false};
  for (int j = 1; j <= m.n(); ++j) {
    if (j == i) continue;
    OperatorMatrix omega =
        j > i ? casimir_pair(m, level, i, j) : casimir_pair(m, level, j, i);
    out.mat += omega.mat / (z.z(i - 1) - z.z(j - 1));
  }
  return out;
}

OperatorMatrix restrict_to_singular(
    const OperatorMatrix& op, const std::vector<TensorVector<Complex>>& basis,
    double* invariance_residual) {
  if (op.singular_frame) {
    throw std::invalid_argument(
        "restrict_to_singular: operator is already in a singular frame");
  }
  if (basis.empty()) {
    throw std::invalid_argument("restrict_to_singular: empty basis");
  }
  LevelBasis frame = level_basis(op.weights, op.level);
  const int dim = static_cast<int>(frame.indices.size());
  const int rank = static_cast<int>(basis.size());
  Eigen::MatrixXcd b(dim, rank);
  b.setZero();
  for (int c = 0; c < rank; ++c) {
    const auto& v = basis[static_cast<size_t>(c)];
    if (!(v.weights() == op.weights) || v.level() != op.level) {
      throw std::invalid_argument(
          "restrict_to_singular: basis does not match the operator block");
    }
    for (const auto& [index, value] : v.coords()) {
      b(locate_index(frame.indices, index), c) = value;
    }
  }
  Eigen::MatrixXcd images = op.mat * b;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(b);
  if (qr.rank() < rank) {
    throw std::invalid_argument(
        "restrict_to_singular: basis vectors are linearly dependent");
  }
  Eigen::MatrixXcd coords = qr.solve(images);
  const double residual =
      max_abs(b * coords - images) / std::max(1.0, max_abs(images));
  if (invariance_residual) *invariance_residual = residual;
  if (residual > 1e-10) {
    throw std::runtime_error(
        "restrict_to_singular: invariance violation, images leave the span");
  }
  return OperatorMatrix{std::move(coords), op.weights, op.level, true};
}

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double commutator_residual(const OperatorMatrix& a, const OperatorMatrix& b) {
  const double na = max_abs(a.mat);
  const double nb = max_abs(b.mat);
  if (na == 0.0 || nb == 0.0) return 0.0;
  return max_abs(a.mat * b.mat - b.mat * a.mat) / (na * nb);
}

double shapovalov_symmetry_residual(const OperatorMatrix& op) {
  if (op.singular_frame) {
    throw std::invalid_argument(
        "shapovalov_symmetry_residual: needs the tensor-index frame");
  }
  LevelBasis frame = level_basis(op.weights, op.level);
  const int dim = static_cast<int>(frame.indices.size());
  Eigen::VectorXcd norms(dim);
  for (int i = 0; i < dim; ++i) {
    norms(i) = Complex(
        shapovalov_norm(op.weights, frame.indices[static_cast<size_t>(i)])
            .convert_to<double>(),
        0.0);
  }
  Eigen::MatrixXcd dh = norms.asDiagonal() * op.mat;
  Eigen::MatrixXcd htd = op.mat.transpose() * norms.asDiagonal();
  const double scale = max_abs(dh);
  return scale == 0.0 ? 0.0 : max_abs(htd - dh) / scale;
}

}  // namespace gw
