#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gw/scalar.hpp"
#include "gw/sl2.hpp"

namespace gw {

/// Pairwise-distinct marked points z_1..z_n attached to the tensor factors.
class PointConfig {
 public:
  explicit PointConfig(std::vector<Complex> z) : z_(std::move(z)) {
    if (z_.empty()) {
      throw std::invalid_argument("PointConfig: need at least one point");
    }
    for (size_t i = 0; i < z_.size(); ++i) {
      for (size_t j = i + 1; j < z_.size(); ++j) {
        if (z_[i] == z_[j]) {
          throw std::invalid_argument("PointConfig: coincident points");
        }
      }
    }
  }

  int n() const { return static_cast<int>(z_.size()); }
  /// Zero-based access.
  const Complex& z(int i) const { return z_.at(static_cast<size_t>(i)); }
  const std::vector<Complex>& points() const { return z_; }

 private:
  std::vector<Complex> z_;
};

/// Ordered monomial basis f^J v_M of one weight level (lexicographic).
struct LevelBasis {
  WeightVector weights;
  int level;
  std::vector<TensorIndex> indices;
};

LevelBasis level_basis(const WeightVector& m, int level);

/// Dense operator block on one weight level. `singular_frame` distinguishes
/// the tensor-index basis (false) from a singular-vector basis (true).
struct OperatorMatrix {
  Eigen::MatrixXcd mat;
  WeightVector weights;
  int level;
  bool singular_frame = false;
};

/// Casimir exchange operator on factors i < j (1-based):
/// e (x) f + f (x) e + (1/2) h (x) h, identity on the other factors,
/// restricted to the |J| = level block of the monomial basis. The operator
/// preserves weight levels, so the full-space matrix is the direct sum of
/// these blocks over all levels.
OperatorMatrix casimir_pair(const WeightVector& m, int level, int i, int j);

/// Gaudin hamiltonian H_i(z) = sum_{j != i} Omega_ij / (z_i - z_j) on the
/// |J| = level block.
OperatorMatrix hamiltonian(const WeightVector& m, int level,
                           const PointConfig& z, int i);

/// Matrix of the operator in the given singular basis. The basis must span an
/// invariant subspace: components of the images outside the span (relative,
/// max-entry norm) above 1e-10 raise an invariance-violation error. When
/// `invariance_residual` is non-null the measured relative residual is stored
/// there before any check.
OperatorMatrix restrict_to_singular(
    const OperatorMatrix& op, const std::vector<TensorVector<Complex>>& basis,
    double* invariance_residual = nullptr);

/// Max-absolute-entry norm, the scale-free norm used by all operator checks.
double max_abs(const Eigen::MatrixXcd& m);

/// ||AB - BA|| / (||A|| ||B||) in the max-entry norm (0 when either is 0).
double commutator_residual(const OperatorMatrix& a, const OperatorMatrix& b);

/// || H^T D - D H || / || D H || with D the diagonal of Shapovalov norms:
/// measures the failure of B(Hu, v) = B(u, Hv) on the level block.
double shapovalov_symmetry_residual(const OperatorMatrix& op);

}  // namespace gw
