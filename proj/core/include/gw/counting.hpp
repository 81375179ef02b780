#pragma once

#include <vector>

#include "gw/scalar.hpp"
#include "gw/sl2.hpp"

namespace gw {

/// Binomial coefficient with C(a, b) = 0 whenever a < b (including a < 0);
/// b must be nonnegative. Exact integers.
Integer binomial(long long a, long long b);

/// Dimension of Sing_k by the alternating-sum formula
///   sum_{q=0}^{n} (-1)^q sum_{i_1<...<i_q} C(k+n-2-m_{i_1}-...-m_{i_q}-q, n-2).
/// Requires n >= 2 (the binomial lower index is n-2) and 0 <= k <= |M|/2.
long long dim_sing_formula(const WeightVector& m, int k);

/// Independent oracle: #{J : |J| = k} - #{J : |J| = k-1} with 0 <= j_i <= m_i,
/// by direct enumeration of the bounded-composition counts.
long long dim_sing_bruteforce(const WeightVector& m, int k);

/// Multiplicity of L_r in L_{q_1} x ... x L_{q_s}, by folding the two-factor
/// Clebsch-Gordan rule L_a x L_b = sum_{c=|a-b|, step 2}^{a+b} L_c.
long long cg_multiplicity(const std::vector<int>& q, int r);

/// Intersection number sigma_{q_1} ... sigma_{q_s} in G_2(d+1), computed as
/// the multiplicity of the trivial module: cg_multiplicity(q, 0).
/// Preconditions: d >= 1, q_i >= 0, sum q_i = 2d-2 (codimension match).
/// A class with q_i > d-1 does not exist in G_2(d+1); it is treated as the
/// zero class and the product returns 0.
long long schubert_special_intersection(const std::vector<int>& q, int d);

/// Closed-form intersection number over the first n = s-1 entries:
///   sum_{l=1}^{n} (-1)^{n-l} sum_{i_1<...<i_l} C(q_{i_1}+...+q_{i_l}+l-d-1, n-2).
/// The last entry enters only through the codimension constraint.
/// Requires n >= 2; all classes must satisfy 0 <= q_i <= d-1 and
/// sum q_i = 2d-2.
long long schubert_formula(const std::vector<int>& q, int d);

}  // namespace gw
