#pragma once

#include <vector>

#include "gw/polynomial.hpp"
#include "gw/scalar.hpp"

namespace gw {

/// All complex roots of p, with multiplicity, sorted by (re, im).
/// Computed from the balanced companion matrix and polished by Newton steps.
/// Constants return an empty list; the zero polynomial is rejected.
std::vector<Complex> poly_roots(const Polynomial<Complex>& p);

/// Evaluates p and p' at x in one Horner pass.
std::pair<Complex, Complex> eval_with_derivative(const Polynomial<Complex>& p,
                                                 const Complex& x);

}  // namespace gw
