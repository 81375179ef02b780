#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

#include "gw/bethe.hpp"
#include "gw/gaudin.hpp"
#include "gw/heine_stieltjes.hpp"
#include "gw/plane.hpp"
#include "gw/polynomial.hpp"
#include "gw/scalar.hpp"
#include "gw/sl2.hpp"
#include "gw/version.hpp"

namespace gw {

/// Complex scalar as a two-element [re, im] array.
nlohmann::json json_complex(const Complex& value);
nlohmann::json json_complex_list(const std::vector<Complex>& values);

/// Coefficient list, ascending degree. Complex coefficients serialize as
/// [re, im] pairs, rational ones as exact "p/q" strings.
nlohmann::json json_poly(const Polynomial<Complex>& p);
nlohmann::json json_poly(const Polynomial<Rational>& p);

/// Row-major nested arrays of [re, im] entries (debug payloads only).
nlohmann::json json_matrix(const Eigen::MatrixXcd& m);

/// Sparse tensor coordinates as [index, coefficient] pairs in index order,
/// e.g. [[[1, 0], [2.0, 0.0]], [[0, 1], [-2.0, 0.0]]].
nlohmann::json json_tensor(const TensorVector<Complex>& v);
nlohmann::json json_tensor(const TensorVector<Rational>& v);

/// Finite margins pass through; the +infinity margin of an empty orbit
/// serializes as null (JSON has no infinities).
nlohmann::json json_margin(double value);

/// Orbit row: coordinates, residual, hessian margin, eigenvalues, and (for
/// small orbit sizes) the symmetrized eigenvector coordinates.
nlohmann::json json_orbit(const ModelConfig& cfg, const CriticalOrbit& orbit);

/// Canonical basis of a 2-plane: small and big member plus ambient degree.
nlohmann::json json_plane(const PolyPlane<Complex>& plane);

/// Instance block: weights, marked points, orbit size.
nlohmann::json json_instance(const ModelConfig& cfg);

/// Solver knobs exactly as used, for reproducibility.
nlohmann::json json_options(const SolverOptions& opts);

/// Full fibre census: instance, orbit rows, plane bases, Wronskian errors,
/// intersection-number bound, count, and the equality flag.
nlohmann::json json_census(const CensusReport& report);

/// Wraps a payload with schema, tool version, command name, and timestamp.
/// Every field except "timestamp" is deterministic for fixed inputs.
nlohmann::json report_envelope(const std::string& command,
                               nlohmann::json payload);

/// Serializes with sorted keys, two-space indent, trailing newline. Empty
/// path writes to stdout.
void write_report(const nlohmann::json& report, const std::string& out_path);

/// Comma-separated parsers for CLI flags; complex entries accept the same
/// grammar as parse_complex ("1.5", "-2i", "3+4i").
std::vector<int> parse_int_list(const std::string& text);
std::vector<Complex> parse_complex_list(const std::string& text);

}  // namespace gw
