#include "gw/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gw {

namespace {

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

std::string rational_string(const Rational& x) {
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

nlohmann::json json_complex(const Complex& value) {
  return nlohmann::json::array({value.real(), value.imag()});
}

nlohmann::json json_complex_list(const std::vector<Complex>& values) {
  auto out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(json_complex(v));
  return out;
}

nlohmann::json json_poly(const Polynomial<Complex>& p) {
  auto out = nlohmann::json::array();
  for (int i = 0; i <= p.degree(); ++i) out.push_back(json_complex(p.coeff(i)));
  return out;
}

nlohmann::json json_poly(const Polynomial<Rational>& p) {
  auto out = nlohmann::json::array();
  for (int i = 0; i <= p.degree(); ++i) {
    out.push_back(rational_string(p.coeff(i)));
  }
  return out;
}

nlohmann::json json_matrix(const Eigen::MatrixXcd& m) {
  auto rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(json_complex(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json json_tensor(const TensorVector<Complex>& v) {
  auto out = nlohmann::json::array();
  for (const auto& [index, value] : v.coords()) {
    out.push_back(nlohmann::json::array({index, json_complex(value)}));
  }
  return out;
}

nlohmann::json json_tensor(const TensorVector<Rational>& v) {
  auto out = nlohmann::json::array();
  for (const auto& [index, value] : v.coords()) {
    out.push_back(nlohmann::json::array(
        {index, rational_string(value)}));
  }
  return out;
}

nlohmann::json json_margin(double value) {
  if (std::isinf(value)) return nullptr;
  return value;
}

nlohmann::json json_orbit(const ModelConfig& cfg, const CriticalOrbit& orbit) {
  nlohmann::json out;
  out["t"] = json_complex_list(orbit.t);
  out["residual"] = orbit.residual;
  out["hessian_min_singular"] = json_margin(orbit.hessian_min_singular);
  out["mu"] = json_complex_list(eigenvalues_mu(cfg, orbit));
  // Exact symmetrization is only tabulated for small orbits; beyond that the
  // row still carries coordinates, residual, margin, and eigenvalues.
  out["bethe_vector"] =
      cfg.k <= 8 ? json_tensor(bethe_vector(cfg, orbit)) : nlohmann::json();
  return out;
}

nlohmann::json json_plane(const PolyPlane<Complex>& plane) {
  nlohmann::json out;
  out["small"] = json_poly(plane.small());
  out["big"] = json_poly(plane.big());
  out["ambient_degree"] = plane.ambient_degree();
  return out;
}

nlohmann::json json_instance(const ModelConfig& cfg) {
  nlohmann::json out;
  out["m"] = cfg.weights.weights();
  out["z"] = json_complex_list(cfg.z.points());
  out["k"] = cfg.k;
  return out;
}

nlohmann::json json_options(const SolverOptions& opts) {
  nlohmann::json out;
  out["tol"] = opts.tol;
  out["cluster_eps"] = opts.cluster_eps;
  out["radius_factor"] = opts.radius_factor;
  out["max_starts"] = opts.max_starts;
  out["seed"] = opts.seed;
  return out;
}

nlohmann::json json_census(const CensusReport& report) {
  nlohmann::json out;
  nlohmann::json instance;
  instance["m"] = report.m.weights();
  instance["z"] = json_complex_list(report.z);
  instance["k"] = report.k;
  out["instance"] = std::move(instance);

  ModelConfig cfg(report.m, PointConfig(report.z), report.k);
  auto orbits = nlohmann::json::array();
  for (const auto& orbit : report.orbits) orbits.push_back(json_orbit(cfg, orbit));
  out["orbits"] = std::move(orbits);

  auto planes = nlohmann::json::array();
  for (const auto& plane : report.planes) planes.push_back(json_plane(plane));
  out["planes"] = std::move(planes);

  out["wronskian_error"] = report.wronskian_errors.empty()
                               ? 0.0
                               : *std::max_element(report.wronskian_errors.begin(),
                                                   report.wronskian_errors.end());
  out["wronskian_errors"] = report.wronskian_errors;
  out["plane_degrees"] = report.plane_degrees;
  out["schubert_bound"] = report.bound;
  out["count"] = report.count;
  out["equality_flag"] = report.equality;
  out["solver_complete"] = report.solver_complete;
  out["trivial_level"] = report.trivial_level;
  out["smaller_degree_seen"] = report.smaller_degree_seen;
  return out;
}

nlohmann::json report_envelope(const std::string& command,
                               nlohmann::json payload) {
  nlohmann::json out;
  out["schema"] = kReportSchema;
  out["version"] = kVersion;
  out["command"] = command;
  out["timestamp"] = utc_timestamp();
  out["result"] = std::move(payload);
  return out;
}

void write_report(const nlohmann::json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) {
    throw std::runtime_error("write_report: cannot open '" + out_path + "'");
  }
  file << text;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split_csv(text)) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_int_list: cannot parse '" + part + "'");
    }
    while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used]))) ++used;
    if (used != part.size()) {
      throw std::invalid_argument("parse_int_list: cannot parse '" + part + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("parse_int_list: empty list");
  return out;
}

std::vector<Complex> parse_complex_list(const std::string& text) {
  std::vector<Complex> out;
  for (const auto& part : split_csv(text)) out.push_back(parse_complex(part));
  if (out.empty()) throw std::invalid_argument("parse_complex_list: empty list");
  return out;
}

}  // namespace gw
