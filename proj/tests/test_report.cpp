#include "gw/report.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "doctest.h"

#include "gw/bethe.hpp"
#include "gw/heine_stieltjes.hpp"

using gw::Complex;
using nlohmann::json;

namespace {

gw::ModelConfig canonical_config() {
  return gw::ModelConfig(gw::WeightVector({1, 1}),
                         gw::PointConfig({Complex(0.0), Complex(1.0)}), 1);
}

}  // namespace

TEST_CASE("complex scalars and polynomials serialize ascending") {
  CHECK(gw::json_complex(Complex(1.5, -2.0)) == json::array({1.5, -2.0}));

  gw::Polynomial<Complex> p({Complex(0.0, 1.0), Complex(2.0)});
  CHECK(gw::json_poly(p) == json::array({{0.0, 1.0}, {2.0, 0.0}}));

  gw::Polynomial<gw::Rational> q(
      {gw::Rational(1, 2), gw::Rational(-3), gw::Rational(0)});
  const json out = gw::json_poly(q);
  CHECK(out == json::array({"1/2", "-3/1"}));
}

TEST_CASE("matrices serialize row-major") {
  Eigen::MatrixXcd m(2, 2);
  m << Complex(1, 0), Complex(0, 2), Complex(3, 0), Complex(0, -4);
  const json out = gw::json_matrix(m);
  CHECK(out.size() == 2);
  CHECK(out[0] == json::array({{1.0, 0.0}, {0.0, 2.0}}));
  CHECK(out[1] == json::array({{3.0, 0.0}, {0.0, -4.0}}));
}

TEST_CASE("tensor coordinates serialize as index/value pairs") {
  gw::TensorVector<Complex> v(gw::WeightVector({1, 1}), 1);
  v.add_term({1, 0}, Complex(2.0));
  v.add_term({0, 1}, Complex(-2.0));
  const json out = gw::json_tensor(v);
  // std::map ordering: (0,1) before (1,0)
  CHECK(out == json::array({{{0, 1}, {-2.0, 0.0}}, {{1, 0}, {2.0, 0.0}}}));
}

TEST_CASE("infinite margins become null") {
  CHECK(gw::json_margin(std::numeric_limits<double>::infinity()).is_null());
  CHECK(gw::json_margin(0.25) == json(0.25));
}

TEST_CASE("orbit row carries coordinates, checks, and the eigenvector") {
  const gw::ModelConfig cfg = canonical_config();
  const gw::SolveResult sol = gw::solve_bethe(cfg, gw::SolverOptions{});
  REQUIRE(sol.orbits.size() == 1);
  const json row = gw::json_orbit(cfg, sol.orbits.front());
  CHECK(row["t"] == json::array({{0.5, 0.0}}));
  CHECK(row["mu"] == json::array({{1.5, 0.0}, {-1.5, 0.0}}));
  CHECK(row["residual"].get<double>() <= 1e-11);
  CHECK(row["hessian_min_singular"].get<double>() > 1e-8);
  CHECK(row["bethe_vector"].size() == 2);
}

TEST_CASE("census report carries the documented fields") {
  const gw::ModelConfig cfg = canonical_config();
  const gw::WronskianSpec spec = gw::make_wronskian_spec(cfg.weights, cfg.z);
  const gw::CensusReport census = gw::preimage_census(spec, cfg.k);
  const json out = gw::json_census(census);
  CHECK(out["instance"]["m"] == json::array({1, 1}));
  CHECK(out["instance"]["k"] == 1);
  CHECK(out["count"] == 1);
  CHECK(out["schubert_bound"] == 1);
  CHECK(out["equality_flag"] == true);
  CHECK(out["orbits"].size() == 1);
  CHECK(out["planes"].size() == 1);
  CHECK(out["planes"][0]["small"] == json::array({{-0.5, 0.0}, {1.0, 0.0}}));
  CHECK(out["wronskian_error"].get<double>() <= 1e-9);
  CHECK(out["solver_complete"] == true);
}

TEST_CASE("envelope stamps schema, version, and command") {
  const json report = gw::report_envelope("solve", json{{"x", 1}});
  CHECK(report["schema"] == gw::kReportSchema);
  CHECK(report["version"] == gw::kVersion);
  CHECK(report["command"] == "solve");
  CHECK(report["result"]["x"] == 1);
  const std::string stamp = report["timestamp"].get<std::string>();
  CHECK(stamp.size() == 20);
  CHECK(stamp.back() == 'Z');
}

TEST_CASE("reports write to files") {
  const std::string path = "test_report_tmp.json";
  gw::write_report(json{{"a", 1}}, path);
  std::ifstream in(path);
  REQUIRE(in.good());
  json back;
  in >> back;
  CHECK(back["a"] == 1);
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("integer list parsing") {
  CHECK(gw::parse_int_list("1,2,3") == std::vector<int>({1, 2, 3}));
  CHECK(gw::parse_int_list("-4") == std::vector<int>({-4}));
  CHECK_THROWS_AS((void)gw::parse_int_list(""), std::invalid_argument);
  CHECK_THROWS_AS((void)gw::parse_int_list("1,x"), std::invalid_argument);
  CHECK_THROWS_AS((void)gw::parse_int_list("1.5"), std::invalid_argument);
  CHECK_THROWS_AS((void)gw::parse_int_list("1,,2"), std::invalid_argument);
}

TEST_CASE("complex list parsing") {
  const auto pts = gw::parse_complex_list("0,1,1.7+0.6i,-0.9+1.1i");
  REQUIRE(pts.size() == 4);
  CHECK(pts[2] == Complex(1.7, 0.6));
  CHECK(pts[3] == Complex(-0.9, 1.1));
  CHECK_THROWS_AS((void)gw::parse_complex_list("1,"), std::invalid_argument);
  CHECK_THROWS_AS((void)gw::parse_complex_list(""), std::invalid_argument);
}

TEST_CASE("serialization is deterministic") {
  const gw::ModelConfig cfg = canonical_config();
  const gw::SolveResult a = gw::solve_bethe(cfg, gw::SolverOptions{});
  const gw::SolveResult b = gw::solve_bethe(cfg, gw::SolverOptions{});
  CHECK(gw::json_orbit(cfg, a.orbits.front()).dump(2) ==
        gw::json_orbit(cfg, b.orbits.front()).dump(2));
}
