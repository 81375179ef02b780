// Command-line front door: problem specification on flags or a JSON spec
// file, batch verification runs, machine-readable JSON reports.
//
// Exit codes: 0 all checks pass, 1 check failure (including solver
// under-counts, reported with diagnostics), 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gw/bethe.hpp"
#include "gw/counting.hpp"
#include "gw/heine_stieltjes.hpp"
#include "gw/report.hpp"
#include "gw/selftest.hpp"
#include "gw/sl2.hpp"
#include "gw/version.hpp"

namespace {

using gw::Complex;

/// Instance and solver knobs shared by the model-based subcommands. String
/// fields stay empty when the flag was not given, so a JSON spec file can
/// fill them in.
struct Cli {
  std::string m_text;
  std::string z_text;
  int k = -1;
  std::string q_text;
  int d = -1;
  gw::SolverOptions opts;
  std::string out_path;
  std::string csv_path;
  std::string spec_path;
  std::string batch_path;
  bool exact = false;
};

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open '" + path + "'");
  }
  nlohmann::json doc;
  in >> doc;
  return doc;
}

Complex complex_from_json(const nlohmann::json& v) {
  if (v.is_string()) return gw::parse_complex(v.get<std::string>());
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2) {
    return Complex(v[0].get<double>(), v[1].get<double>());
  }
  throw std::invalid_argument(
      "complex values must be [re, im], \"a+bi\", or a number");
}

/// Merges a JSON spec file into the flag values; explicit flags win.
void apply_spec_file(Cli& cli) {
  if (cli.spec_path.empty()) return;
  const nlohmann::json doc = load_json_file(cli.spec_path);
  if (cli.m_text.empty() && doc.contains("m")) {
    std::string joined;
    for (const auto& v : doc["m"]) {
      joined += (joined.empty() ? "" : ",") + std::to_string(v.get<int>());
    }
    cli.m_text = joined;
  }
  if (cli.z_text.empty() && doc.contains("z")) {
    std::string joined;
    for (const auto& v : doc["z"]) {
      joined += (joined.empty() ? "" : ",") +
                gw::format_complex(complex_from_json(v));
    }
    cli.z_text = joined;
  }
  if (cli.k < 0 && doc.contains("k")) cli.k = doc["k"].get<int>();
  if (cli.q_text.empty() && doc.contains("q")) {
    std::string joined;
    for (const auto& v : doc["q"]) {
      joined += (joined.empty() ? "" : ",") + std::to_string(v.get<int>());
    }
    cli.q_text = joined;
  }
  if (cli.d < 0 && doc.contains("d")) cli.d = doc["d"].get<int>();
  if (doc.contains("tol")) cli.opts.tol = doc["tol"].get<double>();
  if (doc.contains("cluster_eps"))
    cli.opts.cluster_eps = doc["cluster_eps"].get<double>();
  if (doc.contains("radius_factor"))
    cli.opts.radius_factor = doc["radius_factor"].get<double>();
  if (doc.contains("max_starts"))
    cli.opts.max_starts = doc["max_starts"].get<int>();
  if (doc.contains("seed"))
    cli.opts.seed = doc["seed"].get<unsigned long long>();
}

gw::ModelConfig model_from(const Cli& cli) {
  if (cli.m_text.empty() || cli.z_text.empty() || cli.k < 0) {
    throw std::invalid_argument(
        "--m, --z, and --k are required (flags or spec file)");
  }
  return gw::ModelConfig(gw::WeightVector(gw::parse_int_list(cli.m_text)),
                         gw::PointConfig(gw::parse_complex_list(cli.z_text)),
                         cli.k);
}

void emit(const std::string& command, const gw::ModelConfig* cfg,
          const Cli& cli, nlohmann::json result) {
  nlohmann::json report = gw::report_envelope(command, std::move(result));
  if (cfg) report["instance"] = gw::json_instance(*cfg);
  report["options"] = gw::json_options(cli.opts);
  gw::write_report(report, cli.out_path);
}

/// Orbit table export: one row per orbit, coordinates and eigenvalues split
/// into real and imaginary columns.
void write_orbit_csv(const std::string& path, const gw::ModelConfig& cfg,
                     const std::vector<gw::CriticalOrbit>& orbits) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "'");
  out << "orbit,residual,hessian_min_singular";
  for (int i = 1; i <= cfg.k; ++i) out << ",t" << i << "_re,t" << i << "_im";
  for (int j = 1; j <= cfg.weights.n(); ++j)
    out << ",mu" << j << "_re,mu" << j << "_im";
  out << "\n";
  out.precision(17);
  for (size_t a = 0; a < orbits.size(); ++a) {
    const auto& orbit = orbits[a];
    out << a << "," << orbit.residual << "," << orbit.hessian_min_singular;
    for (const Complex& t : orbit.t) out << "," << t.real() << "," << t.imag();
    for (const Complex& mu : gw::eigenvalues_mu(cfg, orbit))
      out << "," << mu.real() << "," << mu.imag();
    out << "\n";
  }
}

int run_dim_sing(const Cli& cli) {
  if (cli.m_text.empty() || cli.k < 0) {
    throw std::invalid_argument("--m and --k are required");
  }
  const gw::WeightVector m(gw::parse_int_list(cli.m_text));
  const long long formula = gw::dim_sing_formula(m, cli.k);
  const long long brute = gw::dim_sing_bruteforce(m, cli.k);
  const long long nullspace = static_cast<long long>(
      cli.exact ? gw::singular_basis_exact(m, cli.k).size()
                : gw::singular_basis_numeric(m, cli.k).size());
  const bool match = formula == brute && brute == nullspace;
  nlohmann::json result;
  result["formula"] = formula;
  result["bruteforce"] = brute;
  result["nullspace"] = nullspace;
  result["match"] = match;
  nlohmann::json report = gw::report_envelope("dim-sing", std::move(result));
  report["instance"] = {{"m", m.weights()}, {"k", cli.k}};
  gw::write_report(report, cli.out_path);
  return match ? 0 : 1;
}

nlohmann::json schubert_entry(const std::vector<int>& q, int d, bool* match) {
  const long long formula = gw::schubert_formula(q, d);
  const long long table = gw::schubert_special_intersection(q, d);
  *match = formula == table;
  nlohmann::json entry;
  entry["q"] = q;
  entry["d"] = d;
  entry["formula"] = formula;
  entry["cg"] = table;
  entry["match"] = *match;
  return entry;
}

int run_schubert(const Cli& cli) {
  if (!cli.batch_path.empty()) {
    const nlohmann::json doc = load_json_file(cli.batch_path);
    if (!doc.is_array()) {
      throw std::invalid_argument("--batch file must hold a JSON array");
    }
    bool all = true;
    auto entries = nlohmann::json::array();
    for (const auto& item : doc) {
      std::vector<int> q;
      int d = 0;
      if (item.is_array() && item.size() == 2) {
        q = item[0].get<std::vector<int>>();
        d = item[1].get<int>();
      } else if (item.is_object()) {
        q = item.at("q").get<std::vector<int>>();
        d = item.at("d").get<int>();
      } else {
        throw std::invalid_argument(
            "batch entries must be [q, d] pairs or {\"q\":..., \"d\":...}");
      }
      bool match = false;
      try {
        entries.push_back(schubert_entry(q, d, &match));
      } catch (const std::exception& e) {
        throw std::invalid_argument("batch entry " +
                                    std::to_string(entries.size()) + ": " +
                                    e.what());
      }
      all = all && match;
    }
    nlohmann::json report =
        gw::report_envelope("schubert", nlohmann::json{{"queries", entries}});
    gw::write_report(report, cli.out_path);
    return all ? 0 : 1;
  }
  if (cli.q_text.empty() || cli.d < 0) {
    throw std::invalid_argument("--q and --d are required (or --batch)");
  }
  bool match = false;
  nlohmann::json result =
      schubert_entry(gw::parse_int_list(cli.q_text), cli.d, &match);
  gw::write_report(gw::report_envelope("schubert", std::move(result)),
                   cli.out_path);
  return match ? 0 : 1;
}

int run_solve(const Cli& cli) {
  const gw::ModelConfig cfg = model_from(cli);
  const gw::SolveResult sol = gw::solve_bethe(cfg, cli.opts);
  nlohmann::json result;
  result["target"] = sol.target;
  result["complete"] = sol.complete;
  result["starts_used"] = sol.starts_used;
  result["domain_collapses"] = sol.domain_collapses;
  auto orbits = nlohmann::json::array();
  for (const auto& orbit : sol.orbits) orbits.push_back(gw::json_orbit(cfg, orbit));
  result["orbits"] = std::move(orbits);
  if (!sol.complete) {
    result["diagnostics"] =
        "found " + std::to_string(sol.orbits.size()) + " of " +
        std::to_string(sol.target) +
        " expected orbits; raise --max-starts or --radius-factor";
  }
  emit("solve", &cfg, cli, std::move(result));
  if (!cli.csv_path.empty()) write_orbit_csv(cli.csv_path, cfg, sol.orbits);
  return sol.complete ? 0 : 1;
}

int run_verify(const Cli& cli) {
  const gw::ModelConfig cfg = model_from(cli);
  const gw::SolveResult sol = gw::solve_bethe(cfg, cli.opts);
  bool all = sol.complete;
  auto orbits = nlohmann::json::array();
  for (const auto& orbit : sol.orbits) {
    const gw::EigenpairReport rep = gw::verify_eigenpair(cfg, orbit);
    nlohmann::json row = gw::json_orbit(cfg, orbit);
    row["max_residual"] = rep.max_residual;
    row["residuals"] = rep.residuals;
    row["vector_norm"] = rep.vector_norm;
    row["pass"] = rep.pass;
    all = all && rep.pass;
    orbits.push_back(std::move(row));
  }
  nlohmann::json result;
  result["target"] = sol.target;
  result["complete"] = sol.complete;
  result["orbits"] = std::move(orbits);
  if (!sol.orbits.empty()) {
    const gw::InjectivityReport inj =
        gw::eigenvalue_injectivity_check(cfg, sol.orbits);
    result["injectivity"] = {
        {"orbit_count", inj.orbit_count},
        {"min_orbit_separation", gw::json_margin(inj.min_orbit_separation)},
        {"min_mu_separation", gw::json_margin(inj.min_mu_separation)},
        {"max_interpolation_error", inj.max_interpolation_error},
        {"pass", inj.pass}};
    all = all && inj.pass;
  }
  result["all_pass"] = all;
  emit("verify", &cfg, cli, std::move(result));
  if (!cli.csv_path.empty()) write_orbit_csv(cli.csv_path, cfg, sol.orbits);
  return all ? 0 : 1;
}

int run_census(const Cli& cli) {
  const gw::ModelConfig cfg = model_from(cli);
  const gw::WronskianSpec spec = gw::make_wronskian_spec(cfg.weights, cfg.z);
  const gw::CensusReport census = gw::preimage_census(spec, cfg.k, cli.opts);
  const bool pass = census.solver_complete && census.equality;
  nlohmann::json result = gw::json_census(census);
  if (!census.solver_complete) {
    result["diagnostics"] =
        "solver found " + std::to_string(census.count) + " of " +
        std::to_string(census.bound) +
        " expected orbits; raise --max-starts or --radius-factor";
  }
  emit("census", &cfg, cli, std::move(result));
  if (!cli.csv_path.empty()) write_orbit_csv(cli.csv_path, cfg, census.orbits);
  return pass ? 0 : 1;
}

int run_fuchsian(const Cli& cli) {
  const gw::ModelConfig cfg = model_from(cli);
  const gw::WronskianSpec spec = gw::make_wronskian_spec(cfg.weights, cfg.z);
  const gw::SolveResult sol = gw::solve_bethe(cfg, cli.opts);
  bool all = sol.complete;
  auto rows = nlohmann::json::array();
  for (const auto& orbit : sol.orbits) {
    const gw::PolyPlane<Complex> plane =
        gw::orbit_to_plane(spec, orbit, cfg.k);
    const gw::FuchsianEquation eq = gw::fuchsian_from_plane(spec, plane);
    const std::vector<Complex> nodes = gw::van_vleck_at_nodes(cfg, orbit);
    double node_error = 0.0;
    for (int j = 0; j < cfg.z.n(); ++j) {
      node_error = std::max(
          node_error, std::abs(eq.van_vleck(cfg.z.z(j)) -
                               nodes[static_cast<size_t>(j)]));
    }
    const double scale = std::max(1.0, std::abs(nodes.front()));
    all = all && node_error / scale <= 1e-8;
    nlohmann::json row;
    row["plane"] = gw::json_plane(plane);
    row["node_poly"] = gw::json_poly(eq.node_poly);
    row["first_order_coeff"] = gw::json_poly(eq.first_order_coeff);
    row["van_vleck"] = gw::json_poly(eq.van_vleck);
    row["van_vleck_at_nodes"] = gw::json_complex_list(nodes);
    row["node_error"] = node_error;
    rows.push_back(std::move(row));
  }
  nlohmann::json result;
  result["target"] = sol.target;
  result["complete"] = sol.complete;
  result["equations"] = std::move(rows);
  result["all_pass"] = all;
  emit("fuchsian", &cfg, cli, std::move(result));
  return all ? 0 : 1;
}

int run_selftest_cmd(const Cli& cli) {
  const gw::SelftestReport rep = gw::run_selftest(&std::cout);
  if (!cli.out_path.empty()) {
    auto rows = nlohmann::json::array();
    for (const auto& r : rep.results) {
      rows.push_back({{"index", r.index},
                      {"name", r.name},
                      {"pass", r.pass},
                      {"detail", r.detail}});
    }
    nlohmann::json result;
    result["criteria"] = std::move(rows);
    result["all_pass"] = rep.all_pass;
    gw::write_report(gw::report_envelope("selftest", std::move(result)),
                     cli.out_path);
  }
  return rep.all_pass ? 0 : 1;
}

int apply_thread_cap() {
  const char* raw = std::getenv("GW_THREADS");
  if (!raw) return 0;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1) {
    std::cerr << "gw: GW_THREADS must be a positive integer, got '" << raw
              << "'\n";
    return 2;
  }
  // All pipelines currently run on one thread; the cap is honored as an
  // upper bound on whatever Eigen would otherwise grab.
  Eigen::setNbThreads(static_cast<int>(v));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical-orbit and plane-census toolkit for the rational "
               "sl2 spin model"};
  app.set_version_flag("--version", std::string(gw::kVersion));
  app.require_subcommand(1);
  app.footer(
      "Complex list entries parse as 'a+bi' or 'a' (e.g. --z 0,1,2-0.5i).\n"
      "GW_THREADS caps internal parallelism. Exit codes: 0 pass, 1 check "
      "failure, 2 usage error.");

  Cli cli;
  auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("--m", cli.m_text, "weights, comma-separated ints");
    cmd->add_option("--z", cli.z_text, "marked points, comma-separated");
    cmd->add_option("--k", cli.k, "orbit size (level)");
    cmd->add_option("--spec", cli.spec_path,
                    "JSON spec file; explicit flags override its fields");
  };
  auto add_solver = [&](CLI::App* cmd) {
    cmd->add_option("--tol", cli.opts.tol, "residual tolerance");
    cmd->add_option("--cluster-eps", cli.opts.cluster_eps,
                    "orbit-matching radius");
    cmd->add_option("--radius-factor", cli.opts.radius_factor,
                    "start disc radius / point spread");
    cmd->add_option("--max-starts", cli.opts.max_starts,
                    "start budget (0 = 200 per expected orbit)");
    cmd->add_option("--seed", cli.opts.seed, "start-sampling seed");
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", cli.out_path, "report path (default stdout)");
  };

  CLI::App* dim = app.add_subcommand(
      "dim-sing", "Dimension of the level-k singular subspace, three ways");
  dim->add_option("--m", cli.m_text, "weights, comma-separated ints");
  dim->add_option("--k", cli.k, "level");
  dim->add_option("--spec", cli.spec_path, "JSON spec file");
  dim->add_flag("--exact", cli.exact, "exact rational nullspace");
  add_out(dim);

  CLI::App* sch = app.add_subcommand(
      "schubert", "Special intersection number: closed formula vs "
                  "decomposition-table count");
  sch->add_option("--q", cli.q_text, "class codimensions, comma-separated");
  sch->add_option("--d", cli.d, "polynomial degree (planes in degree <= d)");
  sch->add_option("--batch", cli.batch_path, "JSON array of (q, d) queries");
  sch->add_option("--spec", cli.spec_path, "JSON spec file");
  add_out(sch);

  CLI::App* solve = app.add_subcommand(
      "solve", "Find all critical orbits of the master function");
  add_instance(solve);
  add_solver(solve);
  add_out(solve);
  solve->add_option("--csv", cli.csv_path, "orbit table CSV path");

  CLI::App* verify = app.add_subcommand(
      "verify", "Solve, then check eigenpairs and spectrum separation");
  add_instance(verify);
  add_solver(verify);
  add_out(verify);
  verify->add_option("--csv", cli.csv_path, "orbit table CSV path");

  CLI::App* census = app.add_subcommand(
      "census", "Count planes with the prescribed Wronskian against the "
                "intersection-number bound");
  add_instance(census);
  add_solver(census);
  add_out(census);
  census->add_option("--csv", cli.csv_path, "orbit table CSV path");

  CLI::App* fuchs = app.add_subcommand(
      "fuchsian", "Second-order equations attached to the critical orbits");
  add_instance(fuchs);
  add_solver(fuchs);
  add_out(fuchs);

  CLI::App* self = app.add_subcommand(
      "selftest", "Run the full acceptance suite on built-in instances");
  add_out(self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (const int code = apply_thread_cap(); code != 0) return code;

  try {
    apply_spec_file(cli);
    if (dim->parsed()) return run_dim_sing(cli);
    if (sch->parsed()) return run_schubert(cli);
    if (solve->parsed()) return run_solve(cli);
    if (verify->parsed()) return run_verify(cli);
    if (census->parsed()) return run_census(cli);
    if (fuchs->parsed()) return run_fuchsian(cli);
    if (self->parsed()) return run_selftest_cmd(cli);
  } catch (const std::invalid_argument& e) {
    std::cerr << "gw: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "gw: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "gw: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
