// Command-line front end: load specs, run computations, emit JSON/CSV/SVG.
// Exit codes: 0 success, 1 validation error, 2 internal numerical failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "modwedge/causal.hpp"
#include "modwedge/fock.hpp"
#include "modwedge/json_io.hpp"
#include "modwedge/root_data.hpp"
#include "modwedge/verify.hpp"

namespace mw = modwedge;
using mw::io::json;

namespace {

uint64_t resolve_seed(uint64_t cli_seed) {
  if (const char* env = std::getenv("MODWEDGE_SEED")) return std::strtoull(env, nullptr, 10);
  return cli_seed;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mw::IOError("cannot open '" + path + "' for writing");
  out << content;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mw::IOError("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

Eigen::VectorXd parse_point(const std::string& csv) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string cell;
  while (std::getline(ss, cell, ',')) values.push_back(std::stod(cell));
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = values[static_cast<size_t>(i)];
  return v;
}

Eigen::VectorXcd parse_complex_point(const std::string& csv) {
  const Eigen::VectorXd raw = parse_point(csv);
  if (raw.size() % 2 != 0) throw mw::Error("expected re,im pairs");
  Eigen::VectorXcd v(raw.size() / 2);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = std::complex<double>(raw(2 * i), raw(2 * i + 1));
  return v;
}

// ---- subcommand bodies -----------------------------------------------------

int cmd_modular(const std::string& frame_path, const std::string& pair_path,
                const std::string& model_path, const std::string& out) {
  json result;
  if (!frame_path.empty()) {
    const auto v = mw::io::subspace_from_json(load_json(frame_path));
    const auto pair = mw::modular::modular_pair(v);
    result = mw::io::modular_pair_to_json(pair);
    result["modular_relation_residual"] = pair.modular_relation_residual();
    result["round_trip_distance"] =
        mw::hilbert::subspace_distance(mw::modular::standard_from_pair(pair), v);
  } else if (!pair_path.empty()) {
    const auto pair = mw::io::modular_pair_from_json(load_json(pair_path));
    const auto v = mw::modular::standard_from_pair(pair);
    result = mw::io::subspace_to_json(v);
    result["cyclic"] = mw::hilbert::is_cyclic(v);
    result["separating"] = mw::hilbert::is_separating(v);
  } else if (!model_path.empty()) {
    const auto model = mw::io::spectral_model_from_json(load_json(model_path));
    const auto built = mw::modular::spectral_model_build(model);
    result["generator"] = mw::io::real_matrix_to_json(built.generator);
    result["pair"] = mw::io::modular_pair_to_json(built.pair);
    result["subspace"] = mw::io::subspace_to_json(built.v);
  } else {
    throw mw::Error("modular: need --from-frame, --from-pair or --spectral-model");
  }
  write_output(out, mw::io::dump_sorted(result));
  return 0;
}

int cmd_euler(const std::string& algebra, const std::string& algebra_file,
              const std::string& element, const std::string& out, uint64_t seed) {
  const auto g = algebra_file.empty()
                     ? mw::liealg::algebra_by_name(algebra)
                     : mw::io::algebra_from_json(load_json(algebra_file));
  const auto h = algebra_file.empty()
                     ? mw::liealg::element_by_name(g, element)
                     : Eigen::VectorXd(g.to_coordinates(
                           mw::io::real_matrix_from_json(load_json(element))));
  const auto check = mw::liealg::euler_check(g, h);
  json result{{"algebra", algebra_file.empty() ? algebra : g.name()},
              {"element", element}, {"is_euler", check.is_euler}};
  if (!check.is_euler) result["reason"] = check.reason;
  if (check.is_euler) {
    json spectrum = json::array();
    for (double lam : check.datum->spectrum) spectrum.push_back(lam);
    result["spectrum"] = spectrum;
    result["dim_g_minus"] = std::lround(check.datum->p_minus.trace());
    result["dim_g_zero"] = std::lround(check.datum->p_zero.trace());
    result["dim_g_plus"] = std::lround(check.datum->p_plus.trace());
    // Root data is authoritative for the catalog families; the numeric
    // search answers for everything else.
    bool have_exact = false;
    if (algebra_file.empty()) {
      try {
        const auto report = mw::rootdata::cross_check_matrix(algebra, element);
        result["symmetric"] = report.root_symmetric;
        have_exact = true;
      } catch (const mw::Error&) {
      }
    }
    if (!have_exact) {
      mw::liealg::SearchBudget budget;
      budget.seed = seed;
      const auto search = mw::liealg::symmetric_euler_search(g, *check.datum, budget);
      switch (search.state) {
        case mw::liealg::TriState::CONFIRMED: result["symmetric"] = true; break;
        case mw::liealg::TriState::REFUTED: result["symmetric"] = false; break;
        case mw::liealg::TriState::UNKNOWN: result["symmetric"] = "unknown"; break;
      }
    }
  }
  write_output(out, mw::io::dump_sorted(result));
  return 0;
}

int cmd_rootdata(bool table, const std::string& type, int rank,
                 const std::string& out) {
  if (table) {
    write_output(out, mw::rootdata::classification_table_csv());
    return 0;
  }
  const auto t = mw::rootdata::type_from_name(type);
  const auto rs = mw::rootdata::root_system(t, rank);
  json result{{"type", type}, {"rank", rank}, {"reduced", rs.reduced}};
  result["highest_root_coeffs"] = rs.highest_root_coeffs;
  result["minus_w0"] = rs.minus_w0_perm;
  result["euler_indices"] = mw::rootdata::euler_indices(t, rank);
  json sym = json::array();
  for (int j : mw::rootdata::euler_indices(t, rank))
    if (mw::rootdata::is_symmetric_euler(t, rank, j)) sym.push_back(j);
  result["symmetric_indices"] = sym;
  write_output(out, mw::io::dump_sorted(result));
  return 0;
}

int cmd_wedge(const std::string& space, const std::string& point,
              const std::string& out) {
  const Eigen::VectorXd x = parse_point(point);
  json result{{"space", space}};
  if (space == "ds2" || space == "ds3") {
    result["inside"] = mw::causal::ds_positivity_contains(x);
    result["surface_defect"] = mw::causal::ds_surface_defect(x);
  } else if (space == "ads2") {
    const auto res = mw::causal::ads2_positivity_contains(x);
    result["inside"] = res.inside;
    result["component"] = res.component;
  } else if (space == "minkowski") {
    result["inside"] = mw::causal::in_rindler_wedge(x);
    result["margin"] = mw::causal::rindler_margin(x);
  } else if (space == "flag") {
    result["inside"] = mw::causal::flag_wedge_contains(x);
  } else if (space == "embed") {
    // conformal embedding of a Minkowski vector
    const Eigen::VectorXd p = mw::causal::conformal_embed(x);
    result["point"] = mw::io::vector_to_json(p);
    result["quadric_defect"] = mw::causal::quadric_form(p);
    result["inside"] = mw::causal::flag_wedge_contains(p);
  } else {
    throw mw::Error("unknown space '" + space + "'");
  }
  write_output(out, mw::io::dump_sorted(result));
  return 0;
}

int cmd_semigroup(const std::string& mode, const std::string& translation,
                  const std::string& lorentz_path, const std::string& element_path,
                  const std::string& out) {
  json result{{"mode", mode}};
  if (mode == "rindler") {
    mw::causal::PoincareElement g{parse_point(translation),
                                  mw::io::real_matrix_from_json(load_json(lorentz_path))};
    result["member"] = mw::causal::rindler_compression_contains(g);
  } else if (mode == "sl2") {
    const auto sl2 = mw::liealg::make_sl(2);
    Eigen::MatrixXd hm(2, 2);
    hm << 0.5, 0, 0, -0.5;
    Eigen::MatrixXd basis_change(3, 3);
    basis_change << 0, 0, 2, 1, 0, 0, 0, 1, 0;
    const auto cone = std::make_shared<mw::liealg::PullbackCone>(
        std::make_shared<mw::liealg::Sl2InvariantCone>(), basis_change);
    const Eigen::MatrixXd g = mw::io::real_matrix_from_json(load_json(element_path));
    const auto h0 = sl2.to_coordinates(hm);
    result["wedge_member"] =
        mw::causal::group_type_wedge_contains(sl2, g, h0, cone);
    result["semigroup_member"] = mw::causal::s_h_cg_contains(sl2, g, h0, cone);
  } else {
    throw mw::Error("unknown semigroup mode '" + mode + "'");
  }
  write_output(out, mw::io::dump_sorted(result));
  return 0;
}

int cmd_net(const std::string& scenario_path, const std::string& out) {
  const auto scenario = mw::io::scenario_from_json(load_json(scenario_path));
  scenario.rep.validate();
  const auto bgl = mw::nets::bgl_pair(scenario.rep.generator, scenario.rep.j);
  const auto hmax = mw::nets::net_max(scenario.regions, scenario.rep, bgl.v);
  const auto hmin = mw::nets::net_min(scenario.regions, scenario.rep, bgl.v);
  const auto bw = mw::nets::bw_check(scenario.rep, bgl.v);
  json result;
  result["subspace"] = mw::io::subspace_to_json(bgl.v);
  result["net_max"] = mw::io::net_assignment_to_json(hmax);
  result["net_min"] = mw::io::net_assignment_to_json(hmin);
  result["bw_holds"] = bw.holds;
  if (!bw.holds) {
    result["bw_witness"] = bw.witness_label;
    result["bw_defect"] = bw.witness_defect;
  }
  write_output(out, mw::io::dump_sorted(result));
  return 0;
}

int cmd_fock(int modes, int degree, const std::string& xs, const std::string& vs,
             const std::string& out) {
  const Eigen::VectorXcd x = parse_complex_point(xs);
  const Eigen::VectorXcd v = vs.empty()
                                 ? Eigen::VectorXcd::Zero(x.size())
                                 : parse_complex_point(vs);
  if (x.size() != modes) throw mw::Error("--x has wrong mode count");
  const mw::fock::TruncatedFock fock(modes, degree);
  const auto inner = mw::fock::exp_inner(x, v, degree);
  const auto apply = mw::fock::weyl_apply(fock, x, v);
  json result{{"modes", modes}, {"max_degree", degree}, {"dim", fock.dim()}};
  result["exp_inner"] = {inner.value.real(), inner.value.imag()};
  result["exp_inner_tail_bound"] = inner.tail_bound;
  result["weyl_paths_distance"] = (apply.formula_path - apply.matrix_path).norm();
  result["weyl_tail_bound"] = apply.tail_bound;
  result["weyl_relation_residual"] = mw::fock::weyl_relation_residual(fock, x, v);
  json coeffs = json::object();
  for (int i = 0; i < fock.dim(); ++i) {
    const auto& alpha = fock.basis()[static_cast<size_t>(i)];
    std::string key;
    for (size_t m = 0; m < alpha.size(); ++m) {
      if (m) key += ",";
      key += std::to_string(alpha[m]);
    }
    coeffs[key] = {apply.matrix_path(i).real(), apply.matrix_path(i).imag()};
  }
  result["displaced_vector"] = coeffs;
  write_output(out, mw::io::dump_sorted(result));
  return 0;
}

int cmd_verify(bool run_all_flag, int criterion, uint64_t seed,
               const std::string& out) {
  std::vector<mw::verify::CriterionResult> results;
  if (run_all_flag || criterion == 0)
    results = mw::verify::run_all(seed);
  else
    results.push_back(mw::verify::run_criterion(criterion, seed));
  const std::string report = mw::verify::report_text(results);
  write_output(out, report);
  return mw::verify::all_passed(results) ? 0 : 1;
}

int cmd_plot(const std::string& out, const std::string& csv_out, int orbits,
             uint64_t seed) {
  // dS^2 wedge in the (x1, x0) chart: shaded wedge x1 > |x0| and modular-flow
  // orbits x(t) = (a sinh t, a cosh t, c) from seeds (0, a, c), a^2 + c^2 = 1.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> cdist(-0.95, 0.95);
  const double extent = 3.2;
  auto sx = [&](double x1) { return 40.0 + (x1 / extent) * 360.0; };
  auto sy = [&](double x0) { return 200.0 - (x0 / (extent + 1.0)) * 180.0; };

  std::ostringstream svg, csv;
  csv << "orbit,t,x0,x1,x2\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"440\" height=\"400\" "
         "viewBox=\"0 0 440 400\">\n";
  svg << "<rect width=\"440\" height=\"400\" fill=\"white\"/>\n";
  // wedge region x1 > |x0|, clipped to the box
  svg << "<polygon points=\"" << sx(0) << "," << sy(0) << " " << sx(extent) << ","
      << sy(extent) << " " << sx(extent) << "," << sy(-extent) << "\" fill=\"#cfe8ff\""
      << " stroke=\"none\"/>\n";
  svg << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(extent)
      << "\" y2=\"" << sy(extent) << "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
  svg << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(extent)
      << "\" y2=\"" << sy(-extent) << "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
  for (int k = 0; k < orbits; ++k) {
    const double c = cdist(rng);
    const double a = std::sqrt(1.0 - c * c);
    svg << "<polyline fill=\"none\" stroke=\"#d44\" stroke-width=\"1.2\" points=\"";
    bool first = true;
    for (double t = -1.8; t <= 1.8 + 1e-9; t += 0.05) {
      Eigen::VectorXd p(3);
      p << a * std::sinh(t), a * std::cosh(t), c;
      if (!mw::causal::ds_positivity_contains(p)) continue;
      csv << k << "," << mw::io::format_double(t) << ","
          << mw::io::format_double(p(0)) << "," << mw::io::format_double(p(1)) << ","
          << mw::io::format_double(p(2)) << "\n";
      if (p(1) > extent) continue;
      if (!first) svg << " ";
      svg << mw::io::format_double(sx(p(1))) << "," << mw::io::format_double(sy(p(0)));
      first = false;
    }
    svg << "\"/>\n";
  }
  svg << "</svg>\n";
  if (!csv_out.empty()) write_output(csv_out, csv.str());
  write_output(out, svg.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modular theory of standard subspaces, Euler elements and "
               "causal wedge geometry at desk scale"};
  app.require_subcommand(1);
  app.fallthrough();
  uint64_t seed = 0;
  app.add_option("--seed", seed, "global RNG seed (MODWEDGE_SEED overrides)");

  std::string out;

  auto* modular_cmd = app.add_subcommand("modular", "modular pair calculus");
  std::string frame_path, pair_path, model_path;
  modular_cmd->add_option("--from-frame", frame_path, "frame JSON -> (delta, J)");
  modular_cmd->add_option("--from-pair", pair_path, "(delta, J) JSON -> subspace");
  modular_cmd->add_option("--spectral-model", model_path, "spectral model JSON");
  modular_cmd->add_option("--out", out, "output path (default stdout)");

  auto* euler_cmd = app.add_subcommand("euler", "Euler element check");
  std::string algebra = "sl2", element = "h1", algebra_file;
  euler_cmd->add_option("--algebra", algebra, "catalog algebra name");
  euler_cmd->add_option("--algebra-file", algebra_file,
                        "LieAlgebraSpec JSON (then --element is a matrix JSON)");
  euler_cmd->add_option("--element", element, "element name, e.g. h1, boost");
  euler_cmd->add_option("--out", out, "output path");

  auto* root_cmd = app.add_subcommand("rootdata", "root-system classification");
  bool table = false;
  std::string rtype = "A";
  int rrank = 1;
  root_cmd->add_flag("--table", table, "emit the full classification CSV");
  root_cmd->add_option("--type", rtype, "root system type");
  root_cmd->add_option("--rank", rrank, "rank");
  root_cmd->add_option("--out", out, "output path");

  auto* wedge_cmd = app.add_subcommand("wedge", "wedge membership");
  std::string space = "ds2", point;
  wedge_cmd->add_option("--space", space, "ds2|ds3|ads2|minkowski|flag|embed");
  wedge_cmd->add_option("--point", point, "comma-separated coordinates")->required();
  wedge_cmd->add_option("--out", out, "output path");

  auto* semi_cmd = app.add_subcommand("semigroup", "compression semigroups");
  std::string mode = "rindler", translation = "0,0,0,0", lorentz_path, element_path;
  semi_cmd->add_option("--mode", mode, "rindler|sl2");
  semi_cmd->add_option("--translation", translation, "translation part (rindler)");
  semi_cmd->add_option("--lorentz", lorentz_path, "Lorentz matrix JSON (rindler)");
  semi_cmd->add_option("--element", element_path, "group element JSON (sl2)");
  semi_cmd->add_option("--out", out, "output path");

  auto* net_cmd = app.add_subcommand("net", "minimal/maximal nets");
  std::string scenario_path;
  net_cmd->add_option("--scenario", scenario_path, "scenario JSON")->required();
  net_cmd->add_option("--out", out, "output path");

  auto* fock_cmd = app.add_subcommand("fock", "truncated Fock calculus");
  int modes = 1, degree = 16;
  std::string xs = "0.3,0", vs;
  fock_cmd->add_option("--modes", modes, "number of modes");
  fock_cmd->add_option("--degree", degree, "truncation degree");
  fock_cmd->add_option("--x", xs, "displacement, re,im per mode");
  fock_cmd->add_option("--v", vs, "Exp-vector argument, re,im per mode");
  fock_cmd->add_option("--out", out, "output path");

  auto* verify_cmd = app.add_subcommand("verify", "run acceptance criteria");
  bool run_all_flag = false;
  int criterion = 0;
  verify_cmd->add_flag("--all", run_all_flag, "run criteria 1-13");
  verify_cmd->add_option("--criterion", criterion, "run a single criterion");
  verify_cmd->add_option("--out", out, "output path");

  auto* plot_cmd = app.add_subcommand("plot", "dS^2 wedge SVG");
  int orbits = 7;
  std::string csv_out;
  plot_cmd->add_option("--orbits", orbits, "number of modular-flow orbits");
  plot_cmd->add_option("--csv-out", csv_out, "orbit trajectories as CSV (t, x...)");
  plot_cmd->add_option("--out", out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage problems are validation errors
  }
  const uint64_t effective_seed = resolve_seed(seed);

  try {
    if (modular_cmd->parsed())
      return cmd_modular(frame_path, pair_path, model_path, out);
    if (euler_cmd->parsed())
      return cmd_euler(algebra, algebra_file, element, out, effective_seed);
    if (root_cmd->parsed()) return cmd_rootdata(table, rtype, rrank, out);
    if (wedge_cmd->parsed()) return cmd_wedge(space, point, out);
    if (semi_cmd->parsed())
      return cmd_semigroup(mode, translation, lorentz_path, element_path, out);
    if (net_cmd->parsed()) return cmd_net(scenario_path, out);
    if (fock_cmd->parsed()) return cmd_fock(modes, degree, xs, vs, out);
    if (verify_cmd->parsed())
      return cmd_verify(run_all_flag, criterion, effective_seed, out);
    if (plot_cmd->parsed()) return cmd_plot(out, csv_out, orbits, effective_seed);
  } catch (const mw::IllConditioned& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const mw::ModularRelationViolated& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const mw::TruncationBudgetExceeded& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const mw::InvarianceViolated& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const mw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
