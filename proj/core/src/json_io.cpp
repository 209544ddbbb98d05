#include "modwedge/json_io.hpp"

#include <cstdio>

namespace modwedge::io {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

json complex_matrix_to_json(const Eigen::MatrixXcd& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      data.push_back({m(i, j).real(), m(i, j).imag()});
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Eigen::MatrixXcd complex_matrix_from_json(const json& j) {
  const Eigen::Index rows = j.at("rows"), cols = j.at("cols");
  Eigen::MatrixXcd m(rows, cols);
  const auto& data = j.at("data");
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index k = 0; k < cols; ++k) {
      const auto& cell = data.at(static_cast<size_t>(i * cols + k));
      m(i, k) = std::complex<double>(cell.at(0), cell.at(1));
    }
  return m;
}

json real_matrix_to_json(const Eigen::MatrixXd& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) data.push_back(m(i, j));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Eigen::MatrixXd real_matrix_from_json(const json& j) {
  const Eigen::Index rows = j.at("rows"), cols = j.at("cols");
  Eigen::MatrixXd m(rows, cols);
  const auto& data = j.at("data");
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index k = 0; k < cols; ++k)
      m(i, k) = data.at(static_cast<size_t>(i * cols + k));
  return m;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Eigen::VectorXd vector_from_json(const json& j) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = j.at(static_cast<size_t>(i));
  return v;
}

json complex_vector_to_json(const Eigen::VectorXcd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back({v(i).real(), v(i).imag()});
  return out;
}

Eigen::VectorXcd complex_vector_from_json(const json& j) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const auto& cell = j.at(static_cast<size_t>(i));
    v(i) = std::complex<double>(cell.at(0), cell.at(1));
  }
  return v;
}

json subspace_to_json(const hilbert::RealSubspace& v) {
  json cols = json::array();
  for (int j = 0; j < v.dim(); ++j)
    cols.push_back(complex_vector_to_json(v.frame().col(j)));
  return json{{"ambient_dim", v.ambient_dim()}, {"columns", cols}};
}

hilbert::RealSubspace subspace_from_json(const json& j) {
  const int n = j.at("ambient_dim");
  const auto& cols = j.at("columns");
  if (cols.empty()) return hilbert::RealSubspace::zero(n);
  std::vector<Eigen::VectorXcd> vectors;
  for (const auto& c : cols) vectors.push_back(complex_vector_from_json(c));
  return hilbert::real_orthonormalize(vectors);
}

json modular_pair_to_json(const modular::ModularPair& pair) {
  return json{{"delta", complex_matrix_to_json(pair.delta)},
              {"j_matrix", complex_matrix_to_json(pair.j.matrix())}};
}

modular::ModularPair modular_pair_from_json(const json& j) {
  return modular::ModularPair{
      complex_matrix_from_json(j.at("delta")),
      hilbert::AntilinearOp(complex_matrix_from_json(j.at("j_matrix")))};
}

json spectral_model_to_json(const modular::SpectralModel& m) {
  json atoms = json::array();
  for (const auto& [p, w] : m.atoms) atoms.push_back({p, w});
  return json{{"atoms", atoms}, {"beta", m.beta}};
}

modular::SpectralModel spectral_model_from_json(const json& j) {
  modular::SpectralModel m;
  m.beta = j.value("beta", 2 * EIGEN_PI);
  for (const auto& a : j.at("atoms")) m.atoms.emplace_back(a.at(0), a.at(1));
  return m;
}

json kms_data_to_json(const modular::KMSFunctionData& d) {
  json atoms = json::array();
  for (const auto& [l, mu] : d.atoms) atoms.push_back({l, mu});
  return json{{"atoms", atoms}, {"beta", d.beta}};
}

modular::KMSFunctionData kms_data_from_json(const json& j) {
  modular::KMSFunctionData d;
  d.beta = j.value("beta", 2 * EIGEN_PI);
  for (const auto& a : j.at("atoms")) d.atoms.emplace_back(a.at(0), a.at(1));
  return d;
}

json algebra_to_json(const liealg::LieAlgebraSpec& g) {
  json basis = json::array();
  for (const auto& b : g.basis()) basis.push_back(real_matrix_to_json(b));
  return json{{"name", g.name()}, {"matrix_size", g.matrix_size()}, {"basis", basis}};
}

liealg::LieAlgebraSpec algebra_from_json(const json& j) {
  std::vector<Eigen::MatrixXd> basis;
  for (const auto& b : j.at("basis")) basis.push_back(real_matrix_from_json(b));
  return liealg::LieAlgebraSpec(j.at("name"), basis);
}

json cone_to_json(const liealg::ConeSpec& cone) {
  json out{{"kind", cone.kind()}, {"dim", cone.dim()}};
  if (const auto* l = dynamic_cast<const liealg::LorentzCone*>(&cone))
    out["time_axis"] = l->time_axis();
  if (const auto* p = dynamic_cast<const liealg::PolyhedralCone*>(&cone))
    out["generators"] = real_matrix_to_json(p->generators());
  if (const auto* s = dynamic_cast<const liealg::Sl2InvariantCone*>(&cone))
    out["sign"] = s->sign();
  return out;
}

liealg::ConePtr cone_from_json(const json& j) {
  const std::string kind = j.at("kind");
  if (kind == "lorentz")
    return std::make_shared<liealg::LorentzCone>(j.at("dim"), j.value("time_axis", 0));
  if (kind == "psd") {
    const int n = static_cast<int>(std::lround(std::sqrt(double(j.at("dim")))));
    return std::make_shared<liealg::PsdCone>(n);
  }
  if (kind == "polyhedral")
    return std::make_shared<liealg::PolyhedralCone>(
        real_matrix_from_json(j.at("generators")));
  if (kind == "sl2_invariant")
    return std::make_shared<liealg::Sl2InvariantCone>(j.value("sign", 1));
  if (kind == "nonneg_quadratic") {
    // dim = 1 + d + d^2
    const int total = j.at("dim");
    int d = 0;
    while (1 + d + d * d < total) ++d;
    return std::make_shared<liealg::NonnegQuadraticCone>(d);
  }
  throw Error("unknown cone kind '" + kind + "'");
}

json scenario_to_json(const Scenario& s) {
  json elements = json::array();
  for (const auto& e : s.rep.elements)
    elements.push_back(json{{"label", e.label},
                            {"matrix", complex_matrix_to_json(e.unitary)},
                            {"in_SW", e.in_sw}});
  json regions = json::array();
  for (const auto& r : s.regions)
    regions.push_back(json{{"label", r.label},
                           {"covered_by", r.covered_by},
                           {"contains", r.contains}});
  return json{{"generator", complex_matrix_to_json(s.rep.generator)},
              {"j_matrix", complex_matrix_to_json(s.rep.j.matrix())},
              {"elements", elements},
              {"regions", regions}};
}

Scenario scenario_from_json(const json& j) {
  Scenario s{nets::RepSample{0, Eigen::MatrixXcd(),
                             hilbert::AntilinearOp(Eigen::MatrixXcd()), {}},
             {}};
  s.rep.generator = complex_matrix_from_json(j.at("generator"));
  s.rep.j = hilbert::AntilinearOp(complex_matrix_from_json(j.at("j_matrix")));
  s.rep.n = static_cast<int>(s.rep.generator.rows());
  for (const auto& e : j.at("elements"))
    s.rep.elements.push_back(nets::RepElement{
        e.at("label"), complex_matrix_from_json(e.at("matrix")), e.at("in_SW")});
  for (const auto& r : j.at("regions")) {
    nets::Region region;
    region.label = r.at("label");
    for (const auto& c : r.value("covered_by", json::array()))
      region.covered_by.push_back(c);
    for (const auto& c : r.value("contains", json::array()))
      region.contains.push_back(c);
    s.regions.push_back(region);
  }
  return s;
}

json net_assignment_to_json(const nets::NetAssignment& a) {
  json out = json::object();
  for (const auto& [label, subspace] : a) out[label] = subspace_to_json(subspace);
  return out;
}

std::string dump_sorted(const json& j) { return j.dump(2) + "\n"; }

}  // namespace modwedge::io
