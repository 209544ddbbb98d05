#pragma once

// JSON schemas for the CLI: frames, modular pairs, spectral models, algebra
// specs, cones, and net scenarios. Matrices are row-major arrays of [re, im]
// pairs; keys are emitted sorted; formatting is run-to-run byte stable.

#include <json.hpp>
#include <string>

#include "modwedge/cones.hpp"
#include "modwedge/lie_algebra.hpp"
#include "modwedge/modular.hpp"
#include "modwedge/nets.hpp"

namespace modwedge::io {

using json = nlohmann::json;

// %.17g, for CSV cells and anywhere a pinned decimal form matters.
std::string format_double(double x);

json complex_matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd complex_matrix_from_json(const json& j);

json real_matrix_to_json(const Eigen::MatrixXd& m);
Eigen::MatrixXd real_matrix_from_json(const json& j);

json vector_to_json(const Eigen::VectorXd& v);
Eigen::VectorXd vector_from_json(const json& j);

json complex_vector_to_json(const Eigen::VectorXcd& v);
Eigen::VectorXcd complex_vector_from_json(const json& j);

// {ambient_dim, columns: [[ [re,im], ... ], ...]}
json subspace_to_json(const hilbert::RealSubspace& v);
hilbert::RealSubspace subspace_from_json(const json& j);

// {delta: matrix, j_matrix: matrix}
json modular_pair_to_json(const modular::ModularPair& pair);
modular::ModularPair modular_pair_from_json(const json& j);

// {atoms: [[p, w], ...], beta}
json spectral_model_to_json(const modular::SpectralModel& m);
modular::SpectralModel spectral_model_from_json(const json& j);
json kms_data_to_json(const modular::KMSFunctionData& d);
modular::KMSFunctionData kms_data_from_json(const json& j);

// {name, matrix_size, basis: [matrix, ...]}
json algebra_to_json(const liealg::LieAlgebraSpec& g);
liealg::LieAlgebraSpec algebra_from_json(const json& j);

// Tagged cones: {kind: "...", ...}.
json cone_to_json(const liealg::ConeSpec& cone);
liealg::ConePtr cone_from_json(const json& j);

// {generator, j_matrix, elements: [{label, matrix, in_SW}],
//  regions: [{label, covered_by, contains}]}
struct Scenario {
  nets::RepSample rep;
  std::vector<nets::Region> regions;
};
json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const json& j);

json net_assignment_to_json(const nets::NetAssignment& a);

std::string dump_sorted(const json& j);  // 2-space indent, sorted keys, '\n'

}  // namespace modwedge::io
