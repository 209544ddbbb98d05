#include "modwedge/root_data.hpp"

#include <algorithm>
#include <sstream>

#include "modwedge/lie_algebra.hpp"

namespace modwedge::rootdata {

std::string type_name(Type t) {
  switch (t) {
    case Type::A: return "A";
    case Type::B: return "B";
    case Type::C: return "C";
    case Type::D: return "D";
    case Type::E6: return "E6";
    case Type::E7: return "E7";
    case Type::E8: return "E8";
    case Type::F4: return "F4";
    case Type::G2: return "G2";
    case Type::BC: return "BC";
  }
  throw Error("bad type");
}

Type type_from_name(const std::string& name) {
  if (name == "A") return Type::A;
  if (name == "B") return Type::B;
  if (name == "C") return Type::C;
  if (name == "D") return Type::D;
  if (name == "E6") return Type::E6;
  if (name == "E7") return Type::E7;
  if (name == "E8") return Type::E8;
  if (name == "F4") return Type::F4;
  if (name == "G2") return Type::G2;
  if (name == "BC") return Type::BC;
  throw Error("unknown root system type '" + name + "'");
}

namespace {

void check_rank(Type type, int rank) {
  switch (type) {
    case Type::A:
    case Type::B:
    case Type::C:
    case Type::BC:
      if (rank < 1) throw InvalidRank(type_name(type), rank);
      break;
    case Type::D:
      if (rank < 3) throw InvalidRank(type_name(type), rank);
      break;
    case Type::E6:
      if (rank != 6) throw InvalidRank("E6", rank);
      break;
    case Type::E7:
      if (rank != 7) throw InvalidRank("E7", rank);
      break;
    case Type::E8:
      if (rank != 8) throw InvalidRank("E8", rank);
      break;
    case Type::F4:
      if (rank != 4) throw InvalidRank("F4", rank);
      break;
    case Type::G2:
      if (rank != 2) throw InvalidRank("G2", rank);
      break;
  }
}

std::vector<std::vector<int>> cartan_ADE_chain(int n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) {
      c[i][i + 1] = -1;
      c[i + 1][i] = -1;
    }
  }
  return c;
}

std::vector<std::vector<int>> cartan_matrix(Type type, int n) {
  // Bourbaki numbering throughout.
  switch (type) {
    case Type::A:
      return cartan_ADE_chain(n);
    case Type::B: {  // alpha_n short: a_{n-1,n} = -2
      auto c = cartan_ADE_chain(n);
      if (n >= 2) c[n - 2][n - 1] = -2;
      return c;
    }
    case Type::C: {  // alpha_n long: a_{n,n-1} = -2
      auto c = cartan_ADE_chain(n);
      if (n >= 2) c[n - 1][n - 2] = -2;
      return c;
    }
    case Type::BC: {  // non-reduced; Cartan data of B_n kept for reference
      auto c = cartan_ADE_chain(n);
      if (n >= 2) c[n - 2][n - 1] = -2;
      return c;
    }
    case Type::D: {
      auto c = cartan_ADE_chain(n);
      // fork: alpha_n attaches to alpha_{n-2}
      c[n - 1][n - 2] = 0;
      c[n - 2][n - 1] = 0;
      c[n - 1][n - 3] = -1;
      c[n - 3][n - 1] = -1;
      return c;
    }
    case Type::E6:
    case Type::E7:
    case Type::E8: {
      const int n_ = type == Type::E6 ? 6 : (type == Type::E7 ? 7 : 8);
      // chain 1-3-4-5-6(-7)(-8), node 2 attached to 4 (Bourbaki)
      std::vector<std::vector<int>> c(n_, std::vector<int>(n_, 0));
      for (int i = 0; i < n_; ++i) c[i][i] = 2;
      auto link = [&](int a, int b) {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
      };
      link(1, 3);
      link(3, 4);
      link(4, 5);
      link(5, 6);
      if (n_ >= 7) link(6, 7);
      if (n_ >= 8) link(7, 8);
      link(2, 4);
      return c;
    }
    case Type::F4: {
      std::vector<std::vector<int>> c = {
          {2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
      return c;
    }
    case Type::G2: {
      std::vector<std::vector<int>> c = {{2, -1}, {-3, 2}};
      return c;
    }
  }
  throw Error("bad type");
}

std::vector<int> highest_root(Type type, int n) {
  switch (type) {
    case Type::A:
      return std::vector<int>(n, 1);
    case Type::B: {
      std::vector<int> c(n, 2);
      c[0] = 1;
      if (n == 1) c[0] = 1;
      return c;
    }
    case Type::C: {
      std::vector<int> c(n, 2);
      c[n - 1] = 1;
      if (n == 1) c[0] = 1;
      return c;
    }
    case Type::D: {
      std::vector<int> c(n, 2);
      c[0] = 1;
      c[n - 2] = 1;
      c[n - 1] = 1;
      return c;
    }
    case Type::E6: return {1, 2, 2, 3, 2, 1};
    case Type::E7: return {2, 2, 3, 4, 3, 2, 1};
    case Type::E8: return {2, 3, 4, 6, 5, 4, 3, 2};
    case Type::F4: return {2, 3, 4, 2};
    case Type::G2: return {3, 2};
    case Type::BC: return {};  // non-reduced: no Euler elements
  }
  throw Error("bad type");
}

std::vector<int> minus_w0(Type type, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;  // identity, 1-based
  switch (type) {
    case Type::A:
      for (int i = 0; i < n; ++i) perm[i] = n - i;
      break;
    case Type::D:
      if (n % 2 == 1) std::swap(perm[n - 2], perm[n - 1]);
      break;
    case Type::E6:
      perm = {6, 2, 5, 4, 3, 1};
      break;
    default:
      break;  // B, C, E7, E8, F4, G2, BC: -w0 = id
  }
  return perm;
}

}  // namespace

RootSystem root_system(Type type, int rank) {
  check_rank(type, rank);
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.reduced = type != Type::BC;
  rs.cartan_matrix = cartan_matrix(type, rank);
  rs.highest_root_coeffs = highest_root(type, rank);
  rs.minus_w0_perm = minus_w0(type, rank);
  return rs;
}

std::vector<int> euler_indices(Type type, int rank) {
  check_rank(type, rank);
  std::vector<int> out;
  if (type == Type::BC) return out;
  const auto c = highest_root(type, rank);
  for (int j = 0; j < rank; ++j)
    if (c[j] == 1) out.push_back(j + 1);
  return out;
}

bool is_symmetric_euler(Type type, int rank, int j) {
  const auto euler = euler_indices(type, rank);
  if (std::find(euler.begin(), euler.end(), j) == euler.end()) throw NotEuler(j);
  return minus_w0(type, rank)[j - 1] == j;
}

std::vector<TableRow> classification_table() {
  return {
      {"A_n", "n >= 1", "h_1, ..., h_n", "h_n for A_{2n-1}"},
      {"B_n", "n >= 2", "h_1", "h_1"},
      {"C_n", "n >= 3", "h_n", "h_n"},
      {"D_n", "n >= 4", "h_1, h_{n-1}, h_n",
       "h_1; h_{n-1}, h_n for n even"},
      {"E_6", "6", "h_1, h_6", "(none)"},
      {"E_7", "7", "h_7", "h_7"},
      {"E_8", "8", "(none)", "(none)"},
      {"F_4", "4", "(none)", "(none)"},
      {"G_2", "2", "(none)", "(none)"},
      {"BC_n", "n >= 1", "(none)", "(none)"},
  };
}

std::string classification_table_csv() {
  std::ostringstream os;
  os << "type,rank_pattern,euler_elements,symmetric_euler_elements\n";
  for (const auto& row : classification_table())
    os << row.type << "," << row.rank_pattern << ",\"" << row.euler << "\",\""
       << row.symmetric << "\"\n";
  return os.str();
}

CrossCheckReport cross_check_matrix(const std::string& algebra_name,
                                    const std::string& element_name) {
  CrossCheckReport report;
  report.algebra = algebra_name;
  report.element = element_name;

  const liealg::LieAlgebraSpec g = liealg::algebra_by_name(algebra_name);
  const Eigen::VectorXd h = liealg::element_by_name(g, element_name);

  // Restricted-root data for the catalog families.
  Type type;
  int rank = 0;
  int index = 0;
  if (algebra_name.rfind("sl", 0) == 0) {
    const int n = g.matrix_size();
    type = Type::A;
    rank = n - 1;
    index = std::stoi(element_name.substr(1));
  } else if (algebra_name.rfind("so(1,", 0) == 0) {
    type = Type::B;  // so(1,d): rank 1 (B_1 ~ A_1)
    rank = 1;
    index = 1;
  } else if (algebra_name.rfind("sp", 0) == 0) {
    type = Type::C;
    rank = g.matrix_size() / 2;
    index = rank;
  } else {
    throw UnknownAlgebra(algebra_name);
  }

  const auto euler = euler_indices(type, rank);
  report.root_euler = std::find(euler.begin(), euler.end(), index) != euler.end();
  report.root_symmetric =
      report.root_euler && is_symmetric_euler(type, rank, index);

  const auto check = liealg::euler_check(g, h);
  report.matrix_euler = check.is_euler;
  report.euler_agrees = report.matrix_euler == report.root_euler;

  if (check.is_euler) {
    const auto search = liealg::symmetric_euler_search(g, *check.datum);
    switch (search.state) {
      case liealg::TriState::CONFIRMED: report.matrix_symmetric = "CONFIRMED"; break;
      case liealg::TriState::REFUTED: report.matrix_symmetric = "REFUTED"; break;
      case liealg::TriState::UNKNOWN: report.matrix_symmetric = "UNKNOWN"; break;
    }
    report.symmetric_consistent =
        !(report.matrix_symmetric == "CONFIRMED" && !report.root_symmetric) &&
        !(report.matrix_symmetric == "REFUTED" && report.root_symmetric);
  } else {
    report.matrix_symmetric = "UNKNOWN";
    report.symmetric_consistent = true;
  }
  return report;
}

}  // namespace modwedge::rootdata
