#pragma once

// Exact classification of Euler elements in simple real Lie algebras from
// irreducible restricted root systems: highest-root coefficients and -w0
// permutations are stored per Bourbaki's plates, never computed in floating
// point. h_j is Euler iff c_j = 1; symmetric iff -w0 fixes j.

#include <string>
#include <vector>

#include "modwedge/errors.hpp"

namespace modwedge::rootdata {

enum class Type { A, B, C, D, E6, E7, E8, F4, G2, BC };

std::string type_name(Type t);
Type type_from_name(const std::string& name);

struct RootSystem {
  Type type;
  int rank;
  bool reduced;                         // false only for BC
  std::vector<std::vector<int>> cartan_matrix;
  std::vector<int> highest_root_coeffs; // c_1..c_n; empty for BC
  std::vector<int> minus_w0_perm;       // 1-based; identity when trivial
};

RootSystem root_system(Type type, int rank);

// { j : c_j = 1 }, empty for BC/E8/F4/G2. 1-based indices.
std::vector<int> euler_indices(Type type, int rank);

// Requires j in euler_indices; true iff minus_w0(j) = j.
bool is_symmetric_euler(Type type, int rank, int j);

struct TableRow {
  std::string type;
  std::string rank_pattern;
  std::string euler;
  std::string symmetric;
};

// One row per family, transcribing the classification lists.
std::vector<TableRow> classification_table();
std::string classification_table_csv();  // byte-stable

struct CrossCheckReport {
  std::string algebra;
  std::string element;
  bool matrix_euler = false;
  bool root_euler = false;
  std::string matrix_symmetric;  // CONFIRMED / REFUTED / UNKNOWN
  bool root_symmetric = false;
  bool euler_agrees = false;
  bool symmetric_consistent = false;  // search never contradicts root data
};

// Compares liealg spectral answers against the root-data classification for
// catalog algebras with known restricted-root type (sl_n, so(1,d), sp_2n).
CrossCheckReport cross_check_matrix(const std::string& algebra_name,
                                    const std::string& element_name);

}  // namespace modwedge::rootdata
