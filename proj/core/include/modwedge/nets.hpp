#pragma once

// BGL modular pairs from generator data, Borchers-Wiesbrock standard-pair
// checks, the endomorphism test U(g)V ⊆ V, and minimal/maximal nets over
// finite group samples.

#include <map>
#include <string>
#include <vector>

#include "modwedge/modular.hpp"

namespace modwedge::nets {

using hilbert::AntilinearOp;
using hilbert::MatrixXcd;
using hilbert::RealSubspace;
using modular::ModularPair;

struct RepElement {
  std::string label;
  MatrixXcd unitary;
  bool in_sw = false;  // tagged by a causal-module oracle
};

struct RepSample {
  int n = 0;
  MatrixXcd generator;  // Hermitian A, so U_h(t) = e^{itA}
  AntilinearOp j;
  std::vector<RepElement> elements;

  void validate(double tol = hilbert::kDefaultTol) const;
};

struct BglResult {
  ModularPair pair;
  RealSubspace v;
};

// delta = e^{-2 pi A}, J as given; requires J A J = -A.
BglResult bgl_pair(const MatrixXcd& a, const AntilinearOp& j,
                   double tol = hilbert::kDefaultTol);

// U V ⊆ V, decided on the frame columns through the Re-orthogonal projector.
bool sv_contains(const MatrixXcd& u, const RealSubspace& v,
                 double tol = hilbert::kSubspaceTol);
// Largest distance of an image column from V (diagnostic for witnesses).
double sv_defect(const MatrixXcd& u, const RealSubspace& v);

struct CheckLine {
  std::string name;
  bool passed = false;
  double detail = 0.0;
};

struct StandardPairReport {
  std::vector<CheckLine> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// (i) P >= 0; (ii) e^{itP} V ⊆ V on the grid (t >= 0); (iii) when
// has_affine_relation: delta^{-is/2pi} e^{itP} delta^{is/2pi} = e^{i e^s t P}.
StandardPairReport standard_pair_check(const MatrixXcd& p, const ModularPair& pair,
                                       const std::vector<double>& t_grid,
                                       bool has_affine_relation = false,
                                       double tol = hilbert::kSubspaceTol);

struct Region {
  std::string label;
  std::vector<std::string> covered_by;  // elements g with O ⊆ gW
  std::vector<std::string> contains;    // elements g with gW ⊆ O
};

using NetAssignment = std::map<std::string, RealSubspace>;

// H(O) = ∩_{g covering O} U(g)V; empty covering gives the full space.
NetAssignment net_max(const std::vector<Region>& regions, const RepSample& rep,
                      const RealSubspace& v);
// H(O) = closure of Σ_{gW ⊆ O} U(g)V; empty list gives {0}.
NetAssignment net_min(const std::vector<Region>& regions, const RepSample& rep,
                      const RealSubspace& v);

struct BwCheckResult {
  bool holds = true;
  std::string witness_label;
  double witness_defect = 0.0;
};

// Every element tagged in S_W must satisfy U V ⊆ V.
BwCheckResult bw_check(const RepSample& rep, const RealSubspace& v,
                       double tol = hilbert::kSubspaceTol);

}  // namespace modwedge::nets
