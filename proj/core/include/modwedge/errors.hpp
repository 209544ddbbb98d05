#pragma once

#include <stdexcept>
#include <string>

namespace modwedge {

// Base for all domain errors thrown by the library. The CLI maps these to
// exit code 1 (validation) or 2 (numerical failure) depending on the type.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroInput : Error {
  ZeroInput() : Error("all input vectors are below the norm tolerance") {}
};

struct DimensionMismatch : Error {
  DimensionMismatch(int a, int b)
      : Error("ambient dimensions differ: " + std::to_string(a) + " vs " +
              std::to_string(b)) {}
};

struct NotStandard : Error {
  int cyclic_defect;      // 2n - dim_R(V + iV)
  int separating_defect;  // dim_R(V ∩ iV)
  NotStandard(int cd, int sd)
      : Error("subspace is not standard (cyclic defect " + std::to_string(cd) +
              ", separating defect " + std::to_string(sd) + ")"),
        cyclic_defect(cd),
        separating_defect(sd) {}
};

struct IllConditioned : Error {
  double condition_number;
  explicit IllConditioned(double c)
      : Error("frame matrix is ill-conditioned (cond = " + std::to_string(c) + ")"),
        condition_number(c) {}
};

struct ModularRelationViolated : Error {
  double residual;
  explicit ModularRelationViolated(double r)
      : Error("modular relation J delta J = delta^{-1} violated, residual " +
              std::to_string(r)),
        residual(r) {}
};

struct NegativeWeight : Error {
  NegativeWeight() : Error("atomic measure has a negative weight") {}
};

struct AsymmetricAtoms : Error {
  double p;
  explicit AsymmetricAtoms(double p_)
      : Error("atom set is not symmetric under p -> -p (unmatched p = " +
              std::to_string(p_) + ")"),
        p(p_) {}
};

struct NotInAlgebra : Error {
  double residual;
  explicit NotInAlgebra(double r)
      : Error("matrix does not lie in the span of the basis, residual " +
              std::to_string(r)),
        residual(r) {}
};

struct NotSkewHermitian : Error {
  explicit NotSkewHermitian(int idx)
      : Error("generator " + std::to_string(idx) + " is not skew-Hermitian") {}
};

struct InvarianceViolated : Error {
  std::string witness;
  explicit InvarianceViolated(std::string w)
      : Error("cone invariance assumption violated at " + w), witness(std::move(w)) {}
};

struct ConeInvarianceViolated : InvarianceViolated {
  using InvarianceViolated::InvarianceViolated;
};

struct InvalidRank : Error {
  InvalidRank(const std::string& type, int rank)
      : Error("invalid rank " + std::to_string(rank) + " for root system " + type) {}
};

struct NotEuler : Error {
  explicit NotEuler(int j)
      : Error("h_" + std::to_string(j) + " is not an Euler element here") {}
};

struct UnknownAlgebra : Error {
  explicit UnknownAlgebra(const std::string& name)
      : Error("algebra '" + name + "' is not in the catalog") {}
};

struct NotLorentz : Error {
  double defect;
  explicit NotLorentz(double d)
      : Error("matrix does not preserve the Lorentz form, defect " +
              std::to_string(d)),
        defect(d) {}
};

struct OffSurface : Error {
  double defect;
  explicit OffSurface(double d)
      : Error("point is off the quadric surface, defect " + std::to_string(d)),
        defect(d) {}
};

struct NotOnQuadric : Error {
  double defect;
  explicit NotOnQuadric(double d)
      : Error("projective point is not on the isotropic quadric, defect " +
              std::to_string(d)),
        defect(d) {}
};

struct NotUnimodular : Error {
  explicit NotUnimodular(double det)
      : Error("2x2 matrix has det " + std::to_string(det) + ", expected 1") {}
};

struct NotUnitary : Error {
  double defect;
  explicit NotUnitary(double d)
      : Error("matrix is not unitary, defect " + std::to_string(d)), defect(d) {}
};

struct EquivarianceViolated : Error {
  double defect;  // ||J A J + A||
  explicit EquivarianceViolated(double d)
      : Error("JAJ = -A violated, ||JAJ + A|| = " + std::to_string(d)), defect(d) {}
};

struct NotPositive : Error {
  double min_eigenvalue;
  explicit NotPositive(double ev)
      : Error("operator has negative eigenvalue " + std::to_string(ev)),
        min_eigenvalue(ev) {}
};

struct TruncationBudgetExceeded : Error {
  double tail_bound;
  explicit TruncationBudgetExceeded(double t)
      : Error("truncation tail bound " + std::to_string(t) + " exceeds tolerance"),
        tail_bound(t) {}
};

struct IOError : Error {
  explicit IOError(const std::string& what) : Error("I/O error: " + what) {}
};

}  // namespace modwedge
