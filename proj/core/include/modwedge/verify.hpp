#pragma once

// Acceptance suite: one runner per criterion, shared by the `verify` CLI
// subcommand and the acceptance test binary. All tolerances are pinned here.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "modwedge/modular.hpp"

namespace modwedge::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

CriterionResult run_criterion(int id, uint64_t seed);
std::vector<CriterionResult> run_all(uint64_t seed);
std::string report_text(const std::vector<CriterionResult>& results);
bool all_passed(const std::vector<CriterionResult>& results);

// Seeded generators shared with the unit tests.
hilbert::RealSubspace random_standard_subspace(int n, std::mt19937_64& rng,
                                               double max_cond = 20.0);
modular::ModularPair random_modular_pair(int n, std::mt19937_64& rng,
                                         double spread = 1.0);
Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng);

}  // namespace modwedge::verify
