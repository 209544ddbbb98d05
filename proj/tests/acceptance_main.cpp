// Acceptance suite: runs every [PRIMARY] criterion at its stated tolerance
// and prints one pass/fail line per criterion. When the CLI binary path is
// supplied as argv[1], criterion 14 (CLI determinism) is exercised as well.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "modwedge/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  uint64_t seed = 0;
  if (const char* env = std::getenv("MODWEDGE_SEED"))
    seed = std::strtoull(env, nullptr, 10);
  auto results = modwedge::verify::run_all(seed);

  if (argc > 1) {
    const std::string cli = argv[1];
    const std::string r1 = "acceptance_verify_1.txt", r2 = "acceptance_verify_2.txt";
    const int e1 = std::system((cli + " verify --all --out " + r1).c_str());
    const int e2 = std::system((cli + " verify --all --out " + r2).c_str());
    modwedge::verify::CriterionResult c14;
    c14.id = 14;
    c14.name = "CLI determinism";
    const std::string a = slurp(r1), b = slurp(r2);
    c14.passed = e1 == 0 && e2 == 0 && !a.empty() && a == b;
    c14.detail = c14.passed ? "verify --all exits 0 twice with byte-identical reports"
                            : "reports differ or verify failed";
    std::remove(r1.c_str());
    std::remove(r2.c_str());
    results.push_back(c14);
  }

  std::fputs(modwedge::verify::report_text(results).c_str(), stdout);
  return modwedge::verify::all_passed(results) ? 0 : 1;
}
