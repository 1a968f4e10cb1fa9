#ifndef JLP_VERIFY_HPP
#define JLP_VERIFY_HPP

#include <string>
#include <vector>

namespace jlp {

// One entry of the canonical verification checklist. A check passes when
// residual <= tol * tol_scale, where tol comes from the run configuration
// (default 1e-10) and tol_scale pins the check's own documented tolerance
// relative to that default.
struct CheckResult {
  std::string name;
  double residual = 0;
  double tol_scale = 1;
  std::string detail;

  bool pass(double tol) const { return residual <= tol * tol_scale; }
};

// Runs every canonical check whose name contains `only` (all of them when
// `only` is empty). Residuals are relative where the underlying statement
// is scale-free.
std::vector<CheckResult> run_verify_checks(const std::string& only = "");

}  // namespace jlp

#endif  // JLP_VERIFY_HPP
