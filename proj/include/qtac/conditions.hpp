#pragma once

#include "qtac/lambda.hpp"

namespace qtac {

enum class ConditionSystem { basic, quadratic, cubic };

const char* condition_system_name(ConditionSystem s);

struct ConditionViolation {
  // Index meaning depends on the system: basic uses (i, j, -1), quadratic
  // (l, r, -1), cubic (l, r, s).
  int64_t l = -1, r = -1, s = -1;
  uint64_t lhs = 0, rhs = 0;
  std::string what;
};

struct ConditionReport {
  ConditionSystem system = ConditionSystem::basic;
  bool pass = true;
  std::vector<ConditionViolation> violations;  // all of them, capped
  size_t cap = 100;
  size_t checked = 0;
};

// Column sums of kappa equal [k 1]_q, row sums of rho equal lambda_1, and
// |V_i| rho_ij = |B_j| kappa_ij.
ConditionReport check_basic(const DesignParams& p, const TDMatrices& td, size_t cap = 100);

// sum_j rho_lj kappa_rj = lambda_1 + lambda_2 (|V_r| - 1) for l = r,
// lambda_2 |V_r| otherwise. Throws LambdaNotInteger when lambda_2 is not an
// integer (itself a nonexistence certificate).
ConditionReport check_quadratic(const DesignParams& p, const TDMatrices& td, size_t cap = 100);

// sum_j rho_lj kappa_rj kappa_sj = lambda_1 + Lambda_lll lambda_2 +
// (|V_l|^2 - Lambda_lll - 1) lambda_3 on the diagonal, and
// Lambda_lrs lambda_2 + (|V_r| |V_s| - Lambda_lrs) lambda_3 otherwise.
ConditionReport check_cubic(const DesignParams& p, const TDMatrices& td, const LambdaTensor& T,
                            size_t cap = 100);

}  // namespace qtac
