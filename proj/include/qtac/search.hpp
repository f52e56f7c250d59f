#pragma once

#include <string>

#include "qtac/conditions.hpp"

namespace qtac {

// Candidate tactical decomposition matrices for given class sizes and a
// given Lambda tensor. lambda is fixed in params.
struct SearchProblem {
  DesignParams params;
  std::vector<uint64_t> point_sizes;  // |V_1..m|
  std::vector<uint64_t> block_sizes;  // |B_1..n|
  LambdaTensor tensor;                // m^3

  void validate() const;
};

struct CandidateMatrix {
  size_t m = 0, n = 0;
  std::vector<uint64_t> rho, kappa;  // m x n, row-major
};

struct SearchResult {
  std::vector<CandidateMatrix> candidates;
  uint64_t nodes = 0;
  bool complete = false;
  std::string infeasible_reason;  // set when no matrix can exist a priori
};

// Exhaustive backtracking over rho matrices satisfying the basic, quadratic
// and cubic systems, with kappa_ij = |V_i| rho_ij / |B_j| forced integral.
// Pruning: partial row sums against lambda_1, partial kappa column sums
// against [k 1]_q, quadratic equations as soon as two rows are complete,
// cubic equations as soon as three are. One representative is emitted per
// orbit of the structure-preserving row/column permutations (rows
// interchangeable when their class sizes agree and swapping them fixes the
// tensor; columns when their class sizes agree), using within-block
// lexicographic ordering constraints. Candidates come back sorted.
// With break_symmetry = false the permutation filter is off and every
// solution matrix is emitted (validation and small instances).
SearchResult enumerate_candidates(const SearchProblem& prob,
                                  uint64_t node_budget = 100000000,
                                  bool break_symmetry = true);

// Admissible-lambda analysis for a point-transitive group: with m = 1,
// kappa_1j = [k 1]_q and rho_1j = |B_j| [k 1]_q / [v 1]_q are forced, and a
// design with parameter lambda exists only if lambda_1 = sum of the rho_1j
// over the selected block orbits. Orbits with a non-integral rho can occur in
// no design and are excluded (and reported).
struct AdmissibleReport {
  unsigned t = 0, v = 0, k = 0, q = 0;
  uint64_t lambda_max = 0;
  std::vector<uint64_t> orbit_sizes;
  std::vector<int64_t> rho;               // -1 where non-integral
  std::vector<size_t> excluded_orbits;
  // lambda values passing the single-exception gcd congruence filter: for
  // every orbit j, lambda_1 mod gcd{rho_i : i != j} must lie in {0, rho_j}.
  std::vector<uint64_t> congruence_set;
  // lambda values with an exact subset-sum certificate for lambda_1.
  std::vector<uint64_t> dp_set;
};

AdmissibleReport admissible_lambda(const std::vector<uint64_t>& orbit_sizes, unsigned t,
                                   unsigned v, unsigned k, unsigned q, uint64_t lambda_max);

// Union of selected k-space orbits, verified as a t-design. The lambda is
// inferred from the block count; a non-integral inferred lambda is already a
// certificate of failure.
struct RealizeResult {
  bool ok = false;
  std::optional<QDesign> design;
  std::string reason;
  std::optional<Subspace> witness;
  uint64_t witness_count = 0;
};

RealizeResult realize_design(const Field& F, unsigned t, const OrbitPartition& kspace_orbits,
                             const std::vector<size_t>& selection);

}  // namespace qtac
