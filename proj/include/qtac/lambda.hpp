#pragma once

#include "qtac/tactical.hpp"

namespace qtac {

// Lambda[l][r][s] = number of pairs (R, S) in V_r x V_s with
// dim<P, R, S> = 2, for P in V_l. Well-defined for group-induced point
// partitions (and verified on demand for hand-supplied ones).
struct LambdaTensor {
  size_t m = 0;
  std::vector<uint64_t> values;  // m^3, index (l*m + r)*m + s

  LambdaTensor() = default;
  explicit LambdaTensor(size_t m_) : m(m_), values(m_ * m_ * m_, 0) {}
  uint64_t at(size_t l, size_t r, size_t s) const { return values[(l * m + r) * m + s]; }
  uint64_t& at(size_t l, size_t r, size_t s) { return values[(l * m + r) * m + s]; }
};

// Direct double loop over V_r x V_s (the oracle path).
uint64_t lambda_bruteforce_at(const Field& F, const OrbitPartition& points, const Subspace& P,
                              size_t r, size_t s);

// Tensor from one representative point per class. With verify_p_independence
// the slice is recomputed at every P in V_l and compared (NotPIndependent
// with a witness otherwise).
LambdaTensor lambda_tensor_bruteforce(const Field& F, const OrbitPartition& points,
                                      bool verify_p_independence = false, unsigned threads = 1);

// The group-induced tactical decomposition of the trivial 2-(v,2,1)_q design
// of all lines; mats.rho/kappa are the line-incidence matrices.
struct LinesDecomposition {
  OrbitPartition points;
  OrbitPartition lines;
  TDMatrices mats;  // m x omega
};

LinesDecomposition lines_decomposition(const Field& F, const GroupPresentation& G);

// Lambda[l][r][s] = sum_j rho^L[l][j] kappa^L[r][j] kappa^L[s][j], minus
// [v-1 1]_q on the full diagonal l = r = s.
LambdaTensor lambda_tensor_via_lines(const Field& F, const LinesDecomposition& ld);

// For a prime-order group and a fixed point P (size-1 class l): groups the
// other point classes by the line structure through P. Classes carried by a
// common G-fixed line come first, classes meeting the lines of a common
// size-p line orbit after them.
struct OmegaPartition {
  size_t fixed_class = 0;  // l
  uint64_t p = 0;
  size_t fixed_line_classes = 0;  // the first `a` classes are fixed-line kind
  std::vector<std::vector<uint32_t>> classes;  // point-class ids
  std::vector<int64_t> omega_of;               // per point class; -1 for l itself
};

OmegaPartition omega_partition(const Field& F, const OrbitPartition& points, size_t l,
                               const GroupPresentation& G);

// The slice Lambda[l][.][.] implied by the omega partition:
// same fixed-line class -> |V_r| * |V_s|, same line-orbit class -> p,
// different classes -> 0; plus the degenerate entries
// Lambda[l][l][l] = 0 and Lambda[l][l][s] = Lambda[l][s][l] = |V_s|.
std::vector<uint64_t> lambda_from_omega(const OmegaPartition& om,
                                        const std::vector<uint64_t>& point_sizes);

struct TensorCheckIssue {
  size_t l = 0, r = 0, s = 0;
  uint64_t lhs = 0, rhs = 0;
  std::string what;
};

struct TensorStructureReport {
  bool pass = true;
  std::vector<TensorCheckIssue> issues;
  size_t checked = 0;
};

// Symmetry Lambda_lrs = Lambda_lsr, scaled symmetry |V_l| Lambda_lrs =
// |V_r| Lambda_rls, and the row sums sum_s Lambda_lrs = |V_r| (q+1) for
// l != r and |V_l| (q+1) + (q^v - q^2)/(q-1) - 1 for l = r.
TensorStructureReport check_tensor_structure(const LambdaTensor& T,
                                             const std::vector<uint64_t>& point_sizes,
                                             unsigned v, unsigned q, size_t max_issues = 100);

// For decompositions induced by a group of prime order p: entries with
// l not in {r, s} equal p^2 or satisfy Lambda <= p sqrt(p - 3/4) + p/2,
// checked in integer arithmetic as (2L - p)^2 <= p^2 (4p - 3) when 2L > p.
// Entries with l in {r, s} are outside the double-count identity behind the
// bound (the pair (P, P) and multi-line incidences of P itself skew it; the
// all-equal entry of a collinear size-p class reaches p^2 - 1) and are
// checked only through the fixed-point rule below.
TensorStructureReport check_prime_bound(const LambdaTensor& T,
                                        const std::vector<uint64_t>& point_sizes, uint64_t p,
                                        size_t max_issues = 100);

// Fixed-point slices for prime order p: every Lambda[l][r][s] with
// |V_l| = 1 lies in {0, 1, p, p^2}.
TensorStructureReport check_fixed_point_slices(const LambdaTensor& T,
                                               const std::vector<uint64_t>& point_sizes,
                                               uint64_t p, size_t max_issues = 100);

}  // namespace qtac
