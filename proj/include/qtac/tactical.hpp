#pragma once

#include "qtac/design.hpp"

namespace qtac {

// Point classes V_1..V_m and block classes B_1..B_n. The block partition is
// over distinct blocks; multiset sizes are tracked in TDMatrices.
struct Decomposition {
  OrbitPartition points;
  OrbitPartition blocks;
};

// rho[i][j] = blocks of B_j through a point of V_i,
// kappa[i][j] = points of V_i inside a block of B_j.
struct TDMatrices {
  size_t m = 0, n = 0;
  std::vector<uint64_t> rho, kappa;  // m x n, row-major
  std::vector<uint64_t> point_sizes, block_sizes;

  uint64_t rho_at(size_t i, size_t j) const { return rho[i * n + j]; }
  uint64_t kappa_at(size_t i, size_t j) const { return kappa[i * n + j]; }
};

// Orbit decomposition under an automorphism group of the design.
Decomposition induced_decomposition(const Field& F, const QDesign& d,
                                    const GroupPresentation& G);

// Counts incidences and verifies that the counts are constant on every class
// (so hand-supplied partitions are validated, not trusted). Throws NotTactical
// with a witness otherwise. `mults` are the block multiplicities, aligned with
// blocks.elements; pass {} for all-ones.
TDMatrices tactical_matrices(const Field& F, const OrbitPartition& points,
                             const OrbitPartition& blocks,
                             const std::vector<uint64_t>& mults = {});

TDMatrices td_matrices(const Field& F, const QDesign& d, const Decomposition& dec);

}  // namespace qtac
