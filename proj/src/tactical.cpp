#include "qtac/tactical.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qtac/util.hpp"

namespace qtac {

Decomposition induced_decomposition(const Field& F, const QDesign& d,
                                    const GroupPresentation& G) {
  if (!is_automorphism_group(F, d, G))
    fail(Errc::not_an_automorphism_group,
         "a generator does not map the block multiset onto itself");
  Decomposition dec;
  dec.points = orbits(F, G, all_points(F, d.params().v));
  dec.blocks = orbits(F, G, d.distinct_blocks());
  return dec;
}

TDMatrices tactical_matrices(const Field& F, const OrbitPartition& points,
                             const OrbitPartition& blocks,
                             const std::vector<uint64_t>& mults) {
  const size_t m = points.num_orbits(), n = blocks.num_orbits();
  const size_t np = points.size(), nb = blocks.size();
  std::vector<uint64_t> mult = mults;
  if (mult.empty()) mult.assign(nb, 1);
  if (mult.size() != nb) fail(Errc::invalid_arguments, "multiplicity vector shape mismatch");

  TDMatrices td;
  td.m = m;
  td.n = n;
  td.point_sizes.assign(m, 0);
  for (size_t i = 0; i < np; ++i) td.point_sizes[points.orbit_id[i]]++;
  td.block_sizes.assign(n, 0);
  for (size_t b = 0; b < nb; ++b)
    td.block_sizes[blocks.orbit_id[b]] = checked_add(td.block_sizes[blocks.orbit_id[b]], mult[b]);

  // One pass over block/point incidences: per block, its point profile gives
  // a kappa sample; accumulated per point, the profiles give rho samples.
  // Local points of F_q^dim are enumerated once and lifted per block.
  std::map<unsigned, std::vector<Subspace>> local_points;
  td.kappa.assign(m * n, 0);
  std::vector<bool> kappa_seen(n, false);
  std::vector<uint64_t> per_point(np * n, 0);
  std::vector<uint64_t> profile(m);
  for (size_t b = 0; b < nb; ++b) {
    const Subspace& blk = blocks.elements[b];
    uint32_t j = blocks.orbit_id[b];
    std::fill(profile.begin(), profile.end(), 0);
    auto [it, fresh] = local_points.try_emplace(blk.dim());
    if (fresh) it->second = all_points(F, blk.dim());
    for (const Subspace& local : it->second) {
      Subspace pt = Subspace::row_space(F, mul(F, local.basis(), blk.basis()));
      auto pi = points.index_of(pt);
      if (!pi) fail(Errc::invalid_arguments, "block contains a point outside the partition");
      profile[points.orbit_id[*pi]]++;
      per_point[*pi * n + j] = checked_add(per_point[*pi * n + j], mult[b]);
    }
    if (!kappa_seen[j]) {
      kappa_seen[j] = true;
      for (size_t i = 0; i < m; ++i) td.kappa[i * n + j] = profile[i];
    } else {
      for (size_t i = 0; i < m; ++i)
        if (td.kappa[i * n + j] != profile[i])
          fail(Errc::not_tactical,
               "kappa not constant on block class " + std::to_string(j) + ": block " +
                   std::to_string(b) + " meets point class " + std::to_string(i) + " in " +
                   std::to_string(profile[i]) + " points, expected " +
                   std::to_string(td.kappa[i * n + j]));
    }
  }

  td.rho.assign(m * n, 0);
  std::vector<bool> rho_seen(m, false);
  for (size_t pidx = 0; pidx < np; ++pidx) {
    uint32_t i = points.orbit_id[pidx];
    if (!rho_seen[i]) {
      rho_seen[i] = true;
      for (size_t j = 0; j < n; ++j) td.rho[i * n + j] = per_point[pidx * n + j];
    } else {
      for (size_t j = 0; j < n; ++j)
        if (td.rho[i * n + j] != per_point[pidx * n + j])
          fail(Errc::not_tactical,
               "rho not constant on point class " + std::to_string(i) + ": point " +
                   std::to_string(pidx) + " lies on " + std::to_string(per_point[pidx * n + j]) +
                   " blocks of class " + std::to_string(j) + ", expected " +
                   std::to_string(td.rho[i * n + j]));
    }
  }
  return td;
}

TDMatrices td_matrices(const Field& F, const QDesign& d, const Decomposition& dec) {
  if (dec.points.size() != gaussian_binomial_u64(d.params().v, 1, d.params().q))
    fail(Errc::invalid_arguments, "point partition does not cover all points");
  if (dec.blocks.size() != d.distinct_blocks().size() ||
      !std::equal(dec.blocks.elements.begin(), dec.blocks.elements.end(),
                  d.distinct_blocks().begin()))
    fail(Errc::invalid_arguments, "block partition does not cover the design blocks");
  return tactical_matrices(F, dec.points, dec.blocks, d.multiplicities());
}

}  // namespace qtac
