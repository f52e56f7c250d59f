#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qtac/subspace.hpp"

namespace qtac {

class QDesign;  // design.hpp

// Semilinear map x -> (x^(p^frob)) * mat on row vectors; the Frobenius twist
// is applied first, then the (right) matrix multiplication.
struct SemilinearMap {
  Matrix mat;        // v x v, invertible
  unsigned frob = 0; // exponent in [0, e)
};

struct GroupPresentation {
  unsigned v = 0, q = 0;
  std::vector<SemilinearMap> generators;
};

// Checks shape, invertibility and frobenius range of every generator.
void validate_group(const Field& F, const GroupPresentation& G);

Subspace apply(const Field& F, const SemilinearMap& g, const Subspace& S);

// compose(first, then): apply `first`, then `then` (right action order).
SemilinearMap compose(const Field& F, const SemilinearMap& first, const SemilinearMap& then);
SemilinearMap inverse_map(const Field& F, const SemilinearMap& g);

// A partition of a fixed set of subspaces into orbits. Elements are kept in
// ascending canonical order; orbits are numbered by their least member, and
// that least member is the stored representative.
struct OrbitPartition {
  std::vector<Subspace> elements;
  std::vector<uint32_t> orbit_id;     // aligned with elements
  std::vector<uint64_t> orbit_sizes;
  std::vector<Subspace> representatives;

  size_t num_orbits() const { return orbit_sizes.size(); }
  size_t size() const { return elements.size(); }

  std::optional<size_t> index_of(const Subspace& s) const;
  uint32_t class_of(const Subspace& s) const;  // throws InvalidArguments if absent
  std::vector<std::vector<uint32_t>> members_by_class() const;

  // Hand-supplied partition (classes need not come from a group action).
  static OrbitPartition from_classes(std::vector<std::vector<Subspace>> classes);
};

// BFS closure of `elements` under the generators. The element set must be
// closed under the group (images outside the set are an error). For q = 2
// with uniform dimension the closure runs on bit-packed rows; the result is
// identical to the generic path.
OrbitPartition orbits(const Field& F, const GroupPresentation& G,
                      std::vector<Subspace> elements);

// Order of the subspace-action group generated by G, i.e. of the closure of
// the generators modulo scalar matrices. Throws BoundExceeded past `bound`.
uint64_t group_order(const Field& F, const GroupPresentation& G, uint64_t bound = 1000000);

// True iff every generator maps the block multiset of `d` onto itself.
bool is_automorphism_group(const Field& F, const QDesign& d, const GroupPresentation& G);

}  // namespace qtac
