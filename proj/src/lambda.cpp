#include "qtac/lambda.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "qtac/util.hpp"

namespace qtac {

namespace {

// dim<P, R, S> for three nonzero row vectors of length v.
unsigned dim_span3(const Field& F, const uint8_t* P, const uint8_t* R, const uint8_t* S,
                   unsigned v) {
  if (v > 16) fail(Errc::invalid_arguments, "ambient dimension above 16 is unsupported");
  std::array<uint8_t, 3 * 16> buf;
  uint8_t* rows[3] = {buf.data(), buf.data() + v, buf.data() + 2 * v};
  std::copy(P, P + v, rows[0]);
  std::copy(R, R + v, rows[1]);
  std::copy(S, S + v, rows[2]);
  unsigned rank = 0;
  for (unsigned col = 0; col < v && rank < 3; ++col) {
    unsigned piv = rank;
    while (piv < 3 && rows[piv][col] == 0) ++piv;
    if (piv == 3) continue;
    std::swap(rows[piv], rows[rank]);
    uint8_t s = F.inv(rows[rank][col]);
    if (s != 1)
      for (unsigned j = col; j < v; ++j) rows[rank][j] = F.mul(s, rows[rank][j]);
    for (unsigned r = rank + 1; r < 3; ++r) {
      uint8_t c = rows[r][col];
      if (c == 0) continue;
      for (unsigned j = col; j < v; ++j) rows[r][j] = F.sub(rows[r][j], F.mul(c, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

uint32_t pack_point(const Subspace& s) {
  uint32_t w = 0;
  unsigned v = s.ambient();
  for (unsigned j = 0; j < v; ++j) w |= uint32_t(s.basis().at(0, j) & 1) << (v - 1 - j);
  return w;
}

// q = 2: dim<P,R,S> = 2 iff the three masks span exactly two dimensions.
inline bool dim2_gf2(uint32_t P, uint32_t R, uint32_t S) {
  if (P == R) return S != P;
  return S == P || S == R || S == (P ^ R);
}

// Accumulates the full slice Lambda[.][.] at a fixed point P by one pass over
// all ordered point pairs. Same counting as lambda_bruteforce_at, batched.
void slice_at_point(const Field& F, const OrbitPartition& points, size_t p_index,
                    std::vector<uint64_t>& slice /* m*m, zeroed by caller */) {
  const size_t n = points.size();
  const size_t m = points.num_orbits();
  const unsigned v = points.elements.front().ambient();
  if (F.q() == 2) {
    std::vector<uint32_t> masks(n);
    for (size_t i = 0; i < n; ++i) masks[i] = pack_point(points.elements[i]);
    uint32_t P = masks[p_index];
    for (size_t ri = 0; ri < n; ++ri) {
      uint32_t R = masks[ri];
      size_t row = size_t(points.orbit_id[ri]) * m;
      if (P == R) {
        for (size_t si = 0; si < n; ++si)
          if (masks[si] != P) slice[row + points.orbit_id[si]]++;
      } else {
        uint32_t third = P ^ R;
        for (size_t si = 0; si < n; ++si) {
          uint32_t S = masks[si];
          if (S == P || S == R || S == third) slice[row + points.orbit_id[si]]++;
        }
      }
    }
    return;
  }
  const uint8_t* P = points.elements[p_index].basis().row(0);
  for (size_t ri = 0; ri < n; ++ri) {
    const uint8_t* R = points.elements[ri].basis().row(0);
    size_t row = size_t(points.orbit_id[ri]) * m;
    for (size_t si = 0; si < n; ++si) {
      const uint8_t* S = points.elements[si].basis().row(0);
      if (dim_span3(F, P, R, S, v) == 2) slice[row + points.orbit_id[si]]++;
    }
  }
}

}  // namespace

uint64_t lambda_bruteforce_at(const Field& F, const OrbitPartition& points, const Subspace& P,
                              size_t r, size_t s) {
  if (P.dim() != 1) fail(Errc::invalid_arguments, "P must be a point");
  auto classes = points.members_by_class();
  if (r >= classes.size() || s >= classes.size())
    fail(Errc::invalid_arguments, "class index out of range");
  const unsigned v = P.ambient();
  const uint8_t* prow = P.basis().row(0);
  uint64_t count = 0;
  for (uint32_t ri : classes[r]) {
    const uint8_t* rrow = points.elements[ri].basis().row(0);
    for (uint32_t si : classes[s]) {
      const uint8_t* srow = points.elements[si].basis().row(0);
      if (dim_span3(F, prow, rrow, srow, v) == 2) ++count;
    }
  }
  return count;
}

LambdaTensor lambda_tensor_bruteforce(const Field& F, const OrbitPartition& points,
                                      bool verify_p_independence, unsigned threads) {
  const size_t m = points.num_orbits();
  LambdaTensor T(m);
  auto classes = points.members_by_class();
  parallel_for(m, threads, [&](size_t l) {
    std::vector<uint64_t> slice(m * m, 0);
    slice_at_point(F, points, classes[l][0], slice);
    for (size_t r = 0; r < m; ++r)
      for (size_t s = 0; s < m; ++s) T.at(l, r, s) = slice[r * m + s];
    if (verify_p_independence) {
      std::vector<uint64_t> other(m * m);
      for (size_t idx = 1; idx < classes[l].size(); ++idx) {
        std::fill(other.begin(), other.end(), 0);
        slice_at_point(F, points, classes[l][idx], other);
        if (other != slice) {
          size_t bad = 0;
          while (other[bad] == slice[bad]) ++bad;
          fail(Errc::not_p_independent,
               "Lambda_rs(P) differs within class " + std::to_string(l) + " at (r,s)=(" +
                   std::to_string(bad / m) + "," + std::to_string(bad % m) + "): " +
                   std::to_string(slice[bad]) + " vs " + std::to_string(other[bad]) +
                   " at member " + std::to_string(idx));
        }
      }
    }
  });
  return T;
}

LinesDecomposition lines_decomposition(const Field& F, const GroupPresentation& G) {
  LinesDecomposition ld;
  ld.points = orbits(F, G, all_points(F, G.v));
  ld.lines = orbits(F, G, all_subspaces(F, G.v, 2));
  ld.mats = tactical_matrices(F, ld.points, ld.lines);
  return ld;
}

LambdaTensor lambda_tensor_via_lines(const Field& F, const LinesDecomposition& ld) {
  const size_t m = ld.mats.m, omega = ld.mats.n;
  if (ld.points.elements.empty()) fail(Errc::invalid_arguments, "empty point set");
  const unsigned v = ld.points.elements.front().ambient();
  LambdaTensor T(m);
  // kappa columns have at most q+1 nonzero entries (a line has q+1 points),
  // so accumulate per line class over its nonzero point classes only.
  std::vector<std::pair<uint32_t, uint64_t>> nz;
  for (size_t j = 0; j < omega; ++j) {
    nz.clear();
    for (size_t i = 0; i < m; ++i)
      if (ld.mats.kappa_at(i, j) != 0) nz.emplace_back(uint32_t(i), ld.mats.kappa_at(i, j));
    for (size_t l = 0; l < m; ++l) {
      uint64_t rho = ld.mats.rho_at(l, j);
      if (rho == 0) continue;
      for (auto [r, kr] : nz)
        for (auto [s, ks] : nz)
          T.at(l, r, s) = checked_add(T.at(l, r, s), checked_mul(rho, checked_mul(kr, ks)));
    }
  }
  uint64_t correction = gaussian_binomial_u64(v - 1, 1, F.q());
  for (size_t l = 0; l < m; ++l) {
    if (T.at(l, l, l) < correction)
      fail(Errc::internal, "line-method diagonal below the [v-1 1]_q correction");
    T.at(l, l, l) -= correction;
  }
  return T;
}

OmegaPartition omega_partition(const Field& F, const OrbitPartition& points, size_t l,
                               const GroupPresentation& G) {
  uint64_t order = group_order(F, G);
  bool prime = order >= 2;
  for (uint64_t d = 2; d * d <= order; ++d)
    if (order % d == 0) prime = false;
  if (!prime)
    fail(Errc::group_not_prime_order, "group order " + std::to_string(order) + " is not prime");
  auto classes = points.members_by_class();
  if (l >= classes.size()) fail(Errc::invalid_arguments, "class index out of range");
  if (classes[l].size() != 1)
    fail(Errc::class_not_singleton, "class " + std::to_string(l) + " has size " +
                                        std::to_string(classes[l].size()));

  const Subspace& P = points.elements[classes[l][0]];
  const size_t m = points.num_orbits();

  // Key per class: the fixed line through P carrying it, or the canonical
  // least member of the size-p line orbit it meets.
  struct Key {
    bool fixed;
    Subspace line;
    bool operator<(const Key& o) const {
      if (fixed != o.fixed) return fixed > o.fixed;  // fixed-line classes first
      return line < o.line;
    }
  };
  std::map<Key, std::vector<uint32_t>> buckets;
  for (size_t i = 0; i < m; ++i) {
    if (i == l) continue;
    const Subspace& Q = points.elements[classes[i][0]];
    Subspace line = join(F, P, Q);
    bool fixed = true;
    Subspace least = line;
    // Orbit of the line under the cyclic group (generators suffice; the orbit
    // is the closure).
    std::vector<Subspace> seen{line};
    std::vector<Subspace> frontier{line};
    while (!frontier.empty()) {
      std::vector<Subspace> next;
      for (const auto& cur : frontier)
        for (const auto& g : G.generators) {
          Subspace img = apply(F, g, cur);
          if (std::find(seen.begin(), seen.end(), img) == seen.end()) {
            seen.push_back(img);
            next.push_back(img);
            if (img < least) least = img;
          }
        }
      frontier = std::move(next);
    }
    fixed = seen.size() == 1;
    buckets[Key{fixed, fixed ? line : least}].push_back(uint32_t(i));
  }

  OmegaPartition om;
  om.fixed_class = l;
  om.p = order;
  om.omega_of.assign(m, -1);
  for (auto& [key, members] : buckets) {
    if (key.fixed) om.fixed_line_classes++;
    for (uint32_t c : members) om.omega_of[c] = int64_t(om.classes.size());
    om.classes.push_back(std::move(members));
  }
  return om;
}

std::vector<uint64_t> lambda_from_omega(const OmegaPartition& om,
                                        const std::vector<uint64_t>& point_sizes) {
  const size_t m = point_sizes.size();
  const size_t l = om.fixed_class;
  std::vector<uint64_t> slice(m * m, 0);
  for (size_t r = 0; r < m; ++r)
    for (size_t s = 0; s < m; ++s) {
      if (r == l && s == l) continue;  // 0
      if (r == l) {
        slice[r * m + s] = point_sizes[s];
        continue;
      }
      if (s == l) {
        slice[r * m + s] = point_sizes[r];
        continue;
      }
      if (om.omega_of[r] != om.omega_of[s]) continue;  // 0
      bool fixed_kind = size_t(om.omega_of[r]) < om.fixed_line_classes;
      slice[r * m + s] = fixed_kind ? point_sizes[r] * point_sizes[s] : om.p;
    }
  return slice;
}

TensorStructureReport check_tensor_structure(const LambdaTensor& T,
                                             const std::vector<uint64_t>& point_sizes,
                                             unsigned v, unsigned q, size_t max_issues) {
  if (T.m != point_sizes.size()) fail(Errc::tensor_shape_mismatch, "tensor/partition mismatch");
  TensorStructureReport rep;
  auto report = [&](size_t l, size_t r, size_t s, uint64_t lhs, uint64_t rhs, const char* what) {
    rep.pass = false;
    if (rep.issues.size() < max_issues) rep.issues.push_back({l, r, s, lhs, rhs, what});
  };
  const size_t m = T.m;
  for (size_t l = 0; l < m; ++l)
    for (size_t r = 0; r < m; ++r) {
      for (size_t s = 0; s < m; ++s) {
        rep.checked++;
        if (T.at(l, r, s) != T.at(l, s, r))
          report(l, r, s, T.at(l, r, s), T.at(l, s, r), "Lambda_lrs != Lambda_lsr");
        if (checked_mul(point_sizes[l], T.at(l, r, s)) !=
            checked_mul(point_sizes[r], T.at(r, l, s)))
          report(l, r, s, point_sizes[l] * T.at(l, r, s), point_sizes[r] * T.at(r, l, s),
                 "|V_l| Lambda_lrs != |V_r| Lambda_rls");
      }
      uint64_t row = 0;
      for (size_t s = 0; s < m; ++s) row = checked_add(row, T.at(l, r, s));
      uint64_t qv = 1;
      for (unsigned i = 0; i < v; ++i) qv = checked_mul(qv, q);
      uint64_t expected =
          l == r ? point_sizes[l] * (q + 1) + (qv - uint64_t(q) * q) / (q - 1) - 1
                 : point_sizes[r] * (q + 1);
      if (row != expected) report(l, r, 0, row, expected, "row sum over s");
    }
  return rep;
}

TensorStructureReport check_prime_bound(const LambdaTensor& T,
                                        const std::vector<uint64_t>& point_sizes, uint64_t p,
                                        size_t max_issues) {
  if (T.m != point_sizes.size()) fail(Errc::tensor_shape_mismatch, "tensor/partition mismatch");
  TensorStructureReport rep;
  const size_t m = T.m;
  for (size_t l = 0; l < m; ++l)
    for (size_t r = 0; r < m; ++r)
      for (size_t s = 0; s < m; ++s) {
        if (l == r || l == s) continue;
        rep.checked++;
        uint64_t L = T.at(l, r, s);
        bool ok = L == checked_mul(p, p);
        if (!ok) {
          // L <= p sqrt(p - 3/4) + p/2  <=>  2L <= p or (2L - p)^2 <= p^2 (4p - 3)
          uint64_t twoL = checked_mul(2, L);
          ok = twoL <= p ||
               checked_mul(twoL - p, twoL - p) <= checked_mul(checked_mul(p, p), 4 * p - 3);
        }
        if (!ok) {
          rep.pass = false;
          if (rep.issues.size() < max_issues)
            rep.issues.push_back({l, r, s, L, p * p, "exceeds the prime-order bound"});
        }
      }
  return rep;
}

TensorStructureReport check_fixed_point_slices(const LambdaTensor& T,
                                               const std::vector<uint64_t>& point_sizes,
                                               uint64_t p, size_t max_issues) {
  if (T.m != point_sizes.size()) fail(Errc::tensor_shape_mismatch, "tensor/partition mismatch");
  TensorStructureReport rep;
  for (size_t l = 0; l < T.m; ++l) {
    if (point_sizes[l] != 1) continue;
    for (size_t r = 0; r < T.m; ++r)
      for (size_t s = 0; s < T.m; ++s) {
        rep.checked++;
        uint64_t L = T.at(l, r, s);
        if (L == 0 || L == 1 || L == p || L == p * p) continue;
        rep.pass = false;
        if (rep.issues.size() < max_issues)
          rep.issues.push_back({l, r, s, L, 0, "fixed-point slice value outside {0,1,p,p^2}"});
      }
  }
  return rep;
}

}  // namespace qtac
