#include "qtac/action.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <string>

#include "qtac/design.hpp"
#include "qtac/util.hpp"

namespace qtac {

void validate_group(const Field& F, const GroupPresentation& G) {
  if (G.q != F.q()) fail(Errc::invalid_arguments, "group file field does not match");
  for (const auto& g : G.generators) {
    if (g.mat.rows != G.v || g.mat.cols != G.v)
      fail(Errc::invalid_arguments, "generator is not a v x v matrix");
    if (g.frob >= F.e()) fail(Errc::invalid_arguments, "frobenius exponent out of range");
    if (!inverse(F, g.mat)) fail(Errc::invalid_arguments, "generator matrix is singular");
  }
}

Subspace apply(const Field& F, const SemilinearMap& g, const Subspace& S) {
  if (S.ambient() != g.mat.rows) fail(Errc::ambient_mismatch, "map/subspace ambient mismatch");
  Matrix b = S.basis();
  if (g.frob % F.e() != 0) b = frobenius_entrywise(F, std::move(b), g.frob);
  return Subspace::row_space(F, mul(F, b, g.mat));
}

SemilinearMap compose(const Field& F, const SemilinearMap& first, const SemilinearMap& then) {
  // x -> ((x^s1 A1)^s2) A2 = x^(s1+s2) (A1^s2 A2)
  SemilinearMap c;
  c.frob = (first.frob + then.frob) % F.e();
  c.mat = mul(F, frobenius_entrywise(F, first.mat, then.frob), then.mat);
  return c;
}

SemilinearMap inverse_map(const Field& F, const SemilinearMap& g) {
  auto minv = inverse(F, g.mat);
  if (!minv) fail(Errc::invalid_arguments, "map is singular");
  SemilinearMap r;
  r.frob = (F.e() - g.frob % F.e()) % F.e();
  r.mat = frobenius_entrywise(F, *minv, r.frob);
  return r;
}

std::optional<size_t> OrbitPartition::index_of(const Subspace& s) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), s);
  if (it == elements.end() || *it != s) return std::nullopt;
  return static_cast<size_t>(it - elements.begin());
}

uint32_t OrbitPartition::class_of(const Subspace& s) const {
  auto i = index_of(s);
  if (!i) fail(Errc::invalid_arguments, "subspace is not in the partitioned set");
  return orbit_id[*i];
}

std::vector<std::vector<uint32_t>> OrbitPartition::members_by_class() const {
  std::vector<std::vector<uint32_t>> out(num_orbits());
  for (size_t i = 0; i < elements.size(); ++i) out[orbit_id[i]].push_back(uint32_t(i));
  return out;
}

OrbitPartition OrbitPartition::from_classes(std::vector<std::vector<Subspace>> classes) {
  struct Tagged {
    Subspace s;
    uint32_t cls;
  };
  std::vector<Tagged> all;
  for (uint32_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) fail(Errc::invalid_arguments, "empty partition class");
    for (auto& s : classes[c]) all.push_back({std::move(s), c});
  }
  std::sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) { return a.s < b.s; });
  for (size_t i = 0; i + 1 < all.size(); ++i)
    if (all[i].s == all[i + 1].s)
      fail(Errc::invalid_arguments, "partition classes are not disjoint");

  // Renumber classes canonically: by least member.
  std::vector<uint32_t> renum(classes.size(), UINT32_MAX);
  uint32_t next = 0;
  OrbitPartition p;
  p.elements.reserve(all.size());
  p.orbit_id.reserve(all.size());
  for (auto& t : all) {
    if (renum[t.cls] == UINT32_MAX) {
      renum[t.cls] = next++;
      p.representatives.push_back(t.s);
      p.orbit_sizes.push_back(0);
    }
    p.orbit_id.push_back(renum[t.cls]);
    p.orbit_sizes[renum[t.cls]]++;
    p.elements.push_back(std::move(t.s));
  }
  return p;
}

namespace {

// ---- q = 2 bit-packed orbit kernel -----------------------------------------
//
// A row over F_2^v packs into a word with column j at bit (v-1-j), so numeric
// comparison of words equals the lexicographic comparison of entry vectors,
// and a full k x v RREF basis packs into one u64 key (row 0 in the most
// significant chunk). Keys therefore sort exactly like the Subspace order.

uint32_t pack_row(const uint8_t* row, unsigned v) {
  uint32_t w = 0;
  for (unsigned j = 0; j < v; ++j) w |= uint32_t(row[j] & 1) << (v - 1 - j);
  return w;
}

uint64_t pack_key(const Subspace& s) {
  uint64_t key = 0;
  unsigned v = s.ambient();
  for (unsigned i = 0; i < s.dim(); ++i) key = (key << v) | pack_row(s.basis().row(i), v);
  return key;
}

// Gaussian elimination on packed rows; leading bit = leftmost column.
uint64_t rref_packed(uint32_t* rows, unsigned k, unsigned v) {
  unsigned rank = 0;
  for (int bit = int(v) - 1; bit >= 0 && rank < k; --bit) {
    unsigned piv = rank;
    while (piv < k && !(rows[piv] >> bit & 1)) ++piv;
    if (piv == k) continue;
    std::swap(rows[piv], rows[rank]);
    for (unsigned r = 0; r < k; ++r)
      if (r != rank && (rows[r] >> bit & 1)) rows[r] ^= rows[rank];
    ++rank;
  }
  uint64_t key = 0;
  for (unsigned i = 0; i < rank; ++i) key = (key << v) | rows[i];
  return rank == k ? key : UINT64_MAX;  // generators are invertible, rank drop impossible
}

struct PackedGen {
  std::array<uint32_t, 16> rows;  // image of e_j under the map
};

OrbitPartition orbits_packed(const GroupPresentation& G, std::vector<Subspace> elements,
                             unsigned k) {
  unsigned v = G.v;
  const size_t n = elements.size();
  std::vector<uint64_t> keys(n);
  for (size_t i = 0; i < n; ++i) keys[i] = pack_key(elements[i]);

  std::vector<PackedGen> gens;
  for (const auto& g : G.generators) {
    PackedGen pg{};
    for (unsigned j = 0; j < v; ++j) pg.rows[j] = pack_row(g.mat.row(j), v);
    gens.push_back(pg);
  }

  OrbitPartition p;
  p.elements = std::move(elements);
  p.orbit_id.assign(n, UINT32_MAX);
  std::deque<size_t> queue;
  uint32_t buf[16];
  for (size_t seed = 0; seed < n; ++seed) {
    if (p.orbit_id[seed] != UINT32_MAX) continue;
    uint32_t id = static_cast<uint32_t>(p.orbit_sizes.size());
    p.orbit_sizes.push_back(0);
    p.representatives.push_back(p.elements[seed]);
    p.orbit_id[seed] = id;
    queue.push_back(seed);
    while (!queue.empty()) {
      size_t cur = queue.front();
      queue.pop_front();
      p.orbit_sizes[id]++;
      uint64_t key = keys[cur];
      for (const auto& g : gens) {
        // image row i = xor of g.rows[j] over the set columns j of row i
        uint64_t kk = key;
        for (unsigned i = k; i-- > 0;) {
          uint32_t w = uint32_t(kk & ((uint64_t(1) << v) - 1));
          kk >>= v;
          uint32_t img = 0;
          while (w) {
            unsigned bit = unsigned(__builtin_ctz(w));
            w &= w - 1;
            img ^= g.rows[v - 1 - bit];  // bit b carries column v-1-b
          }
          buf[i] = img;
        }
        uint64_t ikey = rref_packed(buf, k, v);
        auto it = std::lower_bound(keys.begin(), keys.end(), ikey);
        if (it == keys.end() || *it != ikey)
          fail(Errc::invalid_arguments, "element set is not closed under the group");
        size_t j = size_t(it - keys.begin());
        if (p.orbit_id[j] == UINT32_MAX) {
          p.orbit_id[j] = id;
          queue.push_back(j);
        }
      }
    }
  }
  return p;
}

}  // namespace

OrbitPartition orbits(const Field& F, const GroupPresentation& G,
                      std::vector<Subspace> elements) {
  validate_group(F, G);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const auto& s : elements)
    if (s.ambient() != G.v) fail(Errc::ambient_mismatch, "element/group ambient mismatch");

  bool uniform = true;
  unsigned k = elements.empty() ? 0 : elements.front().dim();
  for (const auto& s : elements) uniform = uniform && s.dim() == k;
  bool linear_only = true;
  for (const auto& g : G.generators) linear_only = linear_only && g.frob % F.e() == 0;

  if (F.q() == 2 && uniform && k > 0 && size_t(k) * G.v <= 64 && linear_only && G.v <= 16)
    return orbits_packed(G, std::move(elements), k);

  const size_t n = elements.size();
  OrbitPartition p;
  p.elements = std::move(elements);
  p.orbit_id.assign(n, UINT32_MAX);
  std::deque<size_t> queue;
  for (size_t seed = 0; seed < n; ++seed) {
    if (p.orbit_id[seed] != UINT32_MAX) continue;
    uint32_t id = static_cast<uint32_t>(p.orbit_sizes.size());
    p.orbit_sizes.push_back(0);
    p.representatives.push_back(p.elements[seed]);
    p.orbit_id[seed] = id;
    queue.push_back(seed);
    while (!queue.empty()) {
      size_t cur = queue.front();
      queue.pop_front();
      p.orbit_sizes[id]++;
      for (const auto& g : G.generators) {
        Subspace img = apply(F, g, p.elements[cur]);
        auto it = std::lower_bound(p.elements.begin(), p.elements.end(), img);
        if (it == p.elements.end() || *it != img)
          fail(Errc::invalid_arguments, "element set is not closed under the group");
        size_t j = size_t(it - p.elements.begin());
        if (p.orbit_id[j] == UINT32_MAX) {
          p.orbit_id[j] = id;
          queue.push_back(j);
        }
      }
    }
  }
  return p;
}

namespace {

// Canonical form of a map as a subspace action: scalars act trivially, so the
// matrix is normalized to have 1 as its first nonzero entry.
std::pair<unsigned, Matrix> canonical_action(const Field& F, const SemilinearMap& g) {
  Matrix m = g.mat;
  uint8_t first = 0;
  for (size_t i = 0; i < m.a.size() && first == 0; ++i) first = m.a[i];
  if (first > 1) {
    uint8_t s = F.inv(first);
    for (auto& x : m.a) x = F.mul(s, x);
  }
  return {g.frob % F.e(), std::move(m)};
}

}  // namespace

uint64_t group_order(const Field& F, const GroupPresentation& G, uint64_t bound) {
  validate_group(F, G);
  std::map<std::pair<unsigned, Matrix>, bool> seen;
  std::deque<SemilinearMap> queue;
  SemilinearMap id{Matrix::identity(G.v), 0};
  seen.emplace(canonical_action(F, id), true);
  queue.push_back(id);
  while (!queue.empty()) {
    SemilinearMap cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : G.generators) {
      SemilinearMap next = compose(F, cur, g);
      auto key = canonical_action(F, next);
      if (seen.emplace(std::move(key), true).second) {
        if (seen.size() > bound)
          fail(Errc::bound_exceeded, "group closure exceeds bound " + std::to_string(bound));
        queue.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

bool is_automorphism_group(const Field& F, const QDesign& d, const GroupPresentation& G) {
  validate_group(F, G);
  if (d.params().v != G.v) fail(Errc::ambient_mismatch, "design/group ambient mismatch");
  const auto& blocks = d.blocks();  // sorted multiset
  for (const auto& g : G.generators) {
    std::vector<Subspace> image;
    image.reserve(blocks.size());
    for (const auto& b : blocks) image.push_back(apply(F, g, b));
    std::sort(image.begin(), image.end());
    if (image != blocks) return false;
  }
  return true;
}

}  // namespace qtac
