#include <doctest.h>

#include <algorithm>
#include <set>

#include "qtac/io.hpp"
#include "qtac/search.hpp"

using namespace qtac;

namespace {

SearchProblem order3_problem() {
  Field F(2);
  GroupPresentation G = load_group_file(QTAC_DATA_DIR "/order3_f2v4.grp");
  SearchProblem prob;
  prob.params = DesignParams{3, 4, 3, 2, 1};
  prob.point_sizes.assign(5, 3);
  prob.block_sizes.assign(5, 3);
  prob.tensor = lambda_tensor_via_lines(F, lines_decomposition(F, G));
  return prob;
}

}  // namespace

TEST_CASE("5x5 instance has the single canonical candidate") {
  SearchProblem prob = order3_problem();
  SearchResult res = enumerate_candidates(prob);
  CHECK(res.complete);
  REQUIRE(res.candidates.size() == 1);
  const CandidateMatrix& c = res.candidates[0];
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j) CHECK(c.rho[i * 5 + j] == (i == j ? 3 : 1));
  CHECK(c.kappa == c.rho);
}

TEST_CASE("emitted candidates re-pass the independent checkers") {
  SearchProblem prob = order3_problem();
  for (const CandidateMatrix& c : enumerate_candidates(prob).candidates) {
    TDMatrices td;
    td.m = c.m;
    td.n = c.n;
    td.rho = c.rho;
    td.kappa = c.kappa;
    td.point_sizes = prob.point_sizes;
    td.block_sizes = prob.block_sizes;
    CHECK(check_basic(prob.params, td).pass);
    CHECK(check_quadratic(prob.params, td).pass);
    CHECK(check_cubic(prob.params, td, prob.tensor).pass);
  }
}

TEST_CASE("m = n = 1 problem yields the single matrix [lambda_1]") {
  Field F(2);
  GroupPresentation G = load_group_file(QTAC_DATA_DIR "/singer_normalizer_f2v8.grp");
  SearchProblem prob;
  prob.params = DesignParams{3, 8, 4, 2, 31};  // the trivial design parameters
  prob.point_sizes = {255};
  prob.block_sizes = {200787};
  prob.tensor = LambdaTensor(1);
  prob.tensor.at(0, 0, 0) = 1016;
  SearchResult res = enumerate_candidates(prob);
  REQUIRE(res.candidates.size() == 1);
  CHECK(res.candidates[0].rho == std::vector<uint64_t>{381 * 31});
  CHECK(res.candidates[0].kappa == std::vector<uint64_t>{15});
}

TEST_CASE("unpruned mode emits every solution; the 5x5 instance has 120") {
  SearchProblem prob = order3_problem();
  SearchResult full = enumerate_candidates(prob, 100000000, false);
  CHECK(full.candidates.size() == 120);  // 3-positions form a permutation
  SearchResult pruned = enumerate_candidates(prob);
  CHECK(pruned.candidates.size() == 1);
  // the canonical representative is among the full set
  CHECK(std::count_if(full.candidates.begin(), full.candidates.end(),
                      [&](const CandidateMatrix& c) {
                        return c.rho == pruned.candidates[0].rho;
                      }) == 1);
}

TEST_CASE("search is complete on a heterogeneous instance") {
  // point classes of sizes {1,1,1,3,3,3,3} under the coordinate rotation;
  // the true decomposition matrix of the trivial design must be emitted in
  // unpruned mode
  Field F(2);
  GroupPresentation G;
  G.v = 4;
  G.q = 2;
  {
    Matrix m(4, 4);
    m.at(0, 0) = 1;
    m.at(1, 2) = 1;
    m.at(2, 3) = 1;
    m.at(3, 1) = 1;
    G.generators.push_back({std::move(m), 0});
  }
  QDesign d = trivial_design(F, 4, 3, 3);
  Decomposition dec = induced_decomposition(F, d, G);
  TDMatrices td = td_matrices(F, d, dec);
  SearchProblem prob;
  prob.params = d.params();
  prob.point_sizes = td.point_sizes;
  prob.block_sizes = td.block_sizes;
  prob.tensor = lambda_tensor_via_lines(F, lines_decomposition(F, G));

  SearchResult full = enumerate_candidates(prob, 100000000, false);
  CHECK(full.complete);
  bool found = false;
  for (const CandidateMatrix& c : full.candidates) found = found || c.rho == td.rho;
  CHECK(found);

  // the pruned output must cover the full set: the orbit of the emitted
  // representatives under size-and-tensor-preserving row permutations and
  // size-preserving column permutations is the whole solution set
  SearchResult pruned = enumerate_candidates(prob);
  size_t m = prob.point_sizes.size(), n = prob.block_sizes.size();
  auto perms_within_sizes = [](const std::vector<uint64_t>& sizes) {
    std::vector<size_t> idx(sizes.size());
    for (size_t i = 0; i < sizes.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return sizes[a] < sizes[b] || (sizes[a] == sizes[b] && a < b); });
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> perm = idx;
    do {
      bool ok = true;
      std::vector<size_t> p(sizes.size());
      for (size_t pos = 0; pos < idx.size(); ++pos) {
        if (sizes[idx[pos]] != sizes[perm[pos]]) ok = false;
        p[idx[pos]] = perm[pos];
      }
      if (ok) out.push_back(p);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  };
  auto preserves_tensor = [&](const std::vector<size_t>& p) {
    for (size_t l = 0; l < m; ++l)
      for (size_t r = 0; r < m; ++r)
        for (size_t s = 0; s < m; ++s)
          if (prob.tensor.at(l, r, s) != prob.tensor.at(p[l], p[r], p[s])) return false;
    return true;
  };
  std::set<std::vector<uint64_t>> orbit;
  for (const auto& sigma : perms_within_sizes(prob.point_sizes)) {
    if (!preserves_tensor(sigma)) continue;
    for (const auto& tau : perms_within_sizes(prob.block_sizes))
      for (const CandidateMatrix& c : pruned.candidates) {
        std::vector<uint64_t> img(m * n);
        for (size_t i = 0; i < m; ++i)
          for (size_t j = 0; j < n; ++j) img[sigma[i] * n + tau[j]] = c.rho[i * n + j];
        orbit.insert(std::move(img));
      }
  }
  std::set<std::vector<uint64_t>> full_set;
  for (const CandidateMatrix& c : full.candidates) full_set.insert(c.rho);
  CHECK(orbit == full_set);
}

TEST_CASE("zeroed tensor is infeasible and yields an empty stream") {
  SearchProblem prob = order3_problem();
  prob.tensor = LambdaTensor(5);
  SearchResult res = enumerate_candidates(prob);
  CHECK(res.complete);
  CHECK(res.candidates.empty());
}

TEST_CASE("node budget aborts loudly") {
  SearchProblem prob = order3_problem();
  CHECK_THROWS_AS(enumerate_candidates(prob, 10), Error);
}

TEST_CASE("block size total must match lambda_0") {
  SearchProblem prob = order3_problem();
  prob.block_sizes.assign(5, 4);
  CHECK_THROWS_AS(enumerate_candidates(prob), Error);
}

TEST_CASE("admissible lambda on toy data") {
  // one orbit containing every block: only the trivial lambda survives
  // v=4, k=3, q=2: [v 1] = 15, [k 1] = 7, lambda_1 = 7 lambda
  AdmissibleReport rep = admissible_lambda({15}, 3, 4, 3, 2, 1);
  CHECK(rep.rho == std::vector<int64_t>{7});
  CHECK(rep.congruence_set == std::vector<uint64_t>{1});
  CHECK(rep.dp_set == std::vector<uint64_t>{1});

  // non-integral rho orbits are excluded and reported
  AdmissibleReport rep2 = admissible_lambda({15, 7}, 3, 4, 3, 2, 1);
  CHECK(rep2.excluded_orbits == std::vector<size_t>{1});
  CHECK(rep2.rho[1] == -1);
}

TEST_CASE("admissible lambda is monotone under lambda_max extension") {
  std::vector<uint64_t> sizes{2040, 1020, 510, 340, 17};
  AdmissibleReport small = admissible_lambda(sizes, 3, 8, 4, 2, 5);
  AdmissibleReport large = admissible_lambda(sizes, 3, 8, 4, 2, 9);
  for (uint64_t l : small.dp_set)
    CHECK(std::count(large.dp_set.begin(), large.dp_set.end(), l) == 1);
  for (uint64_t l : large.dp_set)
    if (l <= 5) CHECK(std::count(small.dp_set.begin(), small.dp_set.end(), l) == 1);
}

TEST_CASE("dp-admissible lambdas close under complementation") {
  // lambda and lambda_trivial - lambda select complementary orbit unions,
  // with lambda_trivial = [v-3 k-3]_q = 31 here
  Field F(2);
  GroupPresentation G = load_group_file(QTAC_DATA_DIR "/singer_normalizer_f2v8.grp");
  OrbitPartition blocks = orbits(F, G, all_subspaces(F, 8, 4));
  AdmissibleReport rep = admissible_lambda(blocks.orbit_sizes, 3, 8, 4, 2, 31);
  uint64_t lambda_trivial = gaussian_binomial_u64(5, 1, 2);
  REQUIRE(lambda_trivial == 31);
  for (uint64_t l : rep.dp_set) {
    uint64_t comp = lambda_trivial - l;
    if (comp >= 1)
      CHECK(std::count(rep.dp_set.begin(), rep.dp_set.end(), comp) == 1);
  }
}

TEST_CASE("realize the trivial design from all five block orbits") {
  Field F(2);
  GroupPresentation G = load_group_file(QTAC_DATA_DIR "/order3_f2v4.grp");
  OrbitPartition blocks = orbits(F, G, all_subspaces(F, 4, 3));
  REQUIRE(blocks.num_orbits() == 5);
  RealizeResult res = realize_design(F, 3, blocks, {0, 1, 2, 3, 4});
  REQUIRE(res.ok);
  CHECK(res.design->params().lambda == 1);
  CHECK(res.design->block_count() == 15);
  CHECK(res.design->blocks() == all_subspaces(F, 4, 3));

  // empty selection fails
  CHECK_FALSE(realize_design(F, 3, blocks, {}).ok);

  // a single orbit of three 3-spaces cannot be a 3-design: lambda_3 = 3/15
  RealizeResult one = realize_design(F, 3, blocks, {0});
  CHECK_FALSE(one.ok);
  CHECK(one.reason.find("lambda") != std::string::npos);
}

TEST_CASE("the size-17 Singer orbit is not a 3-design (frozen regression)") {
  Field F(2);
  GroupPresentation G = load_group_file(QTAC_DATA_DIR "/singer_normalizer_f2v8.grp");
  OrbitPartition blocks = orbits(F, G, all_subspaces(F, 8, 4));
  size_t small = 0;
  while (blocks.orbit_sizes[small] != 17) ++small;
  RealizeResult res = realize_design(F, 3, blocks, {small});
  // 17 blocks cannot yield an integral lambda_3 = 17 * 15 / 97155
  CHECK_FALSE(res.ok);
  CHECK(res.reason.find("no integral lambda") != std::string::npos);
}
