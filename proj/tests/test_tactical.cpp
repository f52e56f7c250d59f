#include <doctest.h>

#include <algorithm>

#include "qtac/io.hpp"
#include "qtac/tactical.hpp"

using namespace qtac;

namespace {

GroupPresentation load_order3() { return load_group_file(QTAC_DATA_DIR "/order3_f2v4.grp"); }

}  // namespace

TEST_CASE("order-3 group on the trivial 3-(4,3,1)_2 design: 5x5 matrices") {
  Field F(2);
  QDesign d = trivial_design(F, 4, 3, 3);
  GroupPresentation G = load_order3();
  Decomposition dec = induced_decomposition(F, d, G);
  CHECK(dec.points.num_orbits() == 5);
  CHECK(dec.blocks.num_orbits() == 5);
  TDMatrices td = td_matrices(F, d, dec);

  CHECK(td.point_sizes == std::vector<uint64_t>(5, 3));
  CHECK(td.block_sizes == std::vector<uint64_t>(5, 3));
  // all class sizes are 3, so rho = kappa
  CHECK(td.rho == td.kappa);
  // every row is a permutation of {3,1,1,1,1} with the 3s on a transversal
  for (size_t i = 0; i < 5; ++i) {
    std::vector<uint64_t> row(td.rho.begin() + i * 5, td.rho.begin() + (i + 1) * 5);
    std::sort(row.begin(), row.end());
    CHECK(row == std::vector<uint64_t>{1, 1, 1, 1, 3});
    uint64_t sum = 0;
    for (size_t j = 0; j < 5; ++j) sum += td.rho_at(i, j);
    CHECK(sum == 7);
  }
  for (size_t j = 0; j < 5; ++j) {
    uint64_t col = 0;
    for (size_t i = 0; i < 5; ++i) col += td.kappa_at(i, j);
    CHECK(col == 7);  // [3 1]_2
  }
  // class-size balance identity
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j)
      CHECK(td.point_sizes[i] * td.rho_at(i, j) == td.block_sizes[j] * td.kappa_at(i, j));
}

TEST_CASE("m = n = 1 decomposition") {
  Field F(2);
  QDesign d = trivial_design(F, 4, 3, 3);
  Decomposition dec;
  dec.points = OrbitPartition::from_classes({all_points(F, 4)});
  dec.blocks = OrbitPartition::from_classes({d.distinct_blocks()});
  TDMatrices td = td_matrices(F, d, dec);
  CHECK(td.m == 1);
  CHECK(td.n == 1);
  CHECK(td.rho_at(0, 0) == 7);    // lambda_1
  CHECK(td.kappa_at(0, 0) == 7);  // [3 1]_2
}

TEST_CASE("singleton decomposition gives the 0/1 incidence matrix twice") {
  Field F(2);
  QDesign d = trivial_design(F, 4, 3, 3);
  std::vector<std::vector<Subspace>> pcls, bcls;
  for (const auto& p : all_points(F, 4)) pcls.push_back({p});
  for (const auto& b : d.distinct_blocks()) bcls.push_back({b});
  Decomposition dec{OrbitPartition::from_classes(pcls), OrbitPartition::from_classes(bcls)};
  TDMatrices td = td_matrices(F, d, dec);
  CHECK(td.m == 15);
  CHECK(td.n == 15);
  CHECK(td.rho == td.kappa);
  for (size_t i = 0; i < td.m; ++i)
    for (size_t j = 0; j < td.n; ++j) {
      CHECK(td.rho_at(i, j) <= 1);
      CHECK(td.rho_at(i, j) ==
            (contains(F, dec.blocks.elements[j], dec.points.elements[i]) ? 1 : 0));
    }
}

TEST_CASE("group-induced decompositions are always tactical") {
  Field F(2);
  GroupPresentation G = load_order3();
  for (auto [v, k] : {std::pair{4u, 3u}, {4u, 2u}}) {
    QDesign d = trivial_design(F, v, k, 2);
    Decomposition dec = induced_decomposition(F, d, G);
    CHECK_NOTHROW(td_matrices(F, d, dec));
  }
}

TEST_CASE("non-tactical hand partition is rejected with a witness") {
  Field F(2);
  QDesign d = trivial_design(F, 4, 3, 3);
  GroupPresentation G = load_order3();
  // one point class but the G-orbits of blocks: rho differs between points
  Decomposition dec;
  dec.points = OrbitPartition::from_classes({all_points(F, 4)});
  dec.blocks = orbits(F, G, d.distinct_blocks());
  try {
    td_matrices(F, d, dec);
    FAIL("expected NotTactical");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_tactical);
    CHECK(std::string(e.what()).find("rho not constant") != std::string::npos);
  }
}

TEST_CASE("induced_decomposition requires an automorphism group") {
  Field F(2);
  QDesign full = trivial_design(F, 4, 3, 3);
  std::vector<Subspace> blocks(full.blocks().begin(), full.blocks().end() - 1);
  QDesign broken(full.params(), blocks);
  CHECK_THROWS_AS(induced_decomposition(F, broken, load_order3()), Error);
}
