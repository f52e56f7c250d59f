#include <doctest.h>

#include <random>

#include "qtac/subspace.hpp"

using namespace qtac;

namespace {

Subspace make(const Field& F, unsigned v, std::initializer_list<std::initializer_list<int>> rows) {
  Matrix m(static_cast<unsigned>(rows.size()), v);
  unsigned i = 0;
  for (auto& row : rows) {
    unsigned j = 0;
    for (int x : row) m.at(i, j++) = static_cast<uint8_t>(x);
    ++i;
  }
  return Subspace::row_space(F, std::move(m));
}

Matrix random_matrix(const Field& F, unsigned rows, unsigned v, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> coin(0, F.q() - 1);
  Matrix m(rows, v);
  for (auto& x : m.a) x = static_cast<uint8_t>(coin(rng));
  return m;
}

}  // namespace

TEST_CASE("rref canonicalization") {
  Field F(2);
  Subspace s = make(F, 4, {{1, 1, 0, 0}, {0, 1, 0, 0}});
  CHECK(s.dim() == 2);
  CHECK(s == make(F, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(make(F, 4, {{0, 0, 0, 0}}).dim() == 0);
  CHECK(make(F, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}).dim() == 4);

  Field F3(3);
  // single vector scaled so the first nonzero coordinate is 1
  Subspace p = make(F3, 3, {{0, 2, 1}});
  CHECK(p.basis().at(0, 1) == 1);
  CHECK(p.basis().at(0, 2) == 2);  // 2 * inv(2) = 1, 1 * inv(2) = 2
}

TEST_CASE("rref is idempotent on random input") {
  std::mt19937_64 rng(7);
  for (unsigned q : {2u, 3u, 4u}) {
    Field F(q);
    for (int trial = 0; trial < 50; ++trial) {
      Matrix m = random_matrix(F, 3, 5, rng);
      Subspace s = Subspace::row_space(F, m);
      CHECK(Subspace::row_space(F, s.basis()) == s);
    }
  }
}

TEST_CASE("join and intersect satisfy the dimension formula") {
  std::mt19937_64 rng(11);
  for (unsigned q : {2u, 3u}) {
    Field F(q);
    for (int trial = 0; trial < 100; ++trial) {
      Subspace U = Subspace::row_space(F, random_matrix(F, 2, 5, rng));
      Subspace W = Subspace::row_space(F, random_matrix(F, 3, 5, rng));
      Subspace J = join(F, U, W);
      Subspace I = intersect(F, U, W);
      CHECK(J.dim() + I.dim() == U.dim() + W.dim());
      CHECK(join(F, W, U) == J);
      CHECK(intersect(F, W, U) == I);
      CHECK(contains(F, J, U));
      CHECK(contains(F, U, I));
      CHECK(join(F, U, U) == U);
      CHECK(intersect(F, U, U) == U);
    }
  }
}

TEST_CASE("join and intersect edge cases") {
  Field F(2);
  Subspace z = Subspace::zero(4);
  Subspace W = make(F, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(join(F, z, W) == W);
  CHECK(intersect(F, z, W) == z);
  // two distinct points span a line
  Subspace p1 = make(F, 4, {{1, 0, 0, 0}});
  Subspace p2 = make(F, 4, {{0, 0, 1, 0}});
  CHECK(join(F, p1, p2).dim() == 2);
  CHECK(intersect(F, p1, p2).dim() == 0);
  // two distinct hyperplanes of F_2^4 meet in dimension 2
  Subspace h1 = make(F, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  Subspace h2 = make(F, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  CHECK(intersect(F, h1, h2).dim() == 2);
  CHECK_THROWS_AS(join(F, p1, make(F, 3, {{1, 0, 0}})), Error);
}

TEST_CASE("contains") {
  Field F(2);
  Subspace line = make(F, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  Subspace pt = make(F, 4, {{1, 1, 0, 0}});
  CHECK(contains(F, line, pt));
  CHECK_FALSE(contains(F, pt, line));
  CHECK(contains(F, line, Subspace::zero(4)));
  CHECK(contains(F, line, line));
  // every line of F_2^4 contains exactly [2 1]_2 = 3 points
  for (const Subspace& l : all_subspaces(F, 4, 2)) {
    unsigned npts = 0;
    for (const Subspace& p : all_points(F, 4))
      if (contains(F, l, p)) ++npts;
    CHECK(npts == 3);
  }
}

TEST_CASE("gaussian binomial values") {
  CHECK(gaussian_binomial(4, 3, 2) == 15);
  CHECK(gaussian_binomial(4, 1, 2) == 15);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(8, 4, 2) == 200787);
  CHECK(gaussian_binomial(5, 3, 2) == 155);
  CHECK(gaussian_binomial(7, 1, 2) == 127);
  CHECK(gaussian_binomial(6, 0, 3) == 1);
  CHECK(gaussian_binomial(3, 5, 2) == 0);  // r > v yields 0 by convention
  CHECK_THROWS_AS(gaussian_binomial(4, 2, 1), Error);
  // a value beyond 64 bits stays exact
  CHECK(gaussian_binomial(16, 8, 3).str() == "6129263888495201102915629695046");
  CHECK_THROWS_AS(gaussian_binomial_u64(16, 8, 3), Error);
}

TEST_CASE("enumeration counts match the gaussian binomial") {
  for (unsigned q : {2u, 3u}) {
    Field F(q);
    for (unsigned v = 1; v <= 6; ++v)
      for (unsigned k = 0; k <= v; ++k) {
        auto subs = all_subspaces(F, v, k);
        CHECK(BigInt(subs.size()) == gaussian_binomial(v, k, q));
        CHECK(std::is_sorted(subs.begin(), subs.end()));
        CHECK(std::adjacent_find(subs.begin(), subs.end()) == subs.end());
        for (const auto& s : subs) {
          CHECK(s.dim() == k);
          CHECK(Subspace::row_space(F, s.basis()) == s);
        }
      }
  }
}

TEST_CASE("whole space enumerates once") {
  Field F(2);
  auto subs = all_subspaces(F, 4, 4);
  REQUIRE(subs.size() == 1);
  CHECK(subs[0].dim() == 4);
  CHECK_THROWS_AS(all_subspaces(F, 4, 5), Error);
  CHECK_THROWS_AS(subspaces_through(F, subs[0], 3), Error);  // k < dim S
}

TEST_CASE("subspaces through a fixed subspace") {
  Field F(2);
  Subspace pt = make(F, 4, {{1, 0, 0, 0}});
  auto lines = subspaces_through(F, pt, 2);
  CHECK(lines.size() == 7);  // [3 1]_2
  for (const auto& l : lines) CHECK(contains(F, l, pt));
  auto planes = subspaces_through(F, pt, 3);
  CHECK(planes.size() == 7);  // [3 2]_2
  auto self = subspaces_through(F, pt, 1);
  REQUIRE(self.size() == 1);
  CHECK(self[0] == pt);

  Field F3(3);
  Subspace line3 = make(F3, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(subspaces_through(F3, line3, 3).size() == gaussian_binomial_u64(2, 1, 3));
}

TEST_CASE("contains is a partial order on samples") {
  Field F(2);
  auto pts = all_points(F, 4);
  auto lines = all_subspaces(F, 4, 2);
  auto planes = all_subspaces(F, 4, 3);
  for (const auto& p : pts)
    for (const auto& l : lines)
      for (const auto& h : planes)
        if (contains(F, l, p) && contains(F, h, l)) CHECK(contains(F, h, p));
}
