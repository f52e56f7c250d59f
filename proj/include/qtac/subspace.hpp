#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <span>
#include <vector>

#include "qtac/linalg.hpp"

namespace qtac {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// A subspace of F_q^v, stored as its reduced-row-echelon basis. The RREF
// basis is the unique canonical representative: two Subspace values compare
// equal iff they are the same subspace. Points are dim 1, lines dim 2.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(unsigned ambient) {
    Subspace s;
    s.b_ = Matrix(0, ambient);
    return s;
  }

  // Canonicalizes an arbitrary spanning set (spec rref).
  static Subspace row_space(const Field& F, Matrix m) {
    rref_in_place(F, m);
    return Subspace(std::move(m));
  }

  static Subspace from_point(const Field& F, std::span<const uint8_t> coords) {
    Matrix m(1, static_cast<unsigned>(coords.size()));
    std::copy(coords.begin(), coords.end(), m.a.begin());
    return row_space(F, std::move(m));
  }

  // basis must already be in RREF with no zero rows; unchecked.
  static Subspace from_rref(Matrix rref_basis) { return Subspace(std::move(rref_basis)); }

  unsigned ambient() const { return b_.cols; }
  unsigned dim() const { return b_.rows; }
  const Matrix& basis() const { return b_; }

  // (dim, ambient, entries); within one (v, k) this is the lexicographic
  // order on flattened RREF matrices used for all canonical numbering.
  friend auto operator<=>(const Subspace&, const Subspace&) = default;

 private:
  explicit Subspace(Matrix b) : b_(std::move(b)) {}
  Matrix b_;
};

struct SubspaceHash {
  size_t operator()(const Subspace& s) const;
};

Subspace join(const Field& F, const Subspace& U, const Subspace& W);
Subspace intersect(const Field& F, const Subspace& U, const Subspace& W);
// W <= U
bool contains(const Field& F, const Subspace& U, const Subspace& W);

// Number of r-dimensional subspaces of F_q^v (product formula). Returns 0
// when r > v, mirroring the binomial convention; throws for q < 2.
BigInt gaussian_binomial(unsigned v, unsigned r, unsigned q);
uint64_t gaussian_binomial_u64(unsigned v, unsigned r, unsigned q);  // checked narrowing

// All k-subspaces of F_q^v in ascending canonical order.
std::vector<Subspace> all_subspaces(const Field& F, unsigned v, unsigned k);
inline std::vector<Subspace> all_points(const Field& F, unsigned v) {
  return all_subspaces(F, v, 1);
}

// All k-subspaces containing S; count is [v - dim S, k - dim S]_q.
std::vector<Subspace> subspaces_through(const Field& F, const Subspace& S, unsigned k);

// The t-subspaces of S itself (t = 1 gives its points).
std::vector<Subspace> subspaces_of(const Field& F, const Subspace& S, unsigned t);

}  // namespace qtac
