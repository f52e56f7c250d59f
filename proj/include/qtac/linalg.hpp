#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "qtac/field.hpp"

namespace qtac {

// Dense row-major matrix over GF(q). Vectors are rows throughout.
struct Matrix {
  unsigned rows = 0, cols = 0;
  std::vector<uint8_t> a;

  Matrix() = default;
  Matrix(unsigned r, unsigned c) : rows(r), cols(c), a(size_t(r) * c, 0) {}

  static Matrix identity(unsigned n) {
    Matrix m(n, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  uint8_t at(unsigned r, unsigned c) const { return a[size_t(r) * cols + c]; }
  uint8_t& at(unsigned r, unsigned c) { return a[size_t(r) * cols + c]; }
  const uint8_t* row(unsigned r) const { return a.data() + size_t(r) * cols; }
  uint8_t* row(unsigned r) { return a.data() + size_t(r) * cols; }

  // Ordering key: (rows, cols, entries). Within one shape this is the
  // lexicographic order on the flattened entries.
  friend auto operator<=>(const Matrix&, const Matrix&) = default;
};

Matrix mul(const Field& F, const Matrix& A, const Matrix& B);
Matrix transpose(const Matrix& A);
Matrix frobenius_entrywise(const Field& F, Matrix A, unsigned f);

// In-place reduced row echelon form; drops zero rows and returns the rank.
unsigned rref_in_place(const Field& F, Matrix& M);

std::optional<Matrix> inverse(const Field& F, const Matrix& A);

}  // namespace qtac
