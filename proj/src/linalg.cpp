#include "qtac/linalg.hpp"

#include <algorithm>

namespace qtac {

Matrix mul(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.cols != B.rows) fail(Errc::invalid_arguments, "matrix shape mismatch in mul");
  Matrix C(A.rows, B.cols);
  for (unsigned i = 0; i < A.rows; ++i)
    for (unsigned k = 0; k < A.cols; ++k) {
      uint8_t aik = A.at(i, k);
      if (aik == 0) continue;
      const uint8_t* brow = B.row(k);
      uint8_t* crow = C.row(i);
      for (unsigned j = 0; j < B.cols; ++j)
        crow[j] = F.add(crow[j], F.mul(aik, brow[j]));
    }
  return C;
}

Matrix transpose(const Matrix& A) {
  Matrix T(A.cols, A.rows);
  for (unsigned i = 0; i < A.rows; ++i)
    for (unsigned j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

Matrix frobenius_entrywise(const Field& F, Matrix A, unsigned f) {
  f %= F.e();
  if (f == 0) return A;
  for (auto& x : A.a)
    x = F.frobenius_pow(x, f);
  return A;
}

unsigned rref_in_place(const Field& F, Matrix& M) {
  unsigned rank = 0;
  for (unsigned col = 0; col < M.cols && rank < M.rows; ++col) {
    unsigned piv = rank;
    while (piv < M.rows && M.at(piv, col) == 0) ++piv;
    if (piv == M.rows) continue;
    if (piv != rank)
      for (unsigned j = 0; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(rank, j));
    uint8_t s = F.inv(M.at(rank, col));
    if (s != 1)
      for (unsigned j = col; j < M.cols; ++j) M.at(rank, j) = F.mul(s, M.at(rank, j));
    for (unsigned r = 0; r < M.rows; ++r) {
      if (r == rank) continue;
      uint8_t c = M.at(r, col);
      if (c == 0) continue;
      for (unsigned j = col; j < M.cols; ++j)
        M.at(r, j) = F.sub(M.at(r, j), F.mul(c, M.at(rank, j)));
    }
    ++rank;
  }
  M.a.resize(size_t(rank) * M.cols);
  M.rows = rank;
  return rank;
}

std::optional<Matrix> inverse(const Field& F, const Matrix& A) {
  if (A.rows != A.cols) return std::nullopt;
  unsigned n = A.rows;
  Matrix aug(n, 2 * n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = 1;
  }
  rref_in_place(F, aug);
  // [A | I] always has row rank n; A is invertible iff the left block
  // reduced to the identity.
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (aug.at(i, j) != (i == j ? 1 : 0)) return std::nullopt;
  Matrix inv(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace qtac
