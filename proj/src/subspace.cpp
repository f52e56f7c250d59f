#include "qtac/subspace.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "qtac/util.hpp"

namespace qtac {

size_t SubspaceHash::operator()(const Subspace& s) const {
  const auto& m = s.basis();
  uint64_t h = fnv1a64(m.a.data(), m.a.size());
  h ^= (uint64_t(m.rows) << 32) ^ m.cols;
  return static_cast<size_t>(h);
}

static void require_same_ambient(const Subspace& U, const Subspace& W) {
  if (U.ambient() != W.ambient())
    fail(Errc::ambient_mismatch, "subspaces live in different ambient spaces");
}

Subspace join(const Field& F, const Subspace& U, const Subspace& W) {
  require_same_ambient(U, W);
  Matrix m(U.dim() + W.dim(), U.ambient());
  std::copy(U.basis().a.begin(), U.basis().a.end(), m.a.begin());
  std::copy(W.basis().a.begin(), W.basis().a.end(), m.a.begin() + U.basis().a.size());
  return Subspace::row_space(F, std::move(m));
}

// Zassenhaus: rref of [U U; W 0]; rows with zero left half carry a basis of
// the intersection in their right half.
Subspace intersect(const Field& F, const Subspace& U, const Subspace& W) {
  require_same_ambient(U, W);
  unsigned v = U.ambient();
  Matrix big(U.dim() + W.dim(), 2 * v);
  for (unsigned i = 0; i < U.dim(); ++i)
    for (unsigned j = 0; j < v; ++j) {
      big.at(i, j) = U.basis().at(i, j);
      big.at(i, v + j) = U.basis().at(i, j);
    }
  for (unsigned i = 0; i < W.dim(); ++i)
    for (unsigned j = 0; j < v; ++j) big.at(U.dim() + i, j) = W.basis().at(i, j);
  rref_in_place(F, big);

  Matrix inter(0, v);
  for (unsigned i = 0; i < big.rows; ++i) {
    bool left_zero = true;
    for (unsigned j = 0; j < v && left_zero; ++j) left_zero = big.at(i, j) == 0;
    if (!left_zero) continue;
    inter.a.insert(inter.a.end(), big.row(i) + v, big.row(i) + 2 * v);
    ++inter.rows;
  }
  return Subspace::row_space(F, std::move(inter));
}

bool contains(const Field& F, const Subspace& U, const Subspace& W) {
  require_same_ambient(U, W);
  if (W.dim() > U.dim()) return false;
  unsigned v = U.ambient();
  // Pivot columns of U's RREF basis.
  std::vector<unsigned> pivots(U.dim());
  for (unsigned i = 0; i < U.dim(); ++i) {
    unsigned j = 0;
    while (U.basis().at(i, j) == 0) ++j;
    pivots[i] = j;
  }
  std::vector<uint8_t> w(v);
  for (unsigned r = 0; r < W.dim(); ++r) {
    std::copy(W.basis().row(r), W.basis().row(r) + v, w.begin());
    for (unsigned i = 0; i < U.dim(); ++i) {
      uint8_t c = w[pivots[i]];
      if (c == 0) continue;
      for (unsigned j = pivots[i]; j < v; ++j) w[j] = F.sub(w[j], F.mul(c, U.basis().at(i, j)));
    }
    for (unsigned j = 0; j < v; ++j)
      if (w[j] != 0) return false;
  }
  return true;
}

BigInt gaussian_binomial(unsigned v, unsigned r, unsigned q) {
  if (q < 2) fail(Errc::invalid_arguments, "gaussian binomial needs q >= 2");
  if (r > v) return 0;
  BigInt num = 1, den = 1, Q = q;
  for (unsigned i = 0; i < r; ++i) {
    num *= boost::multiprecision::pow(Q, v - i) - 1;
    den *= boost::multiprecision::pow(Q, r - i) - 1;
  }
  BigInt quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) fail(Errc::internal, "gaussian binomial division not exact");
  return quot;
}

uint64_t gaussian_binomial_u64(unsigned v, unsigned r, unsigned q) {
  BigInt g = gaussian_binomial(v, r, q);
  if (g > std::numeric_limits<uint64_t>::max())
    fail(Errc::overflow, "gaussian binomial does not fit in 64 bits");
  return g.convert_to<uint64_t>();
}

std::vector<Subspace> all_subspaces(const Field& F, unsigned v, unsigned k) {
  if (k > v) fail(Errc::invalid_arguments, "k exceeds the ambient dimension");
  std::vector<Subspace> out;
  if (k == 0) {
    out.push_back(Subspace::zero(v));
    return out;
  }

  // Enumerate RREF matrices directly: choose pivot columns, then run an
  // odometer over the free cells (right of the pivot, not a pivot column).
  std::vector<unsigned> piv(k);
  for (unsigned i = 0; i < k; ++i) piv[i] = i;
  unsigned q = F.q();
  while (true) {
    std::vector<bool> is_piv(v, false);
    for (unsigned c : piv) is_piv[c] = true;
    std::vector<std::pair<unsigned, unsigned>> free_cells;
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = piv[i] + 1; j < v; ++j)
        if (!is_piv[j]) free_cells.emplace_back(i, j);

    Matrix m(k, v);
    for (unsigned i = 0; i < k; ++i) m.at(i, piv[i]) = 1;
    std::vector<uint8_t> odo(free_cells.size(), 0);
    while (true) {
      for (size_t c = 0; c < free_cells.size(); ++c)
        m.at(free_cells[c].first, free_cells[c].second) = odo[c];
      out.push_back(Subspace::from_rref(m));
      size_t c = 0;
      while (c < odo.size() && odo[c] == q - 1) odo[c++] = 0;
      if (c == odo.size()) break;
      ++odo[c];
    }

    // next k-combination of pivot columns
    unsigned i = k;
    while (i-- > 0) {
      if (piv[i] + (k - i) <= v - 1) {
        ++piv[i];
        for (unsigned j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
        break;
      }
      if (i == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
  }
}

std::vector<Subspace> subspaces_of(const Field& F, const Subspace& S, unsigned t) {
  if (t > S.dim()) fail(Errc::invalid_arguments, "t exceeds dim S");
  std::vector<Subspace> out;
  for (const Subspace& local : all_subspaces(F, S.dim(), t))
    out.push_back(Subspace::row_space(F, mul(F, local.basis(), S.basis())));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> subspaces_through(const Field& F, const Subspace& S, unsigned k) {
  unsigned v = S.ambient(), s = S.dim();
  if (k < s || k > v) fail(Errc::invalid_arguments, "need dim S <= k <= v");
  if (k == s) return {S};

  std::vector<bool> is_piv(v, false);
  for (unsigned i = 0; i < s; ++i) {
    unsigned j = 0;
    while (S.basis().at(i, j) == 0) ++j;
    is_piv[j] = true;
  }
  std::vector<unsigned> np;
  for (unsigned j = 0; j < v; ++j)
    if (!is_piv[j]) np.push_back(j);

  // (k-s)-subspaces of the complement coordinates, lifted and joined with S.
  std::vector<Subspace> out;
  for (const Subspace& T : all_subspaces(F, v - s, k - s)) {
    Matrix m(s + T.dim(), v);
    std::copy(S.basis().a.begin(), S.basis().a.end(), m.a.begin());
    for (unsigned i = 0; i < T.dim(); ++i)
      for (unsigned j = 0; j < v - s; ++j) m.at(s + i, np[j]) = T.basis().at(i, j);
    out.push_back(Subspace::row_space(F, std::move(m)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() != gaussian_binomial_u64(v - s, k - s, F.q()))
    fail(Errc::internal, "subspaces_through produced a wrong count");
  return out;
}

}  // namespace qtac
