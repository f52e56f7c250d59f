#include "qtac/search.hpp"

#include <algorithm>
#include <numeric>

#include "qtac/util.hpp"

namespace qtac {

void SearchProblem::validate() const {
  params.validate();
  if (params.t != 3) fail(Errc::invalid_arguments, "matrix search is defined for t = 3");
  if (tensor.m != point_sizes.size())
    fail(Errc::tensor_shape_mismatch, "tensor does not match the point classes");
  uint64_t total = 0;
  for (uint64_t s : point_sizes) total = checked_add(total, s);
  if (total != gaussian_binomial_u64(params.v, 1, params.q))
    fail(Errc::invalid_arguments, "point class sizes do not sum to [v 1]_q");
  LambdaValue l0 = lambda_s(params, 0);
  if (l0.integral) {
    uint64_t btotal = 0;
    for (uint64_t s : block_sizes) btotal = checked_add(btotal, s);
    if (btotal != l0.as_u64())
      fail(Errc::invalid_arguments, "block class sizes do not sum to lambda_0");
  }
}

namespace {

struct Searcher {
  const SearchProblem& prob;
  size_t m, n;
  uint64_t lambda1 = 0, lambda2 = 0, lambda3 = 0, k1 = 0;
  uint64_t node_budget;
  bool break_symmetry;
  uint64_t nodes = 0;

  std::vector<uint64_t> rho, kappa;     // m x n, filled row-major
  std::vector<uint64_t> row_sum;        // current rho row sums
  std::vector<uint64_t> col_kappa;      // current kappa column sums
  std::vector<uint64_t> step, cell_cap; // per (i, j): rho granularity and cap
  std::vector<uint64_t> quad_rhs;       // m x m
  std::vector<uint64_t> cubic_rhs;      // m^3
  std::vector<uint64_t> bs_suffix;      // suffix sums of block_sizes
  std::vector<uint64_t> ps_suffix;      // suffix sums of point_sizes
  std::vector<int> row_prev, col_prev;  // previous index in the same symmetry block, -1
  // col_tight[i][j]: columns col_prev[j] and j agree on rows < i
  std::vector<uint8_t> col_tight;

  std::vector<CandidateMatrix> out;

  Searcher(const SearchProblem& p, uint64_t budget, bool brk)
      : prob(p), node_budget(budget), break_symmetry(brk) {
    m = p.point_sizes.size();
    n = p.block_sizes.size();
  }

  uint64_t& rho_at(size_t i, size_t j) { return rho[i * n + j]; }
  uint64_t& kappa_at(size_t i, size_t j) { return kappa[i * n + j]; }

  bool swap_preserves_tensor(size_t a, size_t b) const {
    auto tr = [&](size_t x) { return x == a ? b : x == b ? a : x; };
    for (size_t l = 0; l < m; ++l)
      for (size_t r = 0; r < m; ++r)
        for (size_t s = 0; s < m; ++s)
          if (prob.tensor.at(l, r, s) != prob.tensor.at(tr(l), tr(r), tr(s))) return false;
    return true;
  }

  void setup() {
    lambda1 = lambda_s(prob.params, 1).as_u64();
    lambda2 = lambda_s(prob.params, 2).as_u64();
    lambda3 = lambda_s(prob.params, 3).as_u64();
    k1 = gaussian_binomial_u64(prob.params.k, 1, prob.params.q);

    rho.assign(m * n, 0);
    kappa.assign(m * n, 0);
    row_sum.assign(m, 0);
    col_kappa.assign(n, 0);

    step.resize(m * n);
    cell_cap.resize(m * n);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) {
        uint64_t g = std::gcd(prob.point_sizes[i], prob.block_sizes[j]);
        step[i * n + j] = prob.block_sizes[j] / g;
        cell_cap[i * n + j] = prob.block_sizes[j];  // rho_ij <= |B_j|
      }

    quad_rhs.resize(m * m);
    for (size_t l = 0; l < m; ++l)
      for (size_t r = 0; r < m; ++r)
        quad_rhs[l * m + r] =
            l == r ? checked_add(lambda1, checked_mul(lambda2, prob.point_sizes[r] - 1))
                   : checked_mul(lambda2, prob.point_sizes[r]);
    cubic_rhs.resize(m * m * m);
    for (size_t l = 0; l < m; ++l)
      for (size_t r = 0; r < m; ++r)
        for (size_t s = 0; s < m; ++s) {
          uint64_t L = prob.tensor.at(l, r, s);
          uint64_t rhs;
          if (l == r && r == s) {
            uint64_t sz2 = checked_mul(prob.point_sizes[l], prob.point_sizes[l]);
            if (sz2 < L + 1) fail(Errc::invalid_arguments, "tensor entry above |V_l|^2 - 1");
            rhs = checked_add(lambda1, checked_add(checked_mul(L, lambda2),
                                                   checked_mul(sz2 - L - 1, lambda3)));
          } else {
            uint64_t prod = checked_mul(prob.point_sizes[r], prob.point_sizes[s]);
            if (prod < L) fail(Errc::invalid_arguments, "tensor entry above |V_r| |V_s|");
            rhs = checked_add(checked_mul(L, lambda2), checked_mul(prod - L, lambda3));
          }
          cubic_rhs[(l * m + r) * m + s] = rhs;
        }

    bs_suffix.assign(n + 1, 0);
    for (size_t j = n; j-- > 0;) bs_suffix[j] = checked_add(bs_suffix[j + 1], prob.block_sizes[j]);
    ps_suffix.assign(m + 1, 0);
    for (size_t i = m; i-- > 0;) ps_suffix[i] = checked_add(ps_suffix[i + 1], prob.point_sizes[i]);

    // Symmetry blocks. Row swaps must fix class sizes and the tensor; the
    // set of such permutations is a group, so pairwise swap tests give a
    // genuine partition. Skipped for large m (pruning only, never required
    // for correctness of the equations).
    row_prev.assign(m, -1);
    if (break_symmetry && m <= 24) {
      for (size_t i = 1; i < m; ++i)
        for (size_t i0 = i; i0-- > 0;) {
          if (prob.point_sizes[i0] != prob.point_sizes[i]) continue;
          if (swap_preserves_tensor(i0, i)) {
            row_prev[i] = int(i0);
            break;
          }
        }
    }
    col_prev.assign(n, -1);
    if (break_symmetry)
      for (size_t j = 1; j < n; ++j)
        for (size_t j0 = j; j0-- > 0;)
          if (prob.block_sizes[j0] == prob.block_sizes[j]) {
            col_prev[j] = int(j0);
            break;
          }
    col_tight.assign((m + 1) * n, 1);
  }

  bool quadratic_ok(size_t i) {
    for (size_t l = 0; l <= i; ++l) {
      uint64_t lr = 0, rl = 0;
      for (size_t j = 0; j < n; ++j) {
        lr = checked_add(lr, checked_mul(rho_at(l, j), kappa_at(i, j)));
        rl = checked_add(rl, checked_mul(rho_at(i, j), kappa_at(l, j)));
      }
      if (lr != quad_rhs[l * m + i] || rl != quad_rhs[i * m + l]) return false;
    }
    return true;
  }

  bool cubic_ok(size_t i) {
    for (size_t l = 0; l <= i; ++l)
      for (size_t r = 0; r <= i; ++r)
        for (size_t s = 0; s <= i; ++s) {
          if (l != i && r != i && s != i) continue;
          uint64_t lhs = 0;
          for (size_t j = 0; j < n; ++j)
            lhs = checked_add(
                lhs, checked_mul(rho_at(l, j), checked_mul(kappa_at(r, j), kappa_at(s, j))));
          if (lhs != cubic_rhs[(l * m + r) * m + s]) return false;
        }
    return true;
  }

  void emit() {
    CandidateMatrix c;
    c.m = m;
    c.n = n;
    c.rho = rho;
    c.kappa = kappa;
    out.push_back(std::move(c));
  }

  void fill(size_t idx, bool row_lex_tight) {
    if (idx == m * n) {
      emit();
      return;
    }
    size_t i = idx / n, j = idx % n;
    if (j == 0) row_lex_tight = row_prev[i] >= 0;

    uint64_t st = step[idx];
    uint64_t cap = std::min(cell_cap[idx], lambda1 - row_sum[i]);
    // kappa column headroom
    uint64_t head = k1 - col_kappa[j];
    cap = std::min(cap, checked_mul(head, prob.block_sizes[j]) / prob.point_sizes[i]);
    if (row_lex_tight) cap = std::min(cap, rho_at(size_t(row_prev[i]), j));
    if (col_prev[j] >= 0 && col_tight[i * n + j])
      cap = std::min(cap, rho_at(i, size_t(col_prev[j])));

    bool last_in_row = j == n - 1;
    for (uint64_t val = 0; val <= cap; val += st) {
      if (last_in_row && row_sum[i] + val != lambda1) continue;
      // the rest of the row must still be able to reach lambda_1
      if (!last_in_row && row_sum[i] + val + bs_suffix[j + 1] < lambda1) continue;
      if (++nodes > node_budget)
        fail(Errc::problem_too_large, "node budget exhausted at " + std::to_string(nodes));

      uint64_t kap = prob.block_sizes[j] == 0
                         ? 0
                         : (prob.point_sizes[i] * val) / prob.block_sizes[j];
      rho_at(i, j) = val;
      kappa_at(i, j) = kap;
      row_sum[i] += val;
      col_kappa[j] += kap;

      bool ok = true;
      // row_lex_tight implies row_prev[i] >= 0
      bool next_row_tight = row_lex_tight && val == rho_at(size_t(row_prev[i]), j);

      if (ok && last_in_row) {
        // row complete: quadratic and cubic systems on the finished prefix
        ok = quadratic_ok(i) && cubic_ok(i);
        if (ok) {
          // every kappa column must still be able to reach [k 1]_q
          for (size_t jj = 0; jj < n && ok; ++jj) {
            uint64_t reach = col_kappa[jj] + ps_suffix[i + 1];
            if (reach < k1) ok = false;
            if (i == m - 1 && col_kappa[jj] != k1) ok = false;
          }
        }
        if (ok) {
          // snapshot column tightness for the next row
          for (size_t jj = 0; jj < n; ++jj)
            col_tight[(i + 1) * n + jj] =
                col_prev[jj] >= 0 && col_tight[i * n + jj] &&
                rho_at(i, jj) == rho_at(i, size_t(col_prev[jj]));
          fill(idx + 1, next_row_tight);
        }
      } else if (ok) {
        fill(idx + 1, next_row_tight);
      }

      row_sum[i] -= val;
      col_kappa[j] -= kap;
      rho_at(i, j) = 0;
      kappa_at(i, j) = 0;
    }
  }
};

}  // namespace

SearchResult enumerate_candidates(const SearchProblem& prob, uint64_t node_budget,
                                  bool break_symmetry) {
  prob.validate();
  SearchResult res;

  for (unsigned s = 0; s <= 3 && s <= prob.params.t; ++s) {
    LambdaValue lv = lambda_s(prob.params, s);
    if (!lv.integral) {
      res.complete = true;
      res.infeasible_reason =
          "lambda_" + std::to_string(s) + " = " + lv.value.str() + " is not an integer";
      return res;
    }
  }
  LambdaValue l0 = lambda_s(prob.params, 0);
  uint64_t btotal = 0;
  for (uint64_t s : prob.block_sizes) btotal = checked_add(btotal, s);
  if (btotal != l0.as_u64()) {
    res.complete = true;
    res.infeasible_reason = "block class sizes sum to " + std::to_string(btotal) +
                            ", expected lambda_0 = " + l0.value.str();
    return res;
  }

  Searcher searcher(prob, node_budget, break_symmetry);
  searcher.setup();
  searcher.fill(0, false);
  res.candidates = std::move(searcher.out);
  std::sort(res.candidates.begin(), res.candidates.end(),
            [](const CandidateMatrix& a, const CandidateMatrix& b) { return a.rho < b.rho; });
  res.nodes = searcher.nodes;
  res.complete = true;
  return res;
}

AdmissibleReport admissible_lambda(const std::vector<uint64_t>& orbit_sizes, unsigned t,
                                   unsigned v, unsigned k, unsigned q, uint64_t lambda_max) {
  if (orbit_sizes.empty()) fail(Errc::invalid_arguments, "no block orbits");
  if (lambda_max < 1) fail(Errc::invalid_arguments, "lambda_max must be positive");
  AdmissibleReport rep;
  rep.t = t;
  rep.v = v;
  rep.k = k;
  rep.q = q;
  rep.lambda_max = lambda_max;
  rep.orbit_sizes = orbit_sizes;

  uint64_t k1 = gaussian_binomial_u64(k, 1, q);
  uint64_t v1 = gaussian_binomial_u64(v, 1, q);
  std::vector<uint64_t> usable;
  for (size_t j = 0; j < orbit_sizes.size(); ++j) {
    uint64_t num = checked_mul(orbit_sizes[j], k1);
    if (num % v1 != 0) {
      rep.rho.push_back(-1);
      rep.excluded_orbits.push_back(j);
    } else {
      rep.rho.push_back(int64_t(num / v1));
      usable.push_back(num / v1);
    }
  }

  // lambda_1(lambda) = lambda * [v-1 t-1]_q / [k-1 t-1]_q
  BigInt num1 = gaussian_binomial(v - 1, t - 1, q);
  BigInt den1 = gaussian_binomial(k - 1, t - 1, q);

  uint64_t total = 0;
  for (uint64_t r : usable) total = checked_add(total, r);

  // Reachable subset sums of the usable rho values.
  BigInt l1_max_big = BigInt(lambda_max) * num1 / den1;
  uint64_t dp_limit = std::min<uint64_t>(total, l1_max_big > 1000000000 ? 1000000000
                                                  : l1_max_big.convert_to<uint64_t>());
  if (dp_limit > 100000000) fail(Errc::problem_too_large, "subset-sum table too large");
  std::vector<char> reach(dp_limit + 1, 0);
  reach[0] = 1;
  for (uint64_t r : usable) {
    if (r == 0 || r > dp_limit) continue;
    for (uint64_t s = dp_limit - r + 1; s-- > 0;)
      if (reach[s]) reach[s + r] = 1;
  }

  // Per-orbit gcd of the other usable rho values (prefix/suffix gcds).
  size_t u = usable.size();
  std::vector<uint64_t> pre(u + 1, 0), suf(u + 1, 0);
  for (size_t i = 0; i < u; ++i) pre[i + 1] = std::gcd(pre[i], usable[i]);
  for (size_t i = u; i-- > 0;) suf[i] = std::gcd(suf[i + 1], usable[i]);

  for (uint64_t lam = 1; lam <= lambda_max; ++lam) {
    BigInt l1_big = BigInt(lam) * num1;
    if (l1_big % den1 != 0) continue;  // lambda_1 not integral: inadmissible outright
    l1_big /= den1;
    if (l1_big > total) continue;  // exceeds even the full union of orbits
    uint64_t l1 = l1_big.convert_to<uint64_t>();

    bool cong_ok = true;
    for (size_t i = 0; i < u && cong_ok; ++i) {
      uint64_t d = std::gcd(pre[i], suf[i + 1]);
      if (d == 0)
        cong_ok = l1 == 0 || l1 == usable[i];
      else
        cong_ok = (l1 % d == 0) || (l1 % d == usable[i] % d);
    }
    if (cong_ok) rep.congruence_set.push_back(lam);
    if (l1 <= dp_limit && reach[l1]) rep.dp_set.push_back(lam);
  }
  return rep;
}

RealizeResult realize_design(const Field& F, unsigned t, const OrbitPartition& kspace_orbits,
                             const std::vector<size_t>& selection) {
  RealizeResult res;
  auto members = kspace_orbits.members_by_class();
  std::vector<Subspace> blocks;
  for (size_t id : selection) {
    if (id >= members.size()) fail(Errc::invalid_arguments, "orbit id out of range");
    for (uint32_t idx : members[id]) blocks.push_back(kspace_orbits.elements[idx]);
  }
  if (blocks.empty()) {
    res.reason = "empty block selection";
    return res;
  }
  unsigned v = blocks.front().ambient(), k = blocks.front().dim();
  BigInt num = BigInt(blocks.size()) * gaussian_binomial(k, t, F.q());
  BigInt den = gaussian_binomial(v, t, F.q());
  if (num % den != 0) {
    res.reason = "no integral lambda matches " + std::to_string(blocks.size()) +
                 " blocks: lambda_t = " + BigRational(num, den).str();
    return res;
  }
  DesignParams p;
  p.t = t;
  p.v = v;
  p.k = k;
  p.q = F.q();
  p.lambda = (num / den).convert_to<uint64_t>();
  if (p.lambda == 0) {
    res.reason = "block count yields lambda_t = 0";
    return res;
  }
  QDesign d(p, std::move(blocks));
  VerifyReport vr = verify_design(F, d);
  if (!vr.ok) {
    res.reason = "verification failed";
    res.witness = vr.witness;
    res.witness_count = vr.witness_count;
    return res;
  }
  res.ok = true;
  res.design = std::move(d);
  return res;
}

}  // namespace qtac
