#include "qtac/conditions.hpp"

#include <string>

#include "qtac/util.hpp"

namespace qtac {

const char* condition_system_name(ConditionSystem s) {
  switch (s) {
    case ConditionSystem::basic: return "basic";
    case ConditionSystem::quadratic: return "quadratic";
    case ConditionSystem::cubic: return "cubic";
  }
  return "?";
}

namespace {

void add_violation(ConditionReport& rep, int64_t l, int64_t r, int64_t s, uint64_t lhs,
                   uint64_t rhs, const char* what) {
  rep.pass = false;
  if (rep.violations.size() < rep.cap)
    rep.violations.push_back({l, r, s, lhs, rhs, what});
}

}  // namespace

ConditionReport check_basic(const DesignParams& p, const TDMatrices& td, size_t cap) {
  ConditionReport rep;
  rep.system = ConditionSystem::basic;
  rep.cap = cap;
  uint64_t k1 = gaussian_binomial_u64(p.k, 1, p.q);
  uint64_t lambda1 = lambda_s(p, 1).as_u64();

  for (size_t j = 0; j < td.n; ++j) {
    uint64_t col = 0;
    for (size_t i = 0; i < td.m; ++i) col = checked_add(col, td.kappa_at(i, j));
    rep.checked++;
    if (col != k1) add_violation(rep, -1, int64_t(j), -1, col, k1, "kappa column sum != [k 1]_q");
  }
  for (size_t i = 0; i < td.m; ++i) {
    uint64_t row = 0;
    for (size_t j = 0; j < td.n; ++j) row = checked_add(row, td.rho_at(i, j));
    rep.checked++;
    if (row != lambda1) add_violation(rep, int64_t(i), -1, -1, row, lambda1,
                                      "rho row sum != lambda_1");
  }
  for (size_t i = 0; i < td.m; ++i)
    for (size_t j = 0; j < td.n; ++j) {
      rep.checked++;
      uint64_t lhs = checked_mul(td.point_sizes[i], td.rho_at(i, j));
      uint64_t rhs = checked_mul(td.block_sizes[j], td.kappa_at(i, j));
      if (lhs != rhs)
        add_violation(rep, int64_t(i), int64_t(j), -1, lhs, rhs,
                      "|V_i| rho_ij != |B_j| kappa_ij");
    }
  return rep;
}

ConditionReport check_quadratic(const DesignParams& p, const TDMatrices& td, size_t cap) {
  if (p.t < 2) fail(Errc::invalid_arguments, "quadratic system needs t >= 2");
  ConditionReport rep;
  rep.system = ConditionSystem::quadratic;
  rep.cap = cap;
  uint64_t lambda1 = lambda_s(p, 1).as_u64();
  uint64_t lambda2 = lambda_s(p, 2).as_u64();

  for (size_t l = 0; l < td.m; ++l)
    for (size_t r = 0; r < td.m; ++r) {
      uint64_t lhs = 0;
      for (size_t j = 0; j < td.n; ++j)
        lhs = checked_add(lhs, checked_mul(td.rho_at(l, j), td.kappa_at(r, j)));
      uint64_t rhs = l == r
                         ? checked_add(lambda1, checked_mul(lambda2, td.point_sizes[r] - 1))
                         : checked_mul(lambda2, td.point_sizes[r]);
      rep.checked++;
      if (lhs != rhs)
        add_violation(rep, int64_t(l), int64_t(r), -1, lhs, rhs, "quadratic equation");
    }
  return rep;
}

ConditionReport check_cubic(const DesignParams& p, const TDMatrices& td, const LambdaTensor& T,
                            size_t cap) {
  if (p.t != 3) fail(Errc::invalid_arguments, "cubic system needs t = 3");
  if (T.m != td.m) fail(Errc::tensor_shape_mismatch, "tensor does not match the decomposition");
  ConditionReport rep;
  rep.system = ConditionSystem::cubic;
  rep.cap = cap;
  uint64_t lambda1 = lambda_s(p, 1).as_u64();
  uint64_t lambda2 = lambda_s(p, 2).as_u64();
  uint64_t lambda3 = lambda_s(p, 3).as_u64();

  // Group the kappa-products by line of nonzero support: sum over j of
  // rho_lj kappa_rj kappa_sj, evaluated via the nonzero entries per column.
  std::vector<std::vector<std::pair<uint32_t, uint64_t>>> col_nz(td.n);
  for (size_t j = 0; j < td.n; ++j)
    for (size_t i = 0; i < td.m; ++i)
      if (td.kappa_at(i, j) != 0) col_nz[j].emplace_back(uint32_t(i), td.kappa_at(i, j));

  std::vector<uint64_t> lhs(td.m * td.m * td.m, 0);
  auto lhs_at = [&](size_t l, size_t r, size_t s) -> uint64_t& {
    return lhs[(l * td.m + r) * td.m + s];
  };
  for (size_t j = 0; j < td.n; ++j)
    for (size_t l = 0; l < td.m; ++l) {
      uint64_t rho = td.rho_at(l, j);
      if (rho == 0) continue;
      for (auto [r, kr] : col_nz[j]) {
        uint64_t rk = checked_mul(rho, kr);
        for (auto [s, ks] : col_nz[j])
          lhs_at(l, r, s) = checked_add(lhs_at(l, r, s), checked_mul(rk, ks));
      }
    }

  for (size_t l = 0; l < td.m; ++l)
    for (size_t r = 0; r < td.m; ++r)
      for (size_t s = 0; s < td.m; ++s) {
        uint64_t L = T.at(l, r, s);
        uint64_t rhs;
        if (l == r && r == s) {
          uint64_t sz2 = checked_mul(td.point_sizes[l], td.point_sizes[l]);
          if (sz2 < L + 1) fail(Errc::tensor_shape_mismatch, "Lambda_lll exceeds |V_l|^2 - 1");
          rhs = checked_add(lambda1,
                            checked_add(checked_mul(L, lambda2),
                                        checked_mul(sz2 - L - 1, lambda3)));
        } else {
          uint64_t prod = checked_mul(td.point_sizes[r], td.point_sizes[s]);
          if (prod < L) fail(Errc::tensor_shape_mismatch, "Lambda_lrs exceeds |V_r||V_s|");
          rhs = checked_add(checked_mul(L, lambda2), checked_mul(prod - L, lambda3));
        }
        rep.checked++;
        if (lhs_at(l, r, s) != rhs)
          add_violation(rep, int64_t(l), int64_t(r), int64_t(s), lhs_at(l, r, s), rhs,
                        "cubic equation");
      }
  return rep;
}

}  // namespace qtac
