#include "qtac/design.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "qtac/util.hpp"

namespace qtac {

uint64_t LambdaValue::as_u64() const {
  if (!integral)
    fail(Errc::lambda_not_integer, "lambda value " + value.str() + " is not an integer");
  BigInt n = boost::multiprecision::numerator(value);
  if (n < 0 || n > std::numeric_limits<uint64_t>::max())
    fail(Errc::overflow, "lambda value does not fit in 64 bits");
  return n.convert_to<uint64_t>();
}

LambdaValue lambda_s(const DesignParams& p, unsigned s) {
  p.validate();
  if (s > p.t) fail(Errc::invalid_arguments, "need s <= t");
  LambdaValue out;
  out.value = BigRational(BigInt(p.lambda) * gaussian_binomial(p.v - s, p.t - s, p.q),
                          gaussian_binomial(p.k - s, p.t - s, p.q));
  out.integral = boost::multiprecision::denominator(out.value) == 1;
  return out;
}

QDesign::QDesign(DesignParams params, std::vector<Subspace> blocks)
    : params_(std::move(params)), blocks_(std::move(blocks)) {
  params_.validate();
  for (const auto& b : blocks_) {
    if (b.ambient() != params_.v) fail(Errc::ambient_mismatch, "block ambient differs from v");
    if (b.dim() != params_.k) fail(Errc::invalid_arguments, "block dimension differs from k");
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (const auto& b : blocks_) {
    if (!distinct_.empty() && distinct_.back() == b) {
      ++mult_.back();
    } else {
      distinct_.push_back(b);
      mult_.push_back(1);
    }
  }
}

std::vector<Subspace> blocks_through(const Field& F, const QDesign& d, const Subspace& S) {
  if (S.ambient() != d.params().v) fail(Errc::ambient_mismatch, "subspace ambient differs");
  std::vector<Subspace> out;
  for (const auto& b : d.blocks())
    if (contains(F, b, S)) out.push_back(b);
  return out;
}

VerifyReport verify_design(const Field& F, const QDesign& d) {
  const auto& p = d.params();
  VerifyReport rep;
  rep.expected = p.lambda;

  // Count t-subspaces through the blocks rather than testing containment
  // pairwise: every block contributes its [k t]_q t-subspaces.
  std::map<Subspace, uint64_t> counts;
  const auto local = all_subspaces(F, p.k, p.t);
  for (size_t bi = 0; bi < d.distinct_blocks().size(); ++bi) {
    const Subspace& b = d.distinct_blocks()[bi];
    uint64_t mult = d.multiplicities()[bi];
    for (const Subspace& lt : local) {
      Subspace t_sub = Subspace::row_space(F, mul(F, lt.basis(), b.basis()));
      counts[t_sub] += mult;
    }
  }

  for (const Subspace& t_sub : all_subspaces(F, p.v, p.t)) {
    auto it = counts.find(t_sub);
    uint64_t c = it == counts.end() ? 0 : it->second;
    if (c != p.lambda) {
      rep.ok = false;
      rep.witness = t_sub;
      rep.witness_count = c;
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

QDesign trivial_design(const Field& F, unsigned v, unsigned k, unsigned t) {
  DesignParams p;
  p.t = t;
  p.v = v;
  p.k = k;
  p.q = F.q();
  p.lambda = gaussian_binomial_u64(v - t, k - t, F.q());
  return QDesign(p, all_subspaces(F, v, k));
}

}  // namespace qtac
