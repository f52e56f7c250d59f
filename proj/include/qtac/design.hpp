#pragma once

#include <optional>
#include <vector>

#include "qtac/action.hpp"
#include "qtac/subspace.hpp"

namespace qtac {

struct DesignParams {
  unsigned t = 0, v = 0, k = 0, q = 0;
  uint64_t lambda = 0;  // lambda_t

  void validate() const {
    if (!(v > k && k > 1)) fail(Errc::invalid_arguments, "need v > k > 1");
    if (!(k >= t && t >= 1)) fail(Errc::invalid_arguments, "need k >= t >= 1");
    if (lambda < 1) fail(Errc::invalid_arguments, "need lambda >= 1");
  }
};

struct LambdaValue {
  BigRational value;
  bool integral = false;
  uint64_t as_u64() const;  // throws LambdaNotInteger / Overflow
};

// lambda_s = lambda_t * [v-s, t-s]_q / [k-s, t-s]_q for 0 <= s <= t.
// Integrality of every lambda_s is a classical necessary condition.
LambdaValue lambda_s(const DesignParams& p, unsigned s);

// Blocks are a multiset of k-subspaces, stored sorted.
class QDesign {
 public:
  QDesign(DesignParams params, std::vector<Subspace> blocks);

  const DesignParams& params() const { return params_; }
  const std::vector<Subspace>& blocks() const { return blocks_; }
  size_t block_count() const { return blocks_.size(); }

  // Distinct blocks (sorted) and their multiplicities.
  const std::vector<Subspace>& distinct_blocks() const { return distinct_; }
  const std::vector<uint64_t>& multiplicities() const { return mult_; }

 private:
  DesignParams params_;
  std::vector<Subspace> blocks_;
  std::vector<Subspace> distinct_;
  std::vector<uint64_t> mult_;
};

// All blocks containing S, with multiplicity.
std::vector<Subspace> blocks_through(const Field& F, const QDesign& d, const Subspace& S);

struct VerifyReport {
  bool ok = false;
  uint64_t expected = 0;                // lambda_t
  std::optional<Subspace> witness;      // a t-subspace with the wrong count
  uint64_t witness_count = 0;
};

// Exhaustive check that every t-subspace lies in exactly lambda_t blocks.
VerifyReport verify_design(const Field& F, const QDesign& d);

// The design of all k-subspaces; lambda_t = [v-t, k-t]_q.
QDesign trivial_design(const Field& F, unsigned v, unsigned k, unsigned t);

}  // namespace qtac
