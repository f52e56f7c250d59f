#pragma once

#include <cstdint>
#include <vector>

#include "qtac/errors.hpp"

namespace qtac {

// Arithmetic in GF(q) for prime powers q = p^e up to 64, via full lookup
// tables validated exhaustively at construction.
//
// Elements are identified with their index in [0, q). Index 0 is the zero,
// index 1 the one. For e > 1 the element with base-p digits (c0, .., c_{e-1})
// has index sum c_i * p^i, so index p is the root x of the modulus polynomial.
// Extension fields are built on the Conway polynomial for (p, e), which fixes
// the indexing across runs and makes serialized element indices stable.
class Field {
 public:
  static constexpr unsigned max_order = 64;

  // build_field: throws NotAPrimePower / FieldTooLarge.
  explicit Field(unsigned q);

  unsigned q() const { return q_; }
  unsigned p() const { return p_; }
  unsigned e() const { return e_; }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[idx(a, b)]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[idx(a, neg_[b])]; }

  // Multiplicative inverse; a must be nonzero.
  uint8_t inv(uint8_t a) const {
    if (a == 0) fail(Errc::invalid_arguments, "inverse of zero");
    return inv_[a];
  }

  uint8_t pow(uint8_t a, uint64_t n) const;

  // x -> x^p. Applying it e times is the identity.
  uint8_t frobenius(uint8_t a) const { return frob_[a]; }
  // x -> x^(p^f)
  uint8_t frobenius_pow(uint8_t a, unsigned f) const;

  // Modulus polynomial coefficients c0..ce (monic), empty for prime fields.
  const std::vector<uint8_t>& modulus() const { return modulus_; }

 private:
  size_t idx(uint8_t a, uint8_t b) const { return size_t(a) * q_ + b; }
  void validate() const;

  unsigned q_ = 0, p_ = 0, e_ = 0;
  std::vector<uint8_t> add_, mul_;        // q*q
  std::vector<uint8_t> neg_, inv_, frob_; // q (inv_[0] unused)
  std::vector<uint8_t> modulus_;
};

}  // namespace qtac
