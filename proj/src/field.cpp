#include "qtac/field.hpp"

#include <array>
#include <string>

namespace qtac {
namespace {

// Conway polynomials for every prime power 4 <= p^e <= 64, e > 1.
// Coefficients are listed low degree first; the leading 1 is implied.
struct ModulusEntry {
  unsigned p, e;
  std::array<uint8_t, 6> low;  // c0..c_{e-1}
};

constexpr ModulusEntry kModuli[] = {
    {2, 2, {1, 1}},              // x^2 + x + 1
    {2, 3, {1, 1, 0}},           // x^3 + x + 1
    {2, 4, {1, 1, 0, 0}},        // x^4 + x + 1
    {2, 5, {1, 0, 1, 0, 0}},     // x^5 + x^2 + 1
    {2, 6, {1, 1, 0, 1, 1, 0}},  // x^6 + x^4 + x^3 + x + 1
    {3, 2, {2, 2}},              // x^2 + 2x + 2
    {3, 3, {1, 2, 0}},           // x^3 + 2x + 1
    {5, 2, {2, 4}},              // x^2 + 4x + 2
    {7, 2, {3, 6}},              // x^2 + 6x + 3
};

std::vector<uint8_t> to_digits(unsigned x, unsigned p, unsigned e) {
  std::vector<uint8_t> d(e, 0);
  for (unsigned i = 0; i < e; ++i) {
    d[i] = static_cast<uint8_t>(x % p);
    x /= p;
  }
  return d;
}

unsigned from_digits(const std::vector<uint8_t>& d, unsigned p) {
  unsigned x = 0;
  for (size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

}  // namespace

Field::Field(unsigned q) : q_(q) {
  if (q < 2) fail(Errc::not_a_prime_power, "q must be at least 2, got " + std::to_string(q));
  if (q > max_order)
    fail(Errc::field_too_large, "q = " + std::to_string(q) + " exceeds the table bound " +
                                    std::to_string(max_order));
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0, m = q;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) fail(Errc::not_a_prime_power, std::to_string(q) + " is not a prime power");
  p_ = p;
  e_ = e;

  add_.resize(size_t(q) * q);
  mul_.resize(size_t(q) * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  frob_.resize(q);

  if (e_ == 1) {
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        add_[idx(a, b)] = static_cast<uint8_t>((a + b) % p);
        mul_[idx(a, b)] = static_cast<uint8_t>((a * b) % p);
      }
  } else {
    const ModulusEntry* entry = nullptr;
    for (const auto& me : kModuli)
      if (me.p == p_ && me.e == e_) entry = &me;
    if (entry == nullptr) fail(Errc::internal, "no modulus polynomial for this (p, e)");
    modulus_.assign(entry->low.begin(), entry->low.begin() + e_);

    for (unsigned a = 0; a < q; ++a) {
      auto da = to_digits(a, p, e_);
      for (unsigned b = 0; b < q; ++b) {
        auto db = to_digits(b, p, e_);
        std::vector<uint8_t> sum(e_);
        for (unsigned i = 0; i < e_; ++i) sum[i] = static_cast<uint8_t>((da[i] + db[i]) % p);
        add_[idx(a, b)] = static_cast<uint8_t>(from_digits(sum, p));

        // Polynomial product, then division by the monic modulus.
        std::vector<unsigned> prod(2 * e_ - 1, 0);
        for (unsigned i = 0; i < e_; ++i)
          for (unsigned j = 0; j < e_; ++j) prod[i + j] += unsigned(da[i]) * db[j];
        for (auto& c : prod) c %= p;
        for (size_t d = prod.size(); d-- > e_;) {
          unsigned c = prod[d];
          if (c == 0) continue;
          prod[d] = 0;
          for (unsigned i = 0; i < e_; ++i)
            prod[d - e_ + i] = (prod[d - e_ + i] + c * (p - modulus_[i])) % p;
        }
        std::vector<uint8_t> red(prod.begin(), prod.begin() + e_);
        mul_[idx(a, b)] = static_cast<uint8_t>(from_digits(red, p));
      }
    }
  }

  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      if (add_[idx(a, b)] == 0) neg_[a] = static_cast<uint8_t>(b);
      if (a != 0 && mul_[idx(a, b)] == 1) inv_[a] = static_cast<uint8_t>(b);
    }
  }
  for (unsigned a = 0; a < q; ++a) frob_[a] = pow(static_cast<uint8_t>(a), p_);

  validate();
}

uint8_t Field::pow(uint8_t a, uint64_t n) const {
  uint8_t r = 1, base = a;
  while (n > 0) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

uint8_t Field::frobenius_pow(uint8_t a, unsigned f) const {
  for (unsigned i = 0; i < f % e_; ++i) a = frob_[a];
  return a;
}

// Exhaustive check of the field axioms. Cheap for q <= 64 and turns any
// mistake in the modulus or the table generation into a construction failure.
void Field::validate() const {
  auto check = [](bool ok, const char* what) {
    if (!ok) fail(Errc::internal, std::string("field table validation failed: ") + what);
  };
  unsigned q = q_;
  for (unsigned a = 0; a < q; ++a) {
    check(add_[idx(a, 0)] == a, "additive identity");
    check(mul_[idx(a, 1)] == a, "multiplicative identity");
    check(mul_[idx(a, 0)] == 0, "zero annihilates");
    check(add_[idx(a, neg_[a])] == 0, "additive inverse");
    if (a != 0) check(mul_[idx(a, inv_[a])] == 1, "multiplicative inverse");
  }
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b) {
      check(add_[idx(a, b)] == add_[idx(b, a)], "commutative addition");
      check(mul_[idx(a, b)] == mul_[idx(b, a)], "commutative multiplication");
    }
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      for (unsigned c = 0; c < q; ++c) {
        check(add_[idx(add_[idx(a, b)], c)] == add_[idx(a, add_[idx(b, c)])],
              "associative addition");
        check(mul_[idx(mul_[idx(a, b)], c)] == mul_[idx(a, mul_[idx(b, c)])],
              "associative multiplication");
        check(mul_[idx(a, add_[idx(b, c)])] == add_[idx(mul_[idx(a, b)], mul_[idx(a, c)])],
              "distributivity");
      }
}

}  // namespace qtac
