#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "qtac/errors.hpp"

namespace qtac {

inline uint64_t checked_add(uint64_t a, uint64_t b) {
  uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::overflow, "u64 addition overflow");
  return r;
}

inline uint64_t checked_mul(uint64_t a, uint64_t b) {
  uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::overflow, "u64 multiplication overflow");
  return r;
}

// FNV-1a, used for input-file fingerprints in reports.
uint64_t fnv1a64(const void* data, size_t n);
std::string fnv1a64_hex(const std::string& bytes);

// Static block partition over [0, n); fn may run on up to `threads` workers.
// Callers write to disjoint slots, so results do not depend on the schedule.
void parallel_for(size_t n, unsigned threads, const std::function<void(size_t)>& fn);

}  // namespace qtac
