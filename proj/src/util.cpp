#include "qtac/util.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qtac {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_a_prime_power: return "NotAPrimePower";
    case Errc::field_too_large: return "FieldTooLarge";
    case Errc::ambient_mismatch: return "AmbientMismatch";
    case Errc::invalid_arguments: return "InvalidArguments";
    case Errc::bound_exceeded: return "BoundExceeded";
    case Errc::not_an_automorphism_group: return "NotAnAutomorphismGroup";
    case Errc::not_tactical: return "NotTactical";
    case Errc::not_p_independent: return "NotPIndependent";
    case Errc::lambda_not_integer: return "LambdaNotInteger";
    case Errc::tensor_shape_mismatch: return "TensorShapeMismatch";
    case Errc::group_not_prime_order: return "GroupNotPrimeOrder";
    case Errc::class_not_singleton: return "ClassNotSingleton";
    case Errc::problem_too_large: return "ProblemTooLarge";
    case Errc::overflow: return "Overflow";
    case Errc::parse_error: return "ParseError";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

uint64_t fnv1a64(const void* data, size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  uint64_t h = 0xcbf29ce484222325ull;
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
  uint64_t h = fnv1a64(bytes.data(), bytes.size());
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void parallel_for(size_t n, unsigned threads, const std::function<void(size_t)>& fn) {
  if (n == 0) return;
  if (threads <= 1 || n == 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  unsigned workers = static_cast<unsigned>(std::min<size_t>(threads, n));
  std::vector<std::thread> pool;
  std::exception_ptr first_error = nullptr;
  std::atomic<bool> failed{false};
  std::mutex err_mutex;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      size_t lo = n * w / workers, hi = n * (w + 1) / workers;
      try {
        for (size_t i = lo; i < hi; ++i) {
          if (failed.load(std::memory_order_relaxed)) return;
          fn(i);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace qtac
