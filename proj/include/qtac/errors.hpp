#pragma once

#include <stdexcept>
#include <string>

namespace qtac {

enum class Errc {
  not_a_prime_power,
  field_too_large,
  ambient_mismatch,
  invalid_arguments,
  bound_exceeded,
  not_an_automorphism_group,
  not_tactical,
  not_p_independent,
  lambda_not_integer,
  tensor_shape_mismatch,
  group_not_prime_order,
  class_not_singleton,
  problem_too_large,
  overflow,
  parse_error,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace qtac
