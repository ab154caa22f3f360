#pragma once

#include <stdexcept>
#include <string>

namespace grw {

enum class errc {
  not_prime,
  degree_zero,
  size_bound,
  zero_inverse,
  ctx_mismatch,
  not_coprime,
  bad_modulus,
  range_error,
  not_normal,
  not_subgroup,
  group_mismatch,
  even_characteristic,
  small_characteristic,
  unsupported_case,
  not_closed,
  invalid_argument,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace grw
