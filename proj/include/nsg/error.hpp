#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsg {

enum class ErrorKind {
  invalid_modulus,
  coprimality,
  domain,
  empty_generators,
  invalid_generator,
  not_numerical_monoid,
  infinite_complement,
  overflow,
  arity,
  unknown_suite,
};

std::string_view to_string(ErrorKind kind);

/// Every validation failure in the library surfaces as this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nsg
