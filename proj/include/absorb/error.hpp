#ifndef ABSORB_ERROR_HPP_
#define ABSORB_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace absorb {

enum class ErrorKind {
  InvalidOrder,
  InvalidSpec,
  InvalidQuotient,
  ZeroRing,
  WrongRing,
  AxiomViolation,
  TooLarge,
  InvalidExponent,
  InvalidInput,
  PreconditionViolated,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this type; the kind is what
// callers (and the cli exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace absorb

#endif  // ABSORB_ERROR_HPP_
