#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grcodes {

enum class Errc {
  InvalidArgument,
  NonPrimitiveInput,
  NotAUnit,
  InvalidTower,
  IncompatibleTower,
  OrderMismatch,
  NotRational,
  NonIntegralCount,
  NegativeCount,
  CountOutOfRange,
  InvalidSubgroup,
  ScaleGuard,
  PreconditionViolated,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace grcodes
