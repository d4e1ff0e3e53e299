#pragma once

#include <stdexcept>
#include <string>

namespace coulomb {

enum class ErrorKind {
  DegenerateOrder,
  NonConvergence,
  GammaOverflow,
  NoRootInScanRange,
  NonMonotoneBracket,
  BoundsInvalid,
  DegenerateFit,
  GateViolation,
  PoleOnCircle,
  ZeroEnumerationIncomplete,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace coulomb
