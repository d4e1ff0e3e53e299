#include "coulomb/error.hpp"

namespace coulomb {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateOrder: return "DegenerateOrder";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::GammaOverflow: return "GammaOverflow";
    case ErrorKind::NoRootInScanRange: return "NoRootInScanRange";
    case ErrorKind::NonMonotoneBracket: return "NonMonotoneBracket";
    case ErrorKind::BoundsInvalid: return "BoundsInvalid";
    case ErrorKind::DegenerateFit: return "DegenerateFit";
    case ErrorKind::GateViolation: return "GateViolation";
    case ErrorKind::PoleOnCircle: return "PoleOnCircle";
    case ErrorKind::ZeroEnumerationIncomplete: return "ZeroEnumerationIncomplete";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace coulomb
