#ifndef HOMSUB_ERROR_HPP
#define HOMSUB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace homsub {

enum class ErrorKind {
  NotClosed,          // commutator leaves the candidate span
  Degenerate,         // trace form not positive-definite (non-compact input)
  DimensionMismatch,
  NotInP,             // vector has a k-component above tolerance
  NotHorizontal,
  NotVertical,
  StepTooSmall,       // finite-difference step below the admissible floor
  ZeroVector,
  InvalidP,           // vertical tensor fails the adapted-metric invariants
  InvalidFlatPair,    // A*_x(xi) is not numerically zero
  InvalidChain,       // k/h spans do not form a subalgebra chain
  ConfigError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInP: return "NotInP";
    case ErrorKind::NotHorizontal: return "NotHorizontal";
    case ErrorKind::NotVertical: return "NotVertical";
    case ErrorKind::StepTooSmall: return "StepTooSmall";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::InvalidP: return "InvalidP";
    case ErrorKind::InvalidFlatPair: return "InvalidFlatPair";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

}  // namespace homsub

#endif  // HOMSUB_ERROR_HPP
