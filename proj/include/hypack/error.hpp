#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypack {

/// Failure categories raised by the library. Callers that sweep over
/// parameters switch on these to decide whether to skip a point or abort.
enum class ErrorKind {
  NonFinite,
  ZeroVector,
  WrongClassification,
  InconsistentInput,
  IntersectingPlanes,
  ParallelPlanes,
  Degenerate,
  NonHyperbolic,
  InvalidRadicand,
  OutOfRange,
  VariantMismatch,
  VariantAbsent,
  OutOfInterval,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonFinite: return "non-finite input";
    case ErrorKind::ZeroVector: return "zero vector";
    case ErrorKind::WrongClassification: return "wrong point classification";
    case ErrorKind::InconsistentInput: return "inconsistent input";
    case ErrorKind::IntersectingPlanes: return "intersecting planes";
    case ErrorKind::ParallelPlanes: return "parallel planes";
    case ErrorKind::Degenerate: return "degenerate result";
    case ErrorKind::NonHyperbolic: return "non-hyperbolic signature";
    case ErrorKind::InvalidRadicand: return "invalid radicand";
    case ErrorKind::OutOfRange: return "parameter out of range";
    case ErrorKind::VariantMismatch: return "variant not defined for family";
    case ErrorKind::VariantAbsent: return "variant absent";
    case ErrorKind::OutOfInterval: return "x outside admissible interval";
  }
  return "unknown";
}

class Error : public std::domain_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hypack
