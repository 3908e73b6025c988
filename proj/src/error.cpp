#include "akl/error.hpp"

namespace akl {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::ShapeMismatch: return "ShapeMismatch";
  case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorKind::InvalidOrder: return "InvalidOrder";
  case ErrorKind::NearSingular: return "NearSingular";
  case ErrorKind::BranchCut: return "BranchCut";
  case ErrorKind::SingularMatrix: return "SingularMatrix";
  case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
  case ErrorKind::NoConvergence: return "NoConvergence";
  case ErrorKind::NotProjector: return "NotProjector";
  case ErrorKind::RankMismatch: return "RankMismatch";
  case ErrorKind::DomainViolation: return "DomainViolation";
  case ErrorKind::NotType10: return "NotType10";
  case ErrorKind::ConstructionFailed: return "ConstructionFailed";
  case ErrorKind::UnknownChart: return "UnknownChart";
  case ErrorKind::MalformedDescriptor: return "MalformedDescriptor";
  case ErrorKind::ValidationFailed: return "ValidationFailed";
  case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

} // namespace akl
