#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace akl {

enum class ErrorKind {
  ShapeMismatch,
  IndexOutOfRange,
  InvalidOrder,
  NearSingular,
  BranchCut,
  SingularMatrix,
  NotPositiveDefinite,
  NoConvergence,
  NotProjector,
  RankMismatch,
  DomainViolation,
  NotType10,
  ConstructionFailed,
  UnknownChart,
  MalformedDescriptor,
  ValidationFailed,
  UnknownSuite,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Raised when a frame construction cannot meet its defining conditions.
/// Carries the named residuals that were left over.
class ConstructionFailed : public Error {
public:
  ConstructionFailed(const std::string& what,
                     std::vector<std::pair<std::string, double>> residuals)
      : Error(ErrorKind::ConstructionFailed, what), residuals_(std::move(residuals)) {}

  const std::vector<std::pair<std::string, double>>& residuals() const noexcept {
    return residuals_;
  }

private:
  std::vector<std::pair<std::string, double>> residuals_;
};

} // namespace akl
