#pragma once

#include "akl/geometry.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace akl {

enum class Suite { Structure, Identities, Frames, Integrability };
enum class CheckStatus { Pass, Fail, NegativeControlPass };

std::string_view to_string(Suite suite) noexcept;
std::string_view to_string(CheckStatus status) noexcept;
/// Throws UnknownSuite.
Suite suite_from_string(std::string_view name);
const std::vector<Suite>& all_suites();

inline constexpr std::string_view kReportVersion = "1.0.0";

/// PASS when max_residual < tolerance for checks expecting zero;
/// NEGATIVE_CONTROL_PASS when max_residual > 10 * tolerance for checks
/// expecting a nonzero value; FAIL otherwise.
struct CheckResult {
  std::string check_id;
  std::size_t points_sampled = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::Fail;
  std::string notes;
};

struct CheckReport {
  std::string chart;
  Suite suite = Suite::Structure;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::size_t npoints = 0;
  std::vector<CheckResult> checks;
  std::string version{kReportVersion};
  std::string timestamp;

  bool all_passed() const noexcept;
  const CheckResult& find(std::string_view check_id) const;
};

/// Evaluates every check of the suite at `npoints` quasi-random points of
/// the chart. Deterministic for fixed inputs apart from the timestamp.
/// Errors raised while evaluating a point are recorded as FAIL entries.
CheckReport run_suite(const ChartedStructure& chart, Suite suite, std::size_t npoints,
                      std::uint64_t seed, double tol);

/// JSON object with sorted keys; full double precision.
std::string to_json(const CheckReport& report);
std::string to_json(const std::vector<CheckReport>& reports);
/// Human-readable table with residuals at 6 significant digits.
std::string to_text(const CheckReport& report);

} // namespace akl
