#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qdisc/analytic.hpp"

namespace qdisc {

enum class GridResolution { kCoarse, kFine };

std::string_view to_string(GridResolution grid);
GridResolution parse_grid_resolution(std::string_view name);

struct VerifyOptions {
  GridResolution grid = GridResolution::kCoarse;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  /// The closed-form expression under test. Replaceable so that a perturbed
  /// formula can be shown to fail verification.
  std::function<double(const ScenarioParams&)> closed_form = closed_form_discord;
};

/// One checked property. `observed` is compared against `bound` with
/// `relation` ("<=", ">", ...).
struct SuiteResult {
  std::string name;
  bool passed = false;
  double observed = 0.0;
  std::string relation = "<=";
  double bound = 0.0;
  std::string note;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  std::vector<std::string> findings;  // expected discrepancies, reported only

  bool all_passed() const;
};

/// Points per axis of the closed-form agreement grid: 21 coarse, 51 fine.
std::size_t agreement_grid_steps(GridResolution grid);

VerifyReport run_verification(const VerifyOptions& options);

void print_report(const VerifyReport& report, const VerifyOptions& options, std::ostream& out);

}  // namespace qdisc
