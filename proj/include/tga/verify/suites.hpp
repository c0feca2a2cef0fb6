#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tga::verify {

enum class Suite { kAlgebra, kConformal, kSpinorRep, kTwistor, kGeometry, kAll };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);
/// Every concrete suite, in run order.
const std::vector<Suite>& all_suites();

struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  double measured = 0.0;   ///< worst residual (or the checked quantity)
  double tolerance = 0.0;  ///< upper bound on measured, or lower bound when `lower_bound`
  bool lower_bound = false;
  int samples = 0;
  int criterion = 0;       ///< acceptance item covered, 0 for supporting checks
};

struct Report {
  std::uint64_t seed = 0;
  std::string suite;
  double tolerance = 0.0;  ///< default comparison tolerance in effect
  std::vector<Check> checks;

  bool passed() const;
  int failures() const;
};

/// Runs one suite (or all of them). Each suite draws from its own generator
/// seeded from `seed` and the suite, so a suite gives the same results alone
/// and inside `all`.
Report run(Suite suite, std::uint64_t seed);

/// Deterministic JSON rendering of a report (no timing data).
std::string to_json(const Report& report);

}  // namespace tga::verify
