#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

// Command-line surface of twistor-ga: verification suites, congruence scenes
// and null-ray data, written as CSV or JSON geometry records.

namespace tga::cli {

/// One polyline or point set of emitted geometry.
struct GeometryRecord {
  std::string kind;  ///< tangent | circle | dline | ray
  int id = 0;
  std::vector<std::array<double, 3>> points;
  std::vector<double> params;  ///< theta, sample index or ray parameter per point
  std::map<std::string, double> meta;

  /// Throws std::invalid_argument for an unknown kind, no points, a params
  /// size mismatch or non-finite values.
  void validate() const;
  bool operator==(const GeometryRecord&) const = default;
};

struct CheckOutcome {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
};

/// Provenance of one run. Wall time is only rendered on request so that
/// repeated runs produce identical files.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> config;
  std::uint64_t seed = 0;
  std::map<std::string, double> tolerances;
  std::vector<CheckOutcome> checks;
  double wall_time_s = 0.0;

  bool passed() const;
};

/// Header `kind,id,theta_or_index,x,y,z`, one row per point.
std::string records_to_csv(const std::vector<GeometryRecord>& records);
std::string manifest_to_json(const RunManifest& manifest, bool include_timing);
/// {"manifest": ..., "records": [...]}.
std::string records_to_json(const std::vector<GeometryRecord>& records,
                            const RunManifest& manifest, bool include_timing);
/// Parses the "records" array of records_to_json output; validates each record.
std::vector<GeometryRecord> records_from_json(const std::string& text);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

/// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tga::cli
