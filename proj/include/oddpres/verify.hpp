#pragma once

// Named verification suites and their machine-readable reports.
//
// Report schema:
//   { "version": "...", "suite": "<name>", "checks": [
//       { "check_id": str, "n": int|null, "status": "pass"|"fail"|"skipped"|"error",
//         "expected": any, "actual": any, "runtime_ms": int, "details": str }, ... ] }
//
// Check order is fixed, so reports are byte-identical across runs once
// runtime_ms is stripped.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace oddpres::verify {

inline constexpr const char* kReportVersion = "1";

enum class Suite { lattice, diagrams, presentation, enumeration, tessellation, e6, eisenstein, all };
enum class CheckStatus { pass, fail, skipped, error };

std::string to_string(Suite s);
std::string to_string(CheckStatus s);
/// std::invalid_argument for an unknown name.
Suite parse_suite(const std::string& name);
const std::vector<std::string>& suite_names();

struct CheckReport {
  std::string check_id;
  std::optional<int> n;
  CheckStatus status = CheckStatus::error;
  nlohmann::json expected;
  nlohmann::json actual;
  std::int64_t runtime_ms = 0;
  std::string details;
};

struct SuiteOptions {
  std::optional<int> n;           // restrict dimension-dependent checks
  int max_n = 6;                  // upper end of the congruence kernel range, at most 7
  std::size_t budget = 200'000;   // coset budget for enumerations
  std::uint64_t seed = 0;         // random lattice vectors for braid identity trials
};

/// std::invalid_argument for --n outside {2,3,4} or --max-n outside 2..7.
void validate(const SuiteOptions& options);

std::vector<CheckReport> run_suite(Suite suite, const SuiteOptions& options);

nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(Suite suite, const std::vector<CheckReport>& reports);

/// 0 if every non-skipped check passed, 1 otherwise.
int exit_code(const std::vector<CheckReport>& reports);

struct DotFile {
  std::string name;  // "<suite>_<n>.dot"
  std::string contents;
};

/// Tile graphs (tessellation) and Coxeter diagrams (diagrams); other suites
/// have no graph output.
std::vector<DotFile> dot_exports(Suite suite, const SuiteOptions& options);

}  // namespace oddpres::verify
