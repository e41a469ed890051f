#pragma once

#include "halfspin/rationality.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace halfspin {

// One batch-verification scenario: the tower, the form parameters, the
// requested suites, and the deterministic trial configuration.
struct ScenarioConfig {
  std::optional<Rational> m1;
  std::array<Rational, 2> m2{Rational(0), Rational(0)};     // E0 coordinates
  int n = 0;
  int k = 0;
  std::array<Rational, 2> delta{Rational(0), Rational(0)};  // E0 coordinates
  std::optional<std::pair<int, int>> permutation;           // (a, r)
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  int trials = 100;

  bool operator==(const ScenarioConfig&) const = default;
};

// A config problem; `field` names the offending entry.
struct ConfigError : std::runtime_error {
  explicit ConfigError(std::string field_name, const std::string& message)
      : std::runtime_error(message), field(std::move(field_name)) {}
  std::string field;
};

enum class SuiteStatus { Pass, Fail, Unknown };

struct SuiteReport {
  std::string suite;
  SuiteStatus status = SuiteStatus::Pass;
  long checks_run = 0;
  std::optional<std::map<std::string, std::string>> counterexample;
  long elapsed_ms = 0;

  bool operator==(const SuiteReport&) const = default;
};

/// The suite names accepted in configs, without "all"; sorted.
const std::vector<std::string>& known_suites();

/// Expands "all" and sorts/dedupes; throws ConfigError on unknown names.
std::vector<std::string> expand_suites(const std::vector<std::string>& requested);

/// Throws ConfigError when any parameter violates its preconditions.
void validate_config(const ScenarioConfig& cfg);

/// Runs the requested suites; reports are ordered by suite name. The optional
/// filter keeps only the listed suites (applied after expansion).
std::vector<SuiteReport> run_suites(const ScenarioConfig& cfg,
                                    const std::vector<std::string>& filter = {});

/// 0 all pass, 1 any fail, 2 pass with unknowns.
int exit_code_for(const std::vector<SuiteReport>& reports);

}  // namespace halfspin
