#ifndef WITTMOD_VERIFY_HPP
#define WITTMOD_VERIFY_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wittmod {

struct CheckRecord {
  std::string suite;
  std::string check;
  std::vector<std::pair<std::string, std::string>> inputs;
  bool passed = false;
  /// Counterexample or supporting data; empty when there is nothing to show.
  std::string witness;
  double wall_time_ms = 0.0;
};

struct Report {
  /// JSON text echoing the config, canonical bases and seed.
  std::string header;
  std::vector<CheckRecord> records;

  bool all_passed() const;
  std::size_t failures() const;
  std::string to_json(bool include_timing = true) const;
};

/// jacobi, automorphism, module-axiom, twist, iso, simplicity, constraint,
/// weighting, exactness, structure, orbit.
const std::vector<std::string>& known_suites();

/// Runs the suites named in the config (or `suites` when non-empty, which
/// overrides the config). Throws Error(parse_error) for malformed configs and
/// Error(invalid_argument) listing unknown suite names.
Report run_verification(std::string_view config_json, const std::vector<std::string>& suites = {});

}  // namespace wittmod

#endif  // WITTMOD_VERIFY_HPP
