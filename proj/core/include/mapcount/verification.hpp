#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace mapcount {

/// Outcome of one exact verification suite.  `pass` requires exact equality
/// for rational identities; the first failing case is kept for diagnosis.
struct VerificationReport {
  std::string name;
  std::string ranges;
  std::uint64_t cases = 0;
  std::uint64_t passed = 0;
  std::optional<std::string> first_failure;
  double wall_ms = 0.0;

  bool pass() const { return passed == cases && !first_failure; }
  std::string to_json() const;
  std::string summary_line() const;
};

}  // namespace mapcount
