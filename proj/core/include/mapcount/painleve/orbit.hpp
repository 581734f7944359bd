#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mapcount/bigfloat.hpp"
#include "mapcount/painleve/weight.hpp"
#include "mapcount/rational.hpp"

namespace mapcount::painleve {

enum class SystemKind {
  dp1,
  dp1_sfu,
  mixed,
  mixed_sfuzw,
  qrt_cubic,
  planar_restricted,
};

const char* system_name(SystemKind k);
SystemKind system_from_name(const std::string& name);
std::vector<std::string> state_labels(SystemKind k);
/// Whether the step map reads the iteration index (non-autonomous systems).
bool system_uses_index(SystemKind k);

/// A pole hit at step `at_index`; the orbit ends there and the event is part
/// of the record (singular orbits are data, not failures).
struct SingularityEvent {
  long at_index = 0;
  std::string message;
};

/// High-precision orbit: states with strictly increasing indices, the
/// parameter snapshot, and the working precision.
struct OrbitRecord {
  SystemKind system = SystemKind::dp1;
  WeightParams params;
  int precision_digits = BigFloat::kDefaultDigits;
  long start_index = 1;
  std::vector<long> indices;
  std::vector<std::vector<BigFloat>> states;
  std::optional<SingularityEvent> singularity;

  /// Working digits minus the growth of the expanding eigenvalue
  /// |lambda| = 2 + sqrt(3) over (n - start) steps.
  double estimated_valid_digits(long n) const;

  std::string to_csv() const;
  std::string to_json() const;
};

OrbitRecord run_orbit(SystemKind kind, const WeightParams& p,
                      const std::vector<BigFloat>& initial_state,
                      long start_index, long steps, int digits);

/// Exact rational orbit (planar-restricted, qrt-cubic, and the compactified
/// systems accept exact seeds).  `freeze_index` iterates the autonomous map
/// with the index pinned at start_index (QRT invariant checks).
struct ExactOrbit {
  SystemKind system = SystemKind::planar_restricted;
  WeightParams params;
  long start_index = 1;
  bool frozen_index = false;
  std::vector<long> indices;
  std::vector<std::vector<Rational>> states;
  std::optional<SingularityEvent> singularity;

  std::string to_csv() const;
  std::string to_json() const;
};

ExactOrbit run_exact_orbit(SystemKind kind, const WeightParams& p,
                           const std::vector<Rational>& initial_state,
                           long start_index, long steps,
                           bool freeze_index = false);

/// Seed file: {"system": "...", "n": 2, "state": ["...", ...]} with decimal
/// or fraction literals.  Returns the start index and the state strings.
std::pair<long, std::vector<std::string>> parse_seed_json(
    const std::string& text);

}  // namespace mapcount::painleve
