#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mapcount/maps/rotation_map.hpp"

namespace mapcount::maps {

/// Exact genus histogram of dart pairings over the canonical rotation.
/// When connected_only is false the histogram covers all (D-1)!! pairings
/// and the "genus" bucket is (2 - chi)/2 from the global permutations, which
/// is negative for disconnected pairings.
struct GenusHistogram {
  std::map<int, std::uint64_t> counts;
  std::uint64_t total = 0;
  bool connected_only = false;
  std::vector<int> valences;

  std::uint64_t at(int genus) const {
    auto it = counts.find(genus);
    return it == counts.end() ? 0 : it->second;
  }
  /// Dart-relabeling and vertex-relabeling divisor: prod(valences) times
  /// factorial of each valence multiplicity; equals (2 nu)^j j! for
  /// 2nu-regular maps.
  Rational unlabeled_divisor() const;

  std::string to_json() const;
  std::string to_csv() const;
};

struct EnumerationOptions {
  bool connected_only = true;
  int max_darts = 24;  // refuse larger inputs; hard ceiling 32
  unsigned threads = 0;  // 0 = std::thread::hardware_concurrency()
};

/// Enumerates all fixed-point-free involutions on the darts of `valences`
/// (optionally pruned to connected maps) and returns the exact genus
/// histogram.  Deterministic for any thread count.  Throws CapExceededError
/// when sum(valences) exceeds the cap.
GenusHistogram enumerate_matchings_by_genus(const std::vector<int>& valences,
                                            const EnumerationOptions& opt = {});

}  // namespace mapcount::maps
