#include "mapcount/maps/rotation_map.hpp"

#include <numeric>

#include "mapcount/combinatorics.hpp"
#include "mapcount/errors.hpp"
#include "mapcount/integer.hpp"

namespace mapcount::maps {

int RotationMap::vertex_of(int d) const {
  int v = 0, start = 0;
  while (d >= start + valences[v]) start += valences[v++];
  return v;
}

int RotationMap::rotation(int d) const {
  int v = 0, start = 0;
  while (d >= start + valences[v]) start += valences[v++];
  const int k = d - start;
  return start + (k + 1) % valences[v];
}

void RotationMap::validate() const {
  int total = 0;
  for (int val : valences) {
    if (val < 1) throw DomainError("vertex valence must be >= 1");
    total += val;
  }
  if (total % 2 != 0) throw DomainError("odd total dart count");
  if (dart_count() != total)
    throw DomainError("pairing size does not match sum of valences");
  for (int d = 0; d < total; ++d) {
    const int p = pairing[d];
    if (p < 0 || p >= total || p == d || pairing[p] != d)
      throw DomainError("pairing is not a fixed-point-free involution");
  }
}

bool RotationMap::is_connected() const {
  const int j = vertex_count();
  std::vector<int> parent(j);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int d = 0; d < dart_count(); ++d) {
    const int a = find(vertex_of(d));
    const int b = find(vertex_of(pairing[d]));
    if (a != b) parent[a] = b;
  }
  int roots = 0;
  for (int v = 0; v < j; ++v) roots += (find(v) == v);
  return roots <= 1;
}

int genus_of_map(const RotationMap& m) {
  m.validate();
  const int darts = m.dart_count();
  const int edges = darts / 2;
  // faces: cycles of rotation∘pairing acting dart -> dart
  std::vector<char> seen(darts, 0);
  int faces = 0;
  for (int d = 0; d < darts; ++d) {
    if (seen[d]) continue;
    ++faces;
    int x = d;
    while (!seen[x]) {
      seen[x] = 1;
      x = m.rotation(m.pairing[x]);
    }
  }
  const int chi = m.vertex_count() - edges + faces;
  if ((2 - chi) % 2 != 0) throw DomainError("non-integral genus: malformed map");
  return (2 - chi) / 2;
}

Rational labeled_to_unlabeled(const Rational& count, int j, int nu) {
  if (j < 1 || nu < 1) throw DomainError("labeled_to_unlabeled needs j, nu >= 1");
  const Integer rotations = Integer::pow(Integer(2L * nu), static_cast<unsigned long>(j));
  const Integer relabelings = Integer::factorial(static_cast<unsigned long>(j));
  return count / Rational(rotations * relabelings);
}

int min_vertices(int g, int nu) {
  if (g < 0 || nu < 2) throw DomainError("min_vertices needs g >= 0, nu >= 2");
  if (g == 0) return 1;
  return (2 * g - 1 + nu - 2) / (nu - 1);  // ceil((2g-1)/(nu-1))
}

}  // namespace mapcount::maps
