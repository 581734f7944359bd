#pragma once

#include <vector>

#include "mapcount/rational.hpp"

namespace mapcount::maps {

/// A labeled map given by vertex valences, the canonical rotation (darts at
/// vertex v occupy a contiguous block, counterclockwise order = increasing
/// label), and a fixed-point-free involution pairing darts into edges.
struct RotationMap {
  std::vector<int> valences;
  std::vector<int> pairing;  // pairing[d] = partner of dart d

  int dart_count() const { return static_cast<int>(pairing.size()); }
  int vertex_count() const { return static_cast<int>(valences.size()); }

  /// Vertex that dart d belongs to.
  int vertex_of(int d) const;
  /// Canonical rotation: next dart counterclockwise about the same vertex.
  int rotation(int d) const;

  /// Throws DomainError unless the pairing is a fixed-point-free involution
  /// on exactly sum(valences) darts, with every valence >= 1.
  void validate() const;

  bool is_connected() const;
};

/// Genus from the Euler characteristic chi = 2 - 2g = j - E + F, with F the
/// number of cycles of rotation∘pairing (faces).  For disconnected maps this
/// is the same formula applied to the global permutations.  Throws
/// DomainError when the parity of chi makes g non-integral.
int genus_of_map(const RotationMap& m);

/// labeled / ((2 nu)^j j!)
Rational labeled_to_unlabeled(const Rational& count, int j, int nu);

/// Smallest j with j >= (2g-1)/(nu-1); 1 for g = 0.
int min_vertices(int g, int nu);

}  // namespace mapcount::maps
