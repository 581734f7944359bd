#pragma once

#include <vector>

#include "mapcount/genfun/qrecurrence.hpp"
#include "mapcount/rational.hpp"
#include "mapcount/verification.hpp"

namespace mapcount::genfun {

/// 4-valent band vector V_{e,g}^(j): the fixed-length (5g-5) window of the
/// semi-infinite coefficient vector V^(j) = c_2^j [q_0^(j), q_1^(j), ...].
/// The window starts at semi-infinite index j - 2g + 2 (entries at negative
/// indices are the left zero padding).
struct BandVector {
  int g = 2;
  int j = 1;
  std::vector<Rational> entries;  // x_1 .. x_{5g-5}

  int length() const { return 5 * g - 5; }
  void validate() const;
  Rational sum() const;
};

/// The (5g-5) x (5g-5) step matrix A^(j): the restriction of the bidiagonal
/// q-recurrence to the band.  Upper bidiagonal with A[k][k] = 2(2j + k) and
/// A[k][k+1] = -k (1-based k); every A^(j) is 4j I plus one shared matrix,
/// so the family commutes.
std::vector<std::vector<Rational>> band_matrix(int j, int g);

/// Projects a 4-valent QVector onto its band window.  Throws DomainError if
/// some nonzero entry lies outside the window (inconsistent g / padding).
BandVector band_reduce(const QVector& q);

/// V_{e,g}^(j+1) = c_2 A^(j) V_{e,g}^(j), with c_2 = 12.
BandVector band_step(const BandVector& v);

/// Column sums of prod_{k=1}^{j-1} A^(k) in closed form:
///   R^(j)[n] = 2^{1-n} sum_{k=1}^{n} binom(n-1, k-1) prod_{l=1}^{j-1} 2(2l+k).
std::vector<Rational> r_vector(int j, int g);

/// N_{4,e}(g,j) = c_2^{j-1} R^(j) . V_{e,g}^(1) for a seed band vector.
Rational count_contraction(const BandVector& seed, int j);

/// Column sums of the explicit matrix product (the oracle r_vector is
/// checked against).
std::vector<Rational> band_product_column_sums(int j, int g);

/// A^(m) A^(n) == A^(n) A^(m) for all m, n <= max_index, g in [g_min, g_max].
VerificationReport verify_commutation(int g_min, int g_max, int max_index);

/// r_vector(j, g) == column sums of prod A^(k), j <= max_j, g in range.
VerificationReport verify_r_vector(int g_min, int g_max, int max_j);

}  // namespace mapcount::genfun
