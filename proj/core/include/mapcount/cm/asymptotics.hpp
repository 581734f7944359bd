#pragma once

#include <vector>

#include "mapcount/bigfloat.hpp"
#include "mapcount/cm/expansion.hpp"
#include "mapcount/painleve/orbit.hpp"
#include "mapcount/painleve/weight.hpp"

namespace mapcount::cm {

/// Asymptotic expansion x_n ~ sum_{k >= -1} c_k n^{-k/2} along the orbit
/// approaching the fixed point; the leading coefficient is nonzero.
struct AsymptoticExpansion {
  std::vector<BigFloat> c;  // c[0] = c_{-1}, c[1] = c_0, ...
  int max_k() const { return static_cast<int>(c.size()) - 2; }
  const BigFloat& coefficient(int k) const { return c[static_cast<size_t>(k + 1)]; }
  BigFloat evaluate(long n) const;
  std::string to_csv() const;  // k, coefficient
};

/// Inverts the on-manifold index relation n/N = (s(u) + f(u) + u - 1)/(r u^2)
/// (r = 1/eta) into u(n) on the negative-u branch and returns the expansion
/// of x = -1/(r u) in powers of n^(-1/2), with coefficients c_{-1}..c_order.
/// Requires cm.order >= order + 1 (order starvation otherwise).
AsymptoticExpansion invert_to_n(const CmExpansion& cm,
                                const painleve::WeightParams& p, int order,
                                int digits);

/// Euclidean distance from each orbit state to the manifold point with the
/// same u, in the compactified coordinates of the expansion.
std::vector<BigFloat> orbit_distance(const painleve::OrbitRecord& orbit,
                                     const CmExpansion& cm,
                                     const painleve::WeightParams& p);

}  // namespace mapcount::cm
