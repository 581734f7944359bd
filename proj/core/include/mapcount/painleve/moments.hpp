#pragma once

#include <vector>

#include "mapcount/bigfloat.hpp"
#include "mapcount/painleve/weight.hpp"

namespace mapcount::painleve {

/// Moments mu_i = integral lambda^i exp(-N V(lambda)) dlambda for
/// i = 0..i_max, to `digits` decimal digits: the integrand tail is truncated
/// where the exponent guarantees it below the target, then a doubling
/// trapezoid rule runs until two consecutive refinements agree.
std::vector<BigFloat> weight_moments(const WeightParams& p, int i_max,
                                     int digits);

/// Quartic Freud seed (x_1, y_1) = (mu_2/mu_0, 0), start index 1.
std::vector<BigFloat> freud_seed_quartic(const WeightParams& p, int digits);

/// Mixed Freud seed (x_2, y_2, z_2, w_2) at start index 2, from mu_0..mu_5
/// via Hankel determinants:
///   b_n^2 = D_{n+1} D_{n-1} / D_n^2,
///   a_n   = Dt_{n+1}/D_{n+1} - Dt_n/D_n   (Dt = last column shifted),
///   z_k   = a_k / (3 t3).
/// Raises the working precision automatically if the determinants lose more
/// than half the digits.
std::vector<BigFloat> freud_seed_mixed(const WeightParams& p, int digits);

/// Orthogonal-polynomial recurrence coefficients (a_0..a_{k-1}, b_1^2..b_k^2)
/// from moments; exposed for the even-weight symmetry checks.
struct JacobiCoefficients {
  std::vector<BigFloat> a;
  std::vector<BigFloat> b2;
};
JacobiCoefficients jacobi_from_moments(const std::vector<BigFloat>& mu, int k);

}  // namespace mapcount::painleve
