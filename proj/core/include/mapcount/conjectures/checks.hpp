#pragma once

#include <vector>

#include "mapcount/polynomial.hpp"
#include "mapcount/rational.hpp"
#include "mapcount/verification.hpp"

namespace mapcount::conj {

/// Exact check of the hypergeometric product-sum identity
///   j! 2^(l+2g-1) binom((2g-2)+(l+j), j) 2F1(-j, -2j; 2-2g-(l+j); -1)
///     = sum_{k=1}^{l+2g} binom(l+2g-1, k-1) prod_{m=0}^{j-1} 2(2m+k)
/// over l in [0, l_max], g in [1, g_max], j in [1, j_max].  Left and right
/// sides are evaluated by disjoint code paths.  A hypergeometric domain
/// error flags the case instead of aborting the grid.
VerificationReport conjecture1_check(int l_max, int g_max, int j_max);

/// The constants C^(g) from the recursion
///   -C^(g) / (2 (2g-3)!) = 1/(2g+2)! - 1/((2g)! 12)
///       + (1 - delta_{g,2})/(2g-1)! sum_{k=2}^{g-1}
///         (2-2k)(1-2k)...(down over 2g-2k+2 factors) / (2g-2k+2)! C^(k)
/// seeded with C^(2) = 1/240, checked exactly against
///   -C^(g) = B_{2g} / (4g(g-1)),  2 <= g <= g_max.
/// The recursion never calls the Bernoulli generator except for the final
/// comparison.
VerificationReport cg_bernoulli_check(int g_max);

/// The C^(g) values themselves (index 2..g_max), from the recursion alone.
std::vector<Rational> cg_values(int g_max);

/// All zeros real and strictly interlacing for consecutive polynomials
/// (degrees must increase by exactly 1).  Exact: Sturm counts for realness,
/// exact isolating intervals for the interlacing order; polynomials with
/// repeated roots fail (strict interlacing needs simple zeros).
VerificationReport interlacing_check(const std::vector<Polynomial>& polys);

/// Parses a JSON array of polynomials, each an array of exact coefficient
/// strings, constant term first.
std::vector<Polynomial> polynomials_from_json(const std::string& text);

}  // namespace mapcount::conj
