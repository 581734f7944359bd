#pragma once

#include "mapcount/rational.hpp"

namespace mapcount {

/// Terminating Gauss hypergeometric sum
///   2F1(a, b; c; z) = sum_{k=0}^{|a|} (a)_k (b)_k / ((c)_k k!) z^k
/// for a nonpositive integer a, evaluated exactly.
///
/// Throws DomainError if a denominator Pochhammer (c)_k vanishes at some
/// k <= |a| before the numerator terminates the series.
Rational hypergeom_2f1_terminating(long a, const Rational& b,
                                   const Rational& c, const Rational& z);

}  // namespace mapcount
