#pragma once

#include <vector>

#include "mapcount/integer.hpp"
#include "mapcount/rational.hpp"

namespace mapcount {

/// binom(n, k) for any integer n (polynomial extension in n) and k >= 0;
/// zero for k < 0.
Integer binomial(long n, long k);
Integer binomial(const Integer& n, long k);

/// n!! for n odd and positive, n in {-1, 0}; everything else is undefined.
Integer double_factorial(long n);

/// Rising factorial (x)_k = x (x+1) ... (x+k-1), k >= 0.
Rational pochhammer(const Rational& x, long k);

/// Falling factorial x (x-1) ... (x-k+1), k >= 0.
Rational falling_factorial(const Rational& x, long k);

/// B_0 .. B_max in the convention with B_1 = -1/2 (so B_2 = 1/6,
/// B_4 = -1/30), generated from sum_k binom(m+1,k) B_k = 0.
std::vector<Rational> bernoulli_numbers(int max_index);

}  // namespace mapcount
