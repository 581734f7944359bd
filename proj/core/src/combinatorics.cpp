#include "mapcount/combinatorics.hpp"

#include "mapcount/errors.hpp"

namespace mapcount {

Integer binomial(long n, long k) { return binomial(Integer(n), k); }

Integer binomial(const Integer& n, long k) {
  if (k < 0) return 0;
  Integer r;
  mpz_bin_ui(r.raw(), n.raw(), static_cast<unsigned long>(k));
  return r;
}

Integer double_factorial(long n) {
  if (n == -1 || n == 0) return 1;
  if (n < 0 || n % 2 == 0)
    throw DomainError("double factorial defined here only for odd n > 0 and n in {-1, 0}");
  Integer r;
  mpz_2fac_ui(r.raw(), static_cast<unsigned long>(n));
  return r;
}

Rational pochhammer(const Rational& x, long k) {
  if (k < 0) throw DomainError("pochhammer needs k >= 0");
  Rational r(1);
  Rational term(x);
  for (long i = 0; i < k; ++i) {
    r *= term;
    term += Rational(1);
  }
  return r;
}

Rational falling_factorial(const Rational& x, long k) {
  if (k < 0) throw DomainError("falling factorial needs k >= 0");
  Rational r(1);
  Rational term(x);
  for (long i = 0; i < k; ++i) {
    r *= term;
    term -= Rational(1);
  }
  return r;
}

std::vector<Rational> bernoulli_numbers(int max_index) {
  if (max_index < 0) throw DomainError("bernoulli_numbers needs max_index >= 0");
  std::vector<Rational> b;
  b.reserve(max_index + 1);
  b.emplace_back(1);
  for (int m = 1; m <= max_index; ++m) {
    Rational s(0);
    for (int k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * b[k];
    b.push_back(-s / Rational(m + 1));
  }
  return b;
}

}  // namespace mapcount
