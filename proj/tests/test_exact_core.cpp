#include <random>

#include "doctest.h"
#include "mapcount/bigfloat.hpp"
#include "mapcount/combinatorics.hpp"
#include "mapcount/dual.hpp"
#include "mapcount/errors.hpp"
#include "mapcount/hypergeometric.hpp"
#include "mapcount/rational.hpp"
#include "mapcount/series.hpp"

using namespace mapcount;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 20);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational basics and canonical form") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational(-2, 3).denominator() == Integer(3));
  CHECK(Rational("7/21") == Rational(1, 3));
  CHECK(Rational("-5") == Rational(-5));
  CHECK(Rational(3, 7).to_string() == "3/7");
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational("1/0"), Error);
  CHECK_THROWS_AS(Rational("abc"), ValidationError);
}

TEST_CASE("rational field laws on random triples") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const Rational a = random_rational(rng), b = random_rational(rng),
                   c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("combinatorial primitives") {
  CHECK(binomial(3, 1) == Integer(3));
  CHECK(binomial(5, 2) == Integer(10));
  CHECK(binomial(0, 0) == Integer(1));
  CHECK(binomial(4, 7) == Integer(0));
  // polynomial extension for negative upper index: binom(-3, 2) = 6
  CHECK(binomial(-3, 2) == Integer(6));
  CHECK(binomial(-1, 5) == Integer(-1));

  CHECK(double_factorial(7) == Integer(105));
  CHECK(double_factorial(-1) == Integer(1));
  CHECK(double_factorial(11) == Integer(10395));
  CHECK_THROWS_AS(double_factorial(-4), DomainError);
  CHECK_THROWS_AS(double_factorial(6), DomainError);

  CHECK(pochhammer(Rational(-2), 4) == Rational(0));  // (-2)(-1)(0)(1)
  CHECK(pochhammer(Rational(3), 3) == Rational(60));
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(falling_factorial(Rational(-2), 4) == Rational(120));
}

TEST_CASE("bernoulli numbers") {
  const auto b = bernoulli_numbers(12);
  CHECK(b[0] == Rational(1));
  CHECK(b[1] == Rational(-1, 2));
  CHECK(b[2] == Rational(1, 6));
  CHECK(b[4] == Rational(-1, 30));
  CHECK(b[12] == Rational(-691, 2730));
  for (int k = 3; k <= 11; k += 2) CHECK(b[k] == Rational(0));

  // independent oracle: sum_{k=0}^{m} binom(m+1, k) B_k = 0 for m >= 1
  for (int m = 1; m <= 12; ++m) {
    Rational s(0);
    for (int k = 0; k <= m; ++k) s += Rational(binomial(m + 1, k)) * b[k];
    CHECK(s == Rational(0));
  }
}

TEST_CASE("terminating 2F1") {
  CHECK(hypergeom_2f1_terminating(0, Rational(5, 7), Rational(-9), Rational(3)) ==
        Rational(1));
  CHECK(hypergeom_2f1_terminating(-1, Rational(-2), Rational(-1), Rational(-1)) ==
        Rational(3));
  CHECK(hypergeom_2f1_terminating(-1, Rational(1), Rational(1), Rational(1)) ==
        Rational(0));
  // numerator termination before a denominator zero is fine:
  // b = -1 kills the series at k = 2 where (c)_k would vanish (c = -1),
  // leaving 1 + (-3)(-1)/(-1) * 2 = -5
  CHECK(hypergeom_2f1_terminating(-3, Rational(-1), Rational(-1), Rational(2)) ==
        Rational(-5));
  // denominator Pochhammer vanishing strictly first raises
  CHECK_THROWS_AS(hypergeom_2f1_terminating(-3, Rational(5), Rational(-1),
                                            Rational(1)),
                  DomainError);
}

TEST_CASE("series arithmetic and composition") {
  using S = Series<Rational>;
  S s("u", {Rational(0), Rational(1), Rational(-1)});  // u - u^2, order 2
  const S inv = (s + Rational(1)).inverse();
  CHECK(inv.coeff(0) == Rational(1));
  CHECK(inv.coeff(1) == Rational(-1));
  CHECK(inv.coeff(2) == Rational(2));

  // order tracking: product of order 2 and order 5 has order 2
  S t("u", 5);
  t.set_coeff(1, Rational(3));
  CHECK((s * t).order() == 2);

  // log of (1 + u): u - u^2/2 + u^3/3 - ...
  S one_plus_u = S::identity("u", 4) + Rational(1);
  const S lg = one_plus_u.log();
  CHECK(lg.coeff(1) == Rational(1));
  CHECK(lg.coeff(2) == Rational(-1, 2));
  CHECK(lg.coeff(3) == Rational(1, 3));
  CHECK(lg.coeff(4) == Rational(-1, 4));
}

TEST_CASE("series reversion") {
  using S = Series<Rational>;
  // u - u^2 reverts to u + u^2 + 2u^3 (Catalan numbers)
  S s("u", 3);
  s.set_coeff(1, Rational(1));
  s.set_coeff(2, Rational(-1));
  const S r = s.reversion();
  CHECK(r.coeff(1) == Rational(1));
  CHECK(r.coeff(2) == Rational(1));
  CHECK(r.coeff(3) == Rational(2));

  // identity is self-inverse; 2u reverts to u/2
  const S id = S::identity("u", 2);
  CHECK(id.reversion() == id);
  S two_u("u", 2);
  two_u.set_coeff(1, Rational(2));
  CHECK(two_u.reversion().coeff(1) == Rational(1, 2));

  CHECK_THROWS_AS((s + Rational(1)).reversion(), DomainError);
  S no_linear("u", 3);
  no_linear.set_coeff(2, Rational(1));
  CHECK_THROWS_AS(no_linear.reversion(), DomainError);

  // property: compose(reversion(s), s) = identity for random series
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    S f("u", 6);
    f.set_coeff(1, random_rational(rng));
    while (f.coeff(1).is_zero()) f.set_coeff(1, random_rational(rng));
    for (int k = 2; k <= 6; ++k) f.set_coeff(k, random_rational(rng));
    const S g = f.reversion();
    CHECK(f.compose(g) == S::identity("u", 6));
    CHECK(g.compose(f) == S::identity("u", 6));
  }
}

TEST_CASE("bigfloat precision and arithmetic") {
  const BigFloat a(Rational(1, 3), 50);
  const BigFloat b(Rational(1, 3), 150);
  CHECK((a + b).precision_digits() == 150);
  CHECK(BigFloat(2, 80).sqrt().pow_si(2).to_double() == doctest::Approx(2.0));
  // e = exp(1) to 50 digits
  const BigFloat e = BigFloat(1, 60).exp();
  const BigFloat expect("2.71828182845904523536028747135266249775724709369996", 60);
  CHECK((e - expect).abs() < BigFloat::pow10(-49, 60));
  const std::string s = BigFloat(Rational(1, 7), 40).to_string();
  CHECK((BigFloat(s, 40) - BigFloat(Rational(1, 7), 40)).abs() <
        BigFloat::pow10(-38, 40));
  CHECK_THROWS_AS(BigFloat(-1, 30).sqrt(), DomainError);
  CHECK_THROWS_AS(BigFloat(1, 30) / BigFloat(0, 30), DomainError);
}

TEST_CASE("dual numbers differentiate rational expressions") {
  using D = Dual<Rational>;
  // d/dx (x^2 / (1 + x)) at x = 3 is (2x(1+x) - x^2)/(1+x)^2 = 15/16
  const D x = D::seeded(Rational(3));
  const D y = x * x / (D(Rational(1)) + x);
  CHECK(y.value == Rational(9, 4));
  CHECK(y.deriv == Rational(15, 16));
}
