#include <random>

#include "doctest.h"
#include "mapcount/errors.hpp"
#include "mapcount/multipoly.hpp"

using namespace mapcount;

namespace {

ParamPoly random_poly(std::mt19937_64& rng, int max_terms) {
  std::uniform_int_distribution<int> expo(0, 3);
  std::uniform_int_distribution<long> coeff(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  ParamPoly p;
  for (int t = 0; t < max_terms; ++t) {
    ParamPoly term;
    term.set_term({expo(rng), expo(rng), expo(rng)},
                  Rational(coeff(rng), den(rng)));
    p = p + term;
  }
  return p;
}

}  // namespace

TEST_CASE("parameter polynomial arithmetic and printing") {
  const ParamPoly g = ParamPoly::variable(0);
  const ParamPoly z = ParamPoly::variable(1);
  const ParamPoly e = ParamPoly::variable(2);
  const ParamPoly p = g * g + Rational(-1, 3) * (z * e) + ParamPoly(2);
  CHECK(p.degree(0) == 2);
  CHECK(p.evaluate(Rational(2), Rational(3), Rational(6)) ==
        Rational(4) - Rational(6) + Rational(2));
  CHECK(ParamPoly::from_string(p.to_string()) == p);
  CHECK(ParamPoly::from_string("eta^2*zeta - 1/2*gamma + 7") ==
        e * e * z - Rational(1, 2) * g + ParamPoly(7));
}

TEST_CASE("gcd and exact division") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    ParamPoly a = random_poly(rng, 3);
    ParamPoly b = random_poly(rng, 3);
    ParamPoly c = random_poly(rng, 2);
    if (c.is_zero()) c = ParamPoly(1);
    const ParamPoly ac = a * c;
    const ParamPoly bc = b * c;
    if (!ac.is_zero()) CHECK(ac.divexact(c) == a);
    const ParamPoly g = ParamPoly::gcd(ac, bc);
    if (!ac.is_zero() && !bc.is_zero()) {
      // the gcd divides both products and is divisible by the common factor
      CHECK_NOTHROW(ac.divexact(g));
      CHECK_NOTHROW(bc.divexact(g));
      CHECK_NOTHROW(g.divexact(c.primitive_scaled()));
    }
  }
}

TEST_CASE("rational function canonical equality") {
  const ParamRational g = ParamRational::gamma();
  const ParamRational z = ParamRational::zeta();
  const ParamRational e = ParamRational::eta();
  // equality invariant under common polynomial factors
  const ParamRational a = (g + ParamRational(1)) / (e * z);
  const ParamRational common = g * g - z + ParamRational(3);
  const ParamRational b = ((g + ParamRational(1)) * common) / (e * z * common);
  CHECK(a == b);
  CHECK((a - b).is_zero());

  // arithmetic identity with cancellation: (g^2 - z^2)/(g - z) = g + z
  const ParamRational q = (g * g - z * z) / (g - z);
  CHECK(q == g + z);

  // round trip through the string form
  const ParamRational r = (g * e - ParamRational(Rational(2, 3))) /
                          (z * z + ParamRational(5));
  CHECK(ParamRational::from_string(r.to_string()) == r);

  CHECK_THROWS_AS(a / (g - g), DomainError);
}

TEST_CASE("rational function field laws") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    ParamPoly pa = random_poly(rng, 2), pb = random_poly(rng, 2),
              pc = random_poly(rng, 2), pd = random_poly(rng, 2);
    if (pb.is_zero()) pb = ParamPoly(1);
    if (pd.is_zero()) pd = ParamPoly(1);
    const ParamRational x(pa, pb);
    const ParamRational y(pc, pd);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) - y == x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("evaluation matches substitution") {
  const ParamRational expr =
      (ParamRational::gamma() * ParamRational::eta() - ParamRational(3)) /
      (ParamRational::zeta() + ParamRational(1));
  CHECK(expr.evaluate(Rational(4), Rational(9), Rational(1, 4)) ==
        (Rational(1) - Rational(3)) / Rational(10));
  CHECK_THROWS_AS(expr.evaluate(Rational(0), Rational(-1), Rational(0)),
                  DomainError);
}
