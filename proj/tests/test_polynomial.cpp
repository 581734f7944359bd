#include "doctest.h"
#include "mapcount/errors.hpp"
#include "mapcount/polynomial.hpp"

using namespace mapcount;

namespace {

Polynomial from_longs(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return Polynomial(std::move(v));
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Polynomial p = from_longs({1, -3, 1});  // x^2 - 3x + 1
  const Polynomial q = from_longs({-1, 1});     // x - 1
  CHECK((p * q).degree() == 3);
  CHECK(p.evaluate(Rational(3)) == Rational(1));
  CHECK(p.derivative() == from_longs({-3, 2}));
  CHECK(Polynomial::divide_exact(p * q, q) == p);
  CHECK_THROWS_AS(Polynomial::divide_exact(p, q), DomainError);
  CHECK(p.to_string() == "x^2 - 3*x + 1");
}

TEST_CASE("sturm root counting and isolation") {
  // (x-1)(x-2)(x-3) has roots 1, 2, 3
  const Polynomial p = from_longs({-6, 11, -6, 1});
  CHECK(count_real_roots(p) == 3);
  CHECK(sturm_count(p, Rational(0), Rational(5, 2)) == 2);
  const auto roots = isolate_real_roots(p, Rational(1, 64));
  REQUIRE(roots.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(roots[i].lo < Rational(i + 1));
    CHECK(Rational(i + 1) <= roots[i].hi);
  }
  const BigFloat r2 = refine_root(p, roots[1], 40);
  CHECK((r2 - BigFloat(2, 40)).abs() < BigFloat::pow10(-35, 40));

  // x^2 + 1 has no real roots
  CHECK(count_real_roots(from_longs({1, 0, 1})) == 0);
}

TEST_CASE("squarefree decomposition") {
  // p = (x-1)^2 (x+2)^3
  const Polynomial p = from_longs({-1, 1}) * from_longs({-1, 1}) *
                       from_longs({2, 1}) * from_longs({2, 1}) *
                       from_longs({2, 1});
  CHECK(!p.is_squarefree());
  const auto parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].degree() == 0);
  CHECK(parts[1] == from_longs({-1, 1}));
  CHECK(parts[2] == from_longs({2, 1}));
  CHECK(p.squarefree_part().degree() == 2);
}

TEST_CASE("characteristic polynomial") {
  // [[2, 1], [1, 2]] has char poly x^2 - 4x + 3
  const std::vector<std::vector<Rational>> m{{Rational(2), Rational(1)},
                                             {Rational(1), Rational(2)}};
  CHECK(characteristic_polynomial(m) == from_longs({3, -4, 1}));

  // companion-style 3x3 with known spectrum {1, -2 +- sqrt(3)}:
  // (x - 1)(x^2 + 4x + 1) = x^3 + 3x^2 - 3x - 1
  const std::vector<std::vector<Rational>> j{
      {Rational(0), Rational(0), Rational(1)},
      {Rational(1), Rational(0), Rational(3)},
      {Rational(0), Rational(1), Rational(-3)}};
  CHECK(characteristic_polynomial(j) == from_longs({-1, -3, 3, 1}));
}
