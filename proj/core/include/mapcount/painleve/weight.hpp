#pragma once

#include "mapcount/errors.hpp"
#include "mapcount/rational.hpp"

namespace mapcount::painleve {

/// Exponential-weight parameters, exact.  The potential is
///   V(l) = l^2/2 + t3 l^3 + t4 l^4,  weight w = exp(-N V),
/// with the quartic-only case parameterized by r via t4 = r/4.  Derived
/// quantities: zeta = 9 t3^2, eta = 1/(4 t4), gamma = 1/(eta N).
struct WeightParams {
  Rational N{1};
  Rational t3{0};
  Rational t4{Rational(1, 4)};

  static WeightParams quartic(const Rational& n, const Rational& r) {
    WeightParams p;
    p.N = n;
    p.t3 = Rational(0);
    p.t4 = r / Rational(4);
    p.validate();
    return p;
  }
  static WeightParams mixed(const Rational& n, const Rational& t3,
                            const Rational& t4) {
    WeightParams p;
    p.N = n;
    p.t3 = t3;
    p.t4 = t4;
    p.validate();
    return p;
  }

  void validate() const {
    if (N.sign() <= 0) throw ValidationError("weight needs N > 0");
    if (t4.sign() <= 0) throw ValidationError("weight needs t4 > 0");
  }

  Rational r() const { return Rational(4) * t4; }
  Rational zeta() const { return Rational(9) * t3 * t3; }
  Rational eta() const { return Rational(1) / (Rational(4) * t4); }
  Rational gamma() const { return Rational(1) / (eta() * N); }
  /// Signed square root of zeta consistent with t3 = sqrt(zeta)/3.
  Rational sqrt_zeta() const { return Rational(3) * t3; }
};

}  // namespace mapcount::painleve
