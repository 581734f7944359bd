#include "mapcount/genfun/string_equation.hpp"

#include "mapcount/combinatorics.hpp"

namespace mapcount::genfun {

Rational c_nu(int nu) {
  if (nu < 1) throw DomainError("c_nu needs nu >= 1");
  return Rational(Integer(2L * nu) * binomial(2L * nu - 1, nu - 1));
}

Series<Rational> z0_series(int nu, int order) {
  if (nu < 2) throw DomainError("z0_series needs nu >= 2");
  const Rational c = c_nu(nu);
  // fixed-point iteration z <- 1 - c t z^nu gains one order per pass
  Series<Rational> z = Series<Rational>::constant("t", Rational(1), order);
  for (int it = 0; it <= order; ++it) {
    const Series<Rational> zn = z.pow(nu);
    Series<Rational> next("t", order);
    next.set_coeff(0, Rational(1));
    for (int k = 1; k <= order; ++k) next.set_coeff(k, -c * zn.coeff(k - 1));
    z = next;
  }
  return z;
}

BigFloat z0_numeric(int nu, const BigFloat& t, const BigFloat& tol) {
  if (nu < 2) throw DomainError("z0_numeric needs nu >= 2");
  const int digits = t.precision_digits();
  const BigFloat c(c_nu(nu), digits);
  const BigFloat zero(0L, digits);
  const auto residual = [&](const BigFloat& z, const BigFloat& tt) {
    return z + c * tt * z.pow_si(nu) - BigFloat(1L, digits);
  };
  const auto derivative = [&](const BigFloat& z, const BigFloat& tt) {
    return BigFloat(1L, digits) + BigFloat(nu, digits) * c * tt * z.pow_si(nu - 1);
  };
  const BigFloat eps = BigFloat::pow10(-(digits - 5), digits);

  // continue the branch from t = 0 (z = 1) in steps small enough that the
  // Newton iterate stays on the branch
  BigFloat z(1L, digits);
  int pieces = 1;
  while (true) {
    bool ok = true;
    z = BigFloat(1L, digits);
    for (int i = 1; i <= pieces && ok; ++i) {
      const BigFloat tt = t * BigFloat(i, digits) / BigFloat(pieces, digits);
      BigFloat prev = z;
      bool converged = false;
      for (int it = 0; it < 200; ++it) {
        const BigFloat d = derivative(z, tt);
        if (d.abs() <= eps) {
          ok = false;  // vanishing derivative: at/past the critical t
          break;
        }
        const BigFloat step = residual(z, tt) / d;
        z -= step;
        if (step.abs() <= tol || step.abs() <= eps) {
          converged = true;
          break;
        }
      }
      if (ok && !converged) ok = false;
      // a branch jump shows up as a large move within one continuation piece
      if (ok && pieces > 1 && (z - prev).abs() > BigFloat(1L, digits)) ok = false;
    }
    if (ok && residual(z, t).abs() <= tol) return z;
    pieces *= 2;
    if (pieces > 4096)
      throw BranchLostError(
          "z0 branch continuation failed (critical point reached before t)");
  }
}

Rational dz0_dt(int nu, const Rational& z0) {
  const Rational den = Rational(nu) - Rational(nu - 1) * z0;
  if (den.is_zero()) throw DomainError("dz0/dt singular at z0 = nu/(nu-1)");
  return -(c_nu(nu) * z0.pow(nu + 1)) / den;
}

BigFloat dz0_dt(int nu, const BigFloat& z0) {
  const int digits = z0.precision_digits();
  const BigFloat den = BigFloat(nu, digits) - BigFloat(nu - 1, digits) * z0;
  if (den.is_zero()) throw DomainError("dz0/dt singular at z0 = nu/(nu-1)");
  return -(BigFloat(c_nu(nu), digits) * z0.pow_si(nu + 1)) / den;
}

Series<Rational> dz0_dt(int nu, const Series<Rational>& z0) {
  Series<Rational> den =
      -(Rational(nu - 1) * z0) + Rational(nu);
  if (den.coeff(0).is_zero())
    throw DomainError("dz0/dt singular at z0 = nu/(nu-1)");
  return -(c_nu(nu) * z0.pow(nu + 1) * den.inverse());
}

}  // namespace mapcount::genfun
