#pragma once

#include "mapcount/bigfloat.hpp"
#include "mapcount/errors.hpp"
#include "mapcount/rational.hpp"
#include "mapcount/series.hpp"

namespace mapcount::genfun {

/// c_nu = 2 nu binom(2 nu - 1, nu - 1), the string-equation coefficient.
Rational c_nu(int nu);

/// Power-series solution z0(t) of 1 = z0 + c_nu t z0^nu with z0(0) = 1.
Series<Rational> z0_series(int nu, int order);

/// Branch-consistent numeric root of z + c_nu t z^nu = 1 continued from
/// z0(0) = 1, with residual below tol.  Throws BranchLostError when the
/// continuation runs into a vanishing derivative (past the critical t).
BigFloat z0_numeric(int nu, const BigFloat& t, const BigFloat& tol);

/// dz0/dt = -c_nu z0^(nu+1) / (nu - (nu-1) z0), as a function of z0 only;
/// exact, floating, and series arguments.  Throws DomainError at the
/// singularity z0 = nu/(nu-1).
Rational dz0_dt(int nu, const Rational& z0);
BigFloat dz0_dt(int nu, const BigFloat& z0);
Series<Rational> dz0_dt(int nu, const Series<Rational>& z0);

}  // namespace mapcount::genfun
