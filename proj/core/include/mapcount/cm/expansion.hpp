#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mapcount/dual.hpp"
#include "mapcount/multipoly.hpp"
#include "mapcount/painleve/weight.hpp"
#include "mapcount/series.hpp"

namespace mapcount::cm {

using PSeries = Series<ParamRational>;
using PDual = Dual<ParamRational>;

/// A rational step map prepared for symbolic center-manifold work: the same
/// map exposed over truncated series (for the order-by-order solve) and over
/// dual numbers (for the exact Jacobian), with a parameterized fixed point
/// whose center coordinate is 0.
struct SymbolicSystem {
  std::string name;
  std::vector<std::string> labels;
  int center_index = 0;
  std::vector<ParamRational> fixed_point;
  std::function<std::vector<PSeries>(const std::vector<PSeries>&)> step_series;
  std::function<std::vector<PDual>(const std::vector<PDual>&)> step_dual;

  int dimension() const { return static_cast<int>(fixed_point.size()); }
};

/// The dP1 compactified map with symbolic gamma.
SymbolicSystem dp1_symbolic();
/// The mixed-valence compactified map with symbolic (gamma, zeta, eta).
SymbolicSystem mixed_symbolic();

/// Center-manifold graph over the center coordinate u: one series per state
/// coordinate (the center coordinate's series is u itself), plus the induced
/// dynamics of u along the manifold.  Constant terms equal the fixed point;
/// the linear terms are the center eigenvector normalized to u-component 1.
struct CmExpansion {
  std::string system;
  std::vector<std::string> labels;
  int center_index = 0;
  int order = 0;
  std::vector<ParamRational> fixed_point;
  std::vector<PSeries> series;
  PSeries u_dynamics{"u", 0};

  const PSeries& coordinate(const std::string& label) const;

  /// Exact coefficient tables evaluated at numeric parameter values,
  /// one row per coordinate (row i = coefficients of u^0..u^order).
  std::vector<std::vector<Rational>> evaluate_at(const Rational& gamma,
                                                 const Rational& zeta,
                                                 const Rational& eta) const;

  std::string to_json() const;
  static CmExpansion from_json(const std::string& text);
};

/// Order-by-order construction of the center-manifold series at the fixed
/// point.  Requires a one-dimensional eigenvalue-1 direction with nonzero
/// center-coordinate component; every transverse eigenvalue must differ
/// from 1 or the per-order linear solve is singular.
///
/// Throws DomainError("center-dimension ...") when the eigenvalue-1
/// eigenspace is not one-dimensional over the parameter field, and
/// DomainError("non-hyperbolic transverse ...") when the order-k solve hits
/// a singular pivot.
CmExpansion cm_expand(const SymbolicSystem& sys, int order);

}  // namespace mapcount::cm
