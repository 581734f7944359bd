#pragma once

#include <string>
#include <vector>

#include "mapcount/bigfloat.hpp"
#include "mapcount/painleve/orbit.hpp"
#include "mapcount/painleve/weight.hpp"
#include "mapcount/polynomial.hpp"
#include "mapcount/rational.hpp"

namespace mapcount::painleve {

struct Eigenvalue {
  BigFloat value;
  int multiplicity = 1;
};

struct FixedPointReport {
  std::vector<Rational> point;           // exact coordinates
  Polynomial characteristic;             // exact char poly of the Jacobian
  std::vector<Eigenvalue> eigenvalues;   // real roots with multiplicity
  int complex_pair_degree = 0;           // leftover non-real degree, if any
};

struct FixedPointAnalysis {
  std::vector<FixedPointReport> points;
  /// Families of non-isolated fixed points, described symbolically
  /// (the mixed system has the line s = f = u = 0, w = z).
  std::vector<std::string> fixed_lines;
};

/// Exact fixed points and eigenvalue data of the compactified step maps
/// (dp1-sfu and mixed-sfuzw).  Jacobians are computed by exact forward-mode
/// differentiation of the rational step map at the fixed point; eigenvalues
/// come from the exact characteristic polynomial via Sturm isolation refined
/// to `digits`.
FixedPointAnalysis fixed_point_analysis(SystemKind kind, const WeightParams& p,
                                        int digits);

/// Exact Jacobian of the compactified step map at an exact state.
std::vector<std::vector<Rational>> step_jacobian(SystemKind kind,
                                                 const WeightParams& p,
                                                 const std::vector<Rational>& at);

}  // namespace mapcount::painleve
