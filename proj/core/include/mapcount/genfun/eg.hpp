#pragma once

#include <string>
#include <vector>

#include "mapcount/bigfloat.hpp"
#include "mapcount/genfun/qrecurrence.hpp"
#include "mapcount/rational.hpp"
#include "mapcount/series.hpp"

namespace mapcount::genfun {

/// Seed data for the genus-g generating function in partial-fraction form
///   e_g(z0) = C + sum_l q0[l] / (nu - (nu-1) z0)^(2g+l-2),  l = 0..3g-3.
/// The optional band seed V_{e,g}^(1) feeds the 4-valent contraction route.
struct GeneratingFunctionData {
  int g = 2;
  int nu = 2;
  Rational C;
  std::vector<Rational> q0;            // length 3g-2
  std::vector<Rational> v1_band;       // optional, length 5g-5

  void validate() const;
  std::string to_json() const;
  static GeneratingFunctionData from_json(const std::string& text);
};

/// q^(1) from q^(0) by one t-derivative of the partial fraction form:
/// q_l^(1) = (nu-1)(2g+l-2) q_l^(0).
QVector q1_from_data(const GeneratingFunctionData& data);

/// e_g evaluated at a numeric or series z0 argument.
Rational eg_eval(const GeneratingFunctionData& data, const Rational& z0);
BigFloat eg_eval(const GeneratingFunctionData& data, const BigFloat& z0);
Series<Rational> eg_eval(const GeneratingFunctionData& data,
                         const Series<Rational>& z0);

/// Counts (-1)^j d^j e_g/dt^j |_{t=0} for j = 1..j_max, extracted from the
/// Taylor series of e_g composed with the z0(t) string-equation series.
std::vector<Rational> eg_derivative_series(const GeneratingFunctionData& data,
                                           int j_max);

/// Trivalent map counts for genus 0, 1, 2 from the closed-form e_g over the
/// trivalent string equation 1 = z0^2 - 72 t^2 z0^3 (counts vanish for odd
/// j, where 3j is odd).
std::vector<Rational> trivalent_counts(int g, int j_max);

/// Series solution of the trivalent string equation with z0(0) = 1.
Series<Rational> trivalent_z0_series(int order);

}  // namespace mapcount::genfun
