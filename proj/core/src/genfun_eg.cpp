#include "mapcount/genfun/eg.hpp"

#include "json.hpp"
#include "mapcount/combinatorics.hpp"
#include "mapcount/errors.hpp"
#include "mapcount/genfun/string_equation.hpp"

namespace mapcount::genfun {

void GeneratingFunctionData::validate() const {
  if (g < 2 || nu < 2)
    throw DomainError("generating-function data needs g >= 2, nu >= 2");
  if (static_cast<int>(q0.size()) != 3 * g - 2)
    throw DomainError("q0 must have length 3g - 2");
  if (!v1_band.empty() && static_cast<int>(v1_band.size()) != 5 * g - 5)
    throw DomainError("V1_band must have length 5g - 5");
}

std::string GeneratingFunctionData::to_json() const {
  nlohmann::json j;
  j["genus"] = g;
  j["nu"] = nu;
  j["C"] = C.to_string();
  auto arr = nlohmann::json::array();
  for (const auto& q : q0) arr.push_back(q.to_string());
  j["q0"] = arr;
  if (!v1_band.empty()) {
    auto band = nlohmann::json::array();
    for (const auto& x : v1_band) band.push_back(x.to_string());
    j["V1_band"] = band;
  }
  return j.dump(2);
}

GeneratingFunctionData GeneratingFunctionData::from_json(
    const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("seed data is not valid JSON: ") + e.what());
  }
  GeneratingFunctionData d;
  try {
    d.g = j.at("genus").get<int>();
    d.nu = j.at("nu").get<int>();
    d.C = Rational(j.at("C").get<std::string>());
    for (const auto& s : j.at("q0")) d.q0.emplace_back(s.get<std::string>());
    if (j.contains("V1_band"))
      for (const auto& s : j.at("V1_band"))
        d.v1_band.emplace_back(s.get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed seed data: ") + e.what());
  }
  d.validate();
  return d;
}

QVector q1_from_data(const GeneratingFunctionData& data) {
  data.validate();
  QVector q;
  q.g = data.g;
  q.j = 1;
  q.nu = data.nu;
  q.entries.reserve(data.q0.size());
  for (int l = 0; l < static_cast<int>(data.q0.size()); ++l)
    q.entries.push_back(Rational(static_cast<long>(data.nu - 1) *
                                 (2 * data.g + l - 2)) *
                        data.q0[l]);
  return q;
}

Rational eg_eval(const GeneratingFunctionData& data, const Rational& z0) {
  data.validate();
  const Rational den = Rational(data.nu) - Rational(data.nu - 1) * z0;
  if (den.is_zero()) throw DomainError("e_g singular at z0 = nu/(nu-1)");
  Rational s = data.C;
  for (int l = 0; l < static_cast<int>(data.q0.size()); ++l)
    s += data.q0[l] / den.pow(2 * data.g + l - 2);
  return s;
}

BigFloat eg_eval(const GeneratingFunctionData& data, const BigFloat& z0) {
  data.validate();
  const int digits = z0.precision_digits();
  const BigFloat den =
      BigFloat(data.nu, digits) - BigFloat(data.nu - 1, digits) * z0;
  if (den.is_zero()) throw DomainError("e_g singular at z0 = nu/(nu-1)");
  BigFloat s(data.C, digits);
  for (int l = 0; l < static_cast<int>(data.q0.size()); ++l)
    s += BigFloat(data.q0[l], digits) / den.pow_si(2 * data.g + l - 2);
  return s;
}

Series<Rational> eg_eval(const GeneratingFunctionData& data,
                         const Series<Rational>& z0) {
  data.validate();
  Series<Rational> den = -(Rational(data.nu - 1) * z0) + Rational(data.nu);
  if (den.coeff(0).is_zero())
    throw DomainError("e_g singular at z0 = nu/(nu-1)");
  const Series<Rational> inv = den.inverse();
  Series<Rational> s =
      Series<Rational>::constant(z0.variable(), data.C, z0.order());
  Series<Rational> p = inv.pow(2 * data.g - 2);
  for (int l = 0; l < static_cast<int>(data.q0.size()); ++l) {
    s = s + data.q0[l] * p;
    if (l + 1 < static_cast<int>(data.q0.size())) p = p * inv;
  }
  return s;
}

std::vector<Rational> eg_derivative_series(const GeneratingFunctionData& data,
                                           int j_max) {
  if (j_max < 1) throw DomainError("eg_derivative_series needs j_max >= 1");
  const Series<Rational> z0 = z0_series(data.nu, j_max);
  const Series<Rational> eg = eg_eval(data, z0);
  std::vector<Rational> counts;
  counts.reserve(j_max);
  Rational fact(1);
  for (int j = 1; j <= j_max; ++j) {
    fact *= Rational(j);
    const Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
    counts.push_back(sign * fact * eg.coeff(j));
  }
  return counts;
}

Series<Rational> trivalent_z0_series(int order) {
  // Newton iteration on P(z) = z^2 - 72 t^2 z^3 - 1 from z = 1
  Series<Rational> z = Series<Rational>::constant("t", Rational(1), order);
  const auto shift2 = [order](const Series<Rational>& s) {
    Series<Rational> r("t", order);
    for (int k = 2; k <= order; ++k) r.set_coeff(k, Rational(72) * s.coeff(k - 2));
    return r;  // 72 t^2 s
  };
  for (int it = 0; it <= order + 1; ++it) {
    const Series<Rational> z2 = z * z;
    const Series<Rational> p = z2 - shift2(z2 * z) - Rational(1);
    const Series<Rational> dp = Rational(2) * z - Rational(3) * shift2(z2);
    z = z - p * dp.inverse();
  }
  return z;
}

std::vector<Rational> trivalent_counts(int g, int j_max) {
  if (g < 0 || g > 2) throw DomainError("trivalent closed forms cover g in {0,1,2}");
  if (j_max < 1) throw DomainError("trivalent_counts needs j_max >= 1");
  const int order = j_max;
  const Series<Rational> z0 = trivalent_z0_series(order);
  const Series<Rational> z2 = z0 * z0;
  Series<Rational> eg("t", order);
  if (g == 0) {
    // ln(z0)/2 + (z0 - 1)(z0^2 - 6 z0 - 3) / (12 z0 + 12)
    const Series<Rational> num =
        (z0 - Rational(1)) * (z2 - Rational(6) * z0 - Rational(3));
    const Series<Rational> den = Rational(12) * z0 + Rational(12);
    eg = Rational(1, 2) * z0.log() + num * den.inverse();
  } else if (g == 1) {
    // -ln(3/2 - z0^2/2)/24
    const Series<Rational> arg =
        -(Rational(1, 2) * z2) + Rational(3, 2);
    eg = Rational(-1, 24) * arg.log();
  } else {
    // (z0^2-1)^3 (4 z0^4 - 93 z0^2 - 261) / (960 (z0^2-3)^5)
    const Series<Rational> a = z2 - Rational(1);
    const Series<Rational> b =
        Rational(4) * (z2 * z2) - Rational(93) * z2 - Rational(261);
    const Series<Rational> den = Rational(960) * (z2 - Rational(3)).pow(5);
    eg = a.pow(3) * b * den.inverse();
  }
  std::vector<Rational> counts;
  counts.reserve(j_max);
  Rational fact(1);
  for (int j = 1; j <= j_max; ++j) {
    fact *= Rational(j);
    const Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
    counts.push_back(sign * fact * eg.coeff(j));
  }
  return counts;
}

}  // namespace mapcount::genfun
