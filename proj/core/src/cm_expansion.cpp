#include "mapcount/cm/expansion.hpp"

#include <algorithm>
#include <array>

#include "json.hpp"
#include "mapcount/errors.hpp"
#include "mapcount/painleve/systems.hpp"

namespace mapcount::cm {

namespace {

using PR = ParamRational;

std::vector<PR> solve_linear(std::vector<std::vector<PR>> m, std::vector<PR> rhs,
                             const char* what) {
  const size_t n = m.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw DomainError(std::string(what) + ": singular pivot");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const PR inv = PR(1) / m[col][col];
    for (size_t c = col; c < n; ++c) m[col][c] *= inv;
    rhs[col] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const PR f = m[r][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

int rank(std::vector<std::vector<PR>> m) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    const PR inv = PR(1) / m[r][c];
    for (size_t cc = c; cc < cols; ++cc) m[r][cc] *= inv;
    for (size_t rr = 0; rr < rows; ++rr) {
      if (rr == r || m[rr][c].is_zero()) continue;
      const PR f = m[rr][c];
      for (size_t cc = c; cc < cols; ++cc) m[rr][cc] -= f * m[r][cc];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

SymbolicSystem dp1_symbolic() {
  SymbolicSystem sys;
  sys.name = "dp1";
  sys.labels = {"s", "f", "u"};
  sys.center_index = 2;
  sys.fixed_point = {PR(2), PR(2), PR(0)};
  sys.step_series = [](const std::vector<PSeries>& v) {
    const auto& var = v[0].variable();
    const int order = v[0].order();
    const auto make = [&](long c) {
      return PSeries::constant(var, PR(c), order);
    };
    const auto r = painleve::Dp1Sfu::step(
        std::array<PSeries, 3>{v[0], v[1], v[2]}, make(0) + PR::gamma(), make);
    return std::vector<PSeries>{r[0], r[1], r[2]};
  };
  sys.step_dual = [](const std::vector<PDual>& v) {
    const auto make = [](long c) { return PDual(PR(c)); };
    const auto r = painleve::Dp1Sfu::step(std::array<PDual, 3>{v[0], v[1], v[2]},
                                          PDual(PR::gamma()), make);
    return std::vector<PDual>{r[0], r[1], r[2]};
  };
  return sys;
}

SymbolicSystem mixed_symbolic() {
  SymbolicSystem sys;
  sys.name = "mixed";
  sys.labels = {"s", "f", "u", "z", "w"};
  sys.center_index = 2;
  const PR eta = PR::eta();
  sys.fixed_point = {PR(2), PR(2), PR(0), -(eta / PR(3)), -(eta / PR(3))};
  sys.step_series = [](const std::vector<PSeries>& v) {
    const auto& var = v[0].variable();
    const int order = v[0].order();
    const auto make = [&](long c) {
      return PSeries::constant(var, PR(c), order);
    };
    const auto r = painleve::MixedSfuzw::step(
        std::array<PSeries, 5>{v[0], v[1], v[2], v[3], v[4]},
        make(0) + PR::gamma(), make(0) + PR::zeta(), make(0) + PR::eta(),
        make);
    return std::vector<PSeries>{r[0], r[1], r[2], r[3], r[4]};
  };
  sys.step_dual = [](const std::vector<PDual>& v) {
    const auto make = [](long c) { return PDual(PR(c)); };
    const auto r = painleve::MixedSfuzw::step(
        std::array<PDual, 5>{v[0], v[1], v[2], v[3], v[4]},
        PDual(PR::gamma()), PDual(PR::zeta()), PDual(PR::eta()), make);
    return std::vector<PDual>{r[0], r[1], r[2], r[3], r[4]};
  };
  return sys;
}

CmExpansion cm_expand(const SymbolicSystem& sys, int order) {
  if (order < 1) throw DomainError("cm_expand needs order >= 1");
  const int d = sys.dimension();
  const int c = sys.center_index;
  if (!sys.fixed_point[c].is_zero())
    throw DomainError("cm_expand expects the center coordinate to vanish at the fixed point");

  // exact Jacobian at the fixed point
  std::vector<std::vector<PR>> jac(d, std::vector<PR>(d));
  for (int col = 0; col < d; ++col) {
    std::vector<PDual> v;
    v.reserve(d);
    for (int i = 0; i < d; ++i)
      v.push_back(i == col ? PDual::seeded(sys.fixed_point[i])
                           : PDual(sys.fixed_point[i]));
    const auto out = sys.step_dual(v);
    for (int row = 0; row < d; ++row) {
      if (!(out[row].value == sys.fixed_point[row]))
        throw DomainError("cm_expand: supplied point is not fixed");
      jac[row][col] = out[row].deriv;
    }
  }

  // the eigenvalue-1 eigenspace must be one-dimensional
  std::vector<std::vector<PR>> jmi = jac;
  for (int i = 0; i < d; ++i) jmi[i][i] -= PR(1);
  if (rank(jmi) != d - 1)
    throw DomainError("center-dimension error: eigenvalue-1 space is not one-dimensional");

  std::vector<int> idx_t;
  for (int i = 0; i < d; ++i)
    if (i != c) idx_t.push_back(i);

  // center eigenvector normalized to u-component 1: (A - I) h1 = -c_col
  std::vector<std::vector<PR>> a_m(d - 1, std::vector<PR>(d - 1));
  std::vector<PR> c_col(d - 1), b_row(d - 1);
  for (int i = 0; i < d - 1; ++i) {
    for (int j = 0; j < d - 1; ++j) a_m[i][j] = jac[idx_t[i]][idx_t[j]];
    c_col[i] = jac[idx_t[i]][c];
    b_row[i] = jac[c][idx_t[i]];
  }
  std::vector<std::vector<PR>> ami = a_m;
  for (int i = 0; i < d - 1; ++i) ami[i][i] -= PR(1);
  std::vector<PR> neg_c(d - 1);
  for (int i = 0; i < d - 1; ++i) neg_c[i] = -c_col[i];
  const std::vector<PR> h1 =
      solve_linear(ami, neg_c, "center-dimension error (graph over u)");
  {
    PR check = jac[c][c];
    for (int i = 0; i < d - 1; ++i) check += b_row[i] * h1[i];
    if (!(check == PR(1)))
      throw DomainError("center-dimension error: center eigenvalue is not 1");
  }

  // the per-order operator A - I - h1 b^T (constant because the center
  // eigenvalue is 1, so no new resonances can appear at higher orders)
  std::vector<std::vector<PR>> solver(d - 1, std::vector<PR>(d - 1));
  for (int i = 0; i < d - 1; ++i)
    for (int j = 0; j < d - 1; ++j)
      solver[i][j] = ami[i][j] - h1[i] * b_row[j];

  CmExpansion cm;
  cm.system = sys.name;
  cm.labels = sys.labels;
  cm.center_index = c;
  cm.order = order;
  cm.fixed_point = sys.fixed_point;
  std::vector<PSeries> h;
  for (int i = 0; i < d; ++i) {
    PSeries s_i = PSeries::constant("u", sys.fixed_point[i], order);
    if (i == c) {
      s_i.set_coeff(1, PR(1));
    } else {
      const int t = static_cast<int>(std::find(idx_t.begin(), idx_t.end(), i) -
                                     idx_t.begin());
      if (order >= 1) s_i.set_coeff(1, h1[t]);
    }
    h.push_back(std::move(s_i));
  }

  for (int k = 2; k <= order; ++k) {
    const std::vector<PSeries> img = sys.step_series(h);
    const PSeries u_dyn = img[c];
    std::vector<PR> defect(d - 1);
    for (int t = 0; t < d - 1; ++t) {
      const PSeries rhs = h[idx_t[t]].compose(u_dyn);
      defect[t] = (img[idx_t[t]] - rhs).coeff(k);
    }
    bool all_zero = true;
    for (const auto& g : defect) all_zero = all_zero && g.is_zero();
    if (all_zero) continue;
    std::vector<PR> neg(d - 1);
    for (int t = 0; t < d - 1; ++t) neg[t] = -defect[t];
    const std::vector<PR> hk =
        solve_linear(solver, neg, "non-hyperbolic transverse direction at order solve");
    for (int t = 0; t < d - 1; ++t) h[idx_t[t]].set_coeff(k, hk[t]);
  }

  cm.series = h;
  cm.u_dynamics = sys.step_series(h)[c];
  return cm;
}

const PSeries& CmExpansion::coordinate(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return series[i];
  throw DomainError("no coordinate labeled '" + label + "'");
}

std::vector<std::vector<Rational>> CmExpansion::evaluate_at(
    const Rational& gamma, const Rational& zeta, const Rational& eta) const {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(series.size());
  for (const auto& s : series) {
    std::vector<Rational> row;
    row.reserve(order + 1);
    for (int k = 0; k <= order; ++k)
      row.push_back(s.coeff(k).evaluate(gamma, zeta, eta));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string CmExpansion::to_json() const {
  nlohmann::json j;
  j["system"] = system;
  j["labels"] = labels;
  j["center"] = labels[center_index];
  j["center_index"] = center_index;
  j["order"] = order;
  auto fp = nlohmann::json::array();
  for (const auto& p : fixed_point) fp.push_back(p.to_string());
  j["fixed_point"] = fp;
  nlohmann::json ser;
  for (size_t i = 0; i < series.size(); ++i) {
    auto arr = nlohmann::json::array();
    for (int k = 0; k <= order; ++k) arr.push_back(series[i].coeff(k).to_string());
    ser[labels[i]] = arr;
  }
  j["series"] = ser;
  auto ud = nlohmann::json::array();
  for (int k = 0; k <= u_dynamics.order(); ++k)
    ud.push_back(u_dynamics.coeff(k).to_string());
  j["u_dynamics"] = ud;
  return j.dump(2);
}

CmExpansion CmExpansion::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("expansion file is not valid JSON: ") + e.what());
  }
  CmExpansion cm;
  try {
    cm.system = j.at("system").get<std::string>();
    for (const auto& l : j.at("labels")) cm.labels.push_back(l.get<std::string>());
    cm.center_index = j.at("center_index").get<int>();
    cm.order = j.at("order").get<int>();
    for (const auto& p : j.at("fixed_point"))
      cm.fixed_point.push_back(ParamRational::from_string(p.get<std::string>()));
    for (const auto& label : cm.labels) {
      PSeries s("u", cm.order);
      const auto& arr = j.at("series").at(label);
      for (int k = 0; k <= cm.order; ++k)
        s.set_coeff(k, ParamRational::from_string(arr.at(k).get<std::string>()));
      cm.series.push_back(std::move(s));
    }
    const auto& ud = j.at("u_dynamics");
    PSeries u("u", static_cast<int>(ud.size()) - 1);
    for (size_t k = 0; k < ud.size(); ++k)
      u.set_coeff(static_cast<int>(k),
                  ParamRational::from_string(ud.at(k).get<std::string>()));
    cm.u_dynamics = std::move(u);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed expansion file: ") + e.what());
  }
  return cm;
}

}  // namespace mapcount::cm
