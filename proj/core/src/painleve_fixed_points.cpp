#include "mapcount/painleve/fixed_points.hpp"

#include <array>

#include "mapcount/dual.hpp"
#include "mapcount/errors.hpp"
#include "mapcount/painleve/systems.hpp"

namespace mapcount::painleve {

namespace {

using DualQ = Dual<Rational>;

std::vector<Rational> step_exact(SystemKind kind, const WeightParams& p,
                                 const std::vector<Rational>& v) {
  const auto make = [](long c) { return Rational(c); };
  if (kind == SystemKind::dp1_sfu) {
    const auto r = Dp1Sfu::step(std::array<Rational, 3>{v[0], v[1], v[2]},
                                p.gamma(), make);
    return {r[0], r[1], r[2]};
  }
  const auto r = MixedSfuzw::step(
      std::array<Rational, 5>{v[0], v[1], v[2], v[3], v[4]}, p.gamma(),
      p.zeta(), p.eta(), make);
  return {r[0], r[1], r[2], r[3], r[4]};
}

}  // namespace

std::vector<std::vector<Rational>> step_jacobian(
    SystemKind kind, const WeightParams& p, const std::vector<Rational>& at) {
  if (kind != SystemKind::dp1_sfu && kind != SystemKind::mixed_sfuzw)
    throw ValidationError("Jacobian analysis covers the compactified systems");
  const size_t d = at.size();
  const auto make = [](long c) { return DualQ(Rational(c)); };
  std::vector<std::vector<Rational>> jac(d, std::vector<Rational>(d, Rational(0)));
  for (size_t col = 0; col < d; ++col) {
    std::vector<DualQ> v;
    v.reserve(d);
    for (size_t i = 0; i < d; ++i)
      v.push_back(i == col ? DualQ::seeded(at[i]) : DualQ(at[i]));
    std::vector<DualQ> out;
    if (kind == SystemKind::dp1_sfu) {
      const auto r = Dp1Sfu::step(std::array<DualQ, 3>{v[0], v[1], v[2]},
                                  DualQ(p.gamma()), make);
      out = {r[0], r[1], r[2]};
    } else {
      const auto r = MixedSfuzw::step(
          std::array<DualQ, 5>{v[0], v[1], v[2], v[3], v[4]},
          DualQ(p.gamma()), DualQ(p.zeta()), DualQ(p.eta()), make);
      out = {r[0], r[1], r[2], r[3], r[4]};
    }
    for (size_t row = 0; row < d; ++row) jac[row][col] = out[row].deriv;
  }
  return jac;
}

FixedPointAnalysis fixed_point_analysis(SystemKind kind, const WeightParams& p,
                                        int digits) {
  if (kind != SystemKind::dp1_sfu && kind != SystemKind::mixed_sfuzw)
    throw ValidationError("fixed-point analysis covers the compactified systems");
  std::vector<std::vector<Rational>> points;
  FixedPointAnalysis out;
  if (kind == SystemKind::dp1_sfu) {
    points.push_back({Rational(2), Rational(2), Rational(0)});
    points.push_back({Rational(0), Rational(0), Rational(0)});
  } else {
    const Rational w = -(p.eta() / Rational(3));
    points.push_back({Rational(2), Rational(2), Rational(0), w, w});
    out.fixed_lines.push_back("s = 0, f = 0, u = 0, w = z (pointwise fixed)");
  }
  for (const auto& pt : points) {
    if (step_exact(kind, p, pt) != pt)
      throw Error("internal: analytic fixed point does not map to itself");
    FixedPointReport rep;
    rep.point = pt;
    rep.characteristic = characteristic_polynomial(step_jacobian(kind, p, pt));
    const auto factors = squarefree_decomposition(rep.characteristic);
    for (size_t i = 0; i < factors.size(); ++i) {
      const Polynomial& a = factors[i];
      if (a.degree() <= 0) continue;
      const int mult = static_cast<int>(i) + 1;
      const auto roots = isolate_real_roots(a, Rational(1, 1024));
      for (const auto& iv : roots)
        rep.eigenvalues.push_back({refine_root(a, iv, digits), mult});
      rep.complex_pair_degree +=
          mult * (a.degree() - static_cast<int>(roots.size()));
    }
    out.points.push_back(std::move(rep));
  }
  return out;
}

}  // namespace mapcount::painleve
