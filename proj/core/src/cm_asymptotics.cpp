#include "mapcount/cm/asymptotics.hpp"

#include <sstream>

#include "mapcount/errors.hpp"

namespace mapcount::cm {

BigFloat AsymptoticExpansion::evaluate(long n) const {
  if (c.empty()) throw DomainError("empty expansion");
  const int digits = c[0].precision_digits();
  const BigFloat rn = BigFloat(n, digits).sqrt();
  // sum c_k n^{-k/2} = rn * c_{-1} + c_0 + c_1/rn + ...
  BigFloat acc(0, digits);
  BigFloat pw = rn;
  for (size_t i = 0; i < c.size(); ++i) {
    acc += c[i] * pw;
    pw /= rn;
  }
  return acc;
}

std::string AsymptoticExpansion::to_csv() const {
  std::ostringstream os;
  os << "k,coefficient\n";
  for (size_t i = 0; i < c.size(); ++i)
    os << (static_cast<int>(i) - 1) << "," << c[i].to_string() << "\n";
  return os.str();
}

AsymptoticExpansion invert_to_n(const CmExpansion& cm,
                                const painleve::WeightParams& p, int order,
                                int digits) {
  if (order < -1) throw DomainError("invert_to_n needs order >= -1");
  if (cm.order < order + 1)
    throw DomainError(
        "order starvation: center-manifold order " + std::to_string(cm.order) +
        " cannot support expansion order " + std::to_string(order) +
        " (need at least order + 1)");
  const Rational gamma = p.gamma(), zeta = p.zeta(), eta = p.eta();
  const Rational r = Rational(1) / eta;
  const int m_max = order + 1;

  // T(u) = s(u) + f(u) + u - 1 evaluated at the numeric parameters
  const PSeries& s = cm.coordinate("s");
  const PSeries& f = cm.coordinate("f");
  std::vector<BigFloat> t(m_max + 1, BigFloat(0, digits));
  for (int k = 0; k <= m_max; ++k) {
    Rational tk = s.coeff(k).evaluate(gamma, zeta, eta) +
                  f.coeff(k).evaluate(gamma, zeta, eta);
    if (k == 0) tk -= Rational(1);
    if (k == 1) tk += Rational(1);
    t[k] = BigFloat(tk, digits);
  }
  if (t[0].sign() <= 0)
    throw DomainError("invert_to_n: nonpositive leading balance");

  // solve (r/N) v^2 = T0 + T1 e v + sum_{j>=2} Tj e^j v^j for v(e),
  // e = n^(-1/2), u = e v, negative branch
  const BigFloat rn(r / p.N, digits);
  std::vector<BigFloat> v(m_max + 1, BigFloat(0, digits));
  v[0] = -((t[0] / rn).sqrt());
  for (int m = 1; m <= m_max; ++m) {
    BigFloat rhs(0, digits);
    rhs += t[1] * v[m - 1];
    for (int j = 2; j <= m; ++j) {
      // (v^j)_{m-j}
      std::vector<BigFloat> pw(m_max + 1, BigFloat(0, digits));
      pw[0] = BigFloat(1, digits);
      for (int rep = 0; rep < j; ++rep) {
        std::vector<BigFloat> nx(m_max + 1, BigFloat(0, digits));
        for (int a = 0; a <= m - j; ++a)
          for (int b = 0; a + b <= m - j; ++b) nx[a + b] += pw[a] * v[b];
        pw = std::move(nx);
      }
      rhs += t[j] * pw[m - j];
    }
    for (int i = 1; i <= m - 1; ++i) rhs -= rn * (v[i] * v[m - i]);
    v[m] = rhs / (BigFloat(2, digits) * rn * v[0]);
  }

  // x = -1/(r u) = -(1/r) e^{-1} (1/v)
  std::vector<BigFloat> w(m_max + 1, BigFloat(0, digits));
  w[0] = BigFloat(1, digits) / v[0];
  for (int k = 1; k <= m_max; ++k) {
    BigFloat acc(0, digits);
    for (int i = 1; i <= k; ++i) acc += v[i] * w[k - i];
    w[k] = -(acc / v[0]);
  }
  AsymptoticExpansion out;
  out.c.reserve(m_max + 1);
  const BigFloat rinv = BigFloat(1, digits) / BigFloat(r, digits);
  for (int k = -1; k <= order; ++k) out.c.push_back(-(rinv * w[k + 1]));
  return out;
}

std::vector<BigFloat> orbit_distance(const painleve::OrbitRecord& orbit,
                                     const CmExpansion& cm,
                                     const painleve::WeightParams& p) {
  const int digits = orbit.precision_digits;
  const auto rows = cm.evaluate_at(p.gamma(), p.zeta(), p.eta());
  const size_t d = rows.size();
  if (!orbit.states.empty() && orbit.states[0].size() != d)
    throw ValidationError("orbit and expansion dimensions do not match");
  std::vector<std::vector<BigFloat>> coeff(d);
  for (size_t i = 0; i < d; ++i)
    for (const auto& q : rows[i]) coeff[i].emplace_back(q, digits);

  std::vector<BigFloat> out;
  out.reserve(orbit.states.size());
  const int c = cm.center_index;
  for (const auto& state : orbit.states) {
    const BigFloat& u = state[static_cast<size_t>(c)];
    BigFloat sq(0, digits);
    for (size_t i = 0; i < d; ++i) {
      if (static_cast<int>(i) == c) continue;
      // Horner at u
      BigFloat val(0, digits);
      for (int k = cm.order; k >= 0; --k) val = val * u + coeff[i][k];
      const BigFloat diff = state[i] - val;
      sq += diff * diff;
    }
    out.push_back(sq.sqrt());
  }
  return out;
}

}  // namespace mapcount::cm
