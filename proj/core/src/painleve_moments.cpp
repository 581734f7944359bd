#include "mapcount/painleve/moments.hpp"

#include "mapcount/errors.hpp"

namespace mapcount::painleve {

namespace {

// determinant by fraction-free-ish Gaussian elimination at working precision
BigFloat det(std::vector<std::vector<BigFloat>> m, int digits) {
  const size_t n = m.size();
  BigFloat d(1, digits);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    for (size_t r = col + 1; r < n; ++r)
      if (m[r][col].abs() > m[pivot][col].abs()) pivot = r;
    if (m[pivot][col].is_zero()) return BigFloat(0, digits);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      d = -d;
    }
    d *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      const BigFloat f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return d;
}

}  // namespace

std::vector<BigFloat> weight_moments(const WeightParams& p, int i_max,
                                     int digits) {
  p.validate();
  if (i_max < 0) throw DomainError("weight_moments needs i_max >= 0");
  const int work = digits + 40;
  const BigFloat n(p.N, work), t3(p.t3, work), t4(p.t4, work);
  const BigFloat half(Rational(1, 2), work);
  const auto potential = [&](const BigFloat& l) {
    return n * (half * l * l + t3 * l * l * l + t4 * l * l * l * l);
  };
  const auto weight = [&](const BigFloat& l) { return (-potential(l)).exp(); };

  // truncation point: exponent beyond the target everywhere outside [-L, L]
  const BigFloat target_exponent =
      BigFloat(digits + 30, work) * BigFloat(10, work).log();
  BigFloat limit(2, work);
  while (potential(limit) < target_exponent ||
         potential(-limit) < target_exponent) {
    limit *= BigFloat(2, work);
    if (limit > BigFloat(1L << 20, work))
      throw PrecisionError("quadrature truncation point ran away");
  }

  // trapezoid with interval doubling; all moments share the exp evaluations
  const BigFloat tol = BigFloat::pow10(-(digits + 8), work);
  std::vector<BigFloat> sums(i_max + 1, BigFloat(0, work));
  long intervals = 64;
  const auto add_node = [&](const BigFloat& l, std::vector<BigFloat>& acc) {
    const BigFloat w = weight(l);
    BigFloat pw = w;
    acc[0] += pw;
    for (int i = 1; i <= i_max; ++i) {
      pw *= l;
      acc[i] += pw;
    }
  };
  BigFloat h = (limit + limit) / BigFloat(intervals, work);
  {
    std::vector<BigFloat> acc(i_max + 1, BigFloat(0, work));
    add_node(-limit, acc);
    add_node(limit, acc);
    for (int i = 0; i <= i_max; ++i) sums[i] = half * acc[i];
    std::vector<BigFloat> interior(i_max + 1, BigFloat(0, work));
    for (long k = 1; k < intervals; ++k)
      add_node(-limit + BigFloat(k, work) * h, interior);
    for (int i = 0; i <= i_max; ++i) sums[i] += interior[i];
  }
  std::vector<BigFloat> result(i_max + 1, BigFloat(0, work));
  for (int i = 0; i <= i_max; ++i) result[i] = h * sums[i];

  int stable_rounds = 0;
  for (int round = 0; round < 40 && stable_rounds < 2; ++round) {
    // add midpoints, halve h
    std::vector<BigFloat> mid(i_max + 1, BigFloat(0, work));
    const BigFloat h2 = h / BigFloat(2, work);
    for (long k = 0; k < intervals; ++k)
      add_node(-limit + BigFloat(k, work) * h + h2, mid);
    intervals *= 2;
    h = h2;
    std::vector<BigFloat> next(i_max + 1, BigFloat(0, work));
    bool close = true;
    for (int i = 0; i <= i_max; ++i) {
      sums[i] += mid[i];
      next[i] = h * sums[i];
      const BigFloat delta = (next[i] - result[i]).abs();
      if (delta > tol * (BigFloat(1, work) + next[i].abs())) close = false;
    }
    result = std::move(next);
    stable_rounds = close ? stable_rounds + 1 : 0;
  }
  if (stable_rounds < 2)
    throw PrecisionError("moment quadrature did not reach the requested precision");
  for (auto& m : result) m = m.with_precision(digits);
  return result;
}

JacobiCoefficients jacobi_from_moments(const std::vector<BigFloat>& mu, int k) {
  if (static_cast<int>(mu.size()) < 2 * k + 2)
    throw DomainError("need moments mu_0..mu_{2k+1} for a_0..a_k, b_1^2..b_k^2");
  const int work = mu[0].precision_digits();
  const auto hankel = [&](int n) {
    std::vector<std::vector<BigFloat>> m(n, std::vector<BigFloat>(n, BigFloat(0, work)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = mu[i + j];
    return m;
  };
  const auto shifted = [&](int n) {
    auto m = hankel(n);
    for (int i = 0; i < n; ++i) m[i][n - 1] = mu[i + n];
    return m;
  };
  std::vector<BigFloat> d(k + 2, BigFloat(0, work));
  std::vector<BigFloat> dt(k + 2, BigFloat(0, work));
  d[0] = BigFloat(1, work);
  dt[0] = BigFloat(0, work);
  BigFloat scale(1, work);
  for (const auto& m : mu) scale = std::max(scale, m.abs());
  for (int n = 1; n <= k + 1; ++n) {
    d[n] = det(hankel(n), work);
    dt[n] = det(shifted(n), work);
    // more than half the working digits cancelled: demand a retry at higher
    // precision instead of returning garbage coefficients
    if (d[n].abs() < scale.pow_si(n) * BigFloat::pow10(-work / 2, work))
      throw PrecisionError("Hankel determinant lost over half the digits");
  }
  JacobiCoefficients out;
  for (int n = 0; n <= k; ++n)
    out.a.push_back(dt[n + 1] / d[n + 1] -
                    (n > 0 ? dt[n] / d[n] : BigFloat(0, work)));
  for (int n = 1; n <= k; ++n) out.b2.push_back(d[n + 1] * d[n - 1] / (d[n] * d[n]));
  return out;
}

std::vector<BigFloat> freud_seed_quartic(const WeightParams& p, int digits) {
  if (!p.t3.is_zero())
    throw ValidationError("quartic seed needs t3 = 0 (use the mixed seed)");
  const auto mu = weight_moments(p, 2, digits);
  return {mu[2] / mu[0], BigFloat(0, digits)};
}

std::vector<BigFloat> freud_seed_mixed(const WeightParams& p, int digits) {
  if (p.t3.is_zero())
    throw ValidationError("mixed seed needs t3 != 0 (use the quartic seed)");
  int work = digits + 20;
  for (int attempt = 0; attempt < 3; ++attempt) {
    const auto mu = weight_moments(p, 5, work);
    // condition check: Hankel determinants should not lose more than half
    // the working digits relative to the moment scale
    try {
      // a = (a_0, a_1, a_2), b2 = (b_1^2, b_2^2); z_k = a_k / sqrt(zeta)
      const auto jc = jacobi_from_moments(mu, 2);
      const BigFloat sz(p.sqrt_zeta(), work);
      return {jc.b2[1].with_precision(digits), jc.b2[0].with_precision(digits),
              (jc.a[2] / sz).with_precision(digits),
              (jc.a[1] / sz).with_precision(digits)};
    } catch (const PrecisionError&) {
      work *= 2;
    }
  }
  throw PrecisionError("mixed Freud seed: Hankel determinants too ill-conditioned");
}

}  // namespace mapcount::painleve
