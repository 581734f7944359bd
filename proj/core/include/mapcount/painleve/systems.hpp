#pragma once

#include <array>

#include "mapcount/errors.hpp"

namespace mapcount::painleve {

// The discrete dynamical systems, written once over a generic coefficient
// field T so the same formulas drive high-precision orbits (BigFloat), exact
// orbits (Rational), Jacobians (Dual<...>), and symbolic center-manifold
// series (Series<ParamRational>).  `make` lifts small integer constants into
// T; division by a vanishing denominator throws PoleError naming it.

namespace detail {
template <class T>
void require_nonzero(const T& d, const char* what) {
  if (d.is_zero()) throw PoleError(what);
}
}  // namespace detail

/// dP1 in raw coordinates: state (x, y) = (x_n, x_{n-1}), non-autonomous.
///   x' = n/(N r x) - 1/r - x - y,  y' = x.
struct Dp1Raw {
  static constexpr int dimension = 2;
  template <class T, class Make>
  static std::array<T, 2> step(const std::array<T, 2>& v, const T& n,
                               const T& big_n, const T& r, Make make) {
    const T& x = v[0];
    const T& y = v[1];
    detail::require_nonzero(x, "dP1 pole: x = 0");
    const T xp = n / (big_n * r * x) - make(1) / r - x - y;
    return {xp, x};
  }
};

/// dP1 compactified: state (s, f, u), parameter gamma = 1/(eta N).
///   Z = (u + f - 1)^-1,  s' = Z f,  f' = Z^2 (s + gamma u^2),  u' = Z u.
struct Dp1Sfu {
  static constexpr int dimension = 3;
  static constexpr int center = 2;  // u parameterizes the center direction
  template <class T, class Make>
  static std::array<T, 3> step(const std::array<T, 3>& v, const T& gamma,
                               Make make) {
    const T& s = v[0];
    const T& f = v[1];
    const T& u = v[2];
    const T den = u + f - make(1);
    detail::require_nonzero(den, "dP1 pole: u + f = 1");
    const T z = make(1) / den;
    return {z * f, z * z * (s + gamma * u * u), z * u};
  }
};

/// Mixed (3,4)-valence system in raw coordinates: state (x, y, z, w),
/// non-autonomous; parameters N, zeta, eta.
struct MixedRaw {
  static constexpr int dimension = 4;
  template <class T, class Make>
  static std::array<T, 4> step(const std::array<T, 4>& v, const T& n,
                               const T& big_n, const T& zeta, const T& eta,
                               Make make) {
    const T& x = v[0];
    const T& y = v[1];
    const T& z = v[2];
    const T& w = v[3];
    detail::require_nonzero(x, "mixed pole: x = 0");
    const T xp = ((-w - z) * eta - w * w - w * z - z * z) * zeta +
                 (n / (big_n * x) - make(1)) * eta - x - y;
    detail::require_nonzero(xp, "mixed pole: x_{n+1} = 0");
    const T zp = (-(eta * z * z) / xp - (z * z * z) / xp) * zeta +
                 (-(x / xp) - make(1) - z / xp) * eta - (x * w) / xp -
                 (make(2) * x * z) / xp - make(2) * z;
    return {xp, x, zp, z};
  }
};

/// Mixed system compactified: state (s, f, u, z, w); parameters gamma, zeta,
/// eta.  Z = (u+f-1)^-1, H = eta w + eta z + w^2 + w z + z^2, Q = Z H u/eta.
struct MixedSfuzw {
  static constexpr int dimension = 5;
  static constexpr int center = 2;
  template <class T, class Make>
  static std::array<T, 5> step(const std::array<T, 5>& v, const T& gamma,
                               const T& zeta, const T& eta, Make make) {
    const T& s = v[0];
    const T& f = v[1];
    const T& u = v[2];
    const T& z = v[3];
    const T& w = v[4];
    const T den = u + f - make(1);
    detail::require_nonzero(den, "mixed pole: u + f = 1");
    const T bigz = make(1) / den;
    const T h = eta * w + eta * z + w * w + w * z + z * z;
    const T q = bigz * h * u / eta;
    const T dq = zeta * q + make(1);
    detail::require_nonzero(dq, "mixed pole: zeta Q + 1 = 0");
    const T sp = (zeta * q + f * bigz) / dq;
    const T fp = -(bigz * ((-(gamma * u * u) - s) * bigz + zeta * q)) / (dq * dq);
    const T up = u * bigz / dq;
    const T zp =
        ((eta * bigz * u * z * z + bigz * u * z * z * z - eta * eta * q -
          make(2) * eta * q * z) *
             zeta +
         ((u - make(2)) * bigz - make(2)) * eta * z +
         (-bigz - make(1)) * eta * eta - eta * bigz * w) /
        (eta * dq);
    return {sp, fp, up, zp, z};
  }
};

/// Cubic-weight first-order recurrence: state (a, x), non-autonomous.
///   x' = -a/(3 t3) - a^2 - x,  a' = (n+1)/(3 N t3 x') - 1/(3 t3) - a.
struct QrtCubic {
  static constexpr int dimension = 2;
  template <class T, class Make>
  static std::array<T, 2> step(const std::array<T, 2>& v, const T& n,
                               const T& big_n, const T& t3, Make make) {
    const T& a = v[0];
    const T& x = v[1];
    detail::require_nonzero(t3, "cubic recurrence needs t3 != 0");
    const T xp = -(a / (make(3) * t3)) - a * a - x;
    detail::require_nonzero(xp, "cubic pole: x_{n+1} = 0");
    const T ap =
        (n + make(1)) / (make(3) * big_n * t3 * xp) - make(1) / (make(3) * t3) - a;
    return {ap, xp};
  }

  /// Autonomous biquadratic invariant K(x, a) = X A0 Y with X = (x^2, x, 1),
  /// Y = (a^2, a, 1) and A0 = [[0,0,-3t3],[-3t3,-1,0],[0,m/N,r]], the
  /// iteration index frozen at m = n+1.  (X A1 Y = 1 for the displayed A1.)
  template <class T, class Make>
  static T invariant(const std::array<T, 2>& v, const T& frozen_m,
                     const T& big_n, const T& t3, const T& r, Make make) {
    const T& a = v[0];
    const T& x = v[1];
    return -(make(3) * t3) * x * x - (make(3) * t3) * x * a * a - x * a +
           (frozen_m / big_n) * a + r;
  }
};

// Compactifying change of coordinates shared by the quartic (eta = 1/r) and
// mixed systems: s = y/x + 1 + eta/x, f = n eta/(N x^2) - y/x, u = -eta/x.
// The inverse recovers (x, y) and the iteration index n.

template <class T, class Make>
std::array<T, 3> sfu_from_raw(const T& x, const T& y, const T& n,
                              const T& big_n, const T& eta, Make make) {
  detail::require_nonzero(x, "transform pole: x = 0");
  const T s = y / x + make(1) + eta / x;
  const T f = n * eta / (big_n * x * x) - y / x;
  const T u = -(eta / x);
  return {s, f, u};
}

template <class T, class Make>
std::array<T, 3> raw_from_sfu(const std::array<T, 3>& sfu, const T& big_n,
                              const T& eta, Make make) {
  const T& s = sfu[0];
  const T& f = sfu[1];
  const T& u = sfu[2];
  detail::require_nonzero(u, "inverse transform pole: u = 0");
  const T x = -(eta / u);
  const T y = x * (s - make(1) + u);
  const T n = big_n * (f + s - make(1) + u) * x * x / eta;
  return {x, y, n};
}

/// dP1 restricted to the invariant plane u = 0: state (s, f).
///   Z = (f - 1)^-1,  s' = Z f,  f' = s Z^2.
struct PlanarRestricted {
  static constexpr int dimension = 2;
  template <class T, class Make>
  static std::array<T, 2> step(const std::array<T, 2>& v, Make make) {
    const T& s = v[0];
    const T& f = v[1];
    const T den = f - make(1);
    detail::require_nonzero(den, "planar pole: f = 1");
    const T z = make(1) / den;
    return {z * f, s * z * z};
  }
};

}  // namespace mapcount::painleve
