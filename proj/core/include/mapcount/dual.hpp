#pragma once

#include "mapcount/errors.hpp"

namespace mapcount {

/// First-order dual number a + b*eps over a field R, used to differentiate
/// rational step maps exactly (one state coordinate seeded per evaluation).
template <class R>
struct Dual {
  R value;
  R deriv;

  Dual() : value(0), deriv(0) {}
  Dual(long n) : value(n), deriv(0) {}  // NOLINT: implicit by design
  explicit Dual(R v) : value(std::move(v)), deriv(0) {}
  Dual(R v, R d) : value(std::move(v)), deriv(std::move(d)) {}

  static Dual seeded(R v) { return Dual(std::move(v), R(1)); }

  friend Dual operator+(const Dual& a, const Dual& b) {
    return Dual(a.value + b.value, a.deriv + b.deriv);
  }
  friend Dual operator-(const Dual& a, const Dual& b) {
    return Dual(a.value - b.value, a.deriv - b.deriv);
  }
  Dual operator-() const { return Dual(-value, -deriv); }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return Dual(a.value * b.value, a.value * b.deriv + a.deriv * b.value);
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    if (b.value.is_zero()) throw DomainError("dual division by zero value");
    const R q = a.value / b.value;
    return Dual(q, (a.deriv - q * b.deriv) / b.value);
  }
  Dual& operator+=(const Dual& o) { return *this = *this + o; }
  Dual& operator-=(const Dual& o) { return *this = *this - o; }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }

  friend bool operator==(const Dual& a, const Dual& b) {
    return a.value == b.value && a.deriv == b.deriv;
  }
  bool is_zero() const { return value.is_zero() && deriv.is_zero(); }
};

}  // namespace mapcount
