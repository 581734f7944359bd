#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "mapcount/errors.hpp"

namespace mapcount {

/// Univariate truncated power series over an exact (or floating) coefficient
/// field R.  A series of order n stores coefficients of u^0 .. u^n and makes
/// no claim beyond u^n; binary operations truncate to the smaller operand
/// order so results never over-claim.
template <class R>
class Series {
 public:
  Series(std::string var, int order)
      : var_(std::move(var)), c_(static_cast<size_t>(order) + 1, R(0)) {
    if (order < 0) throw DomainError("series order must be >= 0");
  }
  Series(std::string var, std::vector<R> coeffs)
      : var_(std::move(var)), c_(std::move(coeffs)) {
    if (c_.empty()) throw DomainError("series needs at least the constant term");
  }

  static Series constant(const std::string& var, R value, int order) {
    Series s(var, order);
    s.c_[0] = std::move(value);
    return s;
  }
  /// The series u itself (requires order >= 1).
  static Series identity(const std::string& var, int order) {
    Series s(var, order);
    s.c_[1] = R(1);
    return s;
  }

  const std::string& variable() const { return var_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  void set_coeff(int k, R v) { c_[static_cast<size_t>(k)] = std::move(v); }
  const std::vector<R>& coefficients() const { return c_; }

  Series truncated(int new_order) const {
    if (new_order > order()) throw DomainError("cannot extend a truncated series");
    std::vector<R> c(c_.begin(), c_.begin() + new_order + 1);
    return Series(var_, std::move(c));
  }

  friend Series operator+(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series r(a.var_, n);
    for (int k = 0; k <= n; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series r(a.var_, n);
    for (int k = 0; k <= n; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }
  Series operator-() const {
    Series r(var_, order());
    for (int k = 0; k <= order(); ++k) r.c_[k] = -c_[k];
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series r(a.var_, n);
    for (int i = 0; i <= n; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend Series operator*(const R& s, const Series& a) {
    Series r(a.var_, a.order());
    for (int k = 0; k <= a.order(); ++k) r.c_[k] = s * a.c_[k];
    return r;
  }
  friend Series operator+(const Series& a, const R& s) {
    Series r = a;
    r.c_[0] += s;
    return r;
  }
  friend Series operator-(const Series& a, const R& s) {
    Series r = a;
    r.c_[0] -= s;
    return r;
  }
  friend Series operator/(const Series& a, const Series& b) {
    return a * b.inverse();
  }
  friend bool operator==(const Series& a, const Series& b) {
    if (a.order() != b.order()) return false;
    for (int k = 0; k <= a.order(); ++k)
      if (!(a.c_[k] == b.c_[k])) return false;
    return true;
  }

  /// Reciprocal; the constant term must be invertible.
  Series inverse() const {
    if (c_[0].is_zero()) throw DomainError("series reciprocal needs nonzero constant term");
    const int n = order();
    Series r(var_, n);
    const R inv0 = R(1) / c_[0];
    r.c_[0] = inv0;
    for (int k = 1; k <= n; ++k) {
      R s(0);
      for (int i = 1; i <= k; ++i) s += c_[i] * r.c_[k - i];
      r.c_[k] = -(inv0 * s);
    }
    return r;
  }

  /// f(g(u)) for g with zero constant term; order = min of the operands.
  Series compose(const Series& inner) const {
    if (!inner.c_[0].is_zero())
      throw DomainError("series composition needs inner constant term 0");
    const int n = std::min(order(), inner.order());
    Series g = inner.order() == n ? inner : inner.truncated(n);
    Series r = Series::constant(inner.var_, c_[std::min<size_t>(c_.size() - 1, n)], n);
    for (int k = std::min(order(), n) - 1; k >= 0; --k) {
      r = r * g;
      r.c_[0] += c_[k];
    }
    return r;
  }

  /// Termwise derivative; drops one order.
  Series derivative() const {
    if (order() == 0) return Series(var_, std::vector<R>{R(0)});
    Series r(var_, order() - 1);
    for (int k = 1; k <= order(); ++k) r.c_[k - 1] = R(k) * c_[k];
    return r;
  }

  /// log of a series with constant term exactly 1, via log' = f'/f.
  Series log() const {
    if (!(c_[0] == R(1)))
      throw DomainError("series log implemented for constant term 1");
    const int n = order();
    Series q = derivative() * inverse().truncated(std::max(0, n - 1));
    Series r(var_, n);
    for (int k = 1; k <= n; ++k) r.c_[k] = q.coeff(k - 1) / R(k);
    return r;
  }

  Series pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Series r = Series::constant(var_, R(1), order());
    Series base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  /// Compositional inverse of a series with zero constant term and
  /// invertible linear coefficient: compose(*this, result) == identity.
  Series reversion() const {
    if (!c_[0].is_zero())
      throw DomainError("series reversion needs zero constant term");
    if (c_[1].is_zero())
      throw DomainError("series reversion needs invertible linear term");
    const int n = order();
    const R inv1 = R(1) / c_[1];
    Series tail = *this;
    tail.c_[1] = R(0);  // s - a1 u
    Series r = inv1 * Series::identity(var_, n);
    for (int it = 0; it < n; ++it)
      r = inv1 * (Series::identity(var_, n) - tail.compose(r));
    return r;
  }

  R evaluate(const R& x) const {
    R r = c_[c_.size() - 1];
    for (int k = order() - 1; k >= 0; --k) r = r * x + c_[k];
    return r;
  }

  bool is_zero() const {
    for (const R& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

 private:
  std::string var_;
  std::vector<R> c_;
};

}  // namespace mapcount
