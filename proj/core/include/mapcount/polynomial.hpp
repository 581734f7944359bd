#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mapcount/bigfloat.hpp"
#include "mapcount/rational.hpp"

namespace mapcount {

/// Dense univariate polynomial over Q; coefficient k multiplies x^k.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const {
    return k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
  }
  const std::vector<Rational>& coefficients() const { return c_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

  Polynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  BigFloat evaluate(const BigFloat& x) const;

  /// Euclidean remainder (field coefficients).
  static Polynomial remainder(const Polynomial& a, const Polynomial& b);
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);
  /// Exact quotient; throws DomainError when the division is not exact.
  static Polynomial divide_exact(const Polynomial& a, const Polynomial& b);
  /// p / gcd(p, p'): same roots, all simple.
  Polynomial squarefree_part() const;
  bool is_squarefree() const;

  std::string to_string() const;  // "x^2 - 3*x + 1"

 private:
  void normalize();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Open-ended isolation interval (lo, hi] for one real root.
struct RootInterval {
  Rational lo, hi;
};

/// Number of distinct real roots of p in (lo, hi], by Sturm's theorem.
int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Number of distinct real roots of p on the whole line.
int count_real_roots(const Polynomial& p);

/// Disjoint isolating intervals for every distinct real root, sorted in
/// increasing order, each refined until its width is below `width`.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p,
                                             const Rational& width);

/// Refines an isolating interval by bisection to a BigFloat root value.
BigFloat refine_root(const Polynomial& p, const RootInterval& iv, int digits);

/// Yun's squarefree decomposition: p = lc * prod_i a_i^i with every a_i
/// monic squarefree; returned as a_1, a_2, ... (possibly constant entries).
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

/// Characteristic polynomial det(xI - M) of a square rational matrix,
/// by the Faddeev-LeVerrier recursion (exact).
Polynomial characteristic_polynomial(
    const std::vector<std::vector<Rational>>& m);

}  // namespace mapcount
