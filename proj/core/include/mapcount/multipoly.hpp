#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>

#include "mapcount/rational.hpp"

namespace mapcount {

/// Sparse polynomial over Q in the fixed parameter triple (gamma, zeta, eta).
/// Monomials are ordered lexicographically on the exponent triple
/// (e_gamma, e_zeta, e_eta), i.e. gamma < zeta < eta as variables.
class ParamPoly {
 public:
  static constexpr int kVars = 3;
  using Monomial = std::array<int, kVars>;
  static const std::array<const char*, kVars> kNames;

  ParamPoly() = default;
  ParamPoly(long n) { set_term({0, 0, 0}, Rational(n)); }  // NOLINT
  explicit ParamPoly(const Rational& c) { set_term({0, 0, 0}, c); }
  static ParamPoly variable(int idx);

  void set_term(const Monomial& m, const Rational& c);
  const std::map<Monomial, Rational>& terms() const { return t_; }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent); the whole value when is_constant().
  Rational constant_value() const;
  int degree(int var) const;

  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly operator-() const;
  friend ParamPoly operator*(const Rational& s, const ParamPoly& a);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
    return a.t_ == b.t_;
  }
  ParamPoly pow(int e) const;

  /// Exact division; throws DomainError when the division is not exact.
  ParamPoly divexact(const ParamPoly& g) const;

  /// GCD over Q, normalized to integer-primitive with positive leading
  /// coefficient (1 for coprime inputs).
  static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

  /// Scales to integer coefficients with content 1 and positive leading
  /// coefficient.
  ParamPoly primitive_scaled() const;
  const Rational& leading_coefficient() const;

  Rational evaluate(const Rational& gamma, const Rational& zeta,
                    const Rational& eta) const;

  std::string to_string() const;
  static ParamPoly from_string(const std::string& s);

 private:
  std::map<Monomial, Rational> t_;  // zero coefficients never stored
};

/// Rational function in (gamma, zeta, eta) kept in canonical form:
/// gcd-reduced, denominator integer-primitive with positive leading
/// coefficient.  Equality is therefore plain representation equality.
class ParamRational {
 public:
  ParamRational() : num_(), den_(1) {}
  ParamRational(long n) : num_(n), den_(1) {}  // NOLINT
  explicit ParamRational(const Rational& c) : num_(c), den_(1) {}
  explicit ParamRational(ParamPoly p) : num_(std::move(p)), den_(1) {}
  ParamRational(ParamPoly num, ParamPoly den);

  static ParamRational gamma() { return ParamRational(ParamPoly::variable(0)); }
  static ParamRational zeta() { return ParamRational(ParamPoly::variable(1)); }
  static ParamRational eta() { return ParamRational(ParamPoly::variable(2)); }

  const ParamPoly& numerator() const { return num_; }
  const ParamPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  friend ParamRational operator+(const ParamRational& a, const ParamRational& b);
  friend ParamRational operator-(const ParamRational& a, const ParamRational& b);
  friend ParamRational operator*(const ParamRational& a, const ParamRational& b);
  friend ParamRational operator/(const ParamRational& a, const ParamRational& b);
  ParamRational operator-() const;
  ParamRational& operator+=(const ParamRational& o) { return *this = *this + o; }
  ParamRational& operator-=(const ParamRational& o) { return *this = *this - o; }
  ParamRational& operator*=(const ParamRational& o) { return *this = *this * o; }
  ParamRational& operator/=(const ParamRational& o) { return *this = *this / o; }
  friend bool operator==(const ParamRational& a, const ParamRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Rational evaluate(const Rational& gamma, const Rational& zeta,
                    const Rational& eta) const;

  std::string to_string() const;
  static ParamRational from_string(const std::string& s);

 private:
  void reduce();
  ParamPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);
std::ostream& operator<<(std::ostream& os, const ParamRational& r);

}  // namespace mapcount
