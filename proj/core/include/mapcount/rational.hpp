#pragma once

#include <gmp.h>

#include <iosfwd>
#include <string>

#include "mapcount/integer.hpp"

namespace mapcount {

/// Exact rational number over GMP's mpq_t.  Always canonical: reduced to
/// lowest terms with a positive denominator.
class Rational {
 public:
  Rational() { mpq_init(v_); }
  Rational(long n) {  // NOLINT: implicit by design
    mpq_init(v_);
    mpq_set_si(v_, n, 1);
  }
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const Integer& n) {
    mpq_init(v_);
    mpq_set_z(v_, n.raw());
  }
  /// Parses "p", "p/q" or "-p/q" (base 10).
  explicit Rational(const std::string& s);
  Rational(const Rational& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(v_, o.v_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(v_, o.v_);
    return *this;
  }
  ~Rational() { mpq_clear(v_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
  }
  Rational& operator+=(const Rational& o) {
    mpq_add(v_, v_, o.v_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(v_, v_, o.v_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(v_, v_, o.v_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_, b.v_) != 0;
  }
  friend auto operator<=>(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_, b.v_) <=> 0;
  }

  int sign() const { return mpq_sgn(v_); }
  bool is_zero() const { return mpq_sgn(v_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }
  Rational abs() const {
    Rational r;
    mpq_abs(r.v_, v_);
    return r;
  }
  Rational inverse() const;
  /// Integer exponent; negative exponents invert (zero base then errors).
  Rational pow(long e) const;

  Integer numerator() const;
  Integer denominator() const;
  double to_double() const { return mpq_get_d(v_); }
  /// "p" when integral, "p/q" otherwise.
  std::string to_string() const;

  mpq_srcptr raw() const { return v_; }

 private:
  mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace mapcount
