#pragma once

#include <mpfr.h>

#include <iosfwd>
#include <string>

#include "mapcount/rational.hpp"

namespace mapcount {

/// Floating-point number with explicit decimal precision, over MPFR.
/// Rounding is fixed to round-to-nearest.  Binary operations carry the larger
/// of the two operand precisions.
class BigFloat {
 public:
  static constexpr int kDefaultDigits = 256;

  BigFloat() : BigFloat(0L, kDefaultDigits) {}
  BigFloat(int n, int digits) : BigFloat(static_cast<long>(n), digits) {}
  BigFloat(long n, int digits) : digits_(digits) {
    mpfr_init2(v_, bits(digits));
    mpfr_set_si(v_, n, MPFR_RNDN);
  }
  BigFloat(const Rational& q, int digits) : digits_(digits) {
    mpfr_init2(v_, bits(digits));
    mpfr_set_q(v_, q.raw(), MPFR_RNDN);
  }
  BigFloat(double d, int digits) : digits_(digits) {
    mpfr_init2(v_, bits(digits));
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  /// Parses a decimal literal at the given precision.
  BigFloat(const std::string& s, int digits);
  BigFloat(const BigFloat& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    digits_ = o.digits_;
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  int precision_digits() const { return digits_; }
  /// Same value rounded to a different working precision.
  BigFloat with_precision(int digits) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_less_p(a.v_, b.v_) != 0;
  }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) {
    return mpfr_lessequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) {
    return b <= a;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  BigFloat abs() const;
  BigFloat sqrt() const;
  BigFloat exp() const;
  BigFloat log() const;
  BigFloat pow_si(long e) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific-notation literal carrying the full working precision.
  std::string to_string() const { return to_string(digits_); }
  std::string to_string(int significant_digits) const;

  /// 10^e at this value's precision.
  static BigFloat pow10(long e, int digits);

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  static mpfr_prec_t bits(int digits);

 private:
  mpfr_t v_;
  int digits_;
};

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

}  // namespace mapcount
