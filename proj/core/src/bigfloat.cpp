#include "mapcount/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "mapcount/errors.hpp"

namespace mapcount {

mpfr_prec_t BigFloat::bits(int digits) {
  if (digits < 2) throw ValidationError("precision must be at least 2 digits");
  // ceil(digits * log2(10)) plus a small guard
  return static_cast<mpfr_prec_t>(digits * 3.3219280948873626) + 16;
}

BigFloat::BigFloat(const std::string& s, int digits) : digits_(digits) {
  mpfr_init2(v_, bits(digits));
  char* end = nullptr;
  mpfr_strtofr(v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') {
    mpfr_clear(v_);
    throw ValidationError("not a decimal literal: '" + s + "'");
  }
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    digits_ = o.digits_;
  }
  return *this;
}

BigFloat BigFloat::with_precision(int digits) const {
  BigFloat r(0L, digits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

namespace {
int join(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision_digits(), b.precision_digits());
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(0L, join(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(0L, join(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(0L, join(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  BigFloat r(0L, join(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(0L, digits_);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(0L, digits_);
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  if (sign() < 0) throw DomainError("sqrt of negative value");
  BigFloat r(0L, digits_);
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp() const {
  BigFloat r(0L, digits_);
  mpfr_exp(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::log() const {
  if (sign() <= 0) throw DomainError("log of non-positive value");
  BigFloat r(0L, digits_);
  mpfr_log(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow_si(long e) const {
  BigFloat r(0L, digits_);
  mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow10(long e, int digits) {
  BigFloat r(0L, digits);
  mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e),
                 MPFR_RNDN);
  if (e < 0) mpfr_si_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int significant_digits) const {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Re", significant_digits - 1, v_) < 0)
    throw Error("mpfr_asprintf failed");
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
  return os << x.to_string(std::min(x.precision_digits(), 20));
}

}  // namespace mapcount
