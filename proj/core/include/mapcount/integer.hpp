#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace mapcount {

/// Arbitrary-size integer, a thin RAII wrapper around GMP's mpz_t.
class Integer {
 public:
  Integer() { mpz_init(v_); }
  Integer(long n) { mpz_init_set_si(v_, n); }  // NOLINT: implicit by design
  explicit Integer(const std::string& s);
  Integer(const Integer& o) { mpz_init_set(v_, o.v_); }
  Integer(Integer&& o) noexcept {
    mpz_init(v_);
    mpz_swap(v_, o.v_);
  }
  Integer& operator=(const Integer& o) {
    if (this != &o) mpz_set(v_, o.v_);
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept {
    mpz_swap(v_, o.v_);
    return *this;
  }
  ~Integer() { mpz_clear(v_); }

  friend Integer operator+(const Integer& a, const Integer& b) {
    Integer r;
    mpz_add(r.v_, a.v_, b.v_);
    return r;
  }
  friend Integer operator-(const Integer& a, const Integer& b) {
    Integer r;
    mpz_sub(r.v_, a.v_, b.v_);
    return r;
  }
  friend Integer operator*(const Integer& a, const Integer& b) {
    Integer r;
    mpz_mul(r.v_, a.v_, b.v_);
    return r;
  }
  Integer operator-() const {
    Integer r;
    mpz_neg(r.v_, v_);
    return r;
  }
  Integer& operator+=(const Integer& o) {
    mpz_add(v_, v_, o.v_);
    return *this;
  }
  Integer& operator-=(const Integer& o) {
    mpz_sub(v_, v_, o.v_);
    return *this;
  }
  Integer& operator*=(const Integer& o) {
    mpz_mul(v_, v_, o.v_);
    return *this;
  }

  /// Exact quotient; requires divisibility.
  friend Integer div_exact(const Integer& a, const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b) {
    return mpz_cmp(a.v_, b.v_) == 0;
  }
  friend auto operator<=>(const Integer& a, const Integer& b) {
    return mpz_cmp(a.v_, b.v_) <=> 0;
  }

  int sign() const { return mpz_sgn(v_); }
  bool is_zero() const { return mpz_sgn(v_) == 0; }
  bool fits_long() const { return mpz_fits_slong_p(v_) != 0; }
  long to_long() const;
  std::string to_string() const;

  static Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.v_, n);
    return r;
  }
  static Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.v_, base.v_, e);
    return r;
  }
  static Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.v_, a.v_, b.v_);
    return r;
  }
  static Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.v_, a.v_, b.v_);
    return r;
  }

  mpz_srcptr raw() const { return v_; }
  mpz_ptr raw() { return v_; }

 private:
  mpz_t v_;
};

std::ostream& operator<<(std::ostream& os, const Integer& n);

}  // namespace mapcount
