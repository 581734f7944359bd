#include "mapcount/rational.hpp"

#include <ostream>

#include "mapcount/errors.hpp"

namespace mapcount {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  mpq_init(v_);
  mpq_set_si(v_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(v_, v_, d);
  mpq_clear(d);
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw DomainError("rational with zero denominator");
  mpq_init(v_);
  mpz_set(mpq_numref(v_), num.raw());
  mpz_set(mpq_denref(v_), den.raw());
  mpq_canonicalize(v_);
}

Rational::Rational(const std::string& s) {
  mpq_init(v_);
  if (mpq_set_str(v_, s.c_str(), 10) != 0 ||
      mpz_sgn(mpq_denref(v_)) == 0) {
    mpq_clear(v_);
    throw ValidationError("not a rational literal: '" + s + "'");
  }
  mpq_canonicalize(v_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("rational division by zero");
  Rational r;
  mpq_div(r.v_, a.v_, b.v_);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  mpq_div(v_, v_, o.v_);
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Rational r;
  mpq_inv(r.v_, v_);
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  const Rational base = e > 0 ? *this : inverse();
  const unsigned long ue = e > 0 ? static_cast<unsigned long>(e)
                                 : static_cast<unsigned long>(-(e + 1)) + 1;
  Rational r;
  mpz_pow_ui(mpq_numref(r.v_), mpq_numref(base.v_), ue);
  mpz_pow_ui(mpq_denref(r.v_), mpq_denref(base.v_), ue);
  return r;  // powers of a canonical value stay canonical
}

Integer Rational::numerator() const {
  Integer n;
  mpz_set(n.raw(), mpq_numref(v_));
  return n;
}

Integer Rational::denominator() const {
  Integer d;
  mpz_set(d.raw(), mpq_denref(v_));
  return d;
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().to_string();
  return numerator().to_string() + "/" + denominator().to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.to_string();
}

}  // namespace mapcount
