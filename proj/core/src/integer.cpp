#include "mapcount/integer.hpp"

#include <ostream>

#include "mapcount/errors.hpp"

namespace mapcount {

Integer::Integer(const std::string& s) {
  if (mpz_init_set_str(v_, s.c_str(), 10) != 0) {
    mpz_clear(v_);
    throw ValidationError("not an integer literal: '" + s + "'");
  }
}

Integer div_exact(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw DomainError("integer division by zero");
  Integer q, r;
  mpz_tdiv_qr(q.v_, r.v_, a.v_, b.v_);
  if (!r.is_zero()) throw DomainError("inexact integer division");
  return q;
}

long Integer::to_long() const {
  if (!fits_long()) throw DomainError("integer too large for long");
  return mpz_get_si(v_);
}

std::string Integer::to_string() const {
  char* buf = mpz_get_str(nullptr, 10, v_);
  std::string s(buf);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(buf, s.size() + 1);
  return s;
}

std::ostream& operator<<(std::ostream& os, const Integer& n) {
  return os << n.to_string();
}

}  // namespace mapcount
