#include "mapcount/hypergeometric.hpp"

#include "mapcount/errors.hpp"

namespace mapcount {

Rational hypergeom_2f1_terminating(long a, const Rational& b,
                                   const Rational& c, const Rational& z) {
  if (a > 0) throw DomainError("2F1 evaluated here only for nonpositive integer a");
  Rational sum(1);
  Rational term(1);
  Rational an(a), bn(b), cn(c);
  const long kmax = -a;
  for (long k = 1; k <= kmax; ++k) {
    if (term.is_zero()) break;  // a numerator Pochhammer already terminated the sum
    // term_k = term_{k-1} * (a+k-1)(b+k-1) / ((c+k-1) k) * z
    const Rational num = an * bn;
    if (cn.is_zero()) {
      if (num.is_zero()) break;  // numerator terminates at the same k
      throw DomainError("2F1 denominator Pochhammer vanishes before termination");
    }
    term *= num / (cn * Rational(k)) * z;
    sum += term;
    an += Rational(1);
    bn += Rational(1);
    cn += Rational(1);
  }
  return sum;
}

}  // namespace mapcount
