#include "mapcount/genfun/qrecurrence.hpp"

#include "mapcount/errors.hpp"
#include "mapcount/genfun/string_equation.hpp"

namespace mapcount::genfun {

void QVector::validate() const {
  if (g < 2 || j < 1 || nu < 2) throw DomainError("QVector needs g >= 2, j >= 1, nu >= 2");
  if (static_cast<int>(entries.size()) != expected_length())
    throw DomainError("QVector length must be 3g - 3 + j");
}

Rational QVector::sum() const {
  Rational s(0);
  for (const auto& e : entries) s += e;
  return s;
}

QVector q_step(const QVector& q_prev) {
  q_prev.validate();
  const int g = q_prev.g, nu = q_prev.nu;
  const int j = q_prev.j + 1;  // producing q^(j) from q^(j-1)
  QVector out;
  out.g = g;
  out.j = j;
  out.nu = nu;
  out.entries.assign(static_cast<size_t>(3 * g - 3 + j), Rational(0));
  for (int l = 0; l <= 3 * g - 4 + j; ++l) {
    const Rational beta(static_cast<long>(nu) * (2 * g + l + j - 3));
    const Rational alpha(static_cast<long>(2 * g + l - 2 - (nu - 1) * (j - 1)));
    Rational v(0);
    if (l - 1 >= 0 && l - 1 < static_cast<int>(q_prev.entries.size()))
      v += beta * q_prev.entries[l - 1];
    if (l < static_cast<int>(q_prev.entries.size()))
      v -= alpha * q_prev.entries[l];
    out.entries[l] = v;
  }
  return out;
}

Rational count_from_q(const QVector& q) {
  q.validate();
  return c_nu(q.nu).pow(q.j) * q.sum();
}

}  // namespace mapcount::genfun
